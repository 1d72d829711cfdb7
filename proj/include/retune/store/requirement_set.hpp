// store/requirement_set.hpp — validated, insertion-ordered container for a
// requirement set.
//
// Sets are plain values: every mutating operation elsewhere in the toolkit
// builds a new set, validates it, and returns it, so readers never observe a
// partially edited set.

#ifndef RETUNE_STORE_REQUIREMENT_SET_HPP
#define RETUNE_STORE_REQUIREMENT_SET_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "retune/fretish/ast.hpp"

namespace retune {

struct ValidationError : std::runtime_error {
    explicit ValidationError(std::vector<std::string> problems);
    std::vector<std::string> problems;
};

class RequirementSet {
public:
    RequirementSet() = default;

    // Appends a requirement; throws ValidationError on a duplicate id.
    void add(Requirement r);

    bool contains(const std::string& id) const;
    const Requirement& get(const std::string& id) const;  // throws on unknown id
    Requirement& get_mutable(const std::string& id);

    // Removes a requirement without any consistency checks; callers re-run
    // validate() on the result.
    void remove(const std::string& id);

    const std::vector<Requirement>& all() const { return reqs_; }
    std::size_t size() const { return reqs_.size(); }

    // Hard invariants: unique ids, parents resolve, all-caps depends entries
    // resolve, Reference atoms resolve, Reference graph acyclic.
    // Warnings: Reference atoms missing from the declared depends list.
    std::vector<std::string> validate_errors() const;
    std::vector<std::string> validate_warnings() const;

    // Throws ValidationError when any hard invariant fails.
    void validate() const;

private:
    std::vector<Requirement> reqs_;
    std::unordered_map<std::string, std::size_t> index_;
};

// All requirements listing `id` among their parents, in insertion order.
std::vector<Requirement> children_of(const RequirementSet& set, const std::string& id);

// Every Reference atom in any field of `r` (deduplicated, in field order).
std::vector<std::string> references_of(const Requirement& r);

// JSON persistence.  Schema:
//   {"requirements":[{"id","parents":[],"depends":[],"text","rationale"}]}
// `text` holds the canonical FRETISH string; the AST is derived on load.
RequirementSet load_set(const std::string& path);
void save_set(const RequirementSet& set, const std::string& path);

RequirementSet set_from_json(const std::string& json_text);
std::string set_to_json(const RequirementSet& set);

}  // namespace retune

#endif
