#include "retune/store/requirement_set.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "retune/fretish/parser.hpp"
#include "retune/fretish/printer.hpp"

namespace retune {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
    std::string out = "invalid requirement set:";
    for (const auto& p : problems) out += "\n  - " + p;
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems_)
    : std::runtime_error(join_problems(problems_)), problems(std::move(problems_)) {}

void RequirementSet::add(Requirement r) {
    if (r.id.empty()) throw ValidationError({"requirement with empty id"});
    if (index_.count(r.id))
        throw ValidationError({"duplicate requirement id '" + r.id + "'"});
    index_[r.id] = reqs_.size();
    reqs_.push_back(std::move(r));
}

bool RequirementSet::contains(const std::string& id) const {
    return index_.count(id) != 0;
}

const Requirement& RequirementSet::get(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw ValidationError({"unknown requirement id '" + id + "'"});
    return reqs_[it->second];
}

Requirement& RequirementSet::get_mutable(const std::string& id) {
    auto it = index_.find(id);
    if (it == index_.end())
        throw ValidationError({"unknown requirement id '" + id + "'"});
    return reqs_[it->second];
}

void RequirementSet::remove(const std::string& id) {
    auto it = index_.find(id);
    if (it == index_.end())
        throw ValidationError({"unknown requirement id '" + id + "'"});
    reqs_.erase(reqs_.begin() + static_cast<long>(it->second));
    index_.clear();
    for (std::size_t i = 0; i < reqs_.size(); ++i) index_[reqs_[i].id] = i;
}

std::vector<std::string> references_of(const Requirement& r) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (FieldKind f : present_fields(r)) {
        for (const Atom& a : collect_atoms(field_expr(r, f))) {
            if (a.kind == AtomKind::Reference && seen.insert(a.name).second)
                out.push_back(a.name);
        }
    }
    return out;
}

std::vector<std::string> RequirementSet::validate_errors() const {
    std::vector<std::string> problems;
    for (const Requirement& r : reqs_) {
        if (r.component.empty())
            problems.push_back("'" + r.id + "': empty component");
        if (!r.response)
            problems.push_back("'" + r.id + "': empty response");
        if (r.scope && !r.scope->empty())
            problems.push_back("'" + r.id + "': non-empty scope is not supported");
        for (const auto& p : r.parent_ids)
            if (!contains(p))
                problems.push_back("'" + r.id + "': unresolved parent id '" + p + "'");
        for (const auto& d : r.depends_ids)
            if (is_reference_lexeme(d) && !contains(d))
                problems.push_back("'" + r.id + "': unresolved depends id '" + d + "'");
        for (const auto& ref : references_of(r))
            if (!contains(ref))
                problems.push_back("'" + r.id + "': unresolved reference '" + ref + "'");
    }

    // Reference graph must be acyclic (colors: 0 new, 1 on stack, 2 done).
    std::unordered_map<std::string, int> color;
    std::function<bool(const std::string&, std::vector<std::string>&)> dfs =
        [&](const std::string& id, std::vector<std::string>& path) -> bool {
        color[id] = 1;
        path.push_back(id);
        if (contains(id)) {
            for (const auto& ref : references_of(get(id))) {
                if (!contains(ref)) continue;
                int c = color.count(ref) ? color[ref] : 0;
                if (c == 1) {
                    std::string cycle;
                    for (const auto& s : path) cycle += s + " -> ";
                    problems.push_back("reference cycle: " + cycle + ref);
                    return true;
                }
                if (c == 0 && dfs(ref, path)) return true;
            }
        }
        color[id] = 2;
        path.pop_back();
        return false;
    };
    for (const Requirement& r : reqs_) {
        if ((color.count(r.id) ? color[r.id] : 0) == 0) {
            std::vector<std::string> path;
            if (dfs(r.id, path)) break;
        }
    }
    return problems;
}

std::vector<std::string> RequirementSet::validate_warnings() const {
    std::vector<std::string> warnings;
    for (const Requirement& r : reqs_) {
        std::unordered_set<std::string> declared(r.depends_ids.begin(),
                                                 r.depends_ids.end());
        for (const auto& ref : references_of(r))
            if (!declared.count(ref))
                warnings.push_back("'" + r.id + "': reference '" + ref +
                                   "' is not listed in depends");
    }
    return warnings;
}

void RequirementSet::validate() const {
    auto problems = validate_errors();
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::vector<Requirement> children_of(const RequirementSet& set, const std::string& id) {
    if (!set.contains(id))
        throw ValidationError({"unknown requirement id '" + id + "'"});
    std::vector<Requirement> out;
    for (const Requirement& r : set.all())
        for (const auto& p : r.parent_ids)
            if (p == id) {
                out.push_back(r);
                break;
            }
    return out;
}

RequirementSet set_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError({std::string("malformed JSON: ") + e.what()});
    }
    if (!doc.is_object() || !doc.contains("requirements") ||
        !doc["requirements"].is_array())
        throw ValidationError({"malformed set file: missing \"requirements\" array"});

    RequirementSet set;
    for (const auto& item : doc["requirements"]) {
        if (!item.is_object() || !item.contains("id") || !item.contains("text"))
            throw ValidationError({"malformed requirement record"});
        Requirement r;
        try {
            r = parse_requirement(item["text"].get<std::string>());
        } catch (const ParseError& e) {
            throw ValidationError({"'" + item["id"].get<std::string>() +
                                   "': " + e.what()});
        }
        r.id = item["id"].get<std::string>();
        if (item.contains("parents"))
            r.parent_ids = item["parents"].get<std::vector<std::string>>();
        if (item.contains("depends"))
            r.depends_ids = item["depends"].get<std::vector<std::string>>();
        if (item.contains("rationale"))
            r.rationale = item["rationale"].get<std::string>();
        set.add(std::move(r));
    }
    set.validate();
    return set;
}

std::string set_to_json(const RequirementSet& set) {
    nlohmann::ordered_json doc;
    doc["requirements"] = nlohmann::ordered_json::array();
    for (const Requirement& r : set.all()) {
        nlohmann::ordered_json item;
        item["id"] = r.id;
        item["parents"] = r.parent_ids;
        item["depends"] = r.depends_ids;
        item["text"] = render_requirement(r);
        item["rationale"] = r.rationale;
        doc["requirements"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

RequirementSet load_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError({"cannot open '" + path + "'"});
    std::ostringstream buf;
    buf << in.rdbuf();
    return set_from_json(buf.str());
}

void save_set(const RequirementSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError({"cannot write '" + path + "'"});
    out << set_to_json(set);
}

}  // namespace retune
