#include "retune/ltl/lasso.hpp"

#include <stdexcept>
#include <unordered_map>

namespace retune {

std::string LassoTrace::to_string() const {
    auto letters = [](const std::vector<Letter>& w) {
        std::string out;
        for (const Letter& l : w) {
            out += "{";
            bool first = true;
            for (const auto& p : l) {
                if (!first) out += " ";
                out += p;
                first = false;
            }
            out += "}";
        }
        return out;
    };
    return "prefix " + letters(prefix) + " loop " + letters(loop);
}

namespace {

using Vals = std::vector<char>;

class Evaluator {
public:
    explicit Evaluator(const LassoTrace& t) : trace_(t) {
        n_ = t.prefix.size() + t.loop.size();
        loop_start_ = t.prefix.size();
    }

    const Vals& vals(const LtlFormula& f) {
        auto it = memo_.find(f.get());
        if (it != memo_.end()) return it->second;
        Vals v = compute(f);
        return memo_.emplace(f.get(), std::move(v)).first->second;
    }

private:
    std::size_t succ(std::size_t p) const {
        return p + 1 < n_ ? p + 1 : loop_start_;
    }

    const Letter& letter(std::size_t p) const {
        return p < loop_start_ ? trace_.prefix[p] : trace_.loop[p - loop_start_];
    }

    // Least/greatest fixpoint by backward sweeps: `step` computes position p
    // from the current value at succ(p); sweeps repeat until stable.
    Vals fixpoint(bool init, const std::function<char(std::size_t, char)>& step) {
        Vals v(n_, init ? 1 : 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = n_; i-- > 0;) {
                char nv = step(i, v[succ(i)]);
                if (nv != v[i]) {
                    v[i] = nv;
                    changed = true;
                }
            }
        }
        return v;
    }

    Vals compute(const LtlFormula& f) {
        switch (f->kind) {
            case LtlKind::True: return Vals(n_, 1);
            case LtlKind::False: return Vals(n_, 0);
            case LtlKind::Prop: {
                Vals v(n_, 0);
                for (std::size_t p = 0; p < n_; ++p)
                    v[p] = letter(p).count(f->prop) ? 1 : 0;
                return v;
            }
            case LtlKind::Not: {
                Vals a = vals(f->lhs);
                for (auto& x : a) x = !x;
                return a;
            }
            case LtlKind::And: {
                const Vals& a = vals(f->lhs);
                const Vals& b = vals(f->rhs);
                Vals v(n_);
                for (std::size_t p = 0; p < n_; ++p) v[p] = a[p] && b[p];
                return v;
            }
            case LtlKind::Or: {
                const Vals& a = vals(f->lhs);
                const Vals& b = vals(f->rhs);
                Vals v(n_);
                for (std::size_t p = 0; p < n_; ++p) v[p] = a[p] || b[p];
                return v;
            }
            case LtlKind::Implies: {
                const Vals& a = vals(f->lhs);
                const Vals& b = vals(f->rhs);
                Vals v(n_);
                for (std::size_t p = 0; p < n_; ++p) v[p] = !a[p] || b[p];
                return v;
            }
            case LtlKind::Next: {
                const Vals& a = vals(f->lhs);
                Vals v(n_);
                for (std::size_t p = 0; p < n_; ++p) v[p] = a[succ(p)];
                return v;
            }
            case LtlKind::Until: {
                const Vals& a = vals(f->lhs);
                const Vals& b = vals(f->rhs);
                return fixpoint(false, [&](std::size_t p, char nxt) -> char {
                    return b[p] || (a[p] && nxt);
                });
            }
            case LtlKind::Release: {
                const Vals& a = vals(f->lhs);
                const Vals& b = vals(f->rhs);
                return fixpoint(true, [&](std::size_t p, char nxt) -> char {
                    return b[p] && (a[p] || nxt);
                });
            }
            case LtlKind::WeakUntil: {
                const Vals& a = vals(f->lhs);
                const Vals& b = vals(f->rhs);
                return fixpoint(true, [&](std::size_t p, char nxt) -> char {
                    return b[p] || (a[p] && nxt);
                });
            }
            case LtlKind::Globally: {
                const Vals& a = vals(f->lhs);
                return fixpoint(true, [&](std::size_t p, char nxt) -> char {
                    return a[p] && nxt;
                });
            }
            case LtlKind::Finally: {
                const Vals& a = vals(f->lhs);
                return fixpoint(false, [&](std::size_t p, char nxt) -> char {
                    return a[p] || nxt;
                });
            }
        }
        throw std::logic_error("eval: unknown node");
    }

    const LassoTrace& trace_;
    std::size_t n_ = 0;
    std::size_t loop_start_ = 0;
    std::unordered_map<const LtlNode*, Vals> memo_;
};

}  // namespace

bool eval_on_lasso(const LtlFormula& f, const LassoTrace& trace) {
    if (trace.loop.empty())
        throw std::invalid_argument("eval_on_lasso: loop must be non-empty");
    Evaluator ev(trace);
    return ev.vals(f)[0] != 0;
}

bool enumerate_lassos(const std::set<std::string>& props, int max_prefix,
                      int max_loop,
                      const std::function<bool(const LassoTrace&)>& fn) {
    if (max_prefix < 0 || max_loop < 1)
        throw std::invalid_argument("enumerate_lassos: bounds must be >= 0 / >= 1");
    std::vector<std::string> ordered(props.begin(), props.end());
    const std::size_t k = ordered.size();
    const std::size_t letters = std::size_t{1} << k;

    auto letter_of = [&](std::size_t mask) {
        Letter l;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) l.insert(ordered[i]);
        return l;
    };

    for (int plen = 0; plen <= max_prefix; ++plen) {
        for (int llen = 1; llen <= max_loop; ++llen) {
            const int total = plen + llen;
            std::vector<std::size_t> masks(static_cast<std::size_t>(total), 0);
            for (;;) {
                LassoTrace t;
                for (int i = 0; i < plen; ++i) t.prefix.push_back(letter_of(masks[i]));
                for (int i = plen; i < total; ++i) t.loop.push_back(letter_of(masks[i]));
                if (!fn(t)) return false;
                // odometer over letter masks
                int pos = total - 1;
                while (pos >= 0) {
                    if (++masks[pos] < letters) break;
                    masks[pos] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
    }
    return true;
}

std::vector<LassoTrace> all_lassos(const std::set<std::string>& props,
                                   int max_prefix, int max_loop) {
    std::vector<LassoTrace> out;
    enumerate_lassos(props, max_prefix, max_loop, [&](const LassoTrace& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace retune
