#include <algorithm>
#include <set>

#include "satforge/oracle.hpp"

namespace satforge {

namespace {

// Literal code: 2*var for the positive literal, 2*var+1 for the negative one.
using Lit = std::size_t;

Lit encode_lit(DimacsLit l) { return l > 0 ? 2 * static_cast<Lit>(l) : 2 * static_cast<Lit>(-l) + 1; }
Lit negate_lit(Lit l) { return l ^ 1U; }
std::size_t var_of(Lit l) { return l >> 1U; }

class Dpll {
public:
    explicit Dpll(const DimacsCnf& cnf) : num_vars_(static_cast<std::size_t>(max_variable(cnf))) {
        value_.assign(num_vars_ + 1, 0);
        watches_.resize(2 * (num_vars_ + 1));
        for (const auto& c : cnf) {
            std::vector<Lit> lits;
            for (auto l : c) lits.push_back(encode_lit(l));
            std::sort(lits.begin(), lits.end());
            lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
            if (lits.empty()) {
                trivially_unsat_ = true;
                continue;
            }
            if (lits.size() == 1) {
                units_.push_back(lits[0]);
                continue;
            }
            watches_[lits[0]].push_back(clauses_.size());
            watches_[lits[1]].push_back(clauses_.size());
            clauses_.push_back(std::move(lits));
        }
    }

    std::optional<DimacsModel> solve() {
        if (trivially_unsat_) return std::nullopt;
        for (auto u : units_) {
            if (!enqueue(u)) return std::nullopt;
        }
        while (true) {
            if (!propagate()) {
                if (!backtrack()) return std::nullopt;
                continue;
            }
            auto v = next_unassigned();
            if (v == 0) break;
            decisions_.push_back({v, trail_.size(), false});
            enqueue(2 * v);
        }
        DimacsModel model;
        model.reserve(num_vars_);
        for (std::size_t v = 1; v <= num_vars_; ++v) {
            auto lit = static_cast<DimacsLit>(v);
            model.push_back(value_[v] < 0 ? -lit : lit);
        }
        return model;
    }

private:
    struct Decision {
        std::size_t var;
        std::size_t trail_start;
        bool flipped;
    };

    int lit_value(Lit l) const {
        auto v = value_[var_of(l)];
        return (l & 1U) ? -v : v;
    }

    bool enqueue(Lit l) {
        auto cur = lit_value(l);
        if (cur > 0) return true;
        if (cur < 0) return false;
        value_[var_of(l)] = (l & 1U) ? -1 : 1;
        trail_.push_back(l);
        return true;
    }

    bool propagate() {
        while (qhead_ < trail_.size()) {
            Lit falsified = negate_lit(trail_[qhead_++]);
            auto& ws = watches_[falsified];
            std::size_t keep = 0;
            bool conflict = false;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                auto ci = ws[i];
                if (conflict) {
                    ws[keep++] = ci;
                    continue;
                }
                auto& c = clauses_[ci];
                if (c[0] == falsified) std::swap(c[0], c[1]);
                if (lit_value(c[0]) > 0) {
                    ws[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (lit_value(c[k]) >= 0) {
                        std::swap(c[1], c[k]);
                        watches_[c[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[keep++] = ci;
                if (!enqueue(c[0])) conflict = true;
            }
            ws.resize(keep);
            if (conflict) return false;
        }
        return true;
    }

    void undo_to(std::size_t trail_size) {
        while (trail_.size() > trail_size) {
            auto v = var_of(trail_.back());
            value_[v] = 0;
            next_var_ = std::min(next_var_, v);
            trail_.pop_back();
        }
        qhead_ = std::min(qhead_, trail_.size());
    }

    bool backtrack() {
        while (!decisions_.empty() && decisions_.back().flipped) {
            undo_to(decisions_.back().trail_start);
            decisions_.pop_back();
        }
        if (decisions_.empty()) return false;
        auto& d = decisions_.back();
        undo_to(d.trail_start);
        d.flipped = true;
        enqueue(2 * d.var + 1);
        return true;
    }

    std::size_t next_unassigned() {
        while (next_var_ <= num_vars_ && value_[next_var_] != 0) ++next_var_;
        return next_var_ <= num_vars_ ? next_var_ : 0;
    }

    std::size_t num_vars_;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<Lit> units_;
    std::vector<int> value_;
    std::vector<Lit> trail_;
    std::vector<Decision> decisions_;
    std::size_t qhead_ = 0;
    std::size_t next_var_ = 1;
    bool trivially_unsat_ = false;
};

class ModelCounter {
public:
    ModelCounter(const DimacsCnf& cnf, std::uint64_t budget) : budget_(budget) {
        std::set<DimacsLit> relevant;
        for (const auto& c : cnf) {
            std::set<DimacsLit> lits(c.begin(), c.end());
            bool tautology = std::any_of(lits.begin(), lits.end(), [&](DimacsLit l) { return lits.contains(-l); });
            if (tautology) continue;
            for (auto l : lits) relevant.insert(dimacs_lit_to_var(l));
            clauses_.emplace_back(lits.begin(), lits.end());
        }
        num_relevant_ = relevant.size();
        max_var_ = relevant.empty() ? 0 : static_cast<std::size_t>(*relevant.rbegin());
    }

    std::optional<std::uint64_t> count() {
        std::vector<int> value(max_var_ + 1, 0);
        auto result = count_from(value, 0);
        if (exceeded_) return std::nullopt;
        return result;
    }

private:
    int lit_value(const std::vector<int>& value, DimacsLit l) const {
        auto v = value[static_cast<std::size_t>(dimacs_lit_to_var(l))];
        return l > 0 ? v : -v;
    }

    // Unit propagation by rescanning; false on conflict.
    bool propagate(std::vector<int>& value, std::size_t& assigned) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : clauses_) {
                std::size_t open = 0;
                DimacsLit last = 0;
                bool sat = false;
                for (auto l : c) {
                    auto lv = lit_value(value, l);
                    if (lv > 0) {
                        sat = true;
                        break;
                    }
                    if (lv == 0) {
                        ++open;
                        last = l;
                    }
                }
                if (sat) continue;
                if (open == 0) return false;
                if (open == 1) {
                    value[static_cast<std::size_t>(dimacs_lit_to_var(last))] = last > 0 ? 1 : -1;
                    ++assigned;
                    changed = true;
                }
            }
        }
        return true;
    }

    std::uint64_t count_from(std::vector<int> value, std::size_t assigned) {
        if (exceeded_ || ++nodes_ > budget_) {
            exceeded_ = true;
            return 0;
        }
        if (!propagate(value, assigned)) return 0;
        DimacsLit branch = 0;
        for (const auto& c : clauses_) {
            bool sat = false;
            DimacsLit open = 0;
            for (auto l : c) {
                auto lv = lit_value(value, l);
                if (lv > 0) {
                    sat = true;
                    break;
                }
                if (lv == 0 && (open == 0 || dimacs_lit_to_var(l) < open)) open = dimacs_lit_to_var(l);
            }
            if (!sat && (branch == 0 || open < branch)) branch = open;
        }
        if (branch == 0) {
            auto free = num_relevant_ - assigned;
            if (free >= 63) {
                exceeded_ = true;
                return 0;
            }
            return std::uint64_t{1} << free;
        }
        auto idx = static_cast<std::size_t>(branch);
        auto with_true = value;
        with_true[idx] = 1;
        auto a = count_from(std::move(with_true), assigned + 1);
        value[idx] = -1;
        auto b = count_from(std::move(value), assigned + 1);
        return a + b;
    }

    std::vector<DimacsClause> clauses_;
    std::size_t num_relevant_ = 0;
    std::size_t max_var_ = 0;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exceeded_ = false;
};

}  // namespace

std::optional<DimacsModel> mini_dpll(const DimacsCnf& cnf) {
    return Dpll(cnf).solve();
}

std::optional<std::uint64_t> count_models(const DimacsCnf& cnf, std::uint64_t node_budget) {
    return ModelCounter(cnf, node_budget).count();
}

}  // namespace satforge
