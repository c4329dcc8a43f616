#include "satforge/satplan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace satforge {

std::string to_string(const SatPlanVariable& v) {
    const char* kind = v.kind == SatPlanVariable::Kind::State ? "State" : "Operator";
    return std::string(kind) + "(" + std::to_string(v.time) + "," + std::to_string(v.index) + ")";
}

namespace {

using F = PlanFormula;

F state_atom(std::size_t t, std::size_t k) { return F::atom(SatPlanVariable::state(t, k)); }
F op_atom(std::size_t t, std::size_t k) { return F::atom(SatPlanVariable::op(t, k)); }

F signed_state(std::size_t t, std::size_t k, bool positive) {
    return positive ? state_atom(t, k) : F::negate(state_atom(t, k));
}

// Index lookups shared by every clause family of one encoding.
class Indexer {
public:
    explicit Indexer(const StripsProblem& problem) : problem_(problem) {
        for (std::size_t i = 0; i < problem.variables.size(); ++i) var_index_.emplace(problem.variables[i], i);
        op_index_.reserve(problem.operators.size());
        std::map<StripsOperator, std::size_t> first;
        for (std::size_t i = 0; i < problem.operators.size(); ++i) {
            op_index_.push_back(first.emplace(problem.operators[i], i).first->second);
        }
    }

    std::size_t var(const StripsVariable& v) const {
        auto it = var_index_.find(v);
        if (it == var_index_.end()) throw std::out_of_range("variable is not part of the STRIPS problem");
        return it->second;
    }

    std::size_t op_at(std::size_t position) const { return op_index_[position]; }

    std::size_t op(const StripsOperator& o) const {
        auto it = std::find(problem_.operators.begin(), problem_.operators.end(), o);
        if (it == problem_.operators.end()) throw std::out_of_range("operator is not part of the STRIPS problem");
        return op_index_[static_cast<std::size_t>(it - problem_.operators.begin())];
    }

    const StripsProblem& problem() const { return problem_; }

private:
    const StripsProblem& problem_;
    std::map<StripsVariable, std::size_t> var_index_;
    std::vector<std::size_t> op_index_;
};

F precondition_clauses(const Indexer& ix, std::size_t t, std::size_t op_idx, const StripsOperator& op) {
    std::vector<F> clauses;
    clauses.reserve(op.precondition.size());
    for (const auto& v : op.precondition) clauses.push_back(F::disj(F::negate(op_atom(t, op_idx)), state_atom(t, ix.var(v))));
    return big_and(clauses);
}

F effect_clauses(const Indexer& ix, std::size_t t, std::size_t op_idx, const StripsOperator& op) {
    std::vector<F> clauses;
    clauses.reserve(op.add_effects.size() + op.delete_effects.size());
    for (const auto& v : op.add_effects) clauses.push_back(F::disj(F::negate(op_atom(t, op_idx)), state_atom(t + 1, ix.var(v))));
    for (const auto& v : op.delete_effects)
        clauses.push_back(F::disj(F::negate(op_atom(t, op_idx)), F::negate(state_atom(t + 1, ix.var(v)))));
    return big_and(clauses);
}

// antecedent ∨ ⋁ responsible operators; an empty disjunction (⊥) is absorbed.
F frame_clause(F antecedent, std::size_t t, const std::vector<std::size_t>& responsible) {
    if (responsible.empty()) return antecedent;
    std::vector<F> ops;
    ops.reserve(responsible.size());
    for (auto k : responsible) ops.push_back(op_atom(t, k));
    return F::disj(std::move(antecedent), big_or(ops));
}

F positive_frame(std::size_t t, std::size_t k, const std::vector<std::size_t>& adders) {
    return frame_clause(F::disj(state_atom(t, k), F::negate(state_atom(t + 1, k))), t, adders);
}

F negative_frame(std::size_t t, std::size_t k, const std::vector<std::size_t>& deleters) {
    return frame_clause(F::disj(F::negate(state_atom(t, k)), state_atom(t + 1, k)), t, deleters);
}

std::vector<std::size_t> responsible_ops(const Indexer& ix, const StripsVariable& v, bool adding) {
    std::vector<std::size_t> out;
    const auto& ops = ix.problem().operators;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto& list = adding ? ops[i].add_effects : ops[i].delete_effects;
        if (std::find(list.begin(), list.end(), v) != list.end()) out.push_back(ix.op_at(i));
    }
    return out;
}

// Unordered pairs (i < j) of list positions whose operators interfere and
// whose activation atoms differ.
std::vector<std::pair<std::size_t, std::size_t>> interfering_pairs(const Indexer& ix) {
    const auto& ops = ix.problem().operators;
    std::map<StripsVariable, std::vector<std::size_t>> requiring;
    for (std::size_t j = 0; j < ops.size(); ++j) {
        for (const auto& v : ops[j].precondition) requiring[v].push_back(j);
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (const auto& v : ops[i].delete_effects) {
            auto it = requiring.find(v);
            if (it == requiring.end()) continue;
            for (auto j : it->second) {
                if (ix.op_at(i) == ix.op_at(j)) continue;
                pairs.emplace(std::min(i, j), std::max(i, j));
            }
        }
    }
    return {pairs.begin(), pairs.end()};
}

F interference_clauses(const Indexer& ix, std::size_t t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<F> clauses;
    clauses.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        clauses.push_back(F::disj(F::negate(op_atom(t, ix.op_at(i))), F::negate(op_atom(t, ix.op_at(j)))));
    }
    return big_and(clauses);
}

std::vector<std::size_t> remdups_positions(const StripsProblem& problem) {
    // Keeps the last occurrence of each operator.
    std::vector<std::size_t> out;
    const auto& ops = problem.operators;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (std::find(ops.begin() + static_cast<std::ptrdiff_t>(i) + 1, ops.end(), ops[i]) == ops.end()) out.push_back(i);
    }
    return out;
}

}  // namespace

std::size_t operator_index(const StripsProblem& problem, const StripsOperator& op) {
    auto it = std::find(problem.operators.begin(), problem.operators.end(), op);
    if (it == problem.operators.end()) throw std::out_of_range("operator is not part of the STRIPS problem");
    return static_cast<std::size_t>(it - problem.operators.begin());
}

std::size_t variable_index(const StripsProblem& problem, const StripsVariable& v) {
    auto it = std::find(problem.variables.begin(), problem.variables.end(), v);
    if (it == problem.variables.end()) throw std::out_of_range("variable is not part of the STRIPS problem");
    return static_cast<std::size_t>(it - problem.variables.begin());
}

PlanFormula encode_initial_state(const StripsProblem& problem) {
    std::vector<F> lits;
    lits.reserve(problem.variables.size());
    for (std::size_t k = 0; k < problem.variables.size(); ++k) {
        auto it = problem.initial.find(problem.variables[k]);
        lits.push_back(signed_state(0, k, it != problem.initial.end() && it->second));
    }
    return big_and(lits);
}

PlanFormula encode_goal_state(const StripsProblem& problem, std::size_t horizon) {
    std::vector<F> lits;
    for (std::size_t k = 0; k < problem.variables.size(); ++k) {
        auto it = problem.goal.find(problem.variables[k]);
        if (it != problem.goal.end()) lits.push_back(signed_state(horizon, k, it->second));
    }
    return big_and(lits);
}

PlanFormula encode_operator_precondition(const StripsProblem& problem, std::size_t t, const StripsOperator& op) {
    Indexer ix(problem);
    return precondition_clauses(ix, t, ix.op(op), op);
}

PlanFormula encode_operator_effect(const StripsProblem& problem, std::size_t t, const StripsOperator& op) {
    Indexer ix(problem);
    return effect_clauses(ix, t, ix.op(op), op);
}

PlanFormula encode_positive_frame_axiom(const StripsProblem& problem, std::size_t t, const StripsVariable& v) {
    Indexer ix(problem);
    return positive_frame(t, ix.var(v), responsible_ops(ix, v, true));
}

PlanFormula encode_negative_frame_axiom(const StripsProblem& problem, std::size_t t, const StripsVariable& v) {
    Indexer ix(problem);
    return negative_frame(t, ix.var(v), responsible_ops(ix, v, false));
}

PlanFormula encode_frame_axioms(const StripsProblem& problem, std::size_t t, const StripsVariable& v) {
    return F::conj(encode_positive_frame_axiom(problem, t, v), encode_negative_frame_axiom(problem, t, v));
}

PlanFormula encode_interference(const StripsProblem& problem, std::size_t t) {
    Indexer ix(problem);
    return interference_clauses(ix, t, interfering_pairs(ix));
}

PlanFormula encode_problem(const StripsProblem& problem, std::size_t horizon, const ClauseFamilies& families) {
    Indexer ix(problem);
    const auto& ops = problem.operators;
    const auto& vars = problem.variables;

    std::vector<F> parts;
    auto add = [&](F f) {
        if (!f.is_top()) parts.push_back(std::move(f));
    };

    add(encode_initial_state(problem));
    add(encode_goal_state(problem, horizon));

    for (std::size_t t = 0; t < horizon; ++t) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (families.preconditions) add(precondition_clauses(ix, t, ix.op_at(i), ops[i]));
            if (families.effects) add(effect_clauses(ix, t, ix.op_at(i), ops[i]));
        }
    }

    std::vector<std::vector<std::size_t>> adders(vars.size());
    std::vector<std::vector<std::size_t>> deleters(vars.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (const auto& v : ops[i].add_effects) adders[ix.var(v)].push_back(ix.op_at(i));
        for (const auto& v : ops[i].delete_effects) deleters[ix.var(v)].push_back(ix.op_at(i));
    }
    for (std::size_t t = 0; t < horizon; ++t) {
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (families.positive_frame) add(positive_frame(t, k, adders[k]));
            if (families.negative_frame) add(negative_frame(t, k, deleters[k]));
        }
    }

    if (families.interference) {
        auto pairs = interfering_pairs(ix);
        for (std::size_t t = 0; t < horizon; ++t) add(interference_clauses(ix, t, pairs));
    }
    return big_and(parts);
}

std::vector<StripsOperator> decode_plan_step(const StripsProblem& problem, const PlanValuation& valuation, std::size_t step) {
    std::vector<StripsOperator> out;
    for (auto pos : remdups_positions(problem)) {
        auto k = operator_index(problem, problem.operators[pos]);
        if (valuation(SatPlanVariable::op(step, k))) out.push_back(problem.operators[k]);
    }
    return out;
}

ParallelPlan decode_parallel_plan(const StripsProblem& problem, const PlanValuation& valuation, std::size_t horizon) {
    ParallelPlan plan;
    plan.reserve(horizon);
    for (std::size_t i = 0; i < horizon; ++i) plan.push_back(decode_plan_step(problem, valuation, i));
    return plan;
}

}  // namespace satforge
