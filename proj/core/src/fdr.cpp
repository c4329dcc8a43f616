#include "satforge/fdr.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace satforge {

namespace {

bool consistent_assignments(const std::vector<Assignment>& as) {
    std::map<std::size_t, std::size_t> seen;
    for (const auto& [x, v] : as) {
        auto [it, inserted] = seen.emplace(x, v);
        if (!inserted && it->second != v) return false;
    }
    return true;
}

bool in_range(const FdrProblem& problem, std::size_t var, std::size_t val) {
    auto it = problem.range_of.find(var);
    if (it == problem.range_of.end()) return false;
    return std::find(it->second.begin(), it->second.end(), val) != it->second.end();
}

bool assignments_in_range(const FdrProblem& problem, const std::vector<Assignment>& as) {
    return std::all_of(as.begin(), as.end(), [&](const Assignment& a) { return in_range(problem, a.var, a.val); });
}

}  // namespace

bool valid_problem(const FdrProblem& problem) {
    std::set<std::size_t> declared(problem.variables.begin(), problem.variables.end());
    for (auto x : problem.variables) {
        auto it = problem.range_of.find(x);
        if (it == problem.range_of.end() || it->second.empty()) return false;
    }
    for (const auto& op : problem.operators) {
        if (!consistent_assignments(op.precondition) || !consistent_assignments(op.effect)) return false;
        if (!assignments_in_range(problem, op.precondition) || !assignments_in_range(problem, op.effect)) return false;
    }
    // Initial state is total over the declared variables.
    if (problem.initial.size() != declared.size()) return false;
    for (const auto& [x, v] : problem.initial) {
        if (!declared.contains(x) || !in_range(problem, x, v)) return false;
    }
    for (const auto& [x, v] : problem.goal) {
        if (!declared.contains(x) || !in_range(problem, x, v)) return false;
    }
    return true;
}

AstEffect rem_effect_implicit_pres(const AstEffect& effect) {
    AstEffect out = effect;
    out.implicit_pre.reset();
    return out;
}

AstOperator rem_implicit_pres(const AstOperator& op) {
    AstOperator out;
    out.name = op.name;
    out.cost = op.cost;
    std::set<std::size_t> bound;
    for (const auto& a : implicit_pres(op.effects)) {
        if (bound.insert(a.var).second) out.preconds.push_back(a);
    }
    for (const auto& a : op.preconds) {
        if (bound.insert(a.var).second) out.preconds.push_back(a);
    }
    out.effects.reserve(op.effects.size());
    for (const auto& e : op.effects) out.effects.push_back(rem_effect_implicit_pres(e));
    return out;
}

AstProblem rem_implicit_pres_ops(const AstProblem& problem) {
    AstProblem out = problem;
    for (auto& op : out.operators) op = rem_implicit_pres(op);
    return out;
}

FdrOperator abs_operator(const AstOperator& op) {
    FdrOperator out;
    out.precondition = op.preconds;
    out.effect.reserve(op.effects.size());
    for (const auto& e : op.effects) out.effect.push_back({e.var, e.new_val});
    return out;
}

FdrProblem abs_problem(const AstProblem& problem) {
    FdrProblem out;
    out.variables.resize(problem.num_vars());
    std::iota(out.variables.begin(), out.variables.end(), std::size_t{0});
    out.initial = initial_state(problem);
    out.goal = map_of(problem.goal);
    for (std::size_t x = 0; x < problem.num_vars(); ++x) {
        std::vector<std::size_t> range(problem.num_vals(x));
        std::iota(range.begin(), range.end(), std::size_t{0});
        out.range_of.emplace(x, std::move(range));
    }
    out.operators.reserve(problem.operators.size());
    for (const auto& op : problem.operators) out.operators.push_back(abs_operator(op));
    return out;
}

FdrProblem with_noop(FdrProblem problem) {
    problem.operators.push_back(FdrOperator{});
    return problem;
}

std::vector<FdrOperator> rem_noops(const std::vector<FdrOperator>& plan) {
    std::vector<FdrOperator> out;
    std::copy_if(plan.begin(), plan.end(), std::back_inserter(out), [](const FdrOperator& op) { return !op.is_noop(); });
    return out;
}

bool is_operator_applicable_in(const State& s, const FdrOperator& op) {
    return std::all_of(op.precondition.begin(), op.precondition.end(), [&](const Assignment& a) {
        auto it = s.find(a.var);
        return it != s.end() && it->second == a.val;
    });
}

State execute_operator(const State& s, const FdrOperator& op) {
    State out = s;
    for (const auto& [x, v] : map_of(op.effect)) out[x] = v;
    return out;
}

State fdr_execute_serial(const State& s, const std::vector<FdrOperator>& plan) {
    State cur = s;
    for (const auto& op : plan) {
        if (!is_operator_applicable_in(cur, op)) break;
        cur = execute_operator(cur, op);
    }
    return cur;
}

bool is_serial_solution_for_problem(const FdrProblem& problem, const std::vector<FdrOperator>& plan) {
    State s = problem.initial;
    for (const auto& op : plan) {
        if (std::find(problem.operators.begin(), problem.operators.end(), op) == problem.operators.end()) return false;
        if (!is_operator_applicable_in(s, op)) return false;
        s = execute_operator(s, op);
    }
    for (const auto& [x, v] : problem.goal) {
        auto it = s.find(x);
        if (it == s.end() || it->second != v) return false;
    }
    return true;
}

std::vector<Name> decode_abs_plan(const AstProblem& problem, const std::vector<FdrOperator>& plan) {
    std::vector<FdrOperator> translated;
    translated.reserve(problem.operators.size());
    for (const auto& op : problem.operators) translated.push_back(abs_operator(rem_implicit_pres(op)));

    std::vector<Name> names;
    State s = initial_state(problem);
    for (const auto& op : plan) {
        if (!is_operator_applicable_in(s, op)) continue;
        s = execute_operator(s, op);
        auto it = std::find(translated.begin(), translated.end(), op);
        if (it == translated.end()) throw LookupFailure("decode_abs_plan: no operator translates to a plan step");
        names.push_back(problem.operators[static_cast<std::size_t>(it - translated.begin())].name);
    }
    return names;
}

}  // namespace satforge
