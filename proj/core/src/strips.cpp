#include "satforge/strips.hpp"

#include <algorithm>
#include <set>

namespace satforge {

namespace {

bool contains(const std::vector<StripsVariable>& vs, const StripsVariable& v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

bool intersects(const std::vector<StripsVariable>& a, const std::vector<StripsVariable>& b) {
    return std::any_of(a.begin(), a.end(), [&](const StripsVariable& v) { return contains(b, v); });
}

}  // namespace

bool is_valid_problem_strips(const StripsProblem& problem) {
    std::set<StripsVariable> vars(problem.variables.begin(), problem.variables.end());
    auto declared = [&](const std::vector<StripsVariable>& vs) {
        return std::all_of(vs.begin(), vs.end(), [&](const StripsVariable& v) { return vars.contains(v); });
    };
    for (const auto& op : problem.operators) {
        if (!declared(op.precondition) || !declared(op.add_effects) || !declared(op.delete_effects)) return false;
    }
    if (problem.initial.size() != vars.size()) return false;
    for (const auto& [v, _] : problem.initial) {
        if (!vars.contains(v)) return false;
    }
    for (const auto& [v, _] : problem.goal) {
        if (!vars.contains(v)) return false;
    }
    return true;
}

StripsState phi_state(const FdrProblem& problem, const State& s) {
    StripsState out;
    for (const auto& [v, a] : s) {
        auto it = problem.range_of.find(v);
        if (it == problem.range_of.end()) throw RangeLookupFailure("phi_state: no range for variable " + std::to_string(v));
        for (auto b : it->second) out.emplace(StripsVariable{v, b}, a == b);
    }
    return out;
}

StripsOperator phi_op(const FdrProblem& problem, const FdrOperator& op) {
    StripsOperator out;
    out.precondition = op.precondition;
    out.add_effects = op.effect;
    for (const auto& [v, a] : op.effect) {
        auto it = problem.range_of.find(v);
        if (it == problem.range_of.end()) throw RangeLookupFailure("phi_op: no range for variable " + std::to_string(v));
        for (auto b : it->second) {
            if (b != a) out.delete_effects.push_back({v, b});
        }
    }
    return out;
}

FdrOperator phi_op_inv(const StripsOperator& op) {
    return FdrOperator{op.precondition, op.add_effects};
}

StripsProblem phi_problem(const FdrProblem& problem) {
    StripsProblem out;
    for (auto v : problem.variables) {
        for (auto a : problem.range_of.at(v)) out.variables.push_back({v, a});
    }
    out.operators.reserve(problem.operators.size());
    for (const auto& op : problem.operators) out.operators.push_back(phi_op(problem, op));
    out.initial = phi_state(problem, problem.initial);
    out.goal = phi_state(problem, problem.goal);
    return out;
}

bool is_strips_operator_applicable(const StripsState& s, const StripsOperator& op) {
    return std::all_of(op.precondition.begin(), op.precondition.end(), [&](const StripsVariable& v) {
        auto it = s.find(v);
        return it != s.end() && it->second;
    });
}

StripsState strips_execute_operator(const StripsState& s, const StripsOperator& op) {
    StripsState out = s;
    for (const auto& v : op.delete_effects) out[v] = false;
    for (const auto& v : op.add_effects) out[v] = true;
    return out;
}

StripsState strips_execute_serial(const StripsState& s, const std::vector<StripsOperator>& plan) {
    StripsState cur = s;
    for (const auto& op : plan) {
        if (!is_strips_operator_applicable(cur, op)) break;
        cur = strips_execute_operator(cur, op);
    }
    return cur;
}

bool goal_satisfied(const StripsState& goal, const StripsState& s) {
    return std::all_of(goal.begin(), goal.end(), [&](const auto& entry) {
        auto it = s.find(entry.first);
        return it != s.end() && it->second == entry.second;
    });
}

bool are_all_operators_applicable(const StripsState& s, const std::vector<StripsOperator>& ops) {
    return std::all_of(ops.begin(), ops.end(), [&](const StripsOperator& op) { return is_strips_operator_applicable(s, op); });
}

bool are_all_operator_effects_consistent(const std::vector<StripsOperator>& ops) {
    for (const auto& a : ops) {
        for (const auto& b : ops) {
            if (intersects(a.add_effects, b.delete_effects)) return false;
        }
    }
    return true;
}

StripsState strips_execute_parallel_step(const StripsState& s, const std::vector<StripsOperator>& ops) {
    if (!are_all_operators_applicable(s, ops)) throw ParallelStepError("parallel step is not executable");
    if (!are_all_operator_effects_consistent(ops)) throw ParallelStepError("parallel step has inconsistent effects");
    StripsState out = s;
    for (const auto& op : ops) {
        for (const auto& v : op.delete_effects) out[v] = false;
        for (const auto& v : op.add_effects) out[v] = true;
    }
    return out;
}

bool are_operators_interfering(const StripsOperator& a, const StripsOperator& b) {
    return intersects(a.delete_effects, b.precondition) || intersects(b.delete_effects, a.precondition);
}

bool are_all_operators_non_interfering(const std::vector<StripsOperator>& ops) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (are_operators_interfering(ops[i], ops[j])) return false;
        }
    }
    return true;
}

bool is_parallel_solution_for_problem(const StripsProblem& problem, const ParallelPlan& plan) {
    StripsState s = problem.initial;
    for (const auto& step : plan) {
        for (const auto& op : step) {
            if (std::find(problem.operators.begin(), problem.operators.end(), op) == problem.operators.end()) return false;
        }
        if (!are_all_operators_applicable(s, step) || !are_all_operator_effects_consistent(step)) return false;
        s = strips_execute_parallel_step(s, step);
    }
    return goal_satisfied(problem.goal, s);
}

bool is_serial_solution_for_problem(const StripsProblem& problem, const std::vector<StripsOperator>& plan) {
    StripsState s = problem.initial;
    for (const auto& op : plan) {
        if (std::find(problem.operators.begin(), problem.operators.end(), op) == problem.operators.end()) return false;
        if (!is_strips_operator_applicable(s, op)) return false;
        s = strips_execute_operator(s, op);
    }
    return goal_satisfied(problem.goal, s);
}

std::vector<StripsOperator> flatten_parallel_plan(const ParallelPlan& plan) {
    std::vector<StripsOperator> out;
    for (const auto& step : plan) out.insert(out.end(), step.begin(), step.end());
    return out;
}

}  // namespace satforge
