#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "satforge/oracle.hpp"

namespace satforge {

namespace {

template <typename StateT, typename Successors, typename IsGoal>
std::pair<std::optional<std::size_t>, std::size_t> bfs(const StateT& start, std::size_t depth_cap, std::size_t state_cap,
                                                       const Successors& successors, const IsGoal& is_goal) {
    std::set<StateT> seen{start};
    std::vector<StateT> layer{start};
    for (std::size_t depth = 0;; ++depth) {
        for (const auto& s : layer) {
            if (is_goal(s)) return {depth, seen.size()};
        }
        if (depth == depth_cap || layer.empty()) return {std::nullopt, seen.size()};
        std::vector<StateT> next;
        for (const auto& s : layer) {
            for (auto& t : successors(s)) {
                if (seen.insert(t).second) {
                    if (seen.size() > state_cap) throw StateSpaceExceeded("state space exceeds " + std::to_string(state_cap) + " states");
                    next.push_back(std::move(t));
                }
            }
        }
        layer = std::move(next);
    }
}

std::vector<StripsOperator> distinct_operators(const std::vector<StripsOperator>& ops) {
    std::vector<StripsOperator> out;
    for (const auto& op : ops) {
        if (std::find(out.begin(), out.end(), op) == out.end()) out.push_back(op);
    }
    return out;
}

// Enumerates the ∀-step successors of a state over a fixed operator list.
class StepEnumerator {
public:
    explicit StepEnumerator(std::vector<StripsOperator> ops) : ops_(std::move(ops)) {
        if (ops_.size() > 12) throw std::invalid_argument("parallel oracle supports at most 12 distinct operators");
        compatible_.assign(ops_.size(), 0);
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            for (std::size_t j = 0; j < ops_.size(); ++j) {
                if (i == j) continue;
                std::vector<StripsOperator> pair{ops_[i], ops_[j]};
                if (are_all_operator_effects_consistent(pair) && !are_operators_interfering(ops_[i], ops_[j])) {
                    compatible_[i] |= 1U << j;
                }
            }
        }
    }

    /// Successor state of every valid step, one entry per step (with repeats).
    std::vector<StripsState> successors(const StripsState& s) const {
        unsigned applicable = 0;
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            if (is_strips_operator_applicable(s, ops_[i]) && are_all_operator_effects_consistent({ops_[i]})) {
                applicable |= 1U << i;
            }
        }
        std::vector<StripsState> out;
        std::vector<StripsOperator> step;
        extend(s, 0, applicable, step, out);
        return out;
    }

private:
    void extend(const StripsState& s, std::size_t i, unsigned allowed, std::vector<StripsOperator>& step,
                std::vector<StripsState>& out) const {
        if (i == ops_.size()) {
            out.push_back(strips_execute_parallel_step(s, step));
            return;
        }
        extend(s, i + 1, allowed, step, out);
        if (allowed & (1U << i)) {
            step.push_back(ops_[i]);
            extend(s, i + 1, allowed & compatible_[i], step, out);
            step.pop_back();
        }
    }

    std::vector<StripsOperator> ops_;
    std::vector<unsigned> compatible_;
};

}  // namespace

std::optional<std::size_t> oracle_serial(const AstProblem& problem, std::size_t depth_cap, std::size_t state_cap) {
    auto succ = [&](const State& s) {
        std::vector<State> out;
        for (const auto& op : problem.operators) {
            if (enabled(problem, op.name, s)) out.push_back(execute(problem, op.name, s));
        }
        return out;
    };
    auto goal = [&](const State& s) { return subsumes(problem, problem.goal, s); };
    return bfs(initial_state(problem), depth_cap, state_cap, succ, goal).first;
}

std::optional<std::size_t> oracle_parallel(const StripsProblem& problem, std::size_t depth_cap, std::size_t state_cap) {
    StepEnumerator steps(distinct_operators(problem.operators));
    auto goal = [&](const StripsState& s) { return goal_satisfied(problem.goal, s); };
    return bfs(problem.initial, depth_cap, state_cap, [&](const StripsState& s) { return steps.successors(s); }, goal).first;
}

std::optional<std::size_t> oracle_strips_serial(const StripsProblem& problem, std::size_t depth_cap, std::size_t state_cap) {
    auto ops = distinct_operators(problem.operators);
    auto succ = [&](const StripsState& s) {
        std::vector<StripsState> out;
        for (const auto& op : ops) {
            if (is_strips_operator_applicable(s, op)) out.push_back(strips_execute_operator(s, op));
        }
        return out;
    };
    auto goal = [&](const StripsState& s) { return goal_satisfied(problem.goal, s); };
    return bfs(problem.initial, depth_cap, state_cap, succ, goal).first;
}

std::uint64_t count_parallel_plans(const StripsProblem& problem, std::size_t horizon) {
    std::vector<StripsOperator> ops;
    for (const auto& op : distinct_operators(problem.operators)) {
        if (!op.precondition.empty() || !op.add_effects.empty() || !op.delete_effects.empty()) ops.push_back(op);
    }
    StepEnumerator steps(std::move(ops));
    std::map<StripsState, std::uint64_t> layer{{problem.initial, 1}};
    for (std::size_t t = 0; t < horizon; ++t) {
        std::map<StripsState, std::uint64_t> next;
        for (const auto& [s, n] : layer) {
            for (auto& succ : steps.successors(s)) next[std::move(succ)] += n;
        }
        layer = std::move(next);
    }
    std::uint64_t total = 0;
    for (const auto& [s, n] : layer) {
        if (goal_satisfied(problem.goal, s)) total += n;
    }
    return total;
}

OracleVerdict oracle_verdict(const AstProblem& problem, std::size_t depth_cap) {
    OracleVerdict v;
    auto succ = [&](const State& s) {
        std::vector<State> out;
        for (const auto& op : problem.operators) {
            if (enabled(problem, op.name, s)) out.push_back(execute(problem, op.name, s));
        }
        return out;
    };
    auto goal = [&](const State& s) { return subsumes(problem, problem.goal, s); };
    v.min_serial_length = bfs(initial_state(problem), depth_cap, kDefaultStateCap, succ, goal).first;
    // Reachable states: search again without a goal.
    v.reachable_states = bfs(initial_state(problem), kDefaultStateCap, kDefaultStateCap, succ, [](const State&) { return false; }).second;
    auto strips = phi_problem(with_noop(abs_problem(rem_implicit_pres_ops(problem))));
    v.min_parallel_length = oracle_parallel(strips, depth_cap);
    return v;
}

}  // namespace satforge
