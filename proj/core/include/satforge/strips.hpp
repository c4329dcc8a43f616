#pragma once

// STRIPS layer: Boolean variables are FDR assignments (var, val).

#include <map>
#include <stdexcept>
#include <vector>

#include "satforge/fdr.hpp"

namespace satforge {

using StripsVariable = Assignment;
using StripsState = std::map<StripsVariable, bool>;

struct StripsOperator {
    std::vector<StripsVariable> precondition;
    std::vector<StripsVariable> add_effects;
    std::vector<StripsVariable> delete_effects;

    friend auto operator<=>(const StripsOperator&, const StripsOperator&) = default;
};

struct StripsProblem {
    std::vector<StripsVariable> variables;
    std::vector<StripsOperator> operators;
    StripsState initial;
    StripsState goal;

    friend bool operator==(const StripsProblem&, const StripsProblem&) = default;
};

using ParallelPlan = std::vector<std::vector<StripsOperator>>;

class RangeLookupFailure : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

bool is_valid_problem_strips(const StripsProblem& problem);

/// (v, a) -> (s(v) == a) for every bound v and every a in range_of(v).
StripsState phi_state(const FdrProblem& problem, const State& s);
StripsOperator phi_op(const FdrProblem& problem, const FdrOperator& op);
FdrOperator phi_op_inv(const StripsOperator& op);
StripsProblem phi_problem(const FdrProblem& problem);

bool is_strips_operator_applicable(const StripsState& s, const StripsOperator& op);
StripsState strips_execute_operator(const StripsState& s, const StripsOperator& op);
StripsState strips_execute_serial(const StripsState& s, const std::vector<StripsOperator>& plan);
bool goal_satisfied(const StripsState& goal, const StripsState& s);

bool are_all_operators_applicable(const StripsState& s, const std::vector<StripsOperator>& ops);
/// No variable is added by one operator of the set and deleted by another.
bool are_all_operator_effects_consistent(const std::vector<StripsOperator>& ops);

class ParallelStepError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Simultaneous application of a step. Throws ParallelStepError when an
/// operator is not applicable or the effects are inconsistent.
StripsState strips_execute_parallel_step(const StripsState& s, const std::vector<StripsOperator>& ops);

/// One operator deletes a precondition of the other.
bool are_operators_interfering(const StripsOperator& a, const StripsOperator& b);
bool are_all_operators_non_interfering(const std::vector<StripsOperator>& ops);

/// Steps drawn from the problem, applicable and effect-consistent when
/// reached, goal holds at the end. Non-interference is checked separately.
bool is_parallel_solution_for_problem(const StripsProblem& problem, const ParallelPlan& plan);

bool is_serial_solution_for_problem(const StripsProblem& problem, const std::vector<StripsOperator>& plan);

std::vector<StripsOperator> flatten_parallel_plan(const ParallelPlan& plan);

}  // namespace satforge
