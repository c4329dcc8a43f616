#pragma once

// ∀-step SATPlan encoding of a STRIPS problem over time-indexed state and
// operator-activation atoms, and decoding of valuations into parallel plans.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "satforge/formula.hpp"
#include "satforge/strips.hpp"

namespace satforge {

struct SatPlanVariable {
    enum class Kind { State, Operator };

    Kind kind = Kind::State;
    std::size_t time = 0;
    std::size_t index = 0;

    static SatPlanVariable state(std::size_t t, std::size_t k) { return {Kind::State, t, k}; }
    static SatPlanVariable op(std::size_t t, std::size_t k) { return {Kind::Operator, t, k}; }

    friend auto operator<=>(const SatPlanVariable&, const SatPlanVariable&) = default;
};

std::string to_string(const SatPlanVariable& v);

using PlanFormula = Formula<SatPlanVariable>;
using PlanValuation = std::function<bool(const SatPlanVariable&)>;

/// Clause families that make up the transition relation. All are on by
/// default; switching one off yields a deliberately broken encoder, which the
/// differential harness uses as a mutation sentinel.
struct ClauseFamilies {
    bool preconditions = true;
    bool effects = true;
    bool positive_frame = true;
    bool negative_frame = true;
    bool interference = true;

    friend bool operator==(const ClauseFamilies&, const ClauseFamilies&) = default;
};

/// Position of the first operator structurally equal to `op`.
std::size_t operator_index(const StripsProblem& problem, const StripsOperator& op);
std::size_t variable_index(const StripsProblem& problem, const StripsVariable& v);

PlanFormula encode_initial_state(const StripsProblem& problem);
PlanFormula encode_goal_state(const StripsProblem& problem, std::size_t horizon);
PlanFormula encode_operator_precondition(const StripsProblem& problem, std::size_t t, const StripsOperator& op);
PlanFormula encode_operator_effect(const StripsProblem& problem, std::size_t t, const StripsOperator& op);
PlanFormula encode_positive_frame_axiom(const StripsProblem& problem, std::size_t t, const StripsVariable& v);
PlanFormula encode_negative_frame_axiom(const StripsProblem& problem, std::size_t t, const StripsVariable& v);
/// Positive then negative frame axiom for `v` between t and t+1.
PlanFormula encode_frame_axioms(const StripsProblem& problem, std::size_t t, const StripsVariable& v);
PlanFormula encode_interference(const StripsProblem& problem, std::size_t t);

/// Initial ∧ goal-at-h ∧ per-step transitions ∧ interference exclusions.
PlanFormula encode_problem(const StripsProblem& problem, std::size_t horizon, const ClauseFamilies& families = {});

std::vector<StripsOperator> decode_plan_step(const StripsProblem& problem, const PlanValuation& valuation, std::size_t step);
ParallelPlan decode_parallel_plan(const StripsProblem& problem, const PlanValuation& valuation, std::size_t horizon);

}  // namespace satforge
