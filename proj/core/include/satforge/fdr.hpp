#pragma once

// Finite-domain representation (SAS+) with explicit variable ranges, and the
// translation from SAS syntax into it.

#include <map>
#include <stdexcept>
#include <vector>

#include "satforge/ast_semantics.hpp"
#include "satforge/sas_ast.hpp"

namespace satforge {

struct FdrOperator {
    std::vector<Assignment> precondition;
    std::vector<Assignment> effect;

    bool is_noop() const { return precondition.empty() && effect.empty(); }

    friend auto operator<=>(const FdrOperator&, const FdrOperator&) = default;
};

struct FdrProblem {
    std::vector<std::size_t> variables;
    std::vector<FdrOperator> operators;
    State initial;
    State goal;
    std::map<std::size_t, std::vector<std::size_t>> range_of;

    friend bool operator==(const FdrProblem&, const FdrProblem&) = default;
};

/// Assignments consistent, variables declared, values within range.
bool valid_problem(const FdrProblem& problem);

AstEffect rem_effect_implicit_pres(const AstEffect& effect);

/// Hoists implicit preconditions in front of the explicit ones and clears
/// them from the effects. Duplicate (agreeing) bindings are collapsed to the
/// first occurrence.
AstOperator rem_implicit_pres(const AstOperator& op);
AstProblem rem_implicit_pres_ops(const AstProblem& problem);

FdrOperator abs_operator(const AstOperator& op);

/// Expects a problem without implicit or effect preconditions.
FdrProblem abs_problem(const AstProblem& problem);

/// Appends the empty operator.
FdrProblem with_noop(FdrProblem problem);
std::vector<FdrOperator> rem_noops(const std::vector<FdrOperator>& plan);

bool is_operator_applicable_in(const State& s, const FdrOperator& op);
State execute_operator(const State& s, const FdrOperator& op);

/// Total execution: stops at (and excludes) the first inapplicable operator.
State fdr_execute_serial(const State& s, const std::vector<FdrOperator>& plan);

bool is_serial_solution_for_problem(const FdrProblem& problem, const std::vector<FdrOperator>& plan);

class LookupFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Drops operators that are inapplicable when reached (starting from the
/// initial state of `problem`), then names each survivor after the first
/// operator of `problem` translating to it. Operators are compared after
/// rem_implicit_pres, so `problem` may still carry implicit preconditions.
std::vector<Name> decode_abs_plan(const AstProblem& problem, const std::vector<FdrOperator>& plan);

}  // namespace satforge
