#pragma once

// The gated encode/decode pipeline from SAS problems to DIMACS and back.
//
//   SAS --rem_implicit_pres_ops--> SAS --abs_problem + NO-OP--> FDR
//       --phi_problem--> STRIPS --encode_problem--> formula --numbering--> DIMACS
//
// Horizon convention: `horizon` h means at most h parallel steps. The atom
// numbering uses radices h + 1 (time) and |operators| + 1 (operators
// including the NO-OP).

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "satforge/ast_semantics.hpp"
#include "satforge/dimacs.hpp"
#include "satforge/fdr.hpp"
#include "satforge/sas_ast.hpp"
#include "satforge/satplan.hpp"
#include "satforge/strips.hpp"

namespace satforge {

struct PipelineError {
    enum class Code { Malformed, InconsistentPreconditions, ConditionalEffects, ModelDoesNotSolve };

    Code code;
    std::string message;

    static PipelineError of(Code code);
    friend bool operator==(const PipelineError&, const PipelineError&) = default;
};

template <typename T>
class Outcome {
public:
    Outcome(T value) : data_(std::move(value)) {}
    Outcome(PipelineError error) : data_(std::move(error)) {}

    bool has_value() const { return data_.index() == 0; }
    explicit operator bool() const { return has_value(); }
    const T& value() const { return std::get<0>(data_); }
    T& value() { return std::get<0>(data_); }
    const PipelineError& error() const { return std::get<1>(data_); }

private:
    std::variant<T, PipelineError> data_;
};

using Plan = std::vector<Name>;

/// The three problem gates in order; the first failure wins.
std::optional<PipelineError> check_gates(const AstProblem& problem);

/// Every intermediate artifact of one encoding. Requires the gates to pass.
struct PipelineStages {
    AstProblem normalized;  // implicit preconditions hoisted
    FdrProblem fdr;         // with NO-OP appended
    StripsProblem strips;
    std::size_t horizon = 0;
    std::size_t time_radix = 0;
    std::size_t op_radix = 0;
    PlanFormula formula;
    DimacsCnf cnf;

    /// Valuation over SATPlan atoms induced by a DIMACS model.
    PlanValuation valuation(const DimacsModel& model) const;
};

PipelineStages build_stages(const AstProblem& problem, std::size_t horizon, const ClauseFamilies& families = {});

Outcome<DimacsCnf> encode(std::size_t horizon, const AstProblem& problem);

/// Model -> parallel plan, without the model check. Used by decode and by the
/// serializability checks.
ParallelPlan decode_model_parallel(const PipelineStages& stages, const DimacsModel& model);
Plan decode_model(const PipelineStages& stages, const DimacsModel& model);

Outcome<Plan> decode(const DimacsModel& model, std::size_t horizon, const AstProblem& problem);
/// Variant against a (possibly mutated) clause-family selection.
Outcome<Plan> decode(const DimacsModel& model, std::size_t horizon, const AstProblem& problem, const ClauseFamilies& families);

/// valid_plan with a diagnostic for the first failing step; unknown names
/// are reported as failures, never thrown.
struct Validation {
    bool valid = false;
    std::string diagnostic;
};
Validation validate(const AstProblem& problem, const Plan& plan);

/// SAS v3 writer: metric 0, no mutex groups, no axioms.
void serialize_sas(const AstProblem& problem, std::ostream& out);

/// "(name)" per line followed by "; steps = N".
void write_plan(const Plan& plan, std::ostream& out);
Plan parse_plan(std::istream& in);

// Solving --------------------------------------------------------------------

struct SolverVerdict {
    enum class Kind { Satisfiable, Unsatisfiable };
    Kind kind;
    DimacsModel model;
};

class SolverFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using SolverFn = std::function<SolverVerdict(const DimacsCnf&)>;

/// Runs `command <cnf-path>` and reads a model from its standard output.
/// Throws SolverFailure on a nonzero exit without a verdict.
SolverFn external_solver(std::string command);

struct Unsolvable {
    std::optional<std::size_t> largest_refuted;
};

struct SolveReport {
    std::variant<Plan, Unsolvable, PipelineError> result;
    std::optional<std::size_t> horizon;  // horizon that produced the plan
};

/// Tries each horizon in order; the first satisfiable one is decoded.
SolveReport solve(const AstProblem& problem, const std::vector<std::size_t>& schedule, const SolverFn& solver);

}  // namespace satforge
