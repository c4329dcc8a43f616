#pragma once

// Brute-force ground truth: BFS plan-length oracles, a small complete DPLL,
// a model counter, a random problem generator and the differential harness
// that checks the whole pipeline against them.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "satforge/dimacs.hpp"
#include "satforge/pipeline.hpp"
#include "satforge/sas_ast.hpp"
#include "satforge/satplan.hpp"
#include "satforge/strips.hpp"

namespace satforge {

class StateSpaceExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// Minimal serial plan length by BFS over `execute`, absent if the goal is
/// not reached within `depth_cap` steps.
std::optional<std::size_t> oracle_serial(const AstProblem& problem, std::size_t depth_cap,
                                         std::size_t state_cap = kDefaultStateCap);

/// Minimal ∀-step parallel plan length. A step is any subset of distinct
/// operators that is applicable, effect-consistent and pairwise
/// non-interfering. At most 12 distinct operators.
std::optional<std::size_t> oracle_parallel(const StripsProblem& problem, std::size_t depth_cap,
                                           std::size_t state_cap = kDefaultStateCap);

/// Minimal serial plan length over the STRIPS semantics.
std::optional<std::size_t> oracle_strips_serial(const StripsProblem& problem, std::size_t depth_cap,
                                                std::size_t state_cap = kDefaultStateCap);

/// Number of length-`horizon` step sequences reaching the goal, where a step
/// is a valid ∀-step subset of the distinct operators that mention at least
/// one variable. Equals the model count of an exact encoding.
std::uint64_t count_parallel_plans(const StripsProblem& problem, std::size_t horizon);

struct OracleVerdict {
    std::optional<std::size_t> min_serial_length;
    std::optional<std::size_t> min_parallel_length;
    std::size_t reachable_states = 0;
};

/// Both oracles on the SAS problem and its STRIPS image (with NO-OP).
OracleVerdict oracle_verdict(const AstProblem& problem, std::size_t depth_cap);

/// Complete DPLL: unit propagation and chronological backtracking, branching
/// on the lowest unassigned variable, true first. No clause learning.
/// Returns a model over 1..max_variable, or nullopt when unsatisfiable.
std::optional<DimacsModel> mini_dpll(const DimacsCnf& cnf);

/// Counts models over the variables occurring in non-tautological clauses.
/// Returns nullopt once more than `node_budget` search nodes are needed.
std::optional<std::uint64_t> count_models(const DimacsCnf& cnf, std::uint64_t node_budget);

struct GeneratorConfig {
    std::size_t max_vars = 3;
    std::size_t max_vals_per_var = 3;
    std::size_t max_ops = 5;
    std::size_t max_pre_len = 2;
    std::size_t max_eff_len = 2;
    double implicit_pre_probability = 0.3;
    std::uint64_t seed = 1;
};

/// Well-formed, consistent and standard by construction; a pure function of
/// the config.
AstProblem generate_problem(const GeneratorConfig& cfg);

/// Seed used for problem `index` of a differential run.
std::uint64_t problem_seed(std::uint64_t base, std::size_t index);

struct DifferentialOptions {
    ClauseFamilies families;
    /// Where reproduction bundles (problem.sas, horizon, model) go.
    std::optional<std::filesystem::path> bundle_dir;
    /// Model-count exactness check at the minimal horizon and one above.
    bool check_model_count = true;
    std::uint64_t count_budget = 200'000;
    /// Stop after this many counterexamples (0 = never).
    std::size_t stop_after = 0;
};

struct DifferentialEntry {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool ok = true;
    /// Single token: "ok(L*=k)", "ok(none<=h)" or "counterexample(h=k)".
    std::string verdict;
    /// Human-readable reason for a counterexample.
    std::string detail;
    std::optional<std::filesystem::path> bundle;
};

struct DifferentialReport {
    std::vector<DifferentialEntry> entries;

    std::size_t counterexamples() const;
    int exit_code() const { return counterexamples() == 0 ? 0 : 1; }
    /// One line per problem: "idx seed verdict [counterexample-path]".
    void write(std::ostream& out) const;
};

/// Generates `n` problems and checks, for every horizon 0..h_max, that the
/// encoding is satisfiable exactly from the minimal ∀-step length on, that
/// every decoded plan is valid and serializable, and that model counts match
/// the plan counts.
DifferentialReport differential_run(const GeneratorConfig& cfg, std::size_t n, std::size_t h_max,
                                    const DifferentialOptions& options = {});

}  // namespace satforge
