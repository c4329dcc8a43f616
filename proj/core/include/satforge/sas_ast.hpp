#pragma once

// Fast Downward translator output (SAS version 3): data model, parser and
// static well-formedness checks.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace satforge {

using Name = std::string;

/// A (variable index, value index) pair.
struct Assignment {
    std::size_t var = 0;
    std::size_t val = 0;

    friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

using PartialState = std::vector<Assignment>;

struct AstVariable {
    Name name;
    std::optional<std::int64_t> axiom_layer;  // absent for accepted problems
    std::vector<Name> values;

    friend bool operator==(const AstVariable&, const AstVariable&) = default;
};

struct AstEffect {
    PartialState effect_preconds;
    std::size_t var = 0;
    std::optional<std::size_t> implicit_pre;
    std::size_t new_val = 0;

    friend bool operator==(const AstEffect&, const AstEffect&) = default;
};

struct AstOperator {
    Name name;
    PartialState preconds;
    std::vector<AstEffect> effects;
    std::uint64_t cost = 0;

    friend bool operator==(const AstOperator&, const AstOperator&) = default;
};

struct AstProblem {
    std::vector<AstVariable> variables;
    std::vector<std::size_t> initial;
    PartialState goal;
    std::vector<AstOperator> operators;

    std::size_t num_vars() const { return variables.size(); }
    std::size_t num_vals(std::size_t var) const { return variables[var].values.size(); }

    /// First operator with the given name, or nullptr.
    const AstOperator* lookup_operator(const Name& name) const;

    friend bool operator==(const AstProblem&, const AstProblem&) = default;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnsupportedFeature : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a complete SAS v3 file. Mutex groups are checked and dropped; the
/// metric flag is dropped, operator costs are kept.
/// Throws SyntaxError on any grammar deviation and UnsupportedFeature for
/// axioms or axiom layers other than -1.
AstProblem parse_sas(std::istream& in);
AstProblem parse_sas_file(const std::string& path);

bool wf_partial_state(const AstProblem& problem, const PartialState& ps);
bool wf_operator(const AstProblem& problem, const AstOperator& op);
bool well_formed(const AstProblem& problem);

/// Implicit preconditions (affected var, required prior value) of an effect list.
PartialState implicit_pres(const std::vector<AstEffect>& effects);

/// Explicit and implicit preconditions never bind a variable to two values.
bool consistent_pres_op(const AstOperator& op);

/// No effect carries its own precondition list (no conditional effects).
bool is_standard_operator(const AstOperator& op);

}  // namespace satforge
