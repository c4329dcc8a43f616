#pragma once

// Operational semantics of SAS problems. This is the judge every decoded
// plan is checked against.

#include <map>
#include <stdexcept>
#include <vector>

#include "satforge/sas_ast.hpp"

namespace satforge {

/// Variable index -> value index. Ordered so equality and hashing are canonical.
using State = std::map<std::size_t, std::size_t>;

/// Map view of an assignment list; the first binding of a variable wins.
State map_of(const PartialState& ps);

/// The initial state as a map over all variables.
State initial_state(const AstProblem& problem);

bool valid_states(const AstProblem& problem, const State& s);
bool subsumes(const AstProblem& problem, const PartialState& partial, const State& s);
bool enabled(const AstProblem& problem, const Name& name, const State& s);

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Applies every effect whose effect preconditions hold in `s`.
/// Throws ContractViolation if `name` is not an operator of the problem.
State execute(const AstProblem& problem, const Name& name, const State& s);

bool path_to(const AstProblem& problem, const State& from, const std::vector<Name>& plan, const State& to);
bool valid_plan(const AstProblem& problem, const std::vector<Name>& plan);

}  // namespace satforge
