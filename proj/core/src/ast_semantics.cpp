#include "satforge/ast_semantics.hpp"

namespace satforge {

State map_of(const PartialState& ps) {
    State m;
    for (const auto& [x, v] : ps) m.emplace(x, v);
    return m;
}

State initial_state(const AstProblem& problem) {
    State s;
    for (std::size_t x = 0; x < problem.initial.size(); ++x) s.emplace(x, problem.initial[x]);
    return s;
}

bool valid_states(const AstProblem& problem, const State& s) {
    if (s.size() != problem.num_vars()) return false;
    for (const auto& [x, v] : s) {
        if (x >= problem.num_vars() || v >= problem.num_vals(x)) return false;
    }
    return true;
}

namespace {

bool map_subsumed(const State& partial, const State& s) {
    for (const auto& [x, v] : partial) {
        auto it = s.find(x);
        if (it == s.end() || it->second != v) return false;
    }
    return true;
}

}  // namespace

bool subsumes(const AstProblem& problem, const PartialState& partial, const State& s) {
    return valid_states(problem, s) && map_subsumed(map_of(partial), s);
}

bool enabled(const AstProblem& problem, const Name& name, const State& s) {
    const auto* op = problem.lookup_operator(name);
    if (op == nullptr) return false;
    return subsumes(problem, op->preconds, s) && subsumes(problem, implicit_pres(op->effects), s);
}

State execute(const AstProblem& problem, const Name& name, const State& s) {
    const auto* op = problem.lookup_operator(name);
    if (op == nullptr) throw ContractViolation("execute: unknown operator '" + name + "'");
    State updates;
    for (const auto& e : op->effects) {
        if (subsumes(problem, e.effect_preconds, s)) updates.emplace(e.var, e.new_val);
    }
    State out = s;
    for (const auto& [x, v] : updates) out[x] = v;
    return out;
}

bool path_to(const AstProblem& problem, const State& from, const std::vector<Name>& plan, const State& to) {
    State s = from;
    for (const auto& name : plan) {
        if (!enabled(problem, name, s)) return false;
        s = execute(problem, name, s);
    }
    return s == to;
}

bool valid_plan(const AstProblem& problem, const std::vector<Name>& plan) {
    // The reached state is unique, so the existential collapses to one check.
    State s = initial_state(problem);
    for (const auto& name : plan) {
        if (!enabled(problem, name, s)) return false;
        s = execute(problem, name, s);
    }
    return subsumes(problem, problem.goal, s);
}

}  // namespace satforge
