#pragma once

// Small hand-built problems shared by the tests.

#include <optional>
#include <string>
#include <vector>

#include "satforge/sas_ast.hpp"

namespace satforge::testing {

inline AstVariable boolean_var(const std::string& name) {
    return AstVariable{name, std::nullopt, {"Atom " + name + "-false", "Atom " + name + "-true"}};
}

inline AstEffect assign(std::size_t var, std::size_t val, std::optional<std::size_t> pre = std::nullopt) {
    AstEffect e;
    e.var = var;
    e.new_val = val;
    e.implicit_pre = pre;
    return e;
}

inline AstOperator make_op(std::string name, PartialState pre, std::vector<AstEffect> effects) {
    return AstOperator{std::move(name), std::move(pre), std::move(effects), 1};
}

/// One boolean variable, initially 0, goal 1, operator "flip" sets it.
inline AstProblem flip_problem() {
    AstProblem p;
    p.variables = {boolean_var("x")};
    p.initial = {0};
    p.goal = {{0, 1}};
    p.operators = {make_op("flip", {}, {assign(0, 1, 0)})};
    return p;
}

/// Two independent flips; the goal needs both.
inline AstProblem two_flips() {
    AstProblem p;
    p.variables = {boolean_var("x"), boolean_var("y")};
    p.initial = {0, 0};
    p.goal = {{0, 1}, {1, 1}};
    p.operators = {make_op("flip-x", {{0, 0}}, {assign(0, 1)}), make_op("flip-y", {{1, 0}}, {assign(1, 1)})};
    return p;
}

/// "a" destroys the precondition of "b", so they never share a step.
inline AstProblem interfering_pair() {
    AstProblem p;
    p.variables = {boolean_var("x"), boolean_var("y"), boolean_var("z")};
    p.initial = {0, 0, 0};
    p.goal = {{1, 1}, {2, 1}};
    p.operators = {make_op("a", {{0, 0}}, {assign(0, 1), assign(1, 1)}), make_op("b", {{0, 0}}, {assign(2, 1)})};
    return p;
}

/// Goal value is never produced.
inline AstProblem unreachable_problem() {
    AstProblem p;
    p.variables = {boolean_var("x"), boolean_var("y")};
    p.initial = {0, 0};
    p.goal = {{1, 1}};
    p.operators = {make_op("set-x", {}, {assign(0, 1)})};
    return p;
}

/// Counter 0 -> 1 -> 2 over a three-valued variable.
inline AstProblem counter_problem() {
    AstProblem p;
    p.variables = {AstVariable{"c", std::nullopt, {"Atom c0", "Atom c1", "Atom c2"}}};
    p.initial = {0};
    p.goal = {{0, 2}};
    p.operators = {make_op("inc0", {{0, 0}}, {assign(0, 1)}), make_op("inc1", {{0, 1}}, {assign(0, 2)})};
    return p;
}

}  // namespace satforge::testing
