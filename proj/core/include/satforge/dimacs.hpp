#pragma once

// Integer numbering of SATPlan atoms, CNF flattening, DIMACS files and model
// files.

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "satforge/formula.hpp"
#include "satforge/satplan.hpp"

namespace satforge {

using DimacsLit = std::int64_t;
using DimacsClause = std::vector<DimacsLit>;
using DimacsCnf = std::vector<DimacsClause>;
using DimacsModel = std::vector<DimacsLit>;
using IntFormula = Formula<DimacsLit>;

inline DimacsLit dimacs_lit_to_var(DimacsLit l) { return l < 0 ? -l : l; }

/// Mixed-radix numbering: operators occupy 1 .. n_ops*h, states follow.
/// Requires t < h, and k < n_ops for operators.
DimacsLit var_to_dimacs(std::size_t h, std::size_t n_ops, const SatPlanVariable& v);
SatPlanVariable dimacs_to_var(std::size_t h, std::size_t n_ops, DimacsLit n);

class MalformedFormula : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Flattens a disjunction tree; ⊥ -> [], ¬⊥ -> [-1, 1].
/// Throws MalformedFormula (a "malformed disjunct") on any other shape.
DimacsClause disj_to_dimacs(const IntFormula& f);
DimacsCnf cnf_to_dimacs(const IntFormula& f);

/// Every clause holds a model literal and the model mentions each variable once.
bool check_dimacs_model(const DimacsModel& model, const DimacsCnf& cnf);

/// Valuation over positive integers: later literals win, unmentioned are false.
class IntValuation {
public:
    bool operator()(DimacsLit var) const;
    void set(DimacsLit var, bool value);

private:
    std::vector<std::uint8_t> values_;
};

IntValuation dimacs_model_to_abs(const DimacsModel& model);

template <typename Valuation>
DimacsModel model_to_dimacs_model(const Valuation& m, const std::vector<DimacsLit>& vars) {
    DimacsModel out;
    out.reserve(vars.size());
    for (auto v : vars) out.push_back(m(v) ? v : -v);
    return out;
}

/// Evaluates a clause list under a valuation of positive integers.
template <typename Valuation>
bool clauses_satisfied(const DimacsCnf& cnf, const Valuation& m) {
    for (const auto& c : cnf) {
        bool sat = false;
        for (auto l : c) {
            if (m(dimacs_lit_to_var(l)) == (l > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

DimacsLit max_variable(const DimacsCnf& cnf);

/// "p cnf V C" with V = max |lit| (or `declared_vars` when larger), one
/// zero-terminated clause per line.
void write_dimacs(const DimacsCnf& cnf, std::ostream& out, DimacsLit declared_vars = 0);

class DimacsSyntaxError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DimacsCnf parse_dimacs(std::istream& in);

class UnsatisfiableReported : public std::runtime_error {
public:
    UnsatisfiableReported() : std::runtime_error("solver reported UNSATISFIABLE") {}
};

class DuplicateAssignment : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a model in one of three dialects: bare integers, SAT-competition
/// ("s SATISFIABLE" + "v ..." lines) or minisat ("SAT" then integers).
DimacsModel parse_model(std::istream& in);

}  // namespace satforge
