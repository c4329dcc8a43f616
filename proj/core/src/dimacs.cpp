#include "satforge/dimacs.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <string>

namespace satforge {

DimacsLit var_to_dimacs(std::size_t h, std::size_t n_ops, const SatPlanVariable& v) {
    auto t = static_cast<DimacsLit>(v.time);
    auto k = static_cast<DimacsLit>(v.index);
    auto hh = static_cast<DimacsLit>(h);
    if (v.kind == SatPlanVariable::Kind::Operator) return 1 + t + k * hh;
    return 1 + static_cast<DimacsLit>(n_ops) * hh + t + k * hh;
}

SatPlanVariable dimacs_to_var(std::size_t h, std::size_t n_ops, DimacsLit n) {
    if (h == 0) throw std::invalid_argument("dimacs_to_var: horizon radix must be positive");
    if (n < 1) throw std::invalid_argument("dimacs_to_var: variable must be positive");
    auto v = static_cast<std::size_t>(n);
    if (v < 1 + n_ops * h) return SatPlanVariable::op((v - 1) % h, (v - 1) / h);
    auto k = v - 1 - n_ops * h;
    return SatPlanVariable::state(k % h, k / h);
}

namespace {

using Kind = IntFormula::Kind;

void append_disjunct(const IntFormula& f, DimacsClause& out) {
    switch (f.kind()) {
        case Kind::Bottom: return;
        case Kind::Atom: out.push_back(f.atom_value()); return;
        case Kind::Not: {
            auto c = f.child();
            if (c.kind() == Kind::Bottom) {
                out.push_back(-1);
                out.push_back(1);
                return;
            }
            if (c.kind() == Kind::Atom) {
                out.push_back(-c.atom_value());
                return;
            }
            break;
        }
        case Kind::Or:
            append_disjunct(f.lhs(), out);
            append_disjunct(f.rhs(), out);
            return;
        case Kind::And: break;
    }
    throw MalformedFormula("malformed disjunct: formula is not a clause");
}

void append_clauses(const IntFormula& f, DimacsCnf& out) {
    if (f.kind() == Kind::And) {
        append_clauses(f.lhs(), out);
        append_clauses(f.rhs(), out);
        return;
    }
    try {
        out.push_back(disj_to_dimacs(f));
    } catch (const MalformedFormula&) {
        throw MalformedFormula("malformed formula: not in conjunctive normal form");
    }
}

}  // namespace

DimacsClause disj_to_dimacs(const IntFormula& f) {
    DimacsClause out;
    append_disjunct(f, out);
    return out;
}

DimacsCnf cnf_to_dimacs(const IntFormula& f) {
    DimacsCnf out;
    append_clauses(f, out);
    return out;
}

bool check_dimacs_model(const DimacsModel& model, const DimacsCnf& cnf) {
    std::set<DimacsLit> vars;
    for (auto l : model) {
        if (!vars.insert(dimacs_lit_to_var(l)).second) return false;
    }
    std::set<DimacsLit> lits(model.begin(), model.end());
    for (const auto& c : cnf) {
        bool hit = false;
        for (auto l : c) {
            if (lits.contains(l)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool IntValuation::operator()(DimacsLit var) const {
    if (var < 0) var = -var;
    auto i = static_cast<std::size_t>(var);
    return i < values_.size() && values_[i] != 0;
}

void IntValuation::set(DimacsLit var, bool value) {
    auto i = static_cast<std::size_t>(var < 0 ? -var : var);
    if (i >= values_.size()) values_.resize(i + 1, 0);
    values_[i] = value ? 1 : 0;
}

IntValuation dimacs_model_to_abs(const DimacsModel& model) {
    IntValuation m;
    for (auto l : model) m.set(dimacs_lit_to_var(l), l > 0);
    return m;
}

DimacsLit max_variable(const DimacsCnf& cnf) {
    DimacsLit v = 0;
    for (const auto& c : cnf) {
        for (auto l : c) v = std::max(v, dimacs_lit_to_var(l));
    }
    return v;
}

void write_dimacs(const DimacsCnf& cnf, std::ostream& out, DimacsLit declared_vars) {
    auto vars = std::max(max_variable(cnf), declared_vars);
    out << "p cnf " << vars << ' ' << cnf.size() << '\n';
    std::string line;
    for (const auto& c : cnf) {
        line.clear();
        for (auto l : c) {
            line += std::to_string(l);
            line += ' ';
        }
        line += "0\n";
        out << line;
    }
}

namespace {

bool parse_lit(const std::string& tok, DimacsLit& out) {
    auto begin = tok.data();
    auto end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && ptr != begin;
}

}  // namespace

DimacsCnf parse_dimacs(std::istream& in) {
    DimacsCnf cnf;
    std::string line;
    bool header = false;
    long long declared_clauses = 0;
    DimacsClause current;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            long long vars = 0;
            if (header || !(tokens >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 0 || declared_clauses < 0) {
                throw DimacsSyntaxError("malformed problem line: '" + line + "'");
            }
            header = true;
            continue;
        }
        if (!header) throw DimacsSyntaxError("clause before problem line");
        do {
            DimacsLit l = 0;
            if (!parse_lit(tok, l)) throw DimacsSyntaxError("malformed literal '" + tok + "'");
            if (l == 0) {
                cnf.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(l);
            }
        } while (tokens >> tok);
    }
    if (!header) throw DimacsSyntaxError("missing problem line");
    if (!current.empty()) throw DimacsSyntaxError("last clause is not terminated by 0");
    if (static_cast<long long>(cnf.size()) != declared_clauses) throw DimacsSyntaxError("clause count does not match problem line");
    return cnf;
}

DimacsModel parse_model(std::istream& in) {
    enum class Dialect { Unknown, Bare, Competition, Minisat };
    Dialect dialect = Dialect::Unknown;
    bool terminated = false;
    DimacsModel model;

    auto take = [&](const std::string& tok) {
        DimacsLit l = 0;
        if (!parse_lit(tok, l)) throw DimacsSyntaxError("malformed model literal '" + tok + "'");
        if (terminated) throw DimacsSyntaxError("literal after terminating 0");
        if (l == 0) {
            terminated = true;
        } else {
            model.push_back(l);
        }
    };

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok == "c") continue;

        if (dialect == Dialect::Unknown) {
            if (tok == "s") {
                std::string status;
                tokens >> status;
                if (status == "UNSATISFIABLE") throw UnsatisfiableReported();
                if (status != "SATISFIABLE") throw DimacsSyntaxError("unknown solver status '" + status + "'");
                dialect = Dialect::Competition;
                continue;
            }
            if (tok == "UNSAT" || tok == "UNSATISFIABLE") throw UnsatisfiableReported();
            if (tok == "SAT" || tok == "SATISFIABLE") {
                dialect = Dialect::Minisat;
                continue;
            }
            dialect = Dialect::Bare;
        }

        if (dialect == Dialect::Competition) {
            if (tok != "v") throw DimacsSyntaxError("expected 'v' line, found '" + tok + "'");
            while (tokens >> tok) take(tok);
            continue;
        }
        do {
            take(tok);
        } while (tokens >> tok);
    }

    std::set<DimacsLit> vars;
    for (auto l : model) {
        if (!vars.insert(dimacs_lit_to_var(l)).second) {
            throw DuplicateAssignment("model assigns variable " + std::to_string(dimacs_lit_to_var(l)) + " twice");
        }
    }
    return model;
}

}  // namespace satforge
