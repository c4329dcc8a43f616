#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "satforge/dimacs.hpp"
#include "satforge/oracle.hpp"
#include "satforge/pipeline.hpp"
#include "support.hpp"

using namespace satforge;

namespace {

IntFormula a(DimacsLit v) { return IntFormula::atom(v); }
IntFormula no(IntFormula f) { return IntFormula::negate(std::move(f)); }

DimacsModel parse_model_text(const std::string& text) {
    std::istringstream in(text);
    return parse_model(in);
}

std::string written(const DimacsCnf& cnf) {
    std::ostringstream out;
    write_dimacs(cnf, out);
    return out.str();
}

}  // namespace

TEST(VarToDimacs, Examples) {
    EXPECT_EQ(var_to_dimacs(3, 2, SatPlanVariable::op(0, 0)), 1);
    EXPECT_EQ(var_to_dimacs(3, 2, SatPlanVariable::op(2, 1)), 6);
    EXPECT_EQ(var_to_dimacs(3, 2, SatPlanVariable::state(0, 0)), 7);
}

TEST(DimacsToVar, Examples) {
    EXPECT_EQ(dimacs_to_var(3, 2, 6), SatPlanVariable::op(2, 1));
    EXPECT_EQ(dimacs_to_var(3, 2, 7), SatPlanVariable::state(0, 0));
    EXPECT_THROW(dimacs_to_var(0, 2, 1), std::invalid_argument);
    EXPECT_THROW(dimacs_to_var(3, 2, 0), std::invalid_argument);
}

TEST(DisjToDimacs, Examples) {
    EXPECT_TRUE(disj_to_dimacs(IntFormula::bottom()).empty());
    EXPECT_EQ(disj_to_dimacs(IntFormula::top()), (DimacsClause{-1, 1}));
    EXPECT_EQ(disj_to_dimacs(IntFormula::disj(a(3), no(a(5)))), (DimacsClause{3, -5}));
    EXPECT_THROW(disj_to_dimacs(IntFormula::conj(a(1), a(2))), MalformedFormula);
    EXPECT_THROW(disj_to_dimacs(no(no(a(1)))), MalformedFormula);
}

TEST(CnfToDimacs, Examples) {
    EXPECT_EQ(cnf_to_dimacs(IntFormula::conj(IntFormula::disj(a(1), a(2)), no(a(3)))), (DimacsCnf{{1, 2}, {-3}}));
    EXPECT_EQ(cnf_to_dimacs(IntFormula::top()), (DimacsCnf{{-1, 1}}));
    EXPECT_THROW(cnf_to_dimacs(IntFormula::disj(a(1), IntFormula::conj(a(2), a(3)))), MalformedFormula);
}

// Formula evaluation against clause-list evaluation on random CNFs.
TEST(CnfToDimacs, RandomAgreement) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 50; ++i) {
        std::vector<IntFormula> clauses;
        for (auto c = rng() % 6; c > 0; --c) {
            std::vector<IntFormula> lits;
            for (auto l = rng() % 4; l > 0; --l) {
                auto x = a(1 + static_cast<DimacsLit>(rng() % 6));
                lits.push_back(rng() % 2 ? x : no(x));
            }
            clauses.push_back(big_or(lits));
        }
        auto f = big_and(clauses);
        auto bits = rng();
        auto val = [&](DimacsLit v) { return ((bits >> v) & 1U) != 0; };
        EXPECT_EQ(f.evaluate(val), clauses_satisfied(cnf_to_dimacs(f), val));
    }
}

TEST(CheckDimacsModel, Examples) {
    EXPECT_TRUE(check_dimacs_model({1, -2}, {{1}, {-2, 3}}));
    EXPECT_FALSE(check_dimacs_model({1, -1}, {}));
    EXPECT_FALSE(check_dimacs_model({1, -1}, {{1}}));
    EXPECT_TRUE(check_dimacs_model({}, {}));
    EXPECT_FALSE(check_dimacs_model({}, {{}}));
    EXPECT_FALSE(check_dimacs_model({2}, {{1}}));
}

TEST(DimacsModelToAbs, Examples) {
    auto none = dimacs_model_to_abs({});
    EXPECT_FALSE(none(1));
    EXPECT_FALSE(none(100));
    auto m = dimacs_model_to_abs({3, -5});
    EXPECT_TRUE(m(3));
    EXPECT_FALSE(m(5));
    EXPECT_FALSE(m(4));
    EXPECT_FALSE(dimacs_model_to_abs({2, -2})(2));
    EXPECT_TRUE(dimacs_model_to_abs({-2, 2})(2));
}

TEST(ModelToDimacsModel, Examples) {
    auto all_false = [](DimacsLit) { return false; };
    EXPECT_EQ(model_to_dimacs_model(all_false, {1, 2}), (DimacsModel{-1, -2}));
    auto one = [](DimacsLit v) { return v == 1; };
    EXPECT_EQ(model_to_dimacs_model(one, {1}), (DimacsModel{1}));
    auto back = dimacs_model_to_abs(model_to_dimacs_model(one, {1, 2, 3}));
    for (DimacsLit v = 1; v <= 3; ++v) EXPECT_EQ(back(v), one(v));
}

// M ∘ numbering ⊨ F ⇔ M ⊨ F with atoms renumbered.
TEST(ModelToDimacsModel, AtomRenamingTransport) {
    std::mt19937_64 rng(78);
    for (std::size_t i = 0; i < 40; ++i) {
        satforge::GeneratorConfig cfg;
        cfg.seed = problem_seed(61, i);
        auto stages = build_stages(generate_problem(cfg), 2);
        std::vector<std::uint8_t> bits(1000);
        for (auto& b : bits) b = rng() % 2;
        auto int_val = [&](DimacsLit v) { return bits[static_cast<std::size_t>(v)] != 0; };
        auto plan_val = [&](const SatPlanVariable& v) { return int_val(var_to_dimacs(stages.time_radix, stages.op_radix, v)); };
        auto renamed = stages.formula.map_atoms(
            [&](const SatPlanVariable& v) { return var_to_dimacs(stages.time_radix, stages.op_radix, v); });
        EXPECT_EQ(stages.formula.evaluate(plan_val), renamed.evaluate(int_val));
        EXPECT_EQ(renamed.evaluate(int_val), clauses_satisfied(stages.cnf, int_val));
    }
}

TEST(WriteDimacs, Examples) {
    EXPECT_EQ(written({{1, 2}, {-3}}), "p cnf 3 2\n1 2 0\n-3 0\n");
    EXPECT_EQ(written({}), "p cnf 0 0\n");
    std::ostringstream out;
    write_dimacs({{1}}, out, 9);
    EXPECT_EQ(out.str(), "p cnf 9 1\n1 0\n");
}

TEST(ParseDimacs, RoundTripAndErrors) {
    DimacsCnf cnf{{1, -2}, {}, {3}};
    std::istringstream in(written(cnf));
    EXPECT_EQ(parse_dimacs(in), cnf);
    std::istringstream commented("c hello\np cnf 2 1\n1\n-2 0\n");
    EXPECT_EQ(parse_dimacs(commented), (DimacsCnf{{1, -2}}));
    std::istringstream wrong_count("p cnf 2 2\n1 0\n");
    EXPECT_THROW(parse_dimacs(wrong_count), DimacsSyntaxError);
    std::istringstream no_header("1 0\n");
    EXPECT_THROW(parse_dimacs(no_header), DimacsSyntaxError);
}

TEST(ParseModel, Dialects) {
    EXPECT_EQ(parse_model_text("SAT\n1 -2 0\n"), (DimacsModel{1, -2}));
    EXPECT_EQ(parse_model_text("c solver\ns SATISFIABLE\nv 1 -2\nv 0\n"), (DimacsModel{1, -2}));
    EXPECT_EQ(parse_model_text("1 -2 3 0\n"), (DimacsModel{1, -2, 3}));
    EXPECT_THROW(parse_model_text("s UNSATISFIABLE\n"), UnsatisfiableReported);
    EXPECT_THROW(parse_model_text("UNSAT\n"), UnsatisfiableReported);
    EXPECT_THROW(parse_model_text("SAT\n1 -1 0\n"), DuplicateAssignment);
    EXPECT_ANY_THROW(parse_model_text("SAT\n1 0 2\n"));
    EXPECT_ANY_THROW(parse_model_text("SAT\n1 x 0\n"));
}

TEST(MaxVariable, Examples) {
    EXPECT_EQ(max_variable({}), 0);
    EXPECT_EQ(max_variable({{1, -7}, {3}}), 7);
}
