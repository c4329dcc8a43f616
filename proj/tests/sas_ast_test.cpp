#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "satforge/oracle.hpp"
#include "satforge/sas_ast.hpp"
#include "support.hpp"

using namespace satforge;
using namespace satforge::testing;

namespace {

AstProblem parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_sas(in);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kEmpty = R"(begin_version
3
end_version
begin_metric
0
end_metric
1
begin_variable
var0
-1
2
Atom a
NegatedAtom a
end_variable
0
begin_state
1
end_state
begin_goal
0
end_goal
0
0
)";

}  // namespace

TEST(ParseSas, MinimalFlipFile) {
    auto p = parse_sas_file(SATFORGE_FIXTURES "/flip.sas");
    EXPECT_EQ(p.num_vars(), 1U);
    EXPECT_EQ(p.operators.size(), 1U);
    EXPECT_EQ(p, flip_problem());
}

TEST(ParseSas, EmptySections) {
    auto p = parse_text(kEmpty);
    EXPECT_TRUE(p.operators.empty());
    EXPECT_TRUE(p.goal.empty());
    EXPECT_EQ(p.initial, std::vector<std::size_t>{1});
}

TEST(ParseSas, MutexGroupsAndCostsAccepted) {
    auto p = parse_sas_file(SATFORGE_FIXTURES "/two_flips.sas");
    ASSERT_EQ(p.operators.size(), 2U);
    EXPECT_EQ(p.operators[0].name, "switch a");
    EXPECT_EQ(p.operators[0].cost, 3U);
    EXPECT_EQ(p.operators[1].preconds, (PartialState{{1, 1}}));
    EXPECT_EQ(p.operators[1].effects[0].var, 1U);
    EXPECT_EQ(p.operators[1].effects[0].new_val, 0U);
    EXPECT_FALSE(p.operators[1].effects[0].implicit_pre.has_value());
    EXPECT_EQ(p.variables[1].values[1], "NegatedAtom on(b)");
}

TEST(ParseSas, AxiomsRejected) {
    std::string text = kEmpty;
    text.replace(text.rfind("0\n"), 2, "2\n");
    EXPECT_THROW(parse_text(text), UnsupportedFeature);
}

TEST(ParseSas, AxiomLayerRejected) {
    std::string text = kEmpty;
    text.replace(text.find("-1\n"), 3, "0\n");
    EXPECT_THROW(parse_text(text), UnsupportedFeature);
}

TEST(ParseSas, SyntaxErrors) {
    EXPECT_THROW(parse_text(""), SyntaxError);
    std::string wrong_version = kEmpty;
    wrong_version.replace(wrong_version.find("3\n"), 2, "2\n");
    EXPECT_ANY_THROW(parse_text(wrong_version));
    std::string truncated = kEmpty;
    truncated.resize(truncated.find("begin_goal"));
    EXPECT_THROW(parse_text(truncated), SyntaxError);
    EXPECT_THROW(parse_text(std::string(kEmpty) + "trailing\n"), SyntaxError);
}

TEST(ParseSas, SyntaxErrorCarriesLine) {
    std::string text = kEmpty;
    text.replace(text.find("begin_state"), 11, "begin_stat");
    try {
        parse_text(text);
        FAIL() << "expected a syntax error";
    } catch (const SyntaxError& e) {
        EXPECT_NE(std::string(e.what()).find("16"), std::string::npos) << e.what();
    }
}

TEST(WfPartialState, Examples) {
    AstProblem p;
    p.variables = {boolean_var("a"), AstVariable{"b", std::nullopt, {"x", "y", "z"}}};
    p.initial = {0, 0};
    EXPECT_TRUE(wf_partial_state(p, {{0, 1}, {1, 2}}));
    EXPECT_FALSE(wf_partial_state(p, {{0, 1}, {0, 0}}));
    EXPECT_FALSE(wf_partial_state(p, {{1, 3}}));
    EXPECT_FALSE(wf_partial_state(p, {{2, 0}}));
    EXPECT_TRUE(wf_partial_state(p, {}));
}

TEST(WfOperator, Examples) {
    AstProblem p = flip_problem();
    EXPECT_TRUE(wf_operator(p, make_op("o", {}, {assign(0, 1)})));
    EXPECT_FALSE(wf_operator(p, make_op("o", {}, {assign(0, 1), assign(0, 0)})));
    EXPECT_FALSE(wf_operator(p, make_op("o", {}, {assign(0, 1, 5)})));
    EXPECT_FALSE(wf_operator(p, make_op("o", {}, {assign(0, 2)})));
    auto guarded = make_op("o", {}, {assign(0, 1)});
    guarded.effects[0].effect_preconds = {{0, 0}, {0, 1}};
    EXPECT_FALSE(wf_operator(p, guarded));
}

TEST(WellFormed, Examples) {
    auto p = flip_problem();
    EXPECT_TRUE(well_formed(p));
    auto dup = p;
    dup.operators.push_back(dup.operators[0]);
    EXPECT_FALSE(well_formed(dup));
    auto bad_init = p;
    bad_init.initial = {2};
    EXPECT_FALSE(well_formed(bad_init));
    auto short_init = p;
    short_init.initial = {};
    EXPECT_FALSE(well_formed(short_init));
    auto bad_goal = p;
    bad_goal.goal = {{0, 7}};
    EXPECT_FALSE(well_formed(bad_goal));
}

TEST(WellFormed, RemovingOperatorsKeepsIt) {
    for (std::size_t i = 0; i < 100; ++i) {
        GeneratorConfig cfg;
        cfg.seed = problem_seed(11, i);
        auto p = generate_problem(cfg);
        ASSERT_TRUE(well_formed(p));
        while (!p.operators.empty()) {
            p.operators.erase(p.operators.begin() + static_cast<std::ptrdiff_t>(i % p.operators.size()));
            EXPECT_TRUE(well_formed(p));
        }
    }
}

// Map-merge oracle: bind every assignment, fail on a differing rebinding.
static bool conflict_free(const AstOperator& op) {
    std::map<std::size_t, std::size_t> m;
    std::vector<Assignment> all = op.preconds;
    for (const auto& e : op.effects) {
        if (e.implicit_pre) all.push_back({e.var, *e.implicit_pre});
    }
    for (const auto& [x, v] : all) {
        auto it = m.find(x);
        if (it != m.end() && it->second != v) return false;
        m[x] = v;
    }
    return true;
}

TEST(ConsistentPresOp, Examples) {
    auto agree = make_op("o", {{0, 1}}, {assign(0, 0, 1)});
    auto clash = make_op("o", {{0, 1}}, {assign(0, 1, 0)});
    auto plain = make_op("o", {{0, 1}, {1, 0}}, {assign(1, 1)});
    EXPECT_EQ(consistent_pres_op(agree), conflict_free(agree));
    EXPECT_TRUE(consistent_pres_op(agree));
    EXPECT_EQ(consistent_pres_op(clash), conflict_free(clash));
    EXPECT_FALSE(consistent_pres_op(clash));
    EXPECT_TRUE(consistent_pres_op(plain));
}

TEST(IsStandardOperator, Examples) {
    EXPECT_TRUE(is_standard_operator(make_op("o", {}, {assign(0, 1, 0)})));
    auto guarded = make_op("o", {}, {assign(0, 1)});
    guarded.effects[0].effect_preconds = {{1, 0}};
    EXPECT_FALSE(is_standard_operator(guarded));
    EXPECT_TRUE(is_standard_operator(make_op("o", {}, {})));
}

TEST(ImplicitPres, CollectsInOrder) {
    std::vector<AstEffect> effs{assign(2, 1, 0), assign(0, 1), assign(1, 0, 1)};
    EXPECT_EQ(implicit_pres(effs), (PartialState{{2, 0}, {1, 1}}));
}
