#include "satforge/sas_ast.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace satforge {

SyntaxError::SyntaxError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

const AstOperator* AstProblem::lookup_operator(const Name& name) const {
    for (const auto& op : operators) {
        if (op.name == name) return &op;
    }
    return nullptr;
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::string next(const char* what) {
        std::string line;
        if (!std::getline(in_, line)) {
            throw SyntaxError(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
        }
        ++line_no_;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        return line;
    }

    void expect(const std::string& keyword) {
        auto line = next(keyword.c_str());
        if (line != keyword) fail("expected '" + keyword + "', found '" + line + "'");
    }

    std::int64_t integer(const char* what) { return parse_int(next(what), what); }

    std::size_t count(const char* what) {
        auto v = integer(what);
        if (v < 0) fail(std::string("negative ") + what);
        return static_cast<std::size_t>(v);
    }

    std::vector<std::int64_t> integers(const char* what) {
        auto line = next(what);
        std::vector<std::int64_t> out;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) out.push_back(parse_int(tok, what));
        return out;
    }

    Name name(const char* what) {
        auto line = next(what);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) fail(std::string("empty ") + what);
        return line;
    }

    std::size_t line_no() const { return line_no_; }

    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(line_no_, message); }

    bool at_eof() {
        std::string rest;
        while (std::getline(in_, rest)) {
            ++line_no_;
            if (rest.find_first_not_of(" \t\r") != std::string::npos) return false;
        }
        return true;
    }

private:
    std::int64_t parse_int(const std::string& text, const char* what) const {
        std::int64_t v = 0;
        auto begin = text.data();
        auto end = text.data() + text.size();
        while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
        if (begin != end && *begin == '+') fail(std::string("malformed integer for ") + what);
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || ptr == begin) fail(std::string("expected integer for ") + what + ", found '" + text + "'");
        while (ptr != end && (*ptr == ' ' || *ptr == '\t')) ++ptr;
        if (ptr != end) fail(std::string("trailing characters after ") + what);
        return v;
    }

    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::size_t to_index(const LineReader& r, std::int64_t v, const char* what) {
    if (v < 0) r.fail(std::string("negative ") + what);
    return static_cast<std::size_t>(v);
}

Assignment read_pair(LineReader& r, const char* what) {
    auto nums = r.integers(what);
    if (nums.size() != 2) r.fail(std::string("expected 'var val' for ") + what);
    return {to_index(r, nums[0], "variable index"), to_index(r, nums[1], "value index")};
}

AstEffect read_effect(LineReader& r) {
    auto nums = r.integers("effect");
    if (nums.empty() || nums[0] < 0) r.fail("malformed effect line");
    auto conds = static_cast<std::size_t>(nums[0]);
    if (nums.size() != 1 + 2 * conds + 3) r.fail("effect line has wrong number of fields");
    AstEffect e;
    for (std::size_t i = 0; i < conds; ++i) {
        e.effect_preconds.push_back({to_index(r, nums[1 + 2 * i], "variable index"),
                                     to_index(r, nums[2 + 2 * i], "value index")});
    }
    auto tail = 1 + 2 * conds;
    e.var = to_index(r, nums[tail], "affected variable");
    if (nums[tail + 1] < -1) r.fail("pre value below -1");
    if (nums[tail + 1] != -1) e.implicit_pre = static_cast<std::size_t>(nums[tail + 1]);
    e.new_val = to_index(r, nums[tail + 2], "post value");
    return e;
}

}  // namespace

AstProblem parse_sas(std::istream& in) {
    LineReader r(in);
    AstProblem p;

    r.expect("begin_version");
    if (r.integer("version") != 3) r.fail("only SAS version 3 is supported");
    r.expect("end_version");

    r.expect("begin_metric");
    auto metric = r.integer("metric flag");
    if (metric != 0 && metric != 1) r.fail("metric flag must be 0 or 1");
    r.expect("end_metric");

    auto n_vars = r.count("variable count");
    p.variables.reserve(n_vars);
    for (std::size_t i = 0; i < n_vars; ++i) {
        r.expect("begin_variable");
        AstVariable v;
        v.name = r.name("variable name");
        auto layer = r.integer("axiom layer");
        if (layer < -1) r.fail("axiom layer below -1");
        if (layer != -1) throw UnsupportedFeature("variable '" + v.name + "' has axiom layer " + std::to_string(layer));
        auto k = r.count("value count");
        if (k == 0) r.fail("variable without values");
        for (std::size_t j = 0; j < k; ++j) v.values.push_back(r.name("value name"));
        r.expect("end_variable");
        p.variables.push_back(std::move(v));
    }

    auto n_mutex = r.count("mutex group count");
    for (std::size_t i = 0; i < n_mutex; ++i) {
        r.expect("begin_mutex_group");
        auto m = r.count("mutex group size");
        for (std::size_t j = 0; j < m; ++j) read_pair(r, "mutex fact");
        r.expect("end_mutex_group");
    }

    r.expect("begin_state");
    p.initial.reserve(n_vars);
    for (std::size_t i = 0; i < n_vars; ++i) p.initial.push_back(to_index(r, r.integer("initial value"), "initial value"));
    r.expect("end_state");

    r.expect("begin_goal");
    auto g = r.count("goal count");
    for (std::size_t i = 0; i < g; ++i) p.goal.push_back(read_pair(r, "goal fact"));
    r.expect("end_goal");

    auto n_ops = r.count("operator count");
    p.operators.reserve(n_ops);
    for (std::size_t i = 0; i < n_ops; ++i) {
        r.expect("begin_operator");
        AstOperator op;
        op.name = r.name("operator name");
        auto n_pre = r.count("prevail count");
        for (std::size_t j = 0; j < n_pre; ++j) op.preconds.push_back(read_pair(r, "prevail condition"));
        auto n_eff = r.count("effect count");
        for (std::size_t j = 0; j < n_eff; ++j) op.effects.push_back(read_effect(r));
        auto cost = r.integer("operator cost");
        if (cost < 0) r.fail("negative operator cost");
        op.cost = static_cast<std::uint64_t>(cost);
        r.expect("end_operator");
        p.operators.push_back(std::move(op));
    }

    auto n_axioms = r.count("axiom count");
    if (n_axioms != 0) throw UnsupportedFeature("axioms are not supported (" + std::to_string(n_axioms) + " present)");
    if (!r.at_eof()) r.fail("trailing content after axiom section");
    return p;
}

AstProblem parse_sas_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_sas(in);
}

bool wf_partial_state(const AstProblem& problem, const PartialState& ps) {
    std::set<std::size_t> seen;
    for (const auto& [x, v] : ps) {
        if (!seen.insert(x).second) return false;
        if (x >= problem.num_vars() || v >= problem.num_vals(x)) return false;
    }
    return true;
}

bool wf_operator(const AstProblem& problem, const AstOperator& op) {
    if (!wf_partial_state(problem, op.preconds)) return false;
    std::set<std::size_t> affected;
    for (const auto& e : op.effects) {
        if (!affected.insert(e.var).second) return false;
    }
    for (const auto& e : op.effects) {
        if (!wf_partial_state(problem, e.effect_preconds)) return false;
        if (e.var >= problem.num_vars() || e.new_val >= problem.num_vals(e.var)) return false;
        if (e.implicit_pre && *e.implicit_pre >= problem.num_vals(e.var)) return false;
    }
    return true;
}

bool well_formed(const AstProblem& problem) {
    if (problem.initial.size() != problem.num_vars()) return false;
    for (std::size_t x = 0; x < problem.num_vars(); ++x) {
        if (problem.initial[x] >= problem.num_vals(x)) return false;
    }
    if (!wf_partial_state(problem, problem.goal)) return false;
    std::set<Name> names;
    for (const auto& op : problem.operators) {
        if (!names.insert(op.name).second) return false;
    }
    for (const auto& op : problem.operators) {
        if (!wf_operator(problem, op)) return false;
    }
    return true;
}

PartialState implicit_pres(const std::vector<AstEffect>& effects) {
    PartialState out;
    for (const auto& e : effects) {
        if (e.implicit_pre) out.push_back({e.var, *e.implicit_pre});
    }
    return out;
}

bool consistent_pres_op(const AstOperator& op) {
    std::map<std::size_t, std::size_t> bound;
    auto bind = [&](const Assignment& a) {
        auto [it, inserted] = bound.emplace(a.var, a.val);
        return inserted || it->second == a.val;
    };
    for (const auto& a : op.preconds) {
        if (!bind(a)) return false;
    }
    for (const auto& a : implicit_pres(op.effects)) {
        if (!bind(a)) return false;
    }
    return true;
}

bool is_standard_operator(const AstOperator& op) {
    for (const auto& e : op.effects) {
        if (!e.effect_preconds.empty()) return false;
    }
    return true;
}

}  // namespace satforge
