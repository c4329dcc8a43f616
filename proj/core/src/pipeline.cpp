#include "satforge/pipeline.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace satforge {

PipelineError PipelineError::of(Code code) {
    switch (code) {
        case Code::Malformed: return {code, "Error: Problem malformed!"};
        case Code::InconsistentPreconditions: return {code, "Error: Preconditions inconsistent"};
        case Code::ConditionalEffects: return {code, "Error: Conditional effects!"};
        case Code::ModelDoesNotSolve: return {code, "Error: Model does not solve the P!"};
    }
    return {code, ""};
}

std::optional<PipelineError> check_gates(const AstProblem& problem) {
    using Code = PipelineError::Code;
    if (!well_formed(problem)) return PipelineError::of(Code::Malformed);
    for (const auto& op : problem.operators) {
        if (!consistent_pres_op(op)) return PipelineError::of(Code::InconsistentPreconditions);
    }
    for (const auto& op : problem.operators) {
        if (!is_standard_operator(op)) return PipelineError::of(Code::ConditionalEffects);
    }
    return std::nullopt;
}

PlanValuation PipelineStages::valuation(const DimacsModel& model) const {
    auto ints = dimacs_model_to_abs(model);
    auto h = time_radix;
    auto n = op_radix;
    return [ints = std::move(ints), h, n](const SatPlanVariable& v) { return ints(var_to_dimacs(h, n, v)); };
}

PipelineStages build_stages(const AstProblem& problem, std::size_t horizon, const ClauseFamilies& families) {
    PipelineStages st;
    st.normalized = rem_implicit_pres_ops(problem);
    st.fdr = with_noop(abs_problem(st.normalized));
    st.strips = phi_problem(st.fdr);
    st.horizon = horizon;
    st.time_radix = horizon + 1;
    st.op_radix = problem.operators.size() + 1;
    st.formula = encode_problem(st.strips, horizon, families);
    auto h = st.time_radix;
    auto n = st.op_radix;
    st.cnf = cnf_to_dimacs(st.formula.map_atoms([h, n](const SatPlanVariable& v) { return var_to_dimacs(h, n, v); }));
    return st;
}

Outcome<DimacsCnf> encode(std::size_t horizon, const AstProblem& problem) {
    if (auto err = check_gates(problem)) return *err;
    return std::move(build_stages(problem, horizon).cnf);
}

ParallelPlan decode_model_parallel(const PipelineStages& stages, const DimacsModel& model) {
    return decode_parallel_plan(stages.strips, stages.valuation(model), stages.horizon);
}

Plan decode_model(const PipelineStages& stages, const DimacsModel& model) {
    auto serial = flatten_parallel_plan(decode_model_parallel(stages, model));
    std::vector<FdrOperator> fdr_plan;
    fdr_plan.reserve(serial.size());
    for (const auto& op : serial) fdr_plan.push_back(phi_op_inv(op));
    return decode_abs_plan(stages.normalized, rem_noops(fdr_plan));
}

Outcome<Plan> decode(const DimacsModel& model, std::size_t horizon, const AstProblem& problem, const ClauseFamilies& families) {
    if (auto err = check_gates(problem)) return *err;
    auto stages = build_stages(problem, horizon, families);
    if (!check_dimacs_model(model, stages.cnf)) return PipelineError::of(PipelineError::Code::ModelDoesNotSolve);
    return decode_model(stages, model);
}

Outcome<Plan> decode(const DimacsModel& model, std::size_t horizon, const AstProblem& problem) {
    return decode(model, horizon, problem, ClauseFamilies{});
}

Validation validate(const AstProblem& problem, const Plan& plan) {
    if (!well_formed(problem)) return {false, "problem is not well formed"};
    State s = initial_state(problem);
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const auto& name = plan[i];
        if (problem.lookup_operator(name) == nullptr) {
            return {false, "step " + std::to_string(i + 1) + ": unknown operator '" + name + "'"};
        }
        if (!enabled(problem, name, s)) {
            return {false, "step " + std::to_string(i + 1) + ": operator '" + name + "' is not enabled"};
        }
        s = execute(problem, name, s);
    }
    if (!subsumes(problem, problem.goal, s)) return {false, "goal not reached after " + std::to_string(plan.size()) + " steps"};
    return {true, ""};
}

void serialize_sas(const AstProblem& problem, std::ostream& out) {
    out << "begin_version\n3\nend_version\n";
    out << "begin_metric\n0\nend_metric\n";
    out << problem.variables.size() << '\n';
    for (const auto& v : problem.variables) {
        out << "begin_variable\n" << v.name << '\n' << v.axiom_layer.value_or(-1) << '\n' << v.values.size() << '\n';
        for (const auto& val : v.values) out << val << '\n';
        out << "end_variable\n";
    }
    out << "0\n";
    out << "begin_state\n";
    for (auto x : problem.initial) out << x << '\n';
    out << "end_state\n";
    out << "begin_goal\n" << problem.goal.size() << '\n';
    for (const auto& [x, v] : problem.goal) out << x << ' ' << v << '\n';
    out << "end_goal\n";
    out << problem.operators.size() << '\n';
    for (const auto& op : problem.operators) {
        out << "begin_operator\n" << op.name << '\n' << op.preconds.size() << '\n';
        for (const auto& [x, v] : op.preconds) out << x << ' ' << v << '\n';
        out << op.effects.size() << '\n';
        for (const auto& e : op.effects) {
            out << e.effect_preconds.size();
            for (const auto& [x, v] : e.effect_preconds) out << ' ' << x << ' ' << v;
            out << ' ' << e.var << ' ';
            if (e.implicit_pre) {
                out << *e.implicit_pre;
            } else {
                out << -1;
            }
            out << ' ' << e.new_val << '\n';
        }
        out << op.cost << '\n' << "end_operator\n";
    }
    out << "0\n";
}

void write_plan(const Plan& plan, std::ostream& out) {
    for (const auto& name : plan) out << '(' << name << ")\n";
    out << "; steps = " << plan.size() << '\n';
}

Plan parse_plan(std::istream& in) {
    Plan plan;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == ';') continue;
        auto last = line.find_last_not_of(" \t\r");
        auto text = line.substr(first, last - first + 1);
        if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
        plan.push_back(text);
    }
    return plan;
}

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

class TempFile {
public:
    TempFile() {
        auto pattern = (std::filesystem::temp_directory_path() / "satforge-XXXXXX.cnf").string();
        std::vector<char> buf(pattern.begin(), pattern.end());
        buf.push_back('\0');
        int fd = ::mkstemps(buf.data(), 4);
        if (fd < 0) throw SolverFailure("cannot create temporary file");
        ::close(fd);
        path_ = buf.data();
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace

SolverFn external_solver(std::string command) {
    return [command = std::move(command)](const DimacsCnf& cnf) {
        TempFile file;
        {
            std::ofstream out(file.path());
            write_dimacs(cnf, out);
            if (!out) throw SolverFailure("cannot write " + file.path());
        }
        auto cmd = command + " " + shell_quote(file.path());
        FILE* pipe = ::popen(cmd.c_str(), "r");
        if (pipe == nullptr) throw SolverFailure("cannot start solver: " + command);
        std::string output;
        std::array<char, 4096> buf{};
        std::size_t n = 0;
        while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
        int status = ::pclose(pipe);
        int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

        bool silent = true;
        {
            std::istringstream lines(output);
            std::string line;
            while (silent && std::getline(lines, line)) {
                auto first = line.find_first_not_of(" \t\r");
                silent = first == std::string::npos || line[first] == 'c';
            }
        }
        if (silent) throw SolverFailure("solver exited with status " + std::to_string(code) + " without a verdict");

        std::istringstream in(output);
        try {
            auto model = parse_model(in);
            // SAT solvers conventionally exit 10 on SAT and 20 on UNSAT.
            if (code != 0 && code != 10 && model.empty()) {
                throw SolverFailure("solver exited with status " + std::to_string(code) + " without a verdict");
            }
            return SolverVerdict{SolverVerdict::Kind::Satisfiable, std::move(model)};
        } catch (const UnsatisfiableReported&) {
            return SolverVerdict{SolverVerdict::Kind::Unsatisfiable, {}};
        } catch (const DimacsSyntaxError& e) {
            throw SolverFailure(std::string("unreadable solver output: ") + e.what());
        }
    };
}

SolveReport solve(const AstProblem& problem, const std::vector<std::size_t>& schedule, const SolverFn& solver) {
    if (auto err = check_gates(problem)) return {*err, std::nullopt};
    std::optional<std::size_t> refuted;
    for (auto h : schedule) {
        auto stages = build_stages(problem, h);
        auto verdict = solver(stages.cnf);
        if (verdict.kind == SolverVerdict::Kind::Unsatisfiable) {
            refuted = refuted ? std::max(*refuted, h) : h;
            continue;
        }
        if (!check_dimacs_model(verdict.model, stages.cnf)) {
            return {PipelineError::of(PipelineError::Code::ModelDoesNotSolve), h};
        }
        return {decode_model(stages, verdict.model), h};
    }
    return {Unsolvable{refuted}, std::nullopt};
}

}  // namespace satforge
