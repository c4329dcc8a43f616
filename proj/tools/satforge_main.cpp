#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "satforge/oracle.hpp"
#include "satforge/pipeline.hpp"

namespace sf = satforge;

namespace {

// Writes to the -o path, or to stdout when none was given.
template <typename Fn>
void emit(const std::string& path, const Fn& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    fn(out);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::vector<std::size_t> parse_schedule(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        auto h = std::stoull(item, &pos);
        if (pos != item.size()) throw std::runtime_error("bad horizon '" + item + "'");
        out.push_back(h);
    }
    return out;
}

sf::DimacsLit full_range(const sf::PipelineStages& st) {
    sf::DimacsLit top = 0;
    for (std::size_t t = 0; t <= st.horizon; ++t) {
        for (std::size_t k = 0; k < st.strips.operators.size(); ++k) {
            top = std::max(top, sf::var_to_dimacs(st.time_radix, st.op_radix, sf::SatPlanVariable::op(t, k)));
        }
        for (std::size_t k = 0; k < st.strips.variables.size(); ++k) {
            top = std::max(top, sf::var_to_dimacs(st.time_radix, st.op_radix, sf::SatPlanVariable::state(t, k)));
        }
    }
    return top;
}

int report(const sf::PipelineError& e) {
    std::cerr << e.message << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAS planning problems to DIMACS CNF and back"};
    app.require_subcommand(1);

    std::size_t horizon = 0;
    std::string problem_path, model_path, plan_path, out_path;
    bool declare_full = false;

    auto* encode = app.add_subcommand("encode", "Encode a problem at a horizon as DIMACS CNF");
    encode->add_option("--horizon,-H", horizon, "Maximum number of parallel steps")->required();
    encode->add_option("problem", problem_path, "SAS file")->required();
    encode->add_option("-o,--output", out_path, "Output CNF path (default stdout)");
    encode->add_flag("--declare-full-range", declare_full, "Declare every atom number in the header");

    auto* decode = app.add_subcommand("decode", "Decode a solver model into a plan");
    decode->add_option("--horizon,-H", horizon, "Horizon the CNF was encoded at")->required();
    decode->add_option("problem", problem_path, "SAS file")->required();
    decode->add_option("model", model_path, "Solver output")->required();
    decode->add_option("-o,--output", out_path, "Output plan path (default stdout)");

    auto* validate = app.add_subcommand("validate", "Check a plan against a problem");
    validate->add_option("problem", problem_path, "SAS file")->required();
    validate->add_option("plan", plan_path, "Plan file")->required();

    std::string solver_cmd, horizons = "0,1,2,3,4,5,6,7,8,9,10";
    auto* solve = app.add_subcommand("solve", "Encode, solve and decode over a horizon schedule");
    solve->add_option("--solver", solver_cmd, "Solver command, called with the CNF path (default $SATFORGE_SOLVER)");
    solve->add_option("--horizons", horizons, "Comma separated horizon schedule")->capture_default_str();
    solve->add_option("problem", problem_path, "SAS file")->required();
    solve->add_option("-o,--output", out_path, "Output plan path (default stdout)");

    std::string mode = "serial";
    std::size_t depth_cap = 64;
    auto* oracle = app.add_subcommand("oracle", "Minimal plan length by breadth-first search");
    oracle->add_option("problem", problem_path, "SAS file")->required();
    oracle->add_option("--mode", mode, "serial or parallel")->check(CLI::IsMember({"serial", "parallel"}))->capture_default_str();
    oracle->add_option("--depth-cap", depth_cap, "Search depth limit")->capture_default_str();

    std::size_t count = 100, h_max = 6;
    sf::GeneratorConfig cfg;
    std::string bundle_dir;
    auto* fuzz = app.add_subcommand("fuzz", "Differential run of the encoder against the oracles");
    fuzz->add_option("--count", count, "Number of generated problems")->capture_default_str();
    fuzz->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
    fuzz->add_option("--max-vars", cfg.max_vars, "Variables per problem")->check(CLI::PositiveNumber)->capture_default_str();
    fuzz->add_option("--max-vals", cfg.max_vals_per_var, "Values per variable")->check(CLI::PositiveNumber)->capture_default_str();
    fuzz->add_option("--max-ops", cfg.max_ops, "Operators per problem")->check(CLI::PositiveNumber)->capture_default_str();
    fuzz->add_option("--max-horizon", h_max, "Largest horizon checked")->capture_default_str();
    fuzz->add_option("--bundle-dir", bundle_dir, "Directory for counterexample bundles");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*encode) {
            auto problem = sf::parse_sas_file(problem_path);
            if (auto err = sf::check_gates(problem)) return report(*err);
            auto st = sf::build_stages(problem, horizon);
            auto declared = declare_full ? full_range(st) : 0;
            emit(out_path, [&](std::ostream& out) { sf::write_dimacs(st.cnf, out, declared); });
            return 0;
        }
        if (*decode) {
            auto problem = sf::parse_sas_file(problem_path);
            auto in = open_input(model_path);
            auto model = sf::parse_model(in);
            auto plan = sf::decode(model, horizon, problem);
            if (!plan) return report(plan.error());
            emit(out_path, [&](std::ostream& out) { sf::write_plan(plan.value(), out); });
            return 0;
        }
        if (*validate) {
            auto problem = sf::parse_sas_file(problem_path);
            auto in = open_input(plan_path);
            auto v = sf::validate(problem, sf::parse_plan(in));
            if (!v.valid) {
                std::cerr << "invalid: " << v.diagnostic << '\n';
                return 1;
            }
            std::cerr << "valid\n";
            return 0;
        }
        if (*solve) {
            if (solver_cmd.empty()) {
                if (const char* env = std::getenv("SATFORGE_SOLVER")) solver_cmd = env;
            }
            if (solver_cmd.empty()) throw std::runtime_error("no solver: pass --solver or set SATFORGE_SOLVER");
            auto problem = sf::parse_sas_file(problem_path);
            auto result = sf::solve(problem, parse_schedule(horizons), sf::external_solver(solver_cmd));
            if (auto* err = std::get_if<sf::PipelineError>(&result.result)) return report(*err);
            if (auto* none = std::get_if<sf::Unsolvable>(&result.result)) {
                std::cerr << "no plan within the schedule";
                if (none->largest_refuted) std::cerr << " (largest refuted horizon " << *none->largest_refuted << ")";
                std::cerr << '\n';
                return 1;
            }
            std::cerr << "plan found at horizon " << *result.horizon << '\n';
            emit(out_path, [&](std::ostream& out) { sf::write_plan(std::get<sf::Plan>(result.result), out); });
            return 0;
        }
        if (*oracle) {
            auto problem = sf::parse_sas_file(problem_path);
            std::optional<std::size_t> length;
            if (mode == "serial") {
                if (!sf::well_formed(problem)) return report(sf::PipelineError::of(sf::PipelineError::Code::Malformed));
                length = sf::oracle_serial(problem, depth_cap);
            } else {
                if (auto err = sf::check_gates(problem)) return report(*err);
                length = sf::oracle_parallel(sf::build_stages(problem, 0).strips, depth_cap);
            }
            if (length) {
                std::cout << *length << '\n';
                return 0;
            }
            std::cout << "none\n";
            std::cerr << "no plan within depth " << depth_cap << '\n';
            return 1;
        }
        if (*fuzz) {
            sf::DifferentialOptions options;
            if (!bundle_dir.empty()) options.bundle_dir = bundle_dir;
            auto result = sf::differential_run(cfg, count, h_max, options);
            result.write(std::cout);
            for (const auto& e : result.entries) {
                if (!e.ok) std::cerr << "problem " << e.index << ": " << e.detail << '\n';
            }
            std::cerr << result.counterexamples() << " counterexample(s) in " << result.entries.size() << " problems\n";
            return result.exit_code();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
