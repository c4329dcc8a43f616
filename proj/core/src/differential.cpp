#include <fstream>

#include "satforge/oracle.hpp"

namespace satforge {

namespace {

struct Failure {
    std::string reason;
    std::size_t horizon = 0;
    DimacsModel model;
};

std::optional<Failure> check_problem(const AstProblem& problem, std::size_t h_max, const DifferentialOptions& opt,
                                     std::optional<std::size_t>& min_parallel) {
    if (check_gates(problem)) return Failure{"generator produced a problem failing the pipeline gates", 0, {}};

    auto base = build_stages(problem, 0, opt.families);
    min_parallel = oracle_parallel(base.strips, h_max);

    for (std::size_t h = 0; h <= h_max; ++h) {
        auto st = build_stages(problem, h, opt.families);
        auto model = mini_dpll(st.cnf);
        bool expected = min_parallel && h >= *min_parallel;
        if (model.has_value() != expected) {
            return Failure{std::string("horizon ") + std::to_string(h) + ": encoding is " + (model ? "SAT" : "UNSAT") +
                               " but the minimal ∀-step length is " + (min_parallel ? std::to_string(*min_parallel) : "none"),
                           h, model.value_or(DimacsModel{})};
        }
        if (model) {
            auto plan = decode(*model, h, problem, opt.families);
            if (!plan) return Failure{"horizon " + std::to_string(h) + ": decode failed: " + plan.error().message, h, *model};
            if (!valid_plan(problem, plan.value())) {
                return Failure{"horizon " + std::to_string(h) + ": decoded plan is invalid", h, *model};
            }
            auto parallel = decode_model_parallel(st, *model);
            if (!is_parallel_solution_for_problem(st.strips, parallel)) {
                return Failure{"horizon " + std::to_string(h) + ": decoded parallel plan is not a ∀-step solution", h, *model};
            }
            for (const auto& step : parallel) {
                if (!are_all_operators_non_interfering(step)) {
                    return Failure{"horizon " + std::to_string(h) + ": decoded step has interfering operators", h, *model};
                }
            }
        }
        if (opt.check_model_count && min_parallel && (h == *min_parallel || h == *min_parallel + 1)) {
            auto models = count_models(st.cnf, opt.count_budget);
            if (models) {
                auto plans = count_parallel_plans(st.strips, h);
                if (*models != plans) {
                    return Failure{"horizon " + std::to_string(h) + ": encoding has " + std::to_string(*models) +
                                       " models but there are " + std::to_string(plans) + " ∀-step plans",
                                   h, model.value_or(DimacsModel{})};
                }
            }
        }
    }
    return std::nullopt;
}

std::filesystem::path write_bundle(const std::filesystem::path& dir, std::size_t index, const AstProblem& problem, const Failure& f) {
    auto path = dir / ("problem-" + std::to_string(index));
    std::filesystem::create_directories(path);
    {
        std::ofstream out(path / "problem.sas");
        serialize_sas(problem, out);
    }
    {
        std::ofstream out(path / "horizon.txt");
        out << f.horizon << '\n';
    }
    {
        std::ofstream out(path / "model.txt");
        if (!f.model.empty()) {
            out << "s SATISFIABLE\nv";
            for (auto l : f.model) out << ' ' << l;
            out << " 0\n";
        }
    }
    {
        std::ofstream out(path / "reason.txt");
        out << f.reason << '\n';
    }
    return path;
}

}  // namespace

std::size_t DifferentialReport::counterexamples() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.ok ? 0 : 1;
    return n;
}

void DifferentialReport::write(std::ostream& out) const {
    for (const auto& e : entries) {
        out << e.index << ' ' << e.seed << ' ' << e.verdict;
        if (e.bundle) out << ' ' << e.bundle->string();
        out << '\n';
    }
}

DifferentialReport differential_run(const GeneratorConfig& cfg, std::size_t n, std::size_t h_max, const DifferentialOptions& options) {
    DifferentialReport report;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < n; ++i) {
        GeneratorConfig local = cfg;
        local.seed = problem_seed(cfg.seed, i);
        auto problem = generate_problem(local);

        DifferentialEntry entry;
        entry.index = i;
        entry.seed = local.seed;
        std::optional<std::size_t> min_parallel;
        auto failure = check_problem(problem, h_max, options, min_parallel);
        if (failure) {
            entry.ok = false;
            entry.verdict = "counterexample(h=" + std::to_string(failure->horizon) + ")";
            entry.detail = failure->reason;
            if (options.bundle_dir) entry.bundle = write_bundle(*options.bundle_dir, i, problem, *failure);
            ++failures;
        } else {
            entry.verdict = min_parallel ? "ok(L*=" + std::to_string(*min_parallel) + ")" : "ok(none<=" + std::to_string(h_max) + ")";
        }
        report.entries.push_back(std::move(entry));
        if (options.stop_after != 0 && failures >= options.stop_after) break;
    }
    return report;
}

}  // namespace satforge
