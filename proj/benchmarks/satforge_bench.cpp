#include <benchmark/benchmark.h>

#include "satforge/oracle.hpp"
#include "satforge/pipeline.hpp"

using namespace satforge;

namespace {

AstProblem problem_at(std::size_t i, std::size_t vars, std::size_t ops) {
    GeneratorConfig cfg;
    cfg.max_vars = vars;
    cfg.max_ops = ops;
    cfg.seed = problem_seed(7, i);
    return generate_problem(cfg);
}

void BM_Encode(benchmark::State& state) {
    auto h = static_cast<std::size_t>(state.range(0));
    auto p = problem_at(0, 4, 8);
    for (auto _ : state) benchmark::DoNotOptimize(encode(h, p));
}
BENCHMARK(BM_Encode)->Arg(1)->Arg(4)->Arg(8)->Arg(16);

void BM_MiniDpll(benchmark::State& state) {
    auto h = static_cast<std::size_t>(state.range(0));
    auto cnf = encode(h, problem_at(3, 4, 8)).value();
    for (auto _ : state) benchmark::DoNotOptimize(mini_dpll(cnf));
    state.counters["clauses"] = static_cast<double>(cnf.size());
}
BENCHMARK(BM_MiniDpll)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_EncodeSolveDecode(benchmark::State& state) {
    auto p = problem_at(5, 3, 5);
    for (auto _ : state) {
        auto st = build_stages(p, 3);
        auto model = mini_dpll(st.cnf);
        if (model) benchmark::DoNotOptimize(decode_model(st, *model));
    }
}
BENCHMARK(BM_EncodeSolveDecode);

void BM_OracleParallel(benchmark::State& state) {
    auto strips = build_stages(problem_at(9, 4, 8), 0).strips;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_parallel(strips, 6));
}
BENCHMARK(BM_OracleParallel);

}  // namespace

BENCHMARK_MAIN();
