#include <algorithm>
#include <numeric>
#include <random>

#include "satforge/ast_semantics.hpp"
#include "satforge/oracle.hpp"

namespace satforge {

namespace {

// std::mt19937_64 is specified bit-exactly; the distributions are not, so
// draws are derived from raw output to keep problems identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53 < p; }

    std::vector<std::size_t> pick_distinct(std::size_t n, std::size_t k) {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), std::size_t{0});
        for (std::size_t i = 0; i < std::min(k, n); ++i) std::swap(all[i], all[i + below(n - i)]);
        all.resize(std::min(k, n));
        return all;
    }

private:
    std::mt19937_64 engine_;
};

PartialState random_partial(Rng& rng, const AstProblem& p, std::size_t max_len) {
    PartialState out;
    for (auto x : rng.pick_distinct(p.num_vars(), rng.between(0, max_len))) out.push_back({x, rng.below(p.num_vals(x))});
    return out;
}

}  // namespace

std::uint64_t problem_seed(std::uint64_t base, std::size_t index) {
    // splitmix64 step over base + index
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

AstProblem generate_problem(const GeneratorConfig& cfg) {
    Rng rng(cfg.seed);
    AstProblem p;

    auto n_vars = rng.between(1, std::max<std::size_t>(cfg.max_vars, 1));
    for (std::size_t x = 0; x < n_vars; ++x) {
        AstVariable v;
        v.name = "var" + std::to_string(x);
        auto lo = cfg.max_vals_per_var >= 2 ? 2 : 1;
        auto k = rng.between(lo, std::max<std::size_t>(cfg.max_vals_per_var, 1));
        for (std::size_t j = 0; j < k; ++j) v.values.push_back("Atom v" + std::to_string(x) + "-" + std::to_string(j));
        p.variables.push_back(std::move(v));
        p.initial.push_back(rng.below(k));
    }

    auto n_ops = rng.between(1, std::max<std::size_t>(cfg.max_ops, 1));
    for (std::size_t i = 0; i < n_ops; ++i) {
        AstOperator op;
        op.name = "op" + std::to_string(i);
        op.cost = 1;
        op.preconds = random_partial(rng, p, cfg.max_pre_len);
        auto n_eff = rng.between(1, std::max<std::size_t>(cfg.max_eff_len, 1));
        for (auto x : rng.pick_distinct(n_vars, n_eff)) {
            AstEffect e;
            e.var = x;
            e.new_val = rng.below(p.num_vals(x));
            if (rng.chance(cfg.implicit_pre_probability)) {
                auto bound = std::find_if(op.preconds.begin(), op.preconds.end(), [&](const Assignment& a) { return a.var == x; });
                // Agree with an explicit precondition on the same variable.
                e.implicit_pre = bound != op.preconds.end() ? bound->val : rng.below(p.num_vals(x));
            }
            op.effects.push_back(std::move(e));
        }
        p.operators.push_back(std::move(op));
    }

    if (rng.chance(0.5)) {
        // Goal taken from a random rollout, so it is reachable.
        State s = initial_state(p);
        auto steps = rng.between(2, 2 * n_ops + 2);
        for (std::size_t t = 0; t < steps; ++t) {
            std::vector<const AstOperator*> candidates;
            for (const auto& op : p.operators) {
                if (enabled(p, op.name, s)) candidates.push_back(&op);
            }
            if (candidates.empty()) break;
            s = execute(p, candidates[rng.below(candidates.size())]->name, s);
        }
        // Every changed variable goes in, so the goal is rarely the initial state.
        for (std::size_t x = 0; x < n_vars; ++x) {
            if (s.at(x) != p.initial[x] || rng.chance(0.3)) p.goal.push_back({x, s.at(x)});
        }
        if (p.goal.empty()) p.goal.push_back({0, s.at(0)});
    } else {
        for (auto x : rng.pick_distinct(n_vars, rng.between(1, n_vars))) p.goal.push_back({x, rng.below(p.num_vals(x))});
        auto& first = p.goal.front();
        if (first.val == p.initial[first.var] && p.num_vals(first.var) > 1 && rng.chance(0.8)) {
            first.val = (first.val + 1 + rng.below(p.num_vals(first.var) - 1)) % p.num_vals(first.var);
        }
    }
    return p;
}

}  // namespace satforge
