// Microbenchmarks for the query engines, on generated instances: the
// divide-and-conquer dominance test against the exhaustive flip search, the
// constrained searches against an exhaustive scan, plus the per-query
// primitives (comparison, propagation).

#include <benchmark/benchmark.h>

#include "prefcore/generator.hpp"
#include "prefcore/solvers.hpp"

namespace {

using namespace prefcore;

ModelDocument net_of(ModelKind kind, int vars, int constraints, std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.kind = kind;
    cfg.var_count = vars;
    cfg.domain_size = 2;
    cfg.max_parents = 2;
    cfg.constraint_count = constraints;
    cfg.tightness = 0.3;
    cfg.seed = seed;
    return generate(cfg);
}

// A query the optimum always wins, differing on every variable: the worst
// shape for the divide-and-conquer split.
std::pair<Outcome, Outcome> hardest_pair(const ModelDocument& doc) {
    Outcome o1 = forward_sweep(*doc.cpnet);
    Outcome o2 = o1;
    for (int v = 0; v < doc.vars->size(); ++v)
        o2[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(
            (o1[static_cast<std::size_t>(v)] + 1) % doc.vars->domain_size(v));
    return {o1, o2};
}

void BM_DominanceOracle(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Cpnet, static_cast<int>(state.range(0)), 0, 9);
    auto [o1, o2] = hardest_pair(doc);
    for (auto _ : state)
        benchmark::DoNotOptimize(dominance_oracle(*doc.cpnet, o1, o2));
}
BENCHMARK(BM_DominanceOracle)->DenseRange(3, 9, 2);

void BM_DominanceDivideConquer(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Cpnet, static_cast<int>(state.range(0)), 0, 9);
    auto [o1, o2] = hardest_pair(doc);
    for (auto _ : state)
        benchmark::DoNotOptimize(acyclic_cp_dt(*doc.cpnet, o1, o2));
}
BENCHMARK(BM_DominanceDivideConquer)->DenseRange(3, 5, 1);

void BM_SearchCpr(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Cprnet, static_cast<int>(state.range(0)), 4, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(search_cpr(*doc.cprnet, *doc.constraints));
}
BENCHMARK(BM_SearchCpr)->DenseRange(6, 12, 2);

void BM_ExhaustiveScan(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Cprnet, static_cast<int>(state.range(0)), 4, 11);
    for (auto _ : state) {
        // Best feasible outcome the brute-force way: walk the whole induced
        // order until a feasible outcome appears.
        for (const Outcome& o : total_order(*doc.cprnet))
            if (check_outcome(*doc.constraints, o)) {
                benchmark::DoNotOptimize(o);
                break;
            }
    }
}
BENCHMARK(BM_ExhaustiveScan)->DenseRange(6, 12, 2);

void BM_SearchLp(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Lptree, static_cast<int>(state.range(0)), 4, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(search_lp(*doc.lptree, *doc.constraints));
}
BENCHMARK(BM_SearchLp)->DenseRange(6, 12, 2);

void BM_CompareCpr(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Cprnet, 12, 0, 17);
    Outcome best = best_outcome(*doc.cprnet);
    Outcome worst = best;
    for (auto& v : worst) v ^= 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(compare(*doc.cprnet, best, worst));
}
BENCHMARK(BM_CompareCpr);

void BM_CompareLp(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Lptree, 12, 0, 17);
    Outcome best = lex_head(*doc.lptree);
    Outcome worst = best;
    for (auto& v : worst) v ^= 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(lp_compare(*doc.lptree, best, worst));
}
BENCHMARK(BM_CompareLp);

void BM_Propagate(benchmark::State& state) {
    ModelDocument doc = net_of(ModelKind::Cpnet, 12, 8, 19);
    ConstraintSet cs = strengthen(*doc.constraints, 0, 0);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(cs));
}
BENCHMARK(BM_Propagate);

}  // namespace

BENCHMARK_MAIN();
