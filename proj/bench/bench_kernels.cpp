#include <benchmark/benchmark.h>

#include <random>

#include "semidp/kernels.hpp"
#include "semidp/message_passing.hpp"
#include "semidp/valuation.hpp"

using namespace semidp;

namespace {

Valuation random_table(const SemiringRef& s, const Scope& scope, std::mt19937_64& rng) {
    std::vector<Value> t(scope.cardinality());
    for (auto& v : t) v = s->sample(rng);
    return Valuation(s, scope, std::move(t));
}

Scope range(VarId first, VarId last, std::uint32_t card) {
    std::vector<Variable> vs;
    for (VarId v = first; v < last; ++v) vs.push_back({v, card});
    return Scope(std::move(vs));
}

// Two overlapping factors whose product has 3^n entries.
struct Pair {
    SemiringRef s = Semiring::max_plus();
    Valuation a, b;
    Scope target;

    explicit Pair(int n) : a(Valuation::identity(s)), b(Valuation::identity(s)) {
        std::mt19937_64 rng(1);
        const VarId v = static_cast<VarId>(n);
        a = random_table(s, range(0, v - 2, 3), rng);
        b = random_table(s, range(v / 2, v, 3), rng);
        target = unite(a.label(), b.label());
    }
};

void BM_CombineSerial(benchmark::State& st) {
    Pair p(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(
            kernels::combine_serial(*p.s, p.a.label(), p.a.table(), p.b.label(), p.b.table(), p.target));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(p.target.cardinality()));
}

void BM_CombineParallel(benchmark::State& st) {
    Pair p(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(
            kernels::combine_parallel(*p.s, p.a.label(), p.a.table(), p.b.label(), p.b.table(), p.target));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(p.target.cardinality()));
}

void BM_ProjectSerial(benchmark::State& st) {
    Pair p(static_cast<int>(st.range(0)));
    const auto t = kernels::combine_serial(*p.s, p.a.label(), p.a.table(), p.b.label(), p.b.table(), p.target);
    const Scope keep = range(0, 3, 3);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::project_serial(*p.s, p.target, t, keep));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(t.size()));
}

void BM_ProjectParallel(benchmark::State& st) {
    Pair p(static_cast<int>(st.range(0)));
    const auto t = kernels::combine_serial(*p.s, p.a.label(), p.a.table(), p.b.label(), p.b.table(), p.target);
    const Scope keep = range(0, 3, 3);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::project_parallel(*p.s, p.target, t, keep));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(t.size()));
}

// Chain of n pairwise factors, full collect-distribute.
void BM_CollectDistribute(benchmark::State& st) {
    const auto n = static_cast<VarId>(st.range(0));
    const SemiringRef s = Semiring::max_plus();
    std::mt19937_64 rng(2);
    std::vector<Valuation> factors;
    for (VarId v = 0; v + 1 < n; ++v) factors.push_back(random_table(s, Scope{{v, 8}, {v + 1, 8}}, rng));
    std::vector<Scope> scopes;
    for (const auto& f : factors) scopes.push_back(f.label());
    const auto tree = build_join_tree(scopes).tree;
    for (auto _ : st) benchmark::DoNotOptimize(collect_distribute(tree, factors));
}

}  // namespace

BENCHMARK(BM_CombineSerial)->Arg(10)->Arg(12);
BENCHMARK(BM_CombineParallel)->Arg(10)->Arg(12);
BENCHMARK(BM_ProjectSerial)->Arg(10)->Arg(12);
BENCHMARK(BM_ProjectParallel)->Arg(10)->Arg(12);
BENCHMARK(BM_CollectDistribute)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
