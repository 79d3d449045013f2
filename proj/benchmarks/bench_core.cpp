#include <benchmark/benchmark.h>

#include <random>

#include "qpc/dense.hpp"
#include "qpc/hyperplane.hpp"
#include "qpc/moment.hpp"
#include "qpc/weingarten.hpp"

using namespace qpc;

namespace {

const MatrixQN& moment6_matrix() {
    static MatrixQN m = build_matrix(morphisms_k6_main(),
                                     enumerate_partitions(6, PartitionFilter::Crossing));
    return m;
}

}  // namespace

static void BM_EnumeratePartitions(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(k));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(6)->Arg(8)->Arg(10);

static void BM_CrossingScan(benchmark::State& state) {
    auto ps = enumerate_partitions(8, PartitionFilter::All);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(crossings(ps[i]));
        i = (i + 97) % ps.size();
    }
}
BENCHMARK(BM_CrossingScan);

static void BM_ComposeDiagrams(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto cr6 = enumerate_partitions(6, PartitionFilter::Crossing);
    auto family = morphisms_k6_main();
    size_t i = 0, j = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            compose(TwoLinePartition::vector(cr6[j]), family.members[i].second));
        i = (i + 1) % family.members.size();
        j = (j + 13) % cr6.size();
    }
}
BENCHMARK(BM_ComposeDiagrams);

static void BM_BuildMoment6Matrix(benchmark::State& state) {
    auto cols = enumerate_partitions(6, PartitionFilter::Crossing);
    auto family = morphisms_k6_main();
    for (auto _ : state) benchmark::DoNotOptimize(build_matrix(family, cols));
}
BENCHMARK(BM_BuildMoment6Matrix)->Unit(benchmark::kMillisecond);

static void BM_RankAtMoment6(benchmark::State& state) {
    const MatrixQN& m = moment6_matrix();
    int n = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_at(m, BigRational(n)));
        n = (n == 200) ? 5 : n + 1;
    }
}
BENCHMARK(BM_RankAtMoment6)->Unit(benchmark::kMillisecond);

static void BM_GenericRankMoment5(benchmark::State& state) {
    MatrixQN m = build_matrix(morphisms_k5(), enumerate_partitions(5, PartitionFilter::Crossing));
    for (auto _ : state) benchmark::DoNotOptimize(rank_generic(m).rank);
}
BENCHMARK(BM_GenericRankMoment5)->Unit(benchmark::kMillisecond);

static void BM_WeingartenMoment5(benchmark::State& state) {
    (void)weingarten_matrix(5);  // warm the cache like a long-running session
    auto ps = enumerate_partitions(5, PartitionFilter::All);
    size_t i = 0, j = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(moment_by_kernels(ps[i], ps[j]));
        i = (i + 7) % ps.size();
        j = (j + 11) % ps.size();
    }
}
BENCHMARK(BM_WeingartenMoment5);

static void BM_DenseRankGram(benchmark::State& state) {
    auto nc = enumerate_partitions(6, PartitionFilter::Noncrossing);
    for (auto _ : state) benchmark::DoNotOptimize(dense_rank(nc, 4));
}
BENCHMARK(BM_DenseRankGram)->Unit(benchmark::kMillisecond);

static void BM_HyperplaneSearchSmall(benchmark::State& state) {
    // first 24 coordinate rows of the level-6 kernel, fixed N: C(24,4) subsets
    K6Report rep = analyze_k6({});
    std::vector<std::array<PolyN, 5>> rows(24);
    for (size_t j = 0; j < rows.size(); ++j)
        for (int i = 0; i < 5; ++i) rows[j][i] = rep.base.kernel_basis[i][j];
    for (auto _ : state)
        benchmark::DoNotOptimize(hyperplane_search_at(rows, BigRational(6), 1).n0);
}
BENCHMARK(BM_HyperplaneSearchSmall)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
