#include "al/bench/dataset.hpp"
#include "al/registry.hpp"
#include "al/uncertainty.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

al::ProbabilityMatrix random_proba(al::Index rows, al::Index k) {
    std::mt19937_64 rng(1);
    std::exponential_distribution<double> e(1.0);
    al::ProbabilityMatrix p(rows, k);
    for (al::Index i = 0; i < rows; ++i) {
        for (al::Index c = 0; c < k; ++c) p(i, c) = e(rng);
        p.row(i) /= p.row(i).sum();
    }
    return p;
}

void BM_ClassifierUncertainty(benchmark::State& state) {
    const auto p = random_proba(state.range(0), 5);
    for (auto _ : state) benchmark::DoNotOptimize(al::classifier_uncertainty(p));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassifierUncertainty)->Arg(1000)->Arg(100000);

void BM_ClassifierEntropy(benchmark::State& state) {
    const auto p = random_proba(state.range(0), 5);
    for (auto _ : state) benchmark::DoNotOptimize(al::classifier_entropy(p));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassifierEntropy)->Arg(1000)->Arg(100000);

// One query over a pool of range(0) rows, GNB fit on 20 labeled rows.
void query_benchmark(benchmark::State& state, const std::string& strategy) {
    const auto data = al::bench::two_gaussians(state.range(0) + 20, 3);
    const auto& y = std::get<al::LabelArray>(data.y);
    al::IndexList train(20), pool(static_cast<std::size_t>(state.range(0)));
    for (al::Index i = 0; i < 20; ++i) train[static_cast<std::size_t>(i)] = i;
    for (al::Index i = 0; i < state.range(0); ++i) pool[static_cast<std::size_t>(i)] = 20 + i;

    auto learner = al::make_learner({.strategy = strategy, .estimator = "gnb", .seed = 0});
    learner->fit(al::take_rows(data.X, train), al::take_targets(y, train));
    const auto X_pool = al::take_rows(data.X, pool);
    for (auto _ : state) benchmark::DoNotOptimize(learner->query(X_pool, 1));
}

void BM_QueryLeastConfident(benchmark::State& state) { query_benchmark(state, "least_confident"); }
void BM_QueryQbcVote(benchmark::State& state) { query_benchmark(state, "qbc_vote"); }
void BM_QueryEerBinary(benchmark::State& state) { query_benchmark(state, "eer_binary"); }
void BM_QueryRankedBatch(benchmark::State& state) { query_benchmark(state, "ranked_batch"); }

BENCHMARK(BM_QueryLeastConfident)->Arg(100)->Arg(1000);
BENCHMARK(BM_QueryQbcVote)->Arg(100)->Arg(1000);
BENCHMARK(BM_QueryEerBinary)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QueryRankedBatch)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
