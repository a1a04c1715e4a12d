#include <benchmark/benchmark.h>

#include <delins/delins.hpp>

using namespace delins;

namespace {

Word alternating(int m) {
    std::vector<Symbol> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = static_cast<Symbol>(i % 2);
    return Word(std::move(v), 2);
}

void BM_EmbeddingNumber(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Word x = alternating(n);
    const Word y = alternating(n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(embedding_number(x, y));
    }
}
BENCHMARK(BM_EmbeddingNumber)->Arg(16)->Arg(32)->Arg(64);

void BM_InsertionBall2(benchmark::State& state) {
    const Word y = alternating(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(insertion_ball(y, 2).entries.size());
    }
}
BENCHMARK(BM_InsertionBall2)->Arg(8)->Arg(12)->Arg(16);

void BM_InputEntropy2Del(benchmark::State& state) {
    const Word y = alternating(static_cast<int>(state.range(0)));
    const ChannelSpec spec = ChannelSpec::for_output(Direction::deletion, 2, y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(input_entropy(spec, y).bits);
    }
}
BENCHMARK(BM_InputEntropy2Del)->Arg(8)->Arg(12)->Arg(16);

void BM_Exhaustive1DelScan(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ChannelSpec spec{Direction::deletion, 1, 2, m + 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_extremizers(spec).first.bits);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << m));
}
BENCHMARK(BM_Exhaustive1DelScan)->Arg(12)->Arg(16);

void BM_Exhaustive2DelScan(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ChannelSpec spec{Direction::deletion, 2, 2, m + 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_extremizers(spec).first.bits);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << m));
}
BENCHMARK(BM_Exhaustive2DelScan)->Arg(8)->Arg(10);

void BM_AverageClosed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(avg_1del(n, 2, false).avg_closed);
    }
}
BENCHMARK(BM_AverageClosed)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
