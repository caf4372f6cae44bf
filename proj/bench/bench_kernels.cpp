// Serial reference kernels against their OpenMP versions, plus batched GI.
//   ./bench_kernels --benchmark_counters_tabular=true
// Set OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "geninterval/kernels.hpp"
#include "geninterval/network.hpp"
#include "geninterval/probe.hpp"

namespace gi = geninterval;

namespace {

gi::Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
    gi::Matrix m(r, c);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& v : m.data()) v = u(rng);
    return m;
}

// Args: batch, in, out
void forward_args(benchmark::internal::Benchmark* b) {
    b->Args({32, 784, 128})->Args({512, 784, 128})->Args({512, 128, 128})->Args({2048, 784, 128});
}

template <bool Parallel>
void BM_DenseForward(benchmark::State& state) {
    const auto batch = static_cast<std::size_t>(state.range(0));
    const auto in = static_cast<std::size_t>(state.range(1));
    const auto out = static_cast<std::size_t>(state.range(2));
    const auto w = random_matrix(out, in, 1);
    const auto x = random_matrix(batch, in, 2);
    const gi::Vector bias(out, 0.1);
    gi::Matrix z(batch, out);
    for (auto _ : state) {
        if constexpr (Parallel) gi::kernels::dense_forward(w, bias, x, z);
        else gi::kernels::serial::dense_forward(w, bias, x, z);
        benchmark::DoNotOptimize(z.data().data());
    }
    state.counters["GFLOPS"] = benchmark::Counter(2.0 * batch * in * out, benchmark::Counter::kIsIterationInvariantRate,
                                                  benchmark::Counter::kIs1000);
}

template <bool Parallel>
void BM_DenseWeightGrad(benchmark::State& state) {
    const auto batch = static_cast<std::size_t>(state.range(0));
    const auto in = static_cast<std::size_t>(state.range(1));
    const auto out = static_cast<std::size_t>(state.range(2));
    const auto delta = random_matrix(batch, out, 3);
    const auto x = random_matrix(batch, in, 4);
    gi::Matrix dw(out, in);
    gi::Vector db(out);
    for (auto _ : state) {
        if constexpr (Parallel) gi::kernels::dense_weight_grad(delta, x, dw, db);
        else gi::kernels::serial::dense_weight_grad(delta, x, dw, db);
        benchmark::DoNotOptimize(dw.data().data());
    }
}

template <bool Parallel>
void BM_BatchGI(benchmark::State& state) {
    const std::size_t d = 784;
    const std::size_t sizes[] = {d, 128, 128, 128, 10};
    const auto params = gi::init_mlp(sizes, 7);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<gi::LineProbe> probes(static_cast<std::size_t>(state.range(0)));
    for (auto& p : probes) {
        p.origin.resize(d);
        p.direction.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            p.origin[i] = u(rng);
            p.direction[i] = u(rng) - p.origin[i];
        }
    }
    for (auto _ : state) {
        auto r = Parallel ? gi::generalization_intervals(params, probes)
                          : gi::serial::generalization_intervals(params, probes);
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

}  // namespace

BENCHMARK(BM_DenseForward<false>)->Name("dense_forward/serial")->Apply(forward_args);
BENCHMARK(BM_DenseForward<true>)->Name("dense_forward/omp")->Apply(forward_args)->UseRealTime();
BENCHMARK(BM_DenseWeightGrad<false>)->Name("dense_weight_grad/serial")->Apply(forward_args);
BENCHMARK(BM_DenseWeightGrad<true>)->Name("dense_weight_grad/omp")->Apply(forward_args)->UseRealTime();
BENCHMARK(BM_BatchGI<false>)->Name("batch_gi/serial")->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchGI<true>)->Name("batch_gi/omp")->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
