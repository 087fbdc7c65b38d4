#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qsurf/curves.hpp"
#include "qsurf/kernels.hpp"
#include "qsurf/operators.hpp"

namespace {

using qsurf::Complex;
namespace ks = qsurf::kernels::serial;
namespace ko = qsurf::kernels::omp;

std::vector<Complex> loop(std::int64_t n) {
  std::vector<Complex> v(n);
  for (std::int64_t m = 0; m < n; ++m) v[m] = std::polar(1.0 + 0.1 * std::sin(7.0 * m), 6.283185307179586 * 3.0 * m / n);
  return v;
}

std::vector<qsurf::kernels::ArcTraversal> arcs(int N) {
  const auto geo = qsurf::earring(N);
  std::vector<qsurf::kernels::ArcTraversal> out;
  for (int j = 1; j <= N; ++j) {
    out.push_back({j, +1, geo.circle(j).center, geo.circle(j).radius});
    out.push_back({j, (j % 2) ? +1 : -1, geo.circle(j).center, geo.circle(j).radius});
  }
  return out;
}

std::vector<qsurf::Matrix> circulant_blocks(int d) {
  const auto op = qsurf::build_generator(4, 0, d);
  std::vector<qsurf::Matrix> out;
  for (const auto& b : op.blocks) out.push_back(b.matrix);
  return out;
}

template <auto Fn>
void BM_ArgumentSum(benchmark::State& state) {
  const auto v = loop(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(v, Complex(0.1, 0.0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_SampleArcs(benchmark::State& state) {
  const auto a = arcs(6);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 12);
}

template <auto Fn>
void BM_BlockEigenvalues(benchmark::State& state) {
  const auto blocks = circulant_blocks(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(blocks));
}

}  // namespace

BENCHMARK(BM_ArgumentSum<ks::argument_increment_sum>)->Name("serial/argument_sum")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_ArgumentSum<ko::argument_increment_sum>)->Name("omp/argument_sum")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_SampleArcs<ks::sample_arcs>)->Name("serial/sample_arcs")->Range(1 << 8, 1 << 14);
BENCHMARK(BM_SampleArcs<ko::sample_arcs>)->Name("omp/sample_arcs")->Range(1 << 8, 1 << 14);
BENCHMARK(BM_BlockEigenvalues<ks::block_eigenvalues>)->Name("serial/block_eigenvalues")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockEigenvalues<ko::block_eigenvalues>)->Name("omp/block_eigenvalues")->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
