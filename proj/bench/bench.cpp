// serial reference vs OpenMP kernels
#include "qkc/ichevalley.hpp"
#include "qkc/qbg.hpp"
#include "qkc/qkpres.hpp"
#include "qkc/semimod.hpp"

#include <benchmark/benchmark.h>

using namespace qkc;

static void BM_graph(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_graph(n));
}
static void BM_graph_serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_graph_serial(n));
}
BENCHMARK(BM_graph)->DenseRange(3, 5);
BENCHMARK(BM_graph_serial)->DenseRange(3, 5);

static void BM_cross(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(cross_check(static_cast<int>(st.range(0))));
}
static void BM_cross_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(cross_check_serial(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_cross)->DenseRange(3, 4);
BENCHMARK(BM_cross_serial)->DenseRange(3, 4);

static void BM_ff(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ff(n, n, FRange::full(), 2 * n + 2));
}
static void BM_ff_serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ff_serial(n, n, FRange::full(), 2 * n + 2));
}
BENCHMARK(BM_ff)->DenseRange(2, 4);
BENCHMARK(BM_ff_serial)->DenseRange(2, 4);

static void BM_fpoly(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f_poly(n, n, FRange::full(), 2 * n + 2));
}
static void BM_fpoly_serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f_poly_serial(n, n, FRange::full(), 2 * n + 2));
}
BENCHMARK(BM_fpoly)->DenseRange(2, 4);
BENCHMARK(BM_fpoly_serial)->DenseRange(2, 4);

static void BM_duality(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(duality_stats(static_cast<int>(st.range(0))));
}
static void BM_duality_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(duality_stats_serial(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_duality)->DenseRange(2, 4);
BENCHMARK(BM_duality_serial)->DenseRange(2, 4);

static void BM_ic(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Qbg g(n);
  const SignedPerm w = mountain(1, n);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_inverse_chevalley(g, w, 1).total());
}
static void BM_ic_serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Qbg g(n);
  const SignedPerm w = mountain(1, n);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_inverse_chevalley_serial(g, w, 1).total());
}
BENCHMARK(BM_ic)->DenseRange(2, 4);
BENCHMARK(BM_ic_serial)->DenseRange(2, 4);

BENCHMARK_MAIN();
