// Serial reference vs OpenMP kernels on the hot paths: autocorrelation sums,
// sign materialization, weighted Moebius counts, and the sieve itself.

#include "tmspec/correlation.hpp"
#include "tmspec/experiments.hpp"
#include "tmspec/moebius.hpp"
#include "tmspec/morse.hpp"
#include "tmspec/sigma.hpp"

#include <benchmark/benchmark.h>

using namespace tmspec;

namespace {

const std::uint64_t kCorrN = std::uint64_t(1) << 22;

const std::vector<signed char> &tm_signs() {
  static const auto m =
      materialize_signs([](std::uint64_t n) { return thue_morse_bit(n); }, kCorrN + 65);
  return m;
}

void bm_autocorr_serial(benchmark::State &state) {
  const auto &m = tm_signs();
  for (auto _ : state)
    benchmark::DoNotOptimize(autocorrelation_sum_serial(m, 64, kCorrN));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kCorrN));
}
BENCHMARK(bm_autocorr_serial);

void bm_autocorr_omp(benchmark::State &state) {
  const auto &m = tm_signs();
  for (auto _ : state)
    benchmark::DoNotOptimize(autocorrelation_sum(m, 64, kCorrN));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kCorrN));
}
BENCHMARK(bm_autocorr_omp);

void bm_materialize_serial(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        materialize_signs_serial([](std::uint64_t n) { return thue_morse_bit(n); }, kCorrN));
}
BENCHMARK(bm_materialize_serial);

void bm_materialize_omp(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        materialize_signs([](std::uint64_t n) { return thue_morse_bit(n); }, kCorrN));
}
BENCHMARK(bm_materialize_omp);

CylinderFunction bench_cylinder() {
  return CylinderFunction::from_values(
      0, 3,
      {Rational(1), Rational(-1), Rational(2), Rational(0), Rational(1), Rational(-2),
       Rational(0), Rational(1)});
}

void bm_weighted_counts_serial(benchmark::State &state) {
  static const MoebiusTable mu(1000000);
  const auto f = bench_cylinder();
  const BitSeq tz = [](std::uint64_t n) { return thue_toeplitz_bit(n); };
  for (auto _ : state)
    benchmark::DoNotOptimize(weighted_counts_serial(f, tz, mu, 1000000));
}
BENCHMARK(bm_weighted_counts_serial);

void bm_weighted_counts_omp(benchmark::State &state) {
  static const MoebiusTable mu(1000000);
  const auto f = bench_cylinder();
  const BitSeq tz = [](std::uint64_t n) { return thue_toeplitz_bit(n); };
  for (auto _ : state)
    benchmark::DoNotOptimize(weighted_counts(f, tz, mu, 1000000));
}
BENCHMARK(bm_weighted_counts_omp);

void bm_moebius_sieve(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(MoebiusTable(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(bm_moebius_sieve)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

void bm_sigma_sweep(benchmark::State &state) {
  for (auto _ : state) {
    SigmaCache cache(std::uint64_t(1) << 18);
    Rational last;
    for (std::uint64_t k = 1; k <= (std::uint64_t(1) << 17); k += 2)
      last = sigma_hat(k, cache);
    benchmark::DoNotOptimize(last);
  }
}
BENCHMARK(bm_sigma_sweep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
