#include "tmspec/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace tmspec {

namespace {
// Windows above this many entries are streamed through the accessor instead
// of being materialized.
constexpr std::uint64_t kMaterializeBudget = std::uint64_t(1) << 26;
} // namespace

std::int64_t autocorrelation_sum_serial(std::span<const signed char> m, std::uint64_t k,
                                        std::uint64_t N) {
  if (m.size() < N + k + 1)
    throw std::range_error("autocorrelation_sum: window too short");
  std::int64_t sum = 0;
  for (std::uint64_t n = 1; n <= N; ++n)
    sum += static_cast<std::int64_t>(m[n]) * m[n + k];
  return sum;
}

std::int64_t autocorrelation_sum(std::span<const signed char> m, std::uint64_t k,
                                 std::uint64_t N) {
  if (m.size() < N + k + 1)
    throw std::range_error("autocorrelation_sum: window too short");
  std::int64_t sum = 0;
  const signed char *base = m.data();
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::uint64_t n = 1; n <= N; ++n)
    sum += static_cast<std::int64_t>(base[n]) * base[n + k];
  return sum;
}

std::int64_t autocorrelation_sum_lazy_serial(const BitSeq &bit, std::uint64_t k,
                                             std::uint64_t N) {
  std::int64_t sum = 0;
  for (std::uint64_t n = 1; n <= N; ++n)
    sum += (bit(n) ^ bit(n + k)) ? -1 : 1;
  return sum;
}

std::int64_t autocorrelation_sum_lazy(const BitSeq &bit, std::uint64_t k, std::uint64_t N) {
  std::int64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::uint64_t n = 1; n <= N; ++n)
    sum += (bit(n) ^ bit(n + k)) ? -1 : 1;
  return sum;
}

std::vector<signed char> materialize_signs_serial(const BitSeq &bit, std::uint64_t count) {
  std::vector<signed char> m(count);
  for (std::uint64_t n = 0; n < count; ++n)
    m[n] = static_cast<signed char>(1 - 2 * (bit(n) & 1));
  return m;
}

std::vector<signed char> materialize_signs(const BitSeq &bit, std::uint64_t count) {
  std::vector<signed char> m(count);
  signed char *out = m.data();
#pragma omp parallel for schedule(static)
  for (std::uint64_t n = 0; n < count; ++n)
    out[n] = static_cast<signed char>(1 - 2 * (bit(n) & 1));
  return m;
}

namespace {

CorrelationReport make_report(std::uint64_t k, std::uint64_t N, std::int64_t sum,
                              std::optional<Rational> exact, bool abs_deviation) {
  CorrelationReport rep;
  rep.k = k;
  rep.N = N;
  rep.sum = sum;
  rep.empirical = Rational(sum, BigInt(N));
  rep.exact = std::move(exact);
  if (rep.exact) {
    const Rational d =
        abs_deviation ? abs(abs(rep.empirical) - *rep.exact) : abs(rep.empirical - *rep.exact);
    rep.deviation = d.to_double();
  }
  return rep;
}

} // namespace

CorrelationReport empirical_correlation(const BitSeq &bit, std::uint64_t k, std::uint64_t N,
                                        std::optional<Rational> exact) {
  if (N == 0)
    throw std::range_error("empirical_correlation: N must be >= 1");
  std::int64_t sum;
  if (N + k + 1 <= kMaterializeBudget) {
    const auto m = materialize_signs(bit, N + k + 1);
    sum = autocorrelation_sum(m, k, N);
  } else {
    sum = autocorrelation_sum_lazy(bit, k, N);
  }
  return make_report(k, N, sum, std::move(exact), false);
}

CorrelationReport thue_morse_correlation(std::uint64_t k, std::uint64_t N, SigmaCache &cache) {
  return empirical_correlation([](std::uint64_t n) { return thue_morse_bit(n); }, k, N,
                               cache.value(k));
}

std::vector<CorrelationReport> stabilization_check(const MorseSpec &spec, std::uint64_t s,
                                                   std::span<const unsigned> levels,
                                                   std::uint64_t N, SigmaCache &cache) {
  if (!spec.tm_type())
    throw std::invalid_argument("stabilization_check: spec is not TM-type");
  if (N == 0)
    throw std::range_error("stabilization_check: N must be >= 1");
  const Rational target = abs(cache.value(s));
  const BitSeq bit = [&spec](std::uint64_t n) { return spec.bit(n); };

  std::vector<CorrelationReport> reports;
  reports.reserve(levels.size());
  for (unsigned level : levels) {
    const std::uint64_t qk = spec.q(level); // throws range_error on overflow
    if (s > (std::uint64_t(1) << 62) / qk)
      throw std::range_error("stabilization_check: shift exceeds the representable horizon");
    const std::uint64_t shift = s * qk;
    std::int64_t sum;
    if (N + shift + 1 <= kMaterializeBudget) {
      const auto m = materialize_signs(bit, N + shift + 1);
      sum = autocorrelation_sum(m, shift, N);
    } else {
      sum = autocorrelation_sum_lazy(bit, shift, N);
    }
    reports.push_back(make_report(shift, N, sum, target, true));
  }
  return reports;
}

} // namespace tmspec
