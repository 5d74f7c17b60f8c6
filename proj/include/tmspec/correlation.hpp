#ifndef TMSPEC_CORRELATION_HPP
#define TMSPEC_CORRELATION_HPP

#include "tmspec/morse.hpp"
#include "tmspec/rational.hpp"
#include "tmspec/sigma.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tmspec {

// Autocorrelation kernels: sum_{n=1}^{N} m(n+k) m(n) over a +/-1 sequence,
// accumulated in exact integers so the result is independent of the summation
// order (and hence of the thread count). The _serial variants are the
// reference implementations; the unsuffixed ones parallelize with OpenMP.
std::int64_t autocorrelation_sum_serial(std::span<const signed char> m, std::uint64_t k,
                                        std::uint64_t N);
std::int64_t autocorrelation_sum(std::span<const signed char> m, std::uint64_t k,
                                 std::uint64_t N);

// Same sums evaluated through an accessor, for shifts too large to
// materialize.
std::int64_t autocorrelation_sum_lazy_serial(const BitSeq &bit, std::uint64_t k,
                                             std::uint64_t N);
std::int64_t autocorrelation_sum_lazy(const BitSeq &bit, std::uint64_t k, std::uint64_t N);

// Signs (-1)^{bit(n)} for n in [0, count).
std::vector<signed char> materialize_signs_serial(const BitSeq &bit, std::uint64_t count);
std::vector<signed char> materialize_signs(const BitSeq &bit, std::uint64_t count);

struct CorrelationReport {
  std::uint64_t k = 0;
  std::uint64_t N = 0;
  std::int64_t sum = 0;      // agreements - disagreements
  Rational empirical;        // sum / N
  std::optional<Rational> exact;
  double deviation = 0.0;    // |empirical - exact| when exact is present
};

// Empirical spectral coefficient (1/N) sum_{n=1}^{N} m(n+k) m(n) of a 0/1
// sequence given by `bit`. Materializes the window when it fits a fixed
// budget, otherwise streams through the accessor; both routes are exact.
CorrelationReport empirical_correlation(const BitSeq &bit, std::uint64_t k, std::uint64_t N,
                                        std::optional<Rational> exact = std::nullopt);

// Thue-Morse instance with the exact value sigma(k) attached.
CorrelationReport thue_morse_correlation(std::uint64_t k, std::uint64_t N, SigmaCache &cache);

// Correlation stabilization at the q_k scales of a TM-type spec: for each
// level the empirical coefficient at shift s * q_level, with |sigma(s)| as
// the exact target. For these reports `exact` holds |sigma(s)| and
// `deviation` is | |empirical| - |sigma(s)| | (the empirical coefficient at
// a q-scale approaches the target in absolute value only).
// Throws std::invalid_argument when the spec is not TM-type, std::range_error
// when a level's shift is not representable.
std::vector<CorrelationReport> stabilization_check(const MorseSpec &spec, std::uint64_t s,
                                                   std::span<const unsigned> levels,
                                                   std::uint64_t N, SigmaCache &cache);

} // namespace tmspec

#endif
