#ifndef TMSPEC_SIGMA_HPP
#define TMSPEC_SIGMA_HPP

#include "tmspec/rational.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace tmspec {

// Fourier coefficients of the Thue-Morse spectral measure:
//   sigma(0) = 1, sigma(1) = -1/3,
//   sigma(2n) = sigma(n), sigma(2n+1) = -(sigma(n) + sigma(n+1)) / 2.
// Values are memoized: a dense array below dense_limit, a hash map above.
// Not synchronized; use one cache per thread for concurrent sweeps (the
// values are exact, so independent caches agree).
class SigmaCache {
public:
  explicit SigmaCache(std::uint64_t dense_limit = std::uint64_t(1) << 18);

  Rational value(std::uint64_t k);

private:
  void store(std::uint64_t k, Rational v);

  std::uint64_t dense_limit_;
  std::vector<Rational> dense_;
  std::vector<std::uint8_t> have_;
  std::unordered_map<std::uint64_t, Rational> sparse_;
};

inline Rational sigma_hat(std::uint64_t k, SigmaCache &cache) { return cache.value(k); }

// Closed form for sigma(2^a n + 1), n, a >= 1:
//   (-1/2)^a (sigma(n+1) + sigma(n)/3) - sigma(n)/3.
// An independent evaluation route, equal to the recursion for all n, a.
Rational sigma_hat_closed(std::uint64_t n, unsigned a, SigmaCache &cache);

// Valuation structure of sigma at an odd K: either sigma(K) = 0 or
// v2(sigma(K)) relates to l(K) = floor(log2 K); for K >= 9 the claimed
// relation is the exact equality v2 = 2 - l(K).
struct ValuationReport {
  std::uint64_t K = 1;
  Rational sigma;
  bool is_zero = false;
  std::optional<int> v2; // absent when sigma(K) = 0
  unsigned l = 0;
  bool lemma_holds = false;
};

ValuationReport valuation_report(std::uint64_t K, SigmaCache &cache);

// K ~ L iff sigma(2K+1) = sigma(2L+1), exactly.
bool tm_equivalent(std::uint64_t K, std::uint64_t L, SigmaCache &cache);

// Witness for the spectral disjointness of the r-th and s-th powers: the
// smallest odd t with |sigma(t r)| != |sigma(t s)|. Values where both
// coefficients vanish witness nothing and are skipped by the comparison.
struct DisjointnessWitness {
  std::uint64_t r = 0, s = 0;
  bool found = false;
  std::uint64_t t = 0;
  Rational c1, c2;          // sigma(t r), sigma(t s) when found
  std::uint64_t scan_bound = 0; // exhausted bound when not found
};

// Throws std::domain_error unless r, s are odd and distinct.
DisjointnessWitness disjointness_witness(std::uint64_t r, std::uint64_t s, SigmaCache &cache,
                                         std::uint64_t t_bound = std::uint64_t(1) << 16);

} // namespace tmspec

#endif
