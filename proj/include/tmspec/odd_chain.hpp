#ifndef TMSPEC_ODD_CHAIN_HPP
#define TMSPEC_ODD_CHAIN_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tmspec {

// Decomposition of an odd K into K_{i-1} = 2^{a_i} K_i + 1 with every K_i odd
// and K_r = 1. l = a_1 + ... + a_r equals floor(log2 K); r is the chain length.
// K = 1 is the degenerate base: r = 0, l = 0, ks = {1}, exps = {}.
struct OddChain {
  std::uint64_t K = 1;
  std::vector<std::uint64_t> ks;
  std::vector<unsigned> exps;
  unsigned r = 0;
  unsigned l = 0;
};

inline unsigned floor_log2(std::uint64_t x) {
  return 63u - static_cast<unsigned>(std::countl_zero(x));
}

inline OddChain odd_chain(std::uint64_t K) {
  if (K == 0 || (K & 1u) == 0)
    throw std::domain_error("odd_chain: K must be odd and positive");
  OddChain c;
  c.K = K;
  c.ks.push_back(K);
  while (K > 1) {
    const std::uint64_t m = K - 1; // even, nonzero
    const unsigned a = static_cast<unsigned>(std::countr_zero(m));
    K = m >> a;
    c.ks.push_back(K);
    c.exps.push_back(a);
    c.l += a;
  }
  c.r = static_cast<unsigned>(c.exps.size());
  return c;
}

// Smallest odd t with r*t < 2^a < s*t, scanning the window (2^a/s, 2^a/r)
// upward. Absence is a valid result: the window may contain no odd integer.
inline std::optional<std::uint64_t> find_odd_t(std::uint64_t r, std::uint64_t s, unsigned a) {
  if ((r & 1u) == 0 || (s & 1u) == 0)
    throw std::domain_error("find_odd_t: r and s must be odd");
  if (r >= s)
    throw std::domain_error("find_odd_t: requires r < s");
  if (a < 1 || a > 62)
    throw std::domain_error("find_odd_t: requires 1 <= a <= 62");
  const std::uint64_t pow2 = std::uint64_t(1) << a;
  std::uint64_t t = pow2 / s + 1; // first integer above 2^a/s (s*t = 2^a impossible, s odd)
  if ((t & 1u) == 0)
    ++t;
  for (; r * t < pow2; t += 2) {
    if (s * t > pow2)
      return t;
  }
  return std::nullopt;
}

} // namespace tmspec

#endif
