#include "tmspec/moebius.hpp"

#include <stdexcept>

namespace tmspec {

MoebiusTable::MoebiusTable(std::uint64_t limit) {
  if (limit == 0)
    throw std::domain_error("MoebiusTable: limit must be >= 1");
  mu_.assign(limit + 1, 0);
  mu_[1] = 1;

  // Linear sieve: each composite is crossed off exactly once, by its
  // smallest prime factor.
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu_[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit)
        break;
      composite[ip] = true;
      if (i % p == 0) {
        mu_[ip] = 0; // p^2 | ip
        break;
      }
      mu_[ip] = static_cast<signed char>(-mu_[i]);
    }
  }
}

std::uint64_t MoebiusTable::squarefree_count(std::uint64_t n) const {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    count += mu_[k] != 0;
  return count;
}

} // namespace tmspec
