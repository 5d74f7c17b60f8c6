#ifndef TMSPEC_MOEBIUS_HPP
#define TMSPEC_MOEBIUS_HPP

#include <cstdint>
#include <vector>

namespace tmspec {

// Table of mu(1..limit) built by a linear sieve over smallest prime factors.
// mu(0) is defined as 0 (the convention used by the Toeplitz counterexample).
// Construction is single-threaded; the table is immutable afterwards and safe
// to share across threads.
class MoebiusTable {
public:
  explicit MoebiusTable(std::uint64_t limit);

  std::uint64_t limit() const { return mu_.size() - 1; }

  int mu(std::uint64_t n) const { return mu_[n]; }

  // |{k in [1, n] : mu(k) != 0}| = sum_{k<=n} mu(k)^2
  std::uint64_t squarefree_count(std::uint64_t n) const;

private:
  std::vector<signed char> mu_;
};

} // namespace tmspec

#endif
