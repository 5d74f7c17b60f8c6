#ifndef TMSPEC_COUNTEREXAMPLE_HPP
#define TMSPEC_COUNTEREXAMPLE_HPP

#include "tmspec/moebius.hpp"
#include "tmspec/rational.hpp"

#include <cstdint>
#include <vector>

namespace tmspec {

// The non-regular Toeplitz sequence built from a geometric progression chain
// a_n = base^n (base >= 5 so that rho = sum 1/a_n = 1/(base-1) <= 1/4).
//
// Subsets A_n of the naturals are defined by ascending scan: n is an initial
// when it is not covered by any earlier set, and then A_n is the progression
// {n, n + a_{n+1}, n + 2 a_{n+1}, ...}. Distinct sets are disjoint; z(n) is
// mu(m) for the initial m of A_n (with mu(0) = 0).
struct CounterexampleSequence {
  std::uint64_t base = 5;
  std::uint64_t horizon = 0;
  Rational rho;                         // 1/(base-1), exact
  std::vector<signed char> z;           // z(0..horizon), values in {-1,0,+1}
  std::vector<std::uint32_t> initial_of; // assignment n -> initial of A_n

  bool is_initial(std::uint64_t n) const { return initial_of[n] == n; }
};

// Throws std::invalid_argument when base < 5 (rho would exceed 1/4), or when
// the Moebius table does not cover [0, horizon].
CounterexampleSequence build_counterexample(std::uint64_t base, std::uint64_t horizon,
                                            const MoebiusTable &mu);

} // namespace tmspec

#endif
