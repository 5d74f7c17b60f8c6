#include "tmspec/counterexample.hpp"

#include <stdexcept>

namespace tmspec {

CounterexampleSequence build_counterexample(std::uint64_t base, std::uint64_t horizon,
                                            const MoebiusTable &mu) {
  // rho = sum_n base^-n = 1/(base-1); the construction requires rho <= 1/4.
  if (base < 5)
    throw std::invalid_argument("build_counterexample: base < 5 gives rho > 1/4");
  if (mu.limit() < horizon)
    throw std::invalid_argument("build_counterexample: Moebius table too small");

  CounterexampleSequence cs;
  cs.base = base;
  cs.horizon = horizon;
  cs.rho = Rational(1, BigInt(base) - 1);
  cs.initial_of.assign(horizon + 1, UINT32_MAX);
  cs.z.assign(horizon + 1, 0);

  // Ascending scan: n is an initial iff no earlier progression covers it,
  // and then A_n = {n + k a_{n+1}} with a_{n+1} = base^{n+1}. A_0 uses a_1.
  // Progressions of distinct initials never collide (the divisibility chain
  // a_m | a_n forces n into A_m otherwise), so every stamped cell is fresh.
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    if (cs.initial_of[n] != UINT32_MAX)
      continue;
    std::uint64_t step = 1;
    bool in_range = true;
    for (std::uint64_t e = 0; e <= n; ++e) { // step = base^{n+1}, saturated
      if (step > horizon) {
        in_range = false;
        break;
      }
      step *= base;
    }
    if (!in_range || step > horizon) {
      cs.initial_of[n] = static_cast<std::uint32_t>(n);
    } else {
      for (std::uint64_t pos = n; pos <= horizon; pos += step) {
        if (cs.initial_of[pos] != UINT32_MAX)
          throw std::logic_error("build_counterexample: progression collision");
        cs.initial_of[pos] = static_cast<std::uint32_t>(n);
      }
    }
  }

  for (std::uint64_t n = 0; n <= horizon; ++n)
    cs.z[n] = static_cast<signed char>(mu.mu(cs.initial_of[n]));
  return cs;
}

} // namespace tmspec
