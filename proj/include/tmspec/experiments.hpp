#ifndef TMSPEC_EXPERIMENTS_HPP
#define TMSPEC_EXPERIMENTS_HPP

#include "tmspec/counterexample.hpp"
#include "tmspec/moebius.hpp"
#include "tmspec/morse.hpp"
#include "tmspec/rational.hpp"
#include "tmspec/toeplitz.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tmspec {

// A function of a fixed window of coordinates: f(w) = table[w[a, a+len)],
// where the word indexes the table with its first symbol in the lowest bit.
// Values are exact rationals, so all weighted sums below are exact.
struct CylinderFunction {
  std::int64_t offset = 0;
  unsigned length = 1;
  std::vector<Rational> table; // size 2^length
  bool defaulted = false;      // true when missing words were padded with 0

  Rational bound() const; // F = max |value|

  // Pads a short value list with zeros (setting `defaulted`); throws
  // std::invalid_argument when len is 0 or > 24 or the list is too long.
  static CylinderFunction from_values(std::int64_t offset, unsigned len,
                                      std::vector<Rational> values);
};

// Per-word counts of mu = +1 and mu = -1 positions: the exact-integer core of
// the weighted sums. Serial reference and OpenMP variants agree exactly.
struct WordMuCounts {
  std::vector<std::int64_t> plus, minus;
};
WordMuCounts weighted_counts_serial(const CylinderFunction &f, const BitSeq &w,
                                    const MoebiusTable &mu, std::uint64_t N);
WordMuCounts weighted_counts(const CylinderFunction &f, const BitSeq &w,
                             const MoebiusTable &mu, std::uint64_t N);

// (1/N) sum_{k=1}^{N} f(w[a+k, a+k+len)) mu(k), exact.
// Throws std::range_error when the window would reach below index 0 or the
// table does not cover [1, N].
Rational weighted_sum(const CylinderFunction &f, const BitSeq &w, const MoebiusTable &mu,
                      std::uint64_t N);

struct OrthogonalityPoint {
  std::uint64_t N = 0;
  std::int64_t sum = 0; // sum_{n<=N} m(n) mu(n)
  Rational value;       // sum / N
};

// Partial sums of a +/-1 sequence against mu at the given checkpoints
// (ascending). sign(n) must be +1 or -1.
std::vector<OrthogonalityPoint> moebius_series(const std::function<int(std::uint64_t)> &sign,
                                               const MoebiusTable &mu,
                                               std::span<const std::uint64_t> checkpoints);

// (1/N) sum_{n=1}^{N} (-1)^{x(n)} mu(n) for the Thue-Morse x.
OrthogonalityPoint tm_orthogonality(std::uint64_t N, const MoebiusTable &mu);

// Exact regrouping of sum_{k=1}^N f(T^k w) mu(k) along the period-p skeleton
// of a Toeplitz sequence: a prefix E' of length p-1 (the tail of the first
// period window), then p rows, row i collecting the terms k = (p-1) + i + j*p.
// The suffix E'' is empty in this alignment. Invariants:
//   total == E' + sum_i rows[i] + E''          (a partition of [1, N])
//   |E' + E''| <= p * F
//   |rows[i]| <= M * F with M = floor(N / p)
// A row touches a hole when some window position of its residue class falls
// on a hole residue; hole-free rows are periodic-times-mu sums.
struct RowDecomposition {
  std::uint64_t period = 1;
  std::uint64_t prefix_len = 0, suffix_len = 0; // c', c''
  Rational prefix_sum, suffix_sum;              // E', E''
  std::vector<Rational> rows;                   // rows[0] = Sigma_1
  std::vector<std::uint8_t> row_touches_hole;
  std::uint64_t hole_free_rows = 0;
  std::uint64_t M = 0;
  Rational total;
};

// Throws std::invalid_argument when the stage has no holes recorded (no
// declared stage structure) and std::range_error when N <= period.
RowDecomposition row_decomposition(const CylinderFunction &f, const BitSeq &w,
                                   const ToeplitzStage &stage, const MoebiusTable &mu,
                                   std::uint64_t N);

// One point of the counterexample correlation: S = sum_{k=1}^N z(k) mu(k),
// with the exact lower bound S >= squarefree_count(N) - 2 N rho.
struct CounterexamplePoint {
  std::uint64_t N = 0;
  std::int64_t sum = 0;
  std::uint64_t squarefree = 0;
  std::uint64_t noninitial = 0;
  Rational average;
  bool lower_bound_ok = false;
  bool noninitial_ok = false; // noninitial count < N * rho
};

CounterexamplePoint counterexample_correlation(const CounterexampleSequence &cs,
                                               const MoebiusTable &mu, std::uint64_t N);

// Scan of every prefix N' <= N: records whether the exact inequality and the
// non-initial bound hold at every single point, plus checkpoint reports.
struct CounterexampleScan {
  std::uint64_t N = 0;
  bool inequality_ok_all = true;
  bool noninitial_ok_all = true;
  std::uint64_t first_inequality_violation = 0; // 0 = none
  std::uint64_t first_noninitial_violation = 0;
  std::vector<CounterexamplePoint> checkpoints;
};

CounterexampleScan counterexample_scan(const CounterexampleSequence &cs, const MoebiusTable &mu,
                                       std::uint64_t N,
                                       std::span<const std::uint64_t> checkpoints);

} // namespace tmspec

#endif
