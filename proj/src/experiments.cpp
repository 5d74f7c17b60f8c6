#include "tmspec/experiments.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tmspec {

Rational CylinderFunction::bound() const {
  Rational F(0);
  for (const auto &v : table)
    F = std::max(F, abs(v));
  return F;
}

CylinderFunction CylinderFunction::from_values(std::int64_t offset, unsigned len,
                                               std::vector<Rational> values) {
  if (len == 0 || len > 24)
    throw std::invalid_argument("CylinderFunction: length must be in [1, 24]");
  const std::size_t words = std::size_t(1) << len;
  if (values.size() > words)
    throw std::invalid_argument("CylinderFunction: too many values");
  CylinderFunction f;
  f.offset = offset;
  f.length = len;
  f.defaulted = values.size() < words;
  values.resize(words, Rational(0));
  f.table = std::move(values);
  return f;
}

namespace {

void check_window_domain(const CylinderFunction &f, const MoebiusTable &mu, std::uint64_t N) {
  if (N == 0)
    throw std::range_error("weighted sum: N must be >= 1");
  if (f.offset + 1 < 0)
    throw std::range_error("weighted sum: window reaches below index 0");
  if (mu.limit() < N)
    throw std::range_error("weighted sum: Moebius table does not cover [1, N]");
}

// Word of the window w[a+k, a+k+len), first symbol in the lowest bit.
inline std::uint32_t window_word(const BitSeq &w, std::uint64_t lo, unsigned len) {
  std::uint32_t word = 0;
  for (unsigned j = 0; j < len; ++j)
    word |= static_cast<std::uint32_t>(w(lo + j) & 1) << j;
  return word;
}

} // namespace

WordMuCounts weighted_counts_serial(const CylinderFunction &f, const BitSeq &w,
                                    const MoebiusTable &mu, std::uint64_t N) {
  check_window_domain(f, mu, N);
  const std::size_t words = f.table.size();
  WordMuCounts counts;
  counts.plus.assign(words, 0);
  counts.minus.assign(words, 0);
  const std::uint64_t base = static_cast<std::uint64_t>(f.offset + 1);
  for (std::uint64_t k = 1; k <= N; ++k) {
    const int m = mu.mu(k);
    if (m == 0)
      continue;
    const std::uint32_t word = window_word(w, base + (k - 1), f.length);
    (m > 0 ? counts.plus : counts.minus)[word] += 1;
  }
  return counts;
}

WordMuCounts weighted_counts(const CylinderFunction &f, const BitSeq &w, const MoebiusTable &mu,
                             std::uint64_t N) {
  check_window_domain(f, mu, N);
  const std::size_t words = f.table.size();
  WordMuCounts counts;
  counts.plus.assign(words, 0);
  counts.minus.assign(words, 0);
  const std::uint64_t base = static_cast<std::uint64_t>(f.offset + 1);
#pragma omp parallel
  {
    std::vector<std::int64_t> plus(words, 0), minus(words, 0);
#pragma omp for schedule(static) nowait
    for (std::uint64_t k = 1; k <= N; ++k) {
      const int m = mu.mu(k);
      if (m == 0)
        continue;
      const std::uint32_t word = window_word(w, base + (k - 1), f.length);
      (m > 0 ? plus : minus)[word] += 1;
    }
#pragma omp critical
    for (std::size_t i = 0; i < words; ++i) {
      counts.plus[i] += plus[i];
      counts.minus[i] += minus[i];
    }
  }
  return counts;
}

Rational weighted_sum(const CylinderFunction &f, const BitSeq &w, const MoebiusTable &mu,
                      std::uint64_t N) {
  const WordMuCounts counts = weighted_counts(f, w, mu, N);
  Rational sum(0);
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    const std::int64_t net = counts.plus[i] - counts.minus[i];
    if (net != 0)
      sum += f.table[i] * Rational(net);
  }
  return sum / Rational(BigInt(N), 1);
}

std::vector<OrthogonalityPoint> moebius_series(const std::function<int(std::uint64_t)> &sign,
                                               const MoebiusTable &mu,
                                               std::span<const std::uint64_t> checkpoints) {
  std::vector<OrthogonalityPoint> points;
  if (checkpoints.empty())
    return points;
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw std::invalid_argument("moebius_series: checkpoints must be ascending");
  const std::uint64_t N = checkpoints.back();
  if (mu.limit() < N)
    throw std::range_error("moebius_series: Moebius table does not cover [1, N]");
  std::int64_t sum = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= N && next < checkpoints.size(); ++n) {
    sum += static_cast<std::int64_t>(sign(n)) * mu.mu(n);
    while (next < checkpoints.size() && checkpoints[next] == n) {
      points.push_back(OrthogonalityPoint{n, sum, Rational(sum, BigInt(n))});
      ++next;
    }
  }
  return points;
}

OrthogonalityPoint tm_orthogonality(std::uint64_t N, const MoebiusTable &mu) {
  if (N == 0)
    throw std::range_error("tm_orthogonality: N must be >= 1");
  if (mu.limit() < N)
    throw std::range_error("tm_orthogonality: Moebius table does not cover [1, N]");
  std::int64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::uint64_t n = 1; n <= N; ++n)
    sum += static_cast<std::int64_t>(tm_sign(n)) * mu.mu(n);
  return OrthogonalityPoint{N, sum, Rational(sum, BigInt(N))};
}

RowDecomposition row_decomposition(const CylinderFunction &f, const BitSeq &w,
                                   const ToeplitzStage &stage, const MoebiusTable &mu,
                                   std::uint64_t N) {
  if (stage.holes.empty())
    throw std::invalid_argument("row_decomposition: sequence has no declared stage structure");
  const std::uint64_t p = stage.period;
  if (N <= p)
    throw std::range_error("row_decomposition: requires N > period");
  check_window_domain(f, mu, N);

  RowDecomposition dec;
  dec.period = p;
  dec.prefix_len = p - 1; // w[1, p): the tail of the first period window
  dec.suffix_len = 0;
  dec.M = N / p;

  // Exact accumulation: per (row, word) net mu counters, combined with the
  // cylinder table at the end. Row 0 stands for the prefix E'.
  const std::size_t words = f.table.size();
  std::vector<std::int64_t> net((p + 1) * words, 0);
  const std::uint64_t base = static_cast<std::uint64_t>(f.offset + 1);
  for (std::uint64_t k = 1; k <= N; ++k) {
    const int m = mu.mu(k);
    if (m == 0)
      continue;
    const std::uint32_t word = window_word(w, base + (k - 1), f.length);
    const std::uint64_t row = k < p ? 0 : (k - p) % p + 1;
    net[row * words + word] += m;
  }

  const auto combine = [&](std::uint64_t row) {
    Rational sum(0);
    for (std::size_t i = 0; i < words; ++i) {
      const std::int64_t c = net[row * words + i];
      if (c != 0)
        sum += f.table[i] * Rational(c);
    }
    return sum;
  };

  dec.prefix_sum = combine(0);
  dec.suffix_sum = Rational(0);
  dec.rows.resize(p);
  dec.row_touches_hole.assign(p, 0);
  dec.total = dec.prefix_sum;
  for (std::uint64_t i = 1; i <= p; ++i) {
    dec.rows[i - 1] = combine(i);
    dec.total += dec.rows[i - 1];
    // Row i holds the terms k = (p-1) + i + j*p; its windows cover the fixed
    // residues (offset + k + [0, len)) mod p.
    bool touches = false;
    for (unsigned j = 0; j < f.length && !touches; ++j) {
      const std::uint64_t res =
          (static_cast<std::uint64_t>(f.offset + 1) + (p - 1) + i - 1 + j) % p;
      touches = std::binary_search(stage.holes.begin(), stage.holes.end(), res);
    }
    dec.row_touches_hole[i - 1] = touches;
    dec.hole_free_rows += !touches;
  }
  return dec;
}

CounterexamplePoint counterexample_correlation(const CounterexampleSequence &cs,
                                               const MoebiusTable &mu, std::uint64_t N) {
  if (N > cs.horizon)
    throw std::range_error("counterexample_correlation: N beyond the built horizon");
  if (mu.limit() < N)
    throw std::range_error("counterexample_correlation: Moebius table does not cover [1, N]");
  CounterexamplePoint pt;
  pt.N = N;
  for (std::uint64_t k = 1; k <= N; ++k) {
    pt.sum += static_cast<std::int64_t>(cs.z[k]) * mu.mu(k);
    pt.squarefree += mu.mu(k) != 0;
    pt.noninitial += !cs.is_initial(k);
  }
  pt.average = Rational(pt.sum, BigInt(N));
  const Rational n_rat(BigInt(N), 1);
  pt.lower_bound_ok =
      Rational(pt.sum) >= Rational(BigInt(pt.squarefree), 1) - Rational(2) * n_rat * cs.rho;
  pt.noninitial_ok = Rational(BigInt(pt.noninitial), 1) < n_rat * cs.rho;
  return pt;
}

CounterexampleScan counterexample_scan(const CounterexampleSequence &cs, const MoebiusTable &mu,
                                       std::uint64_t N,
                                       std::span<const std::uint64_t> checkpoints) {
  if (N > cs.horizon)
    throw std::range_error("counterexample_scan: N beyond the built horizon");
  if (mu.limit() < N)
    throw std::range_error("counterexample_scan: Moebius table does not cover [1, N]");
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw std::invalid_argument("counterexample_scan: checkpoints must be ascending");

  CounterexampleScan scan;
  scan.N = N;
  // rho = 1/(base-1); with cleared denominators the exact per-prefix checks
  //   sum >= sq - 2 n rho      <=>  (base-1) sum >= (base-1) sq - 2 n
  //   noninitial < n rho       <=>  (base-1) noninitial < n
  const std::int64_t b1 = static_cast<std::int64_t>(cs.base) - 1;
  std::int64_t sum = 0;
  std::uint64_t sq = 0, noninit = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    sum += static_cast<std::int64_t>(cs.z[n]) * mu.mu(n);
    sq += mu.mu(n) != 0;
    noninit += !cs.is_initial(n);
    if (b1 * sum < b1 * static_cast<std::int64_t>(sq) - 2 * static_cast<std::int64_t>(n) &&
        scan.first_inequality_violation == 0) {
      scan.inequality_ok_all = false;
      scan.first_inequality_violation = n;
    }
    if (b1 * static_cast<std::int64_t>(noninit) >= static_cast<std::int64_t>(n) &&
        scan.first_noninitial_violation == 0) {
      scan.noninitial_ok_all = false;
      scan.first_noninitial_violation = n;
    }
    if (next < checkpoints.size() && checkpoints[next] == n) {
      CounterexamplePoint pt;
      pt.N = n;
      pt.sum = sum;
      pt.squarefree = sq;
      pt.noninitial = noninit;
      pt.average = Rational(sum, BigInt(n));
      pt.lower_bound_ok = b1 * sum >= b1 * static_cast<std::int64_t>(sq) -
                                          2 * static_cast<std::int64_t>(n);
      pt.noninitial_ok = b1 * static_cast<std::int64_t>(noninit) < static_cast<std::int64_t>(n);
      scan.checkpoints.push_back(std::move(pt));
      ++next;
    }
  }
  return scan;
}

} // namespace tmspec
