// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Every tolerance is pinned here, in code.
//
// Three checks assert reference claims that are internally inconsistent and
// are expected to stay red; they are kept as stated rather than silently
// corrected (details printed by the checks themselves):
//   A01 pins a reference value table whose entries at k = 3 and k = 9 carry
//       the opposite sign from the defining recursion (the recursion values
//       are confirmed empirically by A07 to ~1e-5);
//   A02 asserts the weak valuation bound v2(sigma(K)) >= 2 - l(K) down to
//       K = 1, where it is false (v2 = 0 < 2 at K = 1, 0 < 1 at K = 3);
//   A11 asserts a per-decade decreasing trend on three pointwise averages
//       that ground truth refutes at the 10^5 -> 10^6 step (the averages
//       live at the 1e-4 noise scale, far below the 0.05 target).

#include "tmspec/correlation.hpp"
#include "tmspec/counterexample.hpp"
#include "tmspec/experiments.hpp"
#include "tmspec/io.hpp"
#include "tmspec/moebius.hpp"
#include "tmspec/morse.hpp"
#include "tmspec/odd_chain.hpp"
#include "tmspec/rational.hpp"
#include "tmspec/sigma.hpp"
#include "tmspec/toeplitz.hpp"

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace tmspec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string info; // diagnostic lines, printed after the status line
};

void note(Outcome &o, std::string msg) {
  o.pass = false;
  if (!o.detail.empty())
    o.detail += "; ";
  o.detail += std::move(msg);
}

// A01: the frozen 21-entry value table (k = 0 plus twenty odd entries).
Outcome a01_value_table() {
  Outcome o;
  SigmaCache cache;
  const std::pair<std::uint64_t, const char *> table[] = {
      {0, "1/1"},    {1, "-1/3"},   {3, "-1/3"},   {5, "0/1"},    {7, "0/1"},
      {9, "-1/6"},   {11, "-1/6"},  {13, "-1/6"},  {15, "1/6"},   {17, "1/12"},
      {19, "-1/12"}, {23, "-1/12"}, {29, "-1/12"}, {31, "1/12"},  {37, "-1/24"},
      {41, "-1/24"}, {43, "1/24"},  {47, "-1/8"},  {53, "1/24"},  {59, "-1/24"},
      {61, "-1/8"}};
  for (const auto &[k, expect] : table) {
    const Rational v = sigma_hat(k, cache);
    if (v != Rational::parse(expect))
      note(o, "sigma(" + std::to_string(k) + ") = " + v.str() + ", table asserts " + expect +
                  " (recursion forces the computed value)");
  }
  return o;
}

// A02: valuation reports for every odd K <= 2^17.
Outcome a02_valuation_exhaustive() {
  Outcome o;
  SigmaCache cache(std::uint64_t(1) << 18);
  std::uint64_t failures = 0, first = 0;
  for (std::uint64_t K = 1; K <= (std::uint64_t(1) << 17); K += 2) {
    const ValuationReport rep = valuation_report(K, cache);
    if (!rep.lemma_holds) {
      if (failures == 0)
        first = K;
      ++failures;
    }
    if (K >= 9 && rep.is_zero)
      note(o, "sigma(" + std::to_string(K) + ") = 0 with K >= 9");
  }
  if (failures)
    note(o, std::to_string(failures) + " reports fail the valuation claim (first at K = " +
                std::to_string(first) +
                "; v2 = 0 < 2 - l at K = 1 and 3, where the weak bound is false)");
  return o;
}

// A03: closed form vs recursion for n <= 1000, a <= 20.
Outcome a03_closed_form() {
  Outcome o;
  SigmaCache cache;
  for (std::uint64_t n = 1; n <= 1000; ++n)
    for (unsigned a = 1; a <= 20; ++a) {
      const Rational lhs = sigma_hat_closed(n, a, cache);
      const Rational rhs = sigma_hat((std::uint64_t(1) << a) * n + 1, cache);
      if (lhs != rhs) {
        note(o, "mismatch at n=" + std::to_string(n) + " a=" + std::to_string(a));
        return o;
      }
    }
  return o;
}

// A04: equal sigma values force equal floor(log2) for odd K, L in [9, 2^12].
Outcome a04_equal_values_equal_l() {
  Outcome o;
  SigmaCache cache;
  std::map<Rational, unsigned> l_of_value;
  for (std::uint64_t K = 9; K <= (std::uint64_t(1) << 12); K += 2) {
    const Rational v = sigma_hat(K, cache);
    const unsigned l = floor_log2(K);
    const auto [it, inserted] = l_of_value.emplace(v, l);
    if (!inserted && it->second != l) {
      note(o, "sigma equal but l differs at K = " + std::to_string(K));
      return o;
    }
  }
  return o;
}

// A05: l(K) = floor(log2 K) for all odd K <= 2^20.
Outcome a05_chain_log() {
  Outcome o;
  for (std::uint64_t K = 1; K <= (std::uint64_t(1) << 20); K += 2) {
    if (odd_chain(K).l != floor_log2(K)) {
      note(o, "l(K) != floor(log2 K) at K = " + std::to_string(K));
      return o;
    }
  }
  return o;
}

// A06: a witness exists for every odd pair r < s <= 99.
Outcome a06_witnesses() {
  Outcome o;
  SigmaCache cache;
  for (std::uint64_t r = 1; r <= 99; r += 2)
    for (std::uint64_t s = r + 2; s <= 99; s += 2) {
      const auto w = disjointness_witness(r, s, cache);
      if (!w.found) {
        note(o, "no witness for (" + std::to_string(r) + ", " + std::to_string(s) + ")");
        return o;
      }
      if (!(abs(w.c1) != abs(w.c2))) {
        note(o, "bogus witness for (" + std::to_string(r) + ", " + std::to_string(s) + ")");
        return o;
      }
    }
  return o;
}

// A07: |empirical - sigma(k)| for k <= 64 at N = 2^22 stays below the frozen
// threshold 1/49152. Calibration (this binary, exact integer sums):
//   N = 2^16: max dev 1/1536    N = 2^18: max dev 1/6144
//   N = 2^20: max dev 1/24576   N = 2^22: max dev 1/98304  (all at k = 64)
// Threshold = twice the observed maximum at 2^22.
Outcome a07_empirical_agreement() {
  Outcome o;
  SigmaCache cache;
  const std::uint64_t n_max = std::uint64_t(1) << 22;
  const auto m = materialize_signs([](std::uint64_t n) { return thue_morse_bit(n); },
                                   n_max + 65);
  const Rational threshold(1, 49152);
  for (unsigned exp : {16u, 18u, 20u, 22u}) {
    const std::uint64_t N = std::uint64_t(1) << exp;
    Rational max_dev(0);
    std::uint64_t max_k = 0;
    for (std::uint64_t k = 0; k <= 64; ++k) {
      const std::int64_t sum = autocorrelation_sum(m, k, N);
      const Rational dev = abs(Rational(sum, BigInt(N)) - sigma_hat(k, cache));
      if (dev > max_dev) {
        max_dev = dev;
        max_k = k;
      }
    }
    char line[160];
    std::snprintf(line, sizeof line,
                  "       calibration N=2^%u: max deviation %s (%.3e) at k=%" PRIu64 "\n", exp,
                  max_dev.str().c_str(), max_dev.to_double(), max_k);
    o.info += line;
    if (N == n_max && max_dev > threshold)
      note(o, "max deviation " + max_dev.str() + " exceeds 1/49152 at k = " +
                  std::to_string(max_k));
  }
  return o;
}

// A08: strong 2-multiplicativity and the doubling recurrences, exact.
Outcome a08_multiplicativity() {
  Outcome o;
  for (std::uint64_t a = 0; a <= 1024; ++a)
    for (unsigned n = 1; n <= 10; ++n) {
      const std::uint64_t pow2 = std::uint64_t(1) << n;
      for (std::uint64_t b = 0; b < pow2; ++b)
        if (tm_sign(a * pow2 + b) != tm_sign(a) * tm_sign(b)) {
          note(o, "multiplicativity fails at a=" + std::to_string(a) +
                      " n=" + std::to_string(n) + " b=" + std::to_string(b));
          return o;
        }
    }
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    if (tm_sign(2 * n) != tm_sign(n) || tm_sign(2 * n + 1) != -tm_sign(n)) {
      note(o, "doubling recurrence fails at n = " + std::to_string(n));
      return o;
    }
  }
  return o;
}

// A09: the progression-fill construction equals x(i) xor x(i+1) on [0, 1e5],
// and the B_n ? B_n ? pattern holds for n <= 12.
Outcome a09_thue_toeplitz_structure() {
  Outcome o;
  const std::uint64_t H = 100000;
  const PartialSequence seq = thue_toeplitz_build(17, H); // 2^17 - 1 > H: fully filled
  for (std::uint64_t i = 0; i <= H; ++i) {
    if (!seq.filled(i)) {
      note(o, "unfilled cell at " + std::to_string(i));
      return o;
    }
    if (seq.at(i) != thue_toeplitz_bit(i)) {
      note(o, "construction differs from the xor formula at i = " + std::to_string(i));
      return o;
    }
  }
  for (unsigned n = 1; n <= 12; ++n) {
    const std::uint64_t p = std::uint64_t(1) << n;
    for (std::uint64_t j = 0; j <= H; ++j) {
      if (j % p == p - 1)
        continue;
      if (thue_toeplitz_bit(j) != thue_toeplitz_bit(j % p)) {
        note(o, "pattern breaks at stage " + std::to_string(n) + ", j = " + std::to_string(j));
        return o;
      }
    }
  }
  return o;
}

// A10: exact inequality chain and non-initial bound at every N <= 1e6; the
// average at 1e6 clears the analytic floor 6/pi^2 - 1/2 minus 0.02 slack
// (observed average 0.474722, floor - slack = 0.087927).
Outcome a10_counterexample() {
  Outcome o;
  const std::uint64_t N = 1000000;
  const MoebiusTable mu(N);
  const auto cs = build_counterexample(5, N, mu);
  const std::uint64_t cps[] = {N};
  const auto scan = counterexample_scan(cs, mu, N, cps);
  if (!scan.inequality_ok_all)
    note(o, "inequality fails first at N = " + std::to_string(scan.first_inequality_violation));
  if (!scan.noninitial_ok_all)
    note(o, "non-initial bound fails first at N = " +
                std::to_string(scan.first_noninitial_violation));
  const double avg = scan.checkpoints.back().average.to_double();
  const double floor = 6.0 / (M_PI * M_PI) - 0.5 - 0.02;
  char line[160];
  std::snprintf(line, sizeof line,
                "       average at 1e6: %.6f  floor-slack: %.6f  noninitials: %" PRIu64 "\n",
                avg, floor, scan.checkpoints.back().noninitial);
  o.info += line;
  if (!(avg >= floor))
    note(o, "average " + format_double(avg) + " below " + format_double(floor));
  return o;
}

// A11: pointwise trend |S_{10^{d+1}}| <= 1.5 |S_{10^d}| plus |S_1e6| < 0.05.
Outcome a11_orthogonality_trend() {
  Outcome o;
  const MoebiusTable mu(1000000);
  const std::uint64_t cps[] = {10000, 100000, 1000000};
  const auto pts = moebius_series([](std::uint64_t n) { return tm_sign(n); }, mu, cps);
  for (const auto &p : pts)
    o.info += "       |S_" + std::to_string(p.N) + "| = " +
              format_double(std::abs(p.value.to_double())) + "\n";
  for (std::size_t i = 1; i < pts.size(); ++i) {
    // |S_next| <= 1.5 |S_prev|, exactly: 2 |sum_next| N_prev <= 3 |sum_prev| N_next
    const auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };
    const BigInt lhs = BigInt(2) * abs64(pts[i].sum) * pts[i - 1].N;
    const BigInt rhs = BigInt(3) * abs64(pts[i - 1].sum) * pts[i].N;
    if (lhs > rhs)
      note(o, "|S_" + std::to_string(pts[i].N) + "| > 1.5 |S_" + std::to_string(pts[i - 1].N) +
                  "| (pointwise averages at the 1e-4 noise scale)");
  }
  if (!(std::abs(pts.back().value.to_double()) < 0.05))
    note(o, "|S_1e6| >= 0.05");
  return o;
}

// A12: row decomposition on the thue-toeplitz sequence: exact regrouping,
// boundary and row bounds, for stages n <= 8 and 20 seeded cylinders each.
Outcome a12_row_decomposition() {
  Outcome o;
  const std::uint64_t N = 100000;
  const MoebiusTable mu(N);
  const BitSeq tz = [](std::uint64_t n) { return thue_toeplitz_bit(n); };
  std::mt19937_64 rng(0x70E311725ull);
  for (unsigned n = 1; n <= 8 && o.pass; ++n) {
    const ToeplitzStage stage = thue_toeplitz_stage(n);
    for (int trial = 0; trial < 20 && o.pass; ++trial) {
      const unsigned len = 1 + static_cast<unsigned>(rng() % 6);
      const std::int64_t offset = static_cast<std::int64_t>(rng() % 8) - 1;
      std::vector<Rational> values(std::size_t(1) << len);
      for (auto &v : values)
        v = Rational(BigInt(static_cast<long long>(rng() % 17) - 8),
                     BigInt(1 + static_cast<long long>(rng() % 4)));
      const auto f = CylinderFunction::from_values(offset, len, std::move(values));
      const auto dec = row_decomposition(f, tz, stage, mu, N);
      const Rational flat = weighted_sum(f, tz, mu, N) * Rational(BigInt(N), 1);
      if (dec.total != flat)
        note(o, "regrouping identity fails at stage " + std::to_string(n));
      const Rational F = f.bound();
      if (!(abs(dec.prefix_sum + dec.suffix_sum) <= Rational(BigInt(dec.period), 1) * F))
        note(o, "boundary bound fails at stage " + std::to_string(n));
      for (const auto &row : dec.rows)
        if (!(abs(row) <= Rational(BigInt(dec.M), 1) * F)) {
          note(o, "row bound fails at stage " + std::to_string(n));
          break;
        }
    }
  }
  return o;
}

// A13: s_E digit sums equal the Kakutani sequences for every E in [1, 16],
// n < 2^16. The left side sums digits against E; the right side folds block
// products through the generic Morse machinery.
Outcome a13_kakutani_correspondence() {
  Outcome o;
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    std::vector<unsigned> E;
    for (unsigned i = 1; i <= 16; ++i)
      if (mask & (1u << (i - 1)))
        E.push_back(i);
    const MorseSpec spec = MorseSpec::kakutani(
        [mask](unsigned i) { return i <= 16 && (mask & (1u << (i - 1))); }, 16);
    const Block prefix = morse_prefix(spec, 16);
    bool local = prefix.size() == (std::size_t(1) << 16);
    for (std::uint64_t n = 0; n < (std::uint64_t(1) << 16) && local; ++n)
      local = s_E_bit(n, E) == prefix.bit(n);
    ok = ok && local;
  }
  if (!ok)
    note(o, "correspondence fails for some E");
  return o;
}

struct Criterion {
  const char *id;
  const char *name;
  double budget_s; // 0 = none stated
  Outcome (*run)();
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {"A01", "exact sigma value table", 1, a01_value_table},
      {"A02", "valuation structure for odd K <= 2^17", 10, a02_valuation_exhaustive},
      {"A03", "closed form = recursion (n <= 1000, a <= 20)", 10, a03_closed_form},
      {"A04", "equal sigma => equal l on [9, 2^12]", 30, a04_equal_values_equal_l},
      {"A05", "chain exponent sum = floor(log2) to 2^20", 5, a05_chain_log},
      {"A06", "disjointness witnesses for odd pairs <= 99", 30, a06_witnesses},
      {"A07", "empirical-exact agreement at N = 2^22", 0, a07_empirical_agreement},
      {"A08", "strong 2-multiplicativity + recurrences", 0, a08_multiplicativity},
      {"A09", "thue-toeplitz construction and pattern", 0, a09_thue_toeplitz_structure},
      {"A10", "counterexample inequality chain at 1e6", 60, a10_counterexample},
      {"A11", "orthogonality decay of S_N", 0, a11_orthogonality_trend},
      {"A12", "row decomposition bounds", 30, a12_row_decomposition},
      {"A13", "s_E / Kakutani correspondence", 0, a13_kakutani_correspondence},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
    const bool in_budget = c.budget_s == 0 || secs < c.budget_s;
    const bool pass = o.pass && in_budget;
    std::printf("[%s] %s %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, secs);
    if (!o.info.empty())
      std::printf("%s", o.info.c_str());
    if (!o.detail.empty())
      std::printf("       %s\n", o.detail.c_str());
    if (!in_budget)
      std::printf("       runtime above the %.0f s budget\n", c.budget_s);
    failures += !pass;
  }
  std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
  return failures;
}
