#include "tmspec/sigma.hpp"

#include "tmspec/odd_chain.hpp"

#include "doctest.h"

#include <stdexcept>

#include <map>

using tmspec::disjointness_witness;
using tmspec::Rational;
using tmspec::sigma_hat;
using tmspec::sigma_hat_closed;
using tmspec::SigmaCache;
using tmspec::tm_equivalent;
using tmspec::valuation_report;

// The defining recursion forces sigma(3) = 1/3 and sigma(9) = 1/6 (positive):
// the empirical autocorrelations at N = 2^22 agree to ~1e-5. The unit suite
// pins the recursion values.
TEST_CASE("sigma values at small odd numbers") {
  SigmaCache cache;
  const std::pair<std::uint64_t, const char *> values[] = {
      {0, "1/1"},    {1, "-1/3"},   {2, "-1/3"},   {3, "1/3"},    {5, "0/1"},
      {7, "0/1"},    {9, "1/6"},    {11, "-1/6"},  {13, "-1/6"},  {15, "1/6"},
      {17, "1/12"},  {31, "1/12"},  {19, "-1/12"}, {23, "-1/12"}, {29, "-1/12"},
      {37, "-1/24"}, {41, "-1/24"}, {59, "-1/24"}, {43, "1/24"},  {53, "1/24"},
      {47, "-1/8"},  {61, "-1/8"}};
  for (const auto &[k, expect] : values)
    CHECK(sigma_hat(k, cache).str() == expect);
}

TEST_CASE("recursion consistency") {
  SigmaCache cache(std::uint64_t(1) << 19);
  for (std::uint64_t k = 1; k <= (std::uint64_t(1) << 17); ++k) {
    REQUIRE(sigma_hat(2 * k, cache) == sigma_hat(k, cache));
    REQUIRE(sigma_hat(2 * k + 1, cache) ==
            -(sigma_hat(k, cache) + sigma_hat(k + 1, cache)) * Rational(1, 2));
  }
}

TEST_CASE("sigma is bounded by 1 in absolute value") {
  SigmaCache cache;
  for (std::uint64_t k = 0; k <= 4096; ++k)
    REQUIRE(abs(sigma_hat(k, cache)) <= Rational(1));
}

TEST_CASE("closed form equals the recursion") {
  SigmaCache cache;
  CHECK(sigma_hat_closed(1, 1, cache) == sigma_hat(3, cache));
  CHECK(sigma_hat_closed(2, 2, cache) == sigma_hat(9, cache));
  for (std::uint64_t n = 1; n <= 100; ++n)
    for (unsigned a = 1; a <= 10; ++a)
      REQUIRE(sigma_hat_closed(n, a, cache) == sigma_hat((std::uint64_t(1) << a) * n + 1, cache));
  CHECK_THROWS_AS(sigma_hat_closed(0, 1, cache), std::domain_error);
  CHECK_THROWS_AS(sigma_hat_closed(1, 0, cache), std::domain_error);
}

TEST_CASE("sparse indices far above the dense limit") {
  SigmaCache cache(1 << 10);
  // sigma(2^a n) = sigma(n), pushed through big scales
  CHECK(sigma_hat(std::uint64_t(3) << 40, cache) == sigma_hat(3, cache));
  CHECK(sigma_hat_closed(1000, 20, cache) ==
        sigma_hat((std::uint64_t(1) << 20) * 1000 + 1, cache));
}

TEST_CASE("valuation reports") {
  SigmaCache cache;

  const auto r5 = valuation_report(5, cache);
  CHECK(r5.is_zero);
  CHECK(!r5.v2.has_value());
  CHECK(r5.lemma_holds);

  const auto r9 = valuation_report(9, cache);
  CHECK(!r9.is_zero);
  CHECK(*r9.v2 == -1);
  CHECK(r9.l == 3);
  CHECK(r9.lemma_holds); // -1 == 2 - 3

  const auto r47 = valuation_report(47, cache);
  CHECK(*r47.v2 == -3);
  CHECK(r47.l == 5);
  CHECK(r47.lemma_holds);

  CHECK_THROWS_AS(valuation_report(4, cache), std::domain_error);

  // The weak bound v2 >= 2 - l(K) fails at K = 1 and K = 3 (v2 = 0 there,
  // l = 0 and 1): the reports say so rather than smoothing it over.
  CHECK(!valuation_report(1, cache).lemma_holds);
  CHECK(!valuation_report(3, cache).lemma_holds);
  CHECK(valuation_report(7, cache).lemma_holds);
}

TEST_CASE("valuation equality for odd K in [9, 2^13)") {
  SigmaCache cache;
  for (std::uint64_t K = 9; K < (std::uint64_t(1) << 13); K += 2) {
    const auto rep = valuation_report(K, cache);
    REQUIRE(!rep.is_zero);
    REQUIRE(*rep.v2 == 2 - static_cast<int>(rep.l));
  }
}

TEST_CASE("equal sigma values force equal l, odd K in [9, 2^10)") {
  SigmaCache cache;
  std::map<Rational, unsigned> l_of_value;
  for (std::uint64_t K = 9; K < (std::uint64_t(1) << 10); K += 2) {
    const Rational v = sigma_hat(K, cache);
    const unsigned l = tmspec::odd_chain(K).l;
    const auto [it, inserted] = l_of_value.emplace(v, l);
    if (!inserted)
      REQUIRE(it->second == l);
  }
}

TEST_CASE("tm equivalence") {
  SigmaCache cache;
  CHECK(tm_equivalent(6, 6, cache));
  CHECK(tm_equivalent(8, 15, cache));  // sigma(17) = sigma(31) = 1/12
  CHECK(!tm_equivalent(8, 9, cache));  // 1/12 vs -1/12
}

TEST_CASE("disjointness witnesses") {
  SigmaCache cache;

  const auto w15 = disjointness_witness(1, 5, cache);
  CHECK(w15.found);
  CHECK(w15.t == 1); // |-1/3| vs |0|
  CHECK(w15.c1.str() == "-1/3");
  CHECK(w15.c2.str() == "0/1");

  const auto w37 = disjointness_witness(3, 7, cache);
  CHECK(w37.found);
  CHECK(w37.t == 1);

  // sigma(1) and sigma(3) differ only in sign, so t = 1 witnesses nothing
  const auto w13 = disjointness_witness(1, 3, cache);
  CHECK(w13.found);
  CHECK(w13.t > 1);
  CHECK(abs(w13.c1) != abs(w13.c2));

  CHECK_THROWS_AS(disjointness_witness(3, 3, cache), std::domain_error);
  CHECK_THROWS_AS(disjointness_witness(2, 3, cache), std::domain_error);
}

TEST_CASE("report fields serialize canonically") {
  SigmaCache cache;
  CHECK(sigma_hat(0, cache).str() == "1/1");
  CHECK(sigma_hat(1, cache).str() == "-1/3");
  CHECK(sigma_hat(5, cache).str() == "0/1");
}
