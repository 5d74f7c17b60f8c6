#include "tmspec/sigma.hpp"

#include "tmspec/odd_chain.hpp"

#include <stdexcept>

namespace tmspec {

SigmaCache::SigmaCache(std::uint64_t dense_limit) : dense_limit_(dense_limit) {
  dense_.resize(static_cast<std::size_t>(dense_limit_));
  have_.assign(static_cast<std::size_t>(dense_limit_), 0);
  store(0, Rational(1));
  store(1, Rational(-1, 3));
}

void SigmaCache::store(std::uint64_t k, Rational v) {
  if (k < dense_limit_) {
    dense_[static_cast<std::size_t>(k)] = std::move(v);
    have_[static_cast<std::size_t>(k)] = 1;
  } else {
    sparse_.emplace(k, std::move(v));
  }
}

Rational SigmaCache::value(std::uint64_t k) {
  if (k < dense_limit_) {
    if (have_[static_cast<std::size_t>(k)])
      return dense_[static_cast<std::size_t>(k)];
  } else if (const auto it = sparse_.find(k); it != sparse_.end()) {
    return it->second;
  }
  Rational v;
  if ((k & 1u) == 0) {
    v = value(k / 2);
  } else {
    const std::uint64_t n = k / 2; // k = 2n+1, n >= 1 here (k=1 is seeded)
    const Rational a = value(n);
    const Rational b = value(n + 1);
    v = -(a + b) * Rational(1, 2);
  }
  store(k, v);
  return v;
}

Rational sigma_hat_closed(std::uint64_t n, unsigned a, SigmaCache &cache) {
  if (n < 1 || a < 1)
    throw std::domain_error("sigma_hat_closed: requires n, a >= 1");
  const Rational sn = cache.value(n);
  const Rational sn1 = cache.value(n + 1);
  // (-1/2)^a built directly: (-1)^a / 2^a
  const Rational half_pow(BigInt(a & 1u ? -1 : 1), BigInt(1) << a);
  const Rational third(1, 3);
  return half_pow * (sn1 + third * sn) - third * sn;
}

ValuationReport valuation_report(std::uint64_t K, SigmaCache &cache) {
  if (K == 0 || (K & 1u) == 0)
    throw std::domain_error("valuation_report: K must be odd");
  ValuationReport rep;
  rep.K = K;
  rep.sigma = cache.value(K);
  rep.is_zero = rep.sigma.is_zero();
  rep.l = odd_chain(K).l;
  if (!rep.is_zero)
    rep.v2 = v2(rep.sigma);
  const int bound = 2 - static_cast<int>(rep.l);
  if (K < 9)
    rep.lemma_holds = rep.is_zero || *rep.v2 >= bound;
  else
    rep.lemma_holds = !rep.is_zero && *rep.v2 == bound;
  return rep;
}

bool tm_equivalent(std::uint64_t K, std::uint64_t L, SigmaCache &cache) {
  return cache.value(2 * K + 1) == cache.value(2 * L + 1);
}

DisjointnessWitness disjointness_witness(std::uint64_t r, std::uint64_t s, SigmaCache &cache,
                                         std::uint64_t t_bound) {
  if ((r & 1u) == 0 || (s & 1u) == 0 || r == 0 || s == 0)
    throw std::domain_error("disjointness_witness: r and s must be odd");
  if (r == s)
    throw std::domain_error("disjointness_witness: r and s must differ");
  DisjointnessWitness w;
  w.r = r;
  w.s = s;
  for (std::uint64_t t = 1; t <= t_bound; t += 2) {
    const Rational c1 = cache.value(t * r);
    const Rational c2 = cache.value(t * s);
    if (abs(c1) != abs(c2)) {
      w.found = true;
      w.t = t;
      w.c1 = c1;
      w.c2 = c2;
      return w;
    }
  }
  w.scan_bound = t_bound;
  return w;
}

} // namespace tmspec
