#ifndef TMSPEC_RATIONAL_HPP
#define TMSPEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmspec {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision integer parts.
// Invariants: gcd(|num|, den) == 1 and den >= 1 after every operation;
// zero is represented as 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
      throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return Rational(BigInt(std::string(text)), 1);
    return Rational(BigInt(std::string(text.substr(0, slash))),
                    BigInt(std::string(text.substr(slash + 1))));
  }

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator-(const Rational &x) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }

  friend Rational operator+(const Rational &x, const Rational &y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational &x, const Rational &y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational &x, const Rational &y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational &x, const Rational &y) {
    if (y.num_ == 0)
      throw std::domain_error("Rational: division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational &operator+=(const Rational &y) { return *this = *this + y; }
  Rational &operator-=(const Rational &y) { return *this = *this - y; }
  Rational &operator*=(const Rational &y) { return *this = *this * y; }
  Rational &operator/=(const Rational &y) { return *this = *this / y; }

  friend bool operator==(const Rational &x, const Rational &y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational &x, const Rational &y) { return !(x == y); }
  friend bool operator<(const Rational &x, const Rational &y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Rational &x, const Rational &y) { return y < x; }
  friend bool operator<=(const Rational &x, const Rational &y) { return !(y < x); }
  friend bool operator>=(const Rational &x, const Rational &y) { return !(x < y); }

  // Canonical serialization, always "p/q" with the sign on the numerator.
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_, den_;
};

inline Rational abs(const Rational &x) { return x.sign() < 0 ? -x : x; }

inline Rational pow(const Rational &base, unsigned e) {
  Rational acc(1), b = base;
  while (e) {
    if (e & 1u)
      acc *= b;
    if (e >>= 1)
      b *= b;
  }
  return acc;
}

// 2-adic valuation of a nonzero rational: for w = 2^k p / (2^l q) with p, q
// odd, v2(w) = k - l. In reduced form at most one of num/den is even.
inline int v2(const Rational &w) {
  if (w.is_zero())
    throw std::domain_error("v2 undefined at 0");
  const BigInt n = boost::multiprecision::abs(w.num());
  if (boost::multiprecision::bit_test(n, 0)) {
    // odd numerator; count factors of 2 in the denominator
    return -static_cast<int>(boost::multiprecision::lsb(w.den()));
  }
  return static_cast<int>(boost::multiprecision::lsb(n));
}

} // namespace tmspec

#endif
