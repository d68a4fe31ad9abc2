#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace zigzag {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Round a nonnegative BigInt to double, scaling through the exponent so that
/// values far beyond DBL_MAX come back as +inf instead of tripping UB.
inline double big_to_double(const BigInt& x) {
  if (x == 0) return 0.0;
  const long bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
  if (bits <= 62) return static_cast<double>(x.convert_to<std::uint64_t>());
  const long shift = bits - 62;
  const std::uint64_t top = ((x >> shift).convert_to<std::uint64_t>());
  return std::ldexp(static_cast<double>(top), static_cast<int>(shift));
}

/// Exact rational over arbitrary-precision integers.
/// Invariants: gcd(|num|, den) == 1 and den > 0, restored after every operation.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator-(const Rational& x) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Nearest-double conversion that survives numerators/denominators far
  /// outside double range (e.g. factorials of several thousand): divide the
  /// top 62 bits of each and re-apply the exponent difference.
  double to_double() const {
    if (num_ == 0) return 0.0;
    BigInt a = boost::multiprecision::abs(num_);
    const long bn = static_cast<long>(boost::multiprecision::msb(a));
    const long bd = static_cast<long>(boost::multiprecision::msb(den_));
    const long shn = bn > 61 ? bn - 61 : 0;
    const long shd = bd > 61 ? bd - 61 : 0;
    const double mn = static_cast<double>((a >> shn).convert_to<std::uint64_t>());
    const double md = static_cast<double>((den_ >> shd).convert_to<std::uint64_t>());
    const double r = std::ldexp(mn / md, static_cast<int>(shn - shd));
    return num_ < 0 ? -r : r;
  }

  /// Same with a long double result (64-bit mantissas on x86).
  long double to_long_double() const {
    if (num_ == 0) return 0.0L;
    BigInt a = boost::multiprecision::abs(num_);
    const long bn = static_cast<long>(boost::multiprecision::msb(a));
    const long bd = static_cast<long>(boost::multiprecision::msb(den_));
    const long shn = bn > 62 ? bn - 62 : 0;
    const long shd = bd > 62 ? bd - 62 : 0;
    const long double mn = static_cast<long double>((a >> shn).convert_to<std::uint64_t>());
    const long double md = static_cast<long double>((den_ >> shd).convert_to<std::uint64_t>());
    const long double r = std::ldexp(mn / md, static_cast<int>(shn - shd));
    return num_ < 0 ? -r : r;
  }

  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace zigzag
