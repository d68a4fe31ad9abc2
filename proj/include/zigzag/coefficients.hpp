#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/rational.hpp"
#include "zigzag/special_functions.hpp"

namespace zigzag {

enum class Family {
  centred,
  centred_staggered,
  forward,
  backward,
  zigzag_forward_first,
  zigzag_backward_first,
  zigzag_staggered_forward_first,
  zigzag_staggered_backward_first,
};

inline bool is_staggered(Family f) {
  return f == Family::centred_staggered || f == Family::zigzag_staggered_forward_first ||
         f == Family::zigzag_staggered_backward_first;
}

inline bool is_centred_family(Family f) {
  return f == Family::centred || f == Family::centred_staggered;
}

inline bool is_zigzag(Family f) {
  return f == Family::zigzag_forward_first || f == Family::zigzag_backward_first ||
         f == Family::zigzag_staggered_forward_first ||
         f == Family::zigzag_staggered_backward_first;
}

inline bool is_backward_variant(Family f) {
  return f == Family::backward || f == Family::zigzag_backward_first ||
         f == Family::zigzag_staggered_backward_first;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::centred: return "centred";
    case Family::centred_staggered: return "centred-staggered";
    case Family::forward: return "forward";
    case Family::backward: return "backward";
    case Family::zigzag_forward_first: return "zigzag-forward-first";
    case Family::zigzag_backward_first: return "zigzag-backward-first";
    case Family::zigzag_staggered_forward_first: return "zigzag-staggered-forward-first";
    case Family::zigzag_staggered_backward_first: return "zigzag-staggered-backward-first";
  }
  return "?";
}

struct InvalidOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedLimit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Coefficient overflow in a floating-point evaluation path. The exact
/// rational paths never throw this.
struct CoeffOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One family's quotient-form coefficients at a finite order, exact and in
/// double precision (float_values are the correctly rounded rationals).
/// values[j-1] is the coefficient of the j-th quotient, j = 1..count.
struct CoefficientSet {
  Family family{};
  int order = 0;
  std::vector<Rational> values;
  std::vector<double> float_values;

  void fill_floats() {
    float_values.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) float_values[i] = values[i].to_double();
  }

  Rational sum() const {
    Rational s;
    for (const auto& v : values) s += v;
    return s;
  }
};

namespace detail {

inline void require_positive(int order) {
  if (order < 1) throw InvalidOrder("order must be >= 1, got " + std::to_string(order));
}

inline void require_even(int order) {
  require_positive(order);
  if (order % 2 != 0)
    throw InvalidOrder("centred families need an even order, got " + std::to_string(order));
}

inline BigInt floor_half(long long a) { return BigInt((a - (a % 2 != 0 && a < 0 ? 1 : 0)) / 2); }
inline BigInt ceil_half(long long a) { return BigInt((a + (a % 2 != 0 && a > 0 ? 1 : 0)) / 2); }

}  // namespace detail

/// Centred first/second-derivative quotient coefficients of formal order 2M,
/// built by the incremental product prod_{l=1..j} (M-j+l)/(M+l) so no bare
/// factorial is ever formed.
inline CoefficientSet centred_coeffs(int order) {
  detail::require_even(order);
  const int half = order / 2;
  CoefficientSet set{Family::centred, order, {}, {}};
  set.values.reserve(half);
  for (int j = 1; j <= half; ++j) {
    Rational c(2 * ((j % 2 == 1) ? 1 : -1));
    for (int l = 1; l <= j; ++l) c *= Rational(half - j + l, half + l);
    set.values.push_back(c);
  }
  set.fill_floats();
  return set;
}

/// Staggered centred coefficients of formal order 2M.
inline CoefficientSet staggered_centred_coeffs(int order) {
  detail::require_even(order);
  const int half = order / 2;
  CoefficientSet set{Family::centred_staggered, order, {}, {}};
  set.values.reserve(half);
  // T_1 = 4*M*prod_{m=1..M}((2m-1)/(2m))^2, then T_{j+1} = T_j*(M-j)/(M+j).
  Rational t(4LL * half);
  for (int m = 1; m <= half; ++m) {
    Rational f(2 * m - 1, 2 * m);
    t *= f * f;
  }
  for (int j = 1; j <= half; ++j) {
    const int sign = (j % 2 == 1) ? 1 : -1;
    set.values.push_back(Rational(sign) * t / Rational(2 * j - 1));
    t *= Rational(half - j, half + j);
  }
  set.fill_floats();
  return set;
}

/// One-sided coefficients: signed binomials. Backward uses the same values;
/// the direction lives in the stencil offsets.
inline CoefficientSet forward_coeffs(int order) {
  detail::require_positive(order);
  CoefficientSet set{Family::forward, order, {}, {}};
  set.values.reserve(order);
  Rational binom(1);
  for (int j = 1; j <= order; ++j) {
    binom *= Rational(order - j + 1, j);
    set.values.push_back((j % 2 == 1) ? binom : -binom);
  }
  set.fill_floats();
  return set;
}

/// Zigzag coefficients at finite order: the four-case closed form, evaluated
/// left to right with running rational reduction.
inline CoefficientSet zigzag_coeffs(int order) {
  detail::require_positive(order);
  const long long n = order;
  CoefficientSet set{Family::zigzag_forward_first, order, {}, {}};
  set.values.reserve(order);
  using detail::ceil_half;
  using detail::floor_half;
  for (long long j = 1; j <= n; ++j) {
    Rational z;
    if (j == 1) {
      z = Rational(2 * floor_half(n + 1), BigInt(n + 1));
    } else if (j == 2) {
      z = Rational(2 * floor_half(n) * ceil_half(n + 1), BigInt((n + 1) * (n + 2)));
    } else if (j % 2 == 1) {
      const int sign = ((j / 2) % 2 == 0) ? 1 : -1;
      const long long a = 2 * n + j - 2 - (j + 2) * ((n % 2 == 0) ? 1 : -1);
      // (j-2)! / (((j-1)/2)! ((j-3)/2)!) as a running product.
      Rational b(1);
      {
        BigInt fac = factorial(static_cast<unsigned>(j - 2));
        BigInt d1 = factorial(static_cast<unsigned>((j - 1) / 2));
        BigInt d2 = factorial(static_cast<unsigned>((j - 3) / 2));
        b = Rational(fac, d1 * d2);
      }
      Rational c(1);
      for (long long l = 1; l <= j; ++l) c /= Rational(BigInt(n + l));
      Rational prod(floor_half(n) * ceil_half(n + 1));
      for (long long l = 1; l <= (j - 3) / 2; ++l)
        prod *= Rational(floor_half(n - 2 * l - 1) * ceil_half(n + 2 * l + 1));
      z = Rational(sign) * Rational(BigInt(a)) * b * c * prod;
    } else {
      const int sign = ((1 + j / 2) % 2 == 0) ? 1 : -1;
      BigInt halfj_fac = factorial(static_cast<unsigned>(j / 2));
      Rational b(factorial(static_cast<unsigned>(j)), halfj_fac * halfj_fac);
      Rational c(1);
      for (long long l = 1; l <= j; ++l) c /= Rational(BigInt(n + l));
      Rational prod(floor_half(n) * ceil_half(n + 1) * ceil_half(n - 3) * ceil_half(n + 3));
      // The second product factor rounds down: the reference table's N=7,
      // j=6 entry (5/429) and the consistency sums single this reading out;
      // for even N the two roundings coincide.
      for (long long l = 1; l <= j / 2 - 2; ++l)
        prod *= Rational(floor_half(n - 2 * l - 2) * floor_half(n + 2 * l + 4));
      z = Rational(sign) * b * c * prod;
    }
    set.values.push_back(z);
  }
  set.fill_floats();
  return set;
}

/// Staggered zigzag coefficients at finite order.
inline CoefficientSet staggered_zigzag_coeffs(int order) {
  detail::require_positive(order);
  const long long n = order;
  CoefficientSet set{Family::zigzag_staggered_forward_first, order, {}, {}};
  set.values.reserve(order);
  // (2N-1)! / (8^{N-1} (N-1)!) shared by every j.
  Rational base(factorial(static_cast<unsigned>(2 * n - 1)));
  BigInt eight = 1;
  for (long long k = 1; k < n; ++k) eight *= 8;
  base /= Rational(eight * factorial(static_cast<unsigned>(n - 1)));
  for (long long j = 1; j <= n; ++j) {
    const long long ceil_1_plus_half_j = 1 + (j + 1) / 2;
    const int sign = (ceil_1_plus_half_j % 2 == 0) ? 1 : -1;
    BigInt d1 = factorial(static_cast<unsigned>((n + j - 1) / 2));
    BigInt d2 = factorial(static_cast<unsigned>((n - j) / 2));
    set.values.push_back(Rational(sign) * base / Rational(BigInt(2 * j - 1) * d1 * d2));
  }
  set.fill_floats();
  return set;
}

inline CoefficientSet coeffs_for(Family f, int order) {
  switch (f) {
    case Family::centred: return centred_coeffs(order);
    case Family::centred_staggered: return staggered_centred_coeffs(order);
    case Family::forward:
    case Family::backward: {
      CoefficientSet s = forward_coeffs(order);
      s.family = f;
      return s;
    }
    case Family::zigzag_forward_first:
    case Family::zigzag_backward_first: {
      CoefficientSet s = zigzag_coeffs(order);
      s.family = f;
      return s;
    }
    case Family::zigzag_staggered_forward_first:
    case Family::zigzag_staggered_backward_first: {
      CoefficientSet s = staggered_zigzag_coeffs(order);
      s.family = f;
      return s;
    }
  }
  throw InvalidOrder("unknown family");
}

// ---------------------------------------------------------------------------
// Infinite-order rules. These are generators (j -> value); truncation policy
// belongs to the caller.
// ---------------------------------------------------------------------------

/// C_inf^j = 2 (-1)^{j+1}.
inline Rational centred_inf_coeff(int j) {
  detail::require_positive(j);
  return Rational(j % 2 == 1 ? 2 : -2);
}

/// Cbreve_inf^j = 4 (-1)^{j+1} / ((2j-1) pi); irrational, double only.
inline double staggered_centred_inf_coeff(int j) {
  detail::require_positive(j);
  return (j % 2 == 1 ? 4.0 : -4.0) / ((2.0 * j - 1.0) * M_PI);
}

/// Z_inf^1 = 1; Z_inf^{2l} = -Z_inf^{2l+1} = (-1)^{l+1} (2l)!/(4^l (l!)^2).
inline Rational zigzag_inf_coeff(int j) {
  detail::require_positive(j);
  if (j == 1) return Rational(1);
  const int l = j / 2;
  Rational a(1);
  for (int m = 1; m <= l; ++m) a *= Rational(2 * m - 1, 2 * m);  // (2l)!/(4^l (l!)^2)
  const Rational even = (l % 2 == 1) ? a : -a;
  return (j % 2 == 0) ? even : -even;
}

/// The one-sided coefficients diverge (|D_N^j| ~ N^j/j!), so there is no
/// infinite-order rule to offer.
inline Rational forward_inf_coeff(int) {
  throw UnsupportedLimit("one-sided coefficients diverge as the order grows");
}

inline double inf_coeff_float(Family f, int j) {
  switch (f) {
    case Family::centred: return centred_inf_coeff(j).to_double();
    case Family::centred_staggered: return staggered_centred_inf_coeff(j);
    case Family::zigzag_forward_first:
    case Family::zigzag_backward_first: return zigzag_inf_coeff(j).to_double();
    default:
      throw UnsupportedLimit(std::string("no infinite-order rule for family ") +
                             family_name(f));
  }
}

// ---------------------------------------------------------------------------
// Floating-point evaluation paths for the centred families. `order` is the
// formal order 2M, `j` indexes 1..M.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_centred_float_args(Family f, int order, int j) {
  if (f != Family::centred && f != Family::centred_staggered)
    throw InvalidOrder("float paths are defined for the centred families only");
  require_even(order);
  if (j < 1 || j > order / 2)
    throw InvalidOrder("coefficient index out of range: j = " + std::to_string(j));
}

}  // namespace detail

/// log1p product path: (M!)^2/((M+j)!(M-j)!) = exp(sum_l log1p(-j/(M+l))),
/// every summand in (-1, 0), so the exponent stays O(j log M) and the result
/// is finite for any order a double can express.
inline double coeff_float_log1p(Family f, int order, int j) {
  detail::require_centred_float_args(f, order, j);
  const int m = order / 2;
  if (f == Family::centred) {
    double s = 0.0;
    for (int l = 1; l <= j; ++l) s += std::log1p(-static_cast<double>(j) / (m + l));
    return 2.0 * (j % 2 == 1 ? 1.0 : -1.0) * std::exp(s);
  }
  // Staggered: T_1 = 4M prod (1 - 1/(2k))^2, T_{j}/T_{j-1} = 1 - 2(j-1)/(M+j-1),
  // then divide by (2j-1).
  double s = 0.0;
  for (int k = 1; k <= m; ++k) s += 2.0 * std::log1p(-0.5 / k);
  for (int i = 1; i <= j - 1; ++i) s += std::log1p(-2.0 * i / (m + i));
  const double mag = 4.0 * m * std::exp(s) / (2.0 * j - 1.0);
  return (j % 2 == 1 ? 1.0 : -1.0) * mag;
}

/// Gamma-log path. For the centred family the exponent is nonpositive and the
/// path always succeeds; the staggered assembly keeps the 4^{1-2M} scale
/// outside the exponential, so the exponent grows like 2M log 4 and overflows
/// past order ~510. That behaviour is reported as CoeffOverflow, not a crash.
inline double coeff_float_gammaln(Family f, int order, int j) {
  detail::require_centred_float_args(f, order, j);
  const int m = order / 2;
  double value;
  if (f == Family::centred) {
    const double e = 2.0 * log_gamma(m + 1.0) - log_gamma(m + j + 1.0) - log_gamma(m - j + 1.0);
    value = 2.0 * (j % 2 == 1 ? 1.0 : -1.0) * std::exp(e);
  } else {
    const double e = 2.0 * log_gamma(2.0 * m + 1.0) - 2.0 * log_gamma(m + 1.0) -
                     log_gamma(static_cast<double>(m) + j) - log_gamma(m - j + 1.0);
    const double ratio = std::exp(e);
    if (!std::isfinite(ratio))
      throw CoeffOverflow("gamma-log path overflowed at order " + std::to_string(order) +
                          ", j = " + std::to_string(j));
    value = (j % 2 == 1 ? 1.0 : -1.0) * std::exp2(2.0 * (1.0 - 2.0 * m)) * ratio /
            (2.0 * j - 1.0);
  }
  if (!std::isfinite(value))
    throw CoeffOverflow("gamma-log path overflowed at order " + std::to_string(order) +
                        ", j = " + std::to_string(j));
  return value;
}

/// Direct path: factorials accumulated by repeated multiplication in double,
/// exactly the naive evaluation that dies first. Kept for the written record
/// of where it dies.
inline double coeff_float_direct(Family f, int order, int j) {
  detail::require_centred_float_args(f, order, j);
  const int m = order / 2;
  auto fact = [](int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
  };
  double value;
  if (f == Family::centred) {
    const double fm = fact(m);
    value = 2.0 * (j % 2 == 1 ? 1.0 : -1.0) * fm * fm / (fact(m + j) * fact(m - j));
  } else {
    const double f2m = fact(2 * m);
    const double fm = fact(m);
    const double numerator = f2m * f2m;  // the square overflows first, near order 100
    value = (j % 2 == 1 ? 1.0 : -1.0) * std::exp2(2.0 * (1.0 - 2.0 * m)) * numerator /
            ((2.0 * j - 1.0) * fm * fm * fact(m + j - 1) * fact(m - j));
  }
  if (!std::isfinite(value))
    throw CoeffOverflow("direct path overflowed at order " + std::to_string(order) +
                        ", j = " + std::to_string(j));
  return value;
}

enum class FloatMethod { exact, direct, gammaln, log1p };

inline double coeff_float(FloatMethod method, Family f, int order, int j) {
  switch (method) {
    case FloatMethod::exact: return coeffs_for(f, order).float_values.at(j - 1);
    case FloatMethod::direct: return coeff_float_direct(f, order, j);
    case FloatMethod::gammaln: return coeff_float_gammaln(f, order, j);
    case FloatMethod::log1p: return coeff_float_log1p(f, order, j);
  }
  throw std::invalid_argument("unknown float method");
}

}  // namespace zigzag
