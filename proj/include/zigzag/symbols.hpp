#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "zigzag/coefficients.hpp"
#include "zigzag/special_functions.hpp"
#include "zigzag/stencil.hpp"

namespace zigzag {

using Complex = std::complex<double>;

enum class ZigzagVariant { forward_first, backward_first };
enum class Direction { forward, backward };
enum class Parity { even, odd };

namespace detail {

/// (e^{i pi kappa o} - 1)/(i pi kappa o): the symbol of a single first-order
/// quotient with signed node offset o.
template <class T>
std::complex<T> quotient_symbol_t(T kappa, T off) {
  if (kappa == T(0)) return std::complex<T>(1);
  const T t = kappa * off;
  return {sincpi_t(t), (T(1) - cospi_t(t)) / (pi_v<T> * t)};
}

inline Complex quotient_symbol(double kappa, double off) {
  return quotient_symbol_t(kappa, off);
}

/// Neumaier-compensated accumulator; the infinite-order series sheds terms
/// like l^{-3/2}, slow enough that naive summation loses digits.
template <class T>
struct CompensatedSumT {
  T s = 0, c = 0;
  void add(T x) {
    const T t = s + x;
    c += (std::fabs(s) >= std::fabs(x)) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  T value() const { return s + c; }
};

using CompensatedSum = CompensatedSumT<double>;

}  // namespace detail

/// Precompiled symbol of one scheme, cheap to evaluate inside kappa sweeps.
/// Finite orders use the exact coefficients; `infinite` truncates the
/// infinite-order rule to `truncation` terms (the staggered zigzag has no
/// such rule, so its infinite-order entry is represented by the finite scheme
/// of order `truncation`).
class SymbolEvaluator {
 public:
  static SymbolEvaluator finite(Family f, int order) {
    SymbolEvaluator ev;
    ev.family_ = f;
    ev.order_ = order;
    const CoefficientSet cs = coeffs_for(f, order);
    ev.coeff_.resize(cs.values.size());
    for (std::size_t j = 0; j < cs.values.size(); ++j)
      ev.coeff_[j] = cs.values[j].to_long_double();
    ev.init_offsets(f);
    return ev;
  }

  static SymbolEvaluator infinite(Family f, int truncation) {
    if (f == Family::forward || f == Family::backward)
      throw UnsupportedLimit("one-sided coefficients diverge as the order grows");
    if (f == Family::zigzag_staggered_forward_first ||
        f == Family::zigzag_staggered_backward_first)
      return finite(f, truncation);
    SymbolEvaluator ev;
    ev.family_ = f;
    ev.order_ = 0;
    ev.coeff_.resize(static_cast<std::size_t>(truncation));
    for (int j = 1; j <= truncation; ++j)
      ev.coeff_[j - 1] = (f == Family::centred_staggered)
                             ? static_cast<long double>(staggered_centred_inf_coeff(j))
                             : zigzag_or_centred_inf_ld(f, j);
    ev.init_offsets(f);
    return ev;
  }

  Family family() const { return family_; }
  bool real_valued() const { return is_centred_family(family_); }

  /// Evaluate the symbol; the long-double path feeds the stability search,
  /// whose thresholds sit far below double rounding.
  template <class T>
  std::complex<T> eval(T kappa) const {
    if (kappa == T(0)) return std::complex<T>(1);
    if (real_valued()) {
      const T shift = family_ == Family::centred ? T(0) : T(0.5);
      detail::CompensatedSumT<T> s;
      for (std::size_t j = 0; j < coeff_.size(); ++j)
        s.add(static_cast<T>(coeff_[j]) * sincpi_t((T(j + 1) - shift) * kappa));
      return std::complex<T>(s.value());
    }
    detail::CompensatedSumT<T> re, im;
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
      const std::complex<T> q =
          detail::quotient_symbol_t(kappa, static_cast<T>(offset_[j]));
      re.add(static_cast<T>(coeff_[j]) * q.real());
      im.add(static_cast<T>(coeff_[j]) * q.imag());
    }
    return {re.value(), im.value()};
  }

  Complex operator()(double kappa) const {
    const std::complex<long double> v = eval<long double>(kappa);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }

 private:
  void init_offsets(Family f) {
    if (is_centred_family(f)) return;
    offset_.resize(coeff_.size());
    for (std::size_t j = 0; j < coeff_.size(); ++j)
      offset_[j] = detail::quotient_offset(f, static_cast<int>(j) + 1).to_long_double();
  }

  static long double zigzag_or_centred_inf_ld(Family f, int j) {
    return f == Family::centred ? centred_inf_coeff(j).to_long_double()
                                : zigzag_inf_coeff(j).to_long_double();
  }

  Family family_{};
  int order_ = 0;
  std::vector<long double> coeff_;
  std::vector<long double> offset_;
};

/// Symbol of any first-derivative stencil, normalised so the exact derivative
/// is sigma == 1: sigma(kappa) = [sum_m w_m e^{i pi kappa m}]/(i pi kappa).
/// kappa = 0 returns the consistency limit. For centred stencils the
/// imaginary part cancels to rounding (<= 1e-14).
inline Complex sigma_generic(double kappa, const Stencil& st) {
  if (st.derivative != 1) throw UnsupportedScheme("sigma_generic expects a d=1 stencil");
  if (kappa == 0.0) return 1.0;
  // long double accumulation: high-order one-sided weights reach 1e4 and the
  // cancellations would otherwise eat the 1e-12 agreement with closed forms
  detail::CompensatedSumT<long double> re, im;
  const long double k = kappa;
  for (const auto& e : st.entries) {
    const long double m = e.offset.to_long_double();
    const long double w = e.weight.to_long_double();
    re.add(w * cospi_t(k * m));
    im.add(w * sinpi_t(k * m));
  }
  const std::complex<long double> num(re.value(), im.value());
  const std::complex<long double> den(0.0L, pi_v<long double> * k);
  return static_cast<Complex>(num / den);
}

/// Same for a second-derivative stencil, normalised by (i pi kappa)^2.
inline Complex sigma_generic_d2(double kappa, const Stencil& st) {
  if (st.derivative != 2) throw UnsupportedScheme("sigma_generic_d2 expects a d=2 stencil");
  if (kappa == 0.0) return 1.0;
  detail::CompensatedSumT<long double> re, im;
  const long double k = kappa;
  for (const auto& e : st.entries) {
    const long double m = e.offset.to_long_double();
    const long double w = e.weight.to_long_double();
    re.add(w * cospi_t(k * m));
    im.add(w * sinpi_t(k * m));
  }
  const long double t = pi_v<long double> * k;
  return {static_cast<double>(-re.value() / (t * t)), static_cast<double>(-im.value() / (t * t))};
}

/// Centred sigma-factor: sum_j C_M^j sinc(j pi kappa). Real, even, 1 at
/// kappa=0 and exactly 0 at the Nyquist kappa = +-1.
inline double sigma_centred(double kappa, int order) {
  detail::require_even(order);
  if (kappa == 0.0) return 1.0;  // consistency limit
  return SymbolEvaluator::finite(Family::centred, order)(kappa).real();
}

/// Truncation of the infinite-order centred rule to `terms` coefficients.
inline double sigma_centred_infinite(double kappa, int terms) {
  detail::CompensatedSum s;
  for (int j = 1; j <= terms; ++j)
    s.add((j % 2 == 1 ? 2.0 : -2.0) * sincpi(j * kappa));
  return s.value();
}

/// Staggered centred sigma-factor: sum_j Cbr_M^j sinc((j-1/2) pi kappa).
inline double sigma_staggered_centred(double kappa, int order) {
  detail::require_even(order);
  if (kappa == 0.0) return 1.0;
  return SymbolEvaluator::finite(Family::centred_staggered, order)(kappa).real();
}

inline double sigma_staggered_centred_infinite(double kappa, int terms) {
  detail::CompensatedSum s;
  for (int j = 1; j <= terms; ++j)
    s.add(staggered_centred_inf_coeff(j) * sincpi((j - 0.5) * kappa));
  return s.value();
}

/// Centred symbols of the higher pure-frequency derivatives:
/// even: (d/dx)^{2n}  -> sum_j C_M^j sinc(j pi kappa / 2)^{2n}
/// odd:  (d/dx)^{2n+1}-> sum_j C_M^j cos(j pi kappa / 2) sinc(j pi kappa / 2)^{2n+1}
/// (odd with n = 0 reproduces sigma_centred pointwise).
inline double sigma_centred_higher(double kappa, int order, int n, Parity parity) {
  if (n < 0) throw std::invalid_argument("sigma_centred_higher: n must be >= 0");
  const CoefficientSet cs = centred_coeffs(order);
  double s = 0.0;
  for (int j = 1; j <= order / 2; ++j) {
    const double half = 0.5 * j * kappa;
    const double sc = sincpi(half);
    if (parity == Parity::even) {
      s += cs.float_values[j - 1] * std::pow(sc, 2 * n);
    } else {
      s += cs.float_values[j - 1] * cospi(half) * std::pow(sc, 2 * n + 1);
    }
  }
  return s;
}

/// One-sided sigma-factor, sum_j D_N^j [sinc(j pi kappa) +- i (1-cos)/(j pi kappa)].
inline Complex sigma_forward_backward(double kappa, int order, Direction dir) {
  const Family fam = dir == Direction::forward ? Family::forward : Family::backward;
  return SymbolEvaluator::finite(fam, order)(kappa);
}

/// Zigzag sigma-factor; backward-first is the complex conjugate of
/// forward-first for real kappa.
inline Complex sigma_zigzag(double kappa, int order, ZigzagVariant variant) {
  const Family fam = variant == ZigzagVariant::forward_first ? Family::zigzag_forward_first
                                                             : Family::zigzag_backward_first;
  return SymbolEvaluator::finite(fam, order)(kappa);
}

inline Complex sigma_staggered_zigzag(double kappa, int order, ZigzagVariant variant) {
  const Family fam = variant == ZigzagVariant::forward_first
                         ? Family::zigzag_staggered_forward_first
                         : Family::zigzag_staggered_backward_first;
  return SymbolEvaluator::finite(fam, order)(kappa);
}

/// Partial sums of the infinite-order zigzag symbol, the independent oracle
/// for the closed form below. Coefficients come from the pair recurrence
/// a_l = a_{l-1} (2l-1)/(2l); the sum always ends on a completed (2l, 2l+1)
/// pair so the small-kappa cancellation is preserved.
inline Complex sigma_zigzag_infinite_series(double kappa, long terms,
                                            ZigzagVariant variant = ZigzagVariant::forward_first) {
  if (variant == ZigzagVariant::backward_first)
    return std::conj(sigma_zigzag_infinite_series(kappa, terms, ZigzagVariant::forward_first));
  if (kappa == 0.0) return 1.0;
  if (terms < 1) throw std::invalid_argument("series needs at least one term");
  if (terms % 2 == 0) ++terms;  // complete the trailing pair
  detail::CompensatedSum re, im;
  {
    const Complex q = detail::quotient_symbol(kappa, 1.0);
    re.add(q.real());
    im.add(q.imag());
  }
  double a = 1.0;  // (2l)!/(4^l (l!)^2)
  for (long l = 1; 2 * l + 1 <= terms; ++l) {
    a *= (2.0 * l - 1.0) / (2.0 * l);
    const double z_even = (l % 2 == 1 ? a : -a);
    const Complex qe = detail::quotient_symbol(kappa, -2.0 * static_cast<double>(l));
    const Complex qo = detail::quotient_symbol(kappa, 2.0 * static_cast<double>(l) + 1.0);
    re.add(z_even * (qe.real() - qo.real()));
    im.add(z_even * (qe.imag() - qo.imag()));
  }
  return {re.value(), im.value()};
}

/// Closed form of the infinite-order forward-first zigzag symbol,
///   sigma(kappa) = log[(e^{i pi kappa} + sqrt(1+e^{2 i pi kappa})) /
///                      (1 + sqrt(1+e^{-2 i pi kappa}))] / (i pi kappa).
/// The principal square root coincides with the branch tracked continuously
/// from kappa = 0 (where the root is +sqrt(2)): the only branch-cut crossing
/// of 1+e^{+-2 i pi kappa} happens at |kappa| = 1/2, exactly where the root
/// vanishes, so no jump occurs. Checked against the series oracle.
inline Complex sigma_zigzag_infinite(double kappa,
                                     ZigzagVariant variant = ZigzagVariant::forward_first) {
  if (variant == ZigzagVariant::backward_first)
    return std::conj(sigma_zigzag_infinite(kappa, ZigzagVariant::forward_first));
  if (kappa == 0.0) return 1.0;
  if (kappa < 0.0) return std::conj(sigma_zigzag_infinite(-kappa));
  if (std::fabs(kappa) > 1.0)
    throw std::invalid_argument("sigma_zigzag_infinite: kappa outside [-1, 1]");
  const Complex e1(cospi(kappa), sinpi(kappa));
  const Complex e2(cospi(2.0 * kappa), sinpi(2.0 * kappa));
  const Complex root_plus = std::sqrt(1.0 + e2);
  const Complex root_minus = std::conj(root_plus);  // 1+e^{-2i pi k} = conj(1+e^{2i pi k})
  const Complex ratio = (e1 + root_plus) / (1.0 + root_minus);
  return std::log(ratio) / Complex(0.0, M_PI * kappa);
}

/// Convenience bundle mirroring the public query surface: a scaled wavenumber
/// against a scheme (with the derivative-power parameter used only by the
/// collocated centred higher-derivative formulas).
struct SigmaQuery {
  double kappa = 0.0;
  SchemeSpec spec{};
  int n = 0;
};

inline Complex sigma(const SigmaQuery& q) {
  const Family f = q.spec.family;
  switch (f) {
    case Family::centred: return sigma_centred(q.kappa, q.spec.order);
    case Family::centred_staggered: return sigma_staggered_centred(q.kappa, q.spec.order);
    case Family::forward: return sigma_forward_backward(q.kappa, q.spec.order, Direction::forward);
    case Family::backward:
      return sigma_forward_backward(q.kappa, q.spec.order, Direction::backward);
    case Family::zigzag_forward_first:
      return sigma_zigzag(q.kappa, q.spec.order, ZigzagVariant::forward_first);
    case Family::zigzag_backward_first:
      return sigma_zigzag(q.kappa, q.spec.order, ZigzagVariant::backward_first);
    case Family::zigzag_staggered_forward_first:
      return sigma_staggered_zigzag(q.kappa, q.spec.order, ZigzagVariant::forward_first);
    case Family::zigzag_staggered_backward_first:
      return sigma_staggered_zigzag(q.kappa, q.spec.order, ZigzagVariant::backward_first);
  }
  throw UnsupportedScheme("sigma: unknown family");
}

}  // namespace zigzag
