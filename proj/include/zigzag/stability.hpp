#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/stencil.hpp"
#include "zigzag/symbols.hpp"

namespace zigzag {

struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Explicit integrator of order p in {1..7} (1 = explicit Euler). Its linear
/// stability function is the truncated exponential R(z) = sum_{m<=p} z^m/m!,
/// the convention that reproduces every order-1 one-sided table entry
/// (1, 1, 1.2563, 1.3926, 1.6085, 1.7767, 1.9770) and the classical centred
/// values sqrt(3) and 2 sqrt(2).
struct TimeIntegrator {
  int order = 1;

  void validate() const {
    if (order < 1 || order > 7)
      throw std::invalid_argument("time integrator order must be in 1..7");
  }

  Complex stability_function(Complex z) const {
    Complex term(1.0), sum(1.0);
    for (int m = 1; m <= order; ++m) {
      term *= z / static_cast<double>(m);
      sum += term;
    }
    return sum;
  }
};

/// Staggered schemes carry lambda_scale = 1/2: their stability-number is
/// referenced to the half-step dx/2 (the distance between the evaluation
/// point and the nearest sample), the normalisation under which the
/// staggered order-2 centred scheme coincides with the collocated one on the
/// union grid. Collocated schemes use lambda = c dt / dx directly.
inline double lambda_scale(Family f) { return is_staggered(f) ? 0.5 : 1.0; }

/// Stable direction of the advection problem: forward-biased stencils need
/// lambda <= 0 (upwind for c < 0), backward-biased ones lambda >= 0; centred
/// schemes are symmetric in the sign of lambda.
inline int stable_lambda_sign(Family f) { return is_backward_variant(f) ? +1 : -1; }

/// G = R(Lambda) with Lambda = -i pi kappa lambda_eff sigma(kappa).
inline Complex amplification(double lambda, double kappa, const SymbolEvaluator& sym,
                             const TimeIntegrator& rk) {
  const double eff = lambda * lambda_scale(sym.family());
  const Complex lam = Complex(0.0, -M_PI * kappa * eff) * sym(kappa);
  return rk.stability_function(lam);
}

inline Complex amplification(double lambda, double kappa, const SchemeSpec& spec,
                             const TimeIntegrator& rk) {
  return amplification(lambda, kappa, SymbolEvaluator::finite(spec.family, spec.order), rk);
}

namespace detail {

// The kappa sweep runs in long double with a threshold far below double
// rounding: several reference-table entries (the high zigzag orders under
// RK5-RK7) are onsets whose |G| excess at visible wavenumbers is a handful
// of 1e-16, so a double-precision threshold misplaces them by tens of
// percent. The grid floor 1/140 is the reference tables' wavenumber
// resolution: schemes whose only instability lives below it (excess
// vanishing as kappa -> 0 at every lambda) are treated as stable there, with
// genuine kappa -> 0 onsets resolved exactly by the Taylor channel.
constexpr long double kStableTol = 4e-18L;  // on |G|^2, ~40 ulp of long double
constexpr double kKappaFloor = 1.0 / 140.0;
constexpr int kKappaGridPoints = 4096;  // uniform on [kKappaFloor, 1]
constexpr double kZeroLambda = 5e-4;    // below this the critical value is reported 0
constexpr double kLambdaCap = 8.0;
constexpr double kCoarseStep = 0.01;
constexpr int kDefaultTruncation = 300;

using CLD = std::complex<long double>;

inline CLD stability_function_ld(int order, CLD z) {
  CLD term(1.0L), sum(1.0L);
  for (int m = 1; m <= order; ++m) {
    term *= z / static_cast<long double>(m);
    sum += term;
  }
  return sum;
}

// --- small-kappa Taylor channel ------------------------------------------
//
// Near kappa = 0 the excess |G|^2 - 1 behaves like theta^{2q} with a
// coefficient that crosses zero linearly at the critical lambda while the
// attainable violation shrinks like (dlambda)^3, far below any floating
// threshold. The onset is therefore read off the Taylor coefficients of
// |G|^2 in exact rational arithmetic (stencil moments are rational and any
// probe lambda is exactly a dyadic rational), so a vanishing coefficient is
// exactly zero and the sign of the leading survivor is exact.

constexpr int kSeriesLen = 13;  // powers theta^0 .. theta^12

/// Gaussian rational: exact complex arithmetic for the Taylor channel.
struct QC {
  Rational re, im;
  QC() = default;
  QC(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  friend QC operator*(const QC& a, const QC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QC operator+(const QC& a, const QC& b) { return {a.re + b.re, a.im + b.im}; }
  QC conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

using QSeries = std::array<QC, kSeriesLen>;

inline QSeries qseries_mul(const QSeries& a, const QSeries& b) {
  QSeries c{};
  for (int i = 0; i < kSeriesLen; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < kSeriesLen; ++j)
      if (!b[j].is_zero()) c[i + j] = c[i + j] + a[i] * b[j];
  }
  return c;
}

/// Exact binary value of a double as a rational.
inline Rational rational_from_double(double x) {
  if (x == 0.0) return Rational(0);
  int e = 0;
  const double m = std::frexp(x, &e);  // x = m 2^e, |m| in [0.5, 1)
  const long long mant = static_cast<long long>(std::ldexp(m, 53));
  const int shift = 53 - e;
  BigInt num(mant), den(1);
  if (shift >= 0) den <<= shift;
  else num <<= -shift;
  return Rational(num, den);
}

/// sigma expressed as sum_m s_m (i theta)^m with s_m = moment_{m+1} of the
/// nodal stencil, exact.
inline std::vector<Rational> sigma_series_from_stencil(const Stencil& st) {
  std::vector<Rational> s(kSeriesLen);
  for (int m = 0; m < kSeriesLen; ++m) s[static_cast<std::size_t>(m)] = st.moment(m + 1);
  return s;
}

struct OriginChannel {
  std::vector<Rational> sigma_series;  // empty when the channel does not apply
  double lambda_scale = 1.0;
  int rk = 1;

  bool active() const { return !sigma_series.empty(); }

  /// True when the leading nonzero Taylor coefficient of |G|^2 - 1 is
  /// negative (or the whole expansion vanishes to this depth).
  bool stable(double lambda_signed) const {
    const Rational l = rational_from_double(lambda_signed) * rational_from_double(lambda_scale);
    // Lambda = -lambda sum_m s_{m-1} (i theta)^m as a series in theta.
    QSeries lam{};
    for (int m = 1; m < kSeriesLen; ++m) {
      const Rational c = -(l * sigma_series[static_cast<std::size_t>(m - 1)]);
      switch (m % 4) {  // i^m
        case 0: lam[m] = QC(c, Rational(0)); break;
        case 1: lam[m] = QC(Rational(0), c); break;
        case 2: lam[m] = QC(-c, Rational(0)); break;
        case 3: lam[m] = QC(Rational(0), -c); break;
      }
    }
    // R = 1 + lam (1 + lam/2 (1 + ... lam/p)) truncated at theta^12.
    QSeries r{};
    r[0] = QC(Rational(1), Rational(0));
    for (int m = rk; m >= 1; --m) {
      QSeries t = qseries_mul(r, lam);
      const Rational inv_m(1, m);
      for (auto& c : t) c = QC(c.re * inv_m, c.im * inv_m);
      t[0].re += Rational(1);
      r = t;
    }
    for (int k = 2; k < kSeriesLen; k += 2) {
      Rational v;
      for (int i = 0; i <= k; ++i) v += (r[i] * r[k - i].conj()).re;
      if (!v.is_zero()) return v.sign() < 0;
    }
    return true;  // neutral to this depth
  }
};

struct SchemeScan {
  const SymbolEvaluator* sym;
  TimeIntegrator rk;
  long double sign;  // signed lambda = sign * |lambda|
  std::vector<long double> kappa;
  std::vector<CLD> pre;  // -i pi kappa sigma(kappa) per grid point
  OriginChannel origin;

  long double abs_g2(long double lambda_mag, long double kap) const {
    const CLD lam = CLD(0.0L, -pi_v<long double> * kap) * sym->eval<long double>(kap) *
                    (sign * lambda_mag * static_cast<long double>(zigzag::lambda_scale(sym->family())));
    return std::norm(stability_function_ld(rk.order, lam));
  }

  /// max over the grid of |G|^2, golden-polished around the argmax but never
  /// below the resolution floor.
  long double max_abs_g2(long double lambda_mag) const {
    const long double mult =
        sign * lambda_mag * static_cast<long double>(zigzag::lambda_scale(sym->family()));
    long double best = 0.0L;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < kappa.size(); ++i) {
      const long double g = std::norm(stability_function_ld(rk.order, pre[i] * mult));
      if (g > best) {
        best = g;
        best_i = i;
      }
    }
    long double a = kappa[best_i == 0 ? 0 : best_i - 1];
    long double b = kappa[std::min(best_i + 1, kappa.size() - 1)];
    const long double gr = 0.5L * (std::sqrt(5.0L) - 1.0L);
    long double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    long double f1 = abs_g2(lambda_mag, x1), f2 = abs_g2(lambda_mag, x2);
    for (int it = 0; it < 60 && (b - a) > 1e-13L; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = abs_g2(lambda_mag, x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = abs_g2(lambda_mag, x1);
      }
    }
    return std::max(best, std::max(f1, f2));
  }

  bool grid_stable(double lambda_mag) const {
    return max_abs_g2(lambda_mag) <= 1.0L + kStableTol;
  }
  bool origin_stable(double lambda_mag) const {
    return !origin.active() || origin.stable(static_cast<double>(sign) * lambda_mag);
  }
};

inline SchemeScan make_scan(const SymbolEvaluator& sym, const TimeIntegrator& rk,
                            const std::vector<Rational>& sigma_series) {
  SchemeScan scan;
  scan.sym = &sym;
  scan.rk = rk;
  scan.sign = static_cast<long double>(stable_lambda_sign(sym.family()));
  scan.origin = OriginChannel{sigma_series, zigzag::lambda_scale(sym.family()), rk.order};
  scan.kappa.resize(kKappaGridPoints);
  scan.pre.resize(kKappaGridPoints);
  // |G| is even in kappa for real-weight schemes, so [kKappaFloor, 1] covers
  // [-1, 1].
  for (int i = 0; i < kKappaGridPoints; ++i) {
    const long double k = static_cast<long double>(kKappaFloor) +
                          (1.0L - static_cast<long double>(kKappaFloor)) *
                              static_cast<long double>(i) / (kKappaGridPoints - 1);
    scan.kappa[static_cast<std::size_t>(i)] = k;
    scan.pre[static_cast<std::size_t>(i)] =
        CLD(0.0L, -pi_v<long double> * k) * sym.eval<long double>(k);
  }
  return scan;
}

/// First onset of instability of a monotone-sampled predicate: coarse scan in
/// kCoarseStep increments, then bisection. nullopt when stable up to the cap.
template <typename StablePredicate>
std::optional<double> first_onset(const StablePredicate& stable, double tol) {
  double lo = 0.0;
  std::optional<double> hi;
  for (double l = kCoarseStep; l <= kLambdaCap + 0.5 * kCoarseStep; l += kCoarseStep) {
    if (!stable(l)) {
      hi = l;
      break;
    }
    lo = l;
  }
  if (!hi) return std::nullopt;
  double a = lo, b = *hi;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    (stable(mid) ? a : b) = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace detail

/// Core of the critical stability-number search for a prebuilt symbol;
/// `sigma_series` may be empty to disable the Taylor channel (used by the
/// truncated infinite-order rules, whose truncations are not consistent
/// schemes at kappa -> 0).
inline double critical_lambda_impl(const SymbolEvaluator& sym, const TimeIntegrator& rk,
                                   const std::vector<Rational>& sigma_series, double tol = 1e-4) {
  rk.validate();
  const auto scan = detail::make_scan(sym, rk, sigma_series);
  const double fine = std::min(tol * 1e-2, 1e-6);
  const auto grid_onset =
      detail::first_onset([&](double l) { return scan.grid_stable(l); }, fine);
  std::optional<double> origin_onset;
  if (scan.origin.active()) {
    origin_onset = detail::first_onset([&](double l) { return scan.origin_stable(l); }, 1e-9);
    if (origin_onset && *origin_onset <= detail::kCoarseStep) {
      // Unstable from the outset: the kappa -> 0 excess is positive for every
      // lambda. For explicit Euler / RK2 and for the real-symbol (centred)
      // schemes this is the classical analytic verdict of unconditional
      // instability; for the higher integrators the same excess hides below
      // the tables' wavenumber resolution floor and the numeric grid
      // convention governs instead.
      if (rk.order <= 2 || sym.real_valued()) origin_onset = 0.0;
      else origin_onset.reset();
    }
  }
  std::optional<double> result;
  if (grid_onset) result = *grid_onset;
  if (origin_onset && (!result || *origin_onset < *result)) result = *origin_onset;
  if (!result)
    throw AnalysisError("critical_lambda: still stable at |lambda| = 8; cannot bracket");
  return *result < detail::kZeroLambda ? 0.0 : *result;
}

/// Largest |lambda| for which max_kappa |G| <= 1, i.e. the critical
/// stability-number, located to an accuracy well inside `tol`. Two channels
/// are combined: a 4096-point kappa grid on [1/140, 1] (|G| is even in
/// kappa), golden-section refined, with first-onset bisection in |lambda|,
/// and the small-kappa Taylor channel on the exact moment expansion, which
/// resolves the onsets at vanishing wavenumber that no floating |G|
/// threshold can see. Returns 0 (unconditionally unstable) below 5e-4.
inline double critical_lambda(const SchemeSpec& spec, const TimeIntegrator& rk,
                              double tol = 1e-4) {
  rk.validate();
  SchemeSpec d1 = spec;
  d1.derivative = 1;
  d1.validate();
  const auto sym = SymbolEvaluator::finite(d1.family, d1.order);
  const auto series = detail::sigma_series_from_stencil(build_stencil(d1));
  return critical_lambda_impl(sym, rk, series, tol);
}

/// |G| raster over a lambda x kappa grid plus the stable mask.
struct StabilityScan {
  Family family{};
  int order = 0;
  TimeIntegrator integrator{};
  std::vector<double> lambda_grid;
  std::vector<double> kappa_grid;
  std::vector<double> abs_g;  // row-major: [il * kappa_grid.size() + ik]

  double at(std::size_t il, std::size_t ik) const { return abs_g[il * kappa_grid.size() + ik]; }
  bool stable_at(std::size_t il, std::size_t ik) const {
    return at(il, ik) <= 1.0 + 1e-12;
  }
};

inline StabilityScan stability_region(const SymbolEvaluator& sym, const TimeIntegrator& rk,
                                      double lambda_min, double lambda_max, int lambda_points,
                                      int kappa_points) {
  rk.validate();
  if (lambda_points < 64 || kappa_points < 64)
    throw std::invalid_argument("stability_region: resolution must be at least 64x64");
  StabilityScan scan;
  scan.family = sym.family();
  scan.integrator = rk;
  scan.lambda_grid.resize(static_cast<std::size_t>(lambda_points));
  scan.kappa_grid.resize(static_cast<std::size_t>(kappa_points));
  for (int i = 0; i < lambda_points; ++i)
    scan.lambda_grid[static_cast<std::size_t>(i)] =
        lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) / (lambda_points - 1);
  for (int i = 0; i < kappa_points; ++i)
    scan.kappa_grid[static_cast<std::size_t>(i)] =
        -1.0 + 2.0 * static_cast<double>(i) / (kappa_points - 1);
  scan.abs_g.resize(scan.lambda_grid.size() * scan.kappa_grid.size());
  std::vector<Complex> pre(scan.kappa_grid.size());
  for (std::size_t ik = 0; ik < scan.kappa_grid.size(); ++ik)
    pre[ik] = Complex(0.0, -M_PI * scan.kappa_grid[ik]) * sym(scan.kappa_grid[ik]);
  const double sc = lambda_scale(sym.family());
  for (std::size_t il = 0; il < scan.lambda_grid.size(); ++il)
    for (std::size_t ik = 0; ik < scan.kappa_grid.size(); ++ik)
      scan.abs_g[il * scan.kappa_grid.size() + ik] =
          std::abs(rk.stability_function(pre[ik] * (scan.lambda_grid[il] * sc)));
  return scan;
}

inline StabilityScan stability_region(const SchemeSpec& spec, const TimeIntegrator& rk,
                                      double lambda_min, double lambda_max, int lambda_points,
                                      int kappa_points) {
  auto scan = stability_region(SymbolEvaluator::finite(spec.family, spec.order), rk, lambda_min,
                               lambda_max, lambda_points, kappa_points);
  scan.order = spec.order;
  return scan;
}

/// Critical lambda reported for the infinite-order rows: the finite scheme of
/// order `truncation` (rounded down to even for the centred families), the
/// order the reference tables extrapolate from. Truncating the infinite-order
/// coefficient rules instead would lose consistency (their partial sums do
/// not reach 1), so the finite scheme is the faithful surrogate.
inline double critical_lambda_infinite(Family f, const TimeIntegrator& rk,
                                       int truncation = detail::kDefaultTruncation,
                                       double tol = 1e-4) {
  if (f == Family::forward || f == Family::backward)
    throw UnsupportedLimit("one-sided coefficients diverge as the order grows");
  int order = truncation;
  if (is_centred_family(f) && order % 2 != 0) --order;
  if (order < 1) throw InvalidOrder("truncation order must be positive");
  return critical_lambda({f, order, 1}, rk, tol);
}

/// One cell of the critical-stability-number tables.
struct TableCell {
  Family family{};
  bool infinite = false;
  int order = 0;  // truncation order when infinite
  std::optional<double> lambda_max;
  std::string error;
};

/// Batch reproduction of the reference tables: rows = families, columns =
/// orders 1..max_order plus (when tabulated) the infinite-order entry.
/// Per-cell failures are recorded, never thrown.
inline std::vector<TableCell> table_sweep(const TimeIntegrator& rk, int max_order,
                                          bool include_infinite,
                                          int truncation = detail::kDefaultTruncation,
                                          double tol = 1e-4) {
  static const Family kFamilies[] = {Family::centred, Family::centred_staggered, Family::forward,
                                     Family::zigzag_forward_first,
                                     Family::zigzag_staggered_forward_first};
  std::vector<TableCell> cells;
  for (Family f : kFamilies) {
    for (int order = 1; order <= max_order; ++order) {
      if (is_centred_family(f) && order % 2 != 0) continue;
      TableCell cell{f, false, order, std::nullopt, {}};
      try {
        cell.lambda_max = critical_lambda({f, order, 1}, rk, tol);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
    if (include_infinite && f != Family::forward) {
      TableCell cell{f, true, truncation, std::nullopt, {}};
      try {
        cell.lambda_max = critical_lambda_infinite(f, rk, truncation, tol);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace zigzag
