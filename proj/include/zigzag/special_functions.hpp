#pragma once

#include <cmath>
#include <stdexcept>

namespace zigzag {

template <class T>
inline constexpr T pi_v = static_cast<T>(3.14159265358979323846264338327950288L);

/// sin(pi x), exact at integers. Doing the range reduction on x rather than
/// on pi*x keeps sin(j*pi*kappa) accurate for the million-term symbol sums.
template <class T>
T sinpi_t(T x) {
  T r = std::remainder(x, T(2));  // r in [-1, 1]
  if (r > T(0.5)) r = T(1) - r;
  else if (r < T(-0.5)) r = T(-1) - r;
  return std::sin(pi_v<T> * r);
}

/// cos(pi x), exact at half-integers.
template <class T>
T cospi_t(T x) {
  T a = std::fabs(std::remainder(x, T(2)));  // a in [0, 1]
  if (a == T(0.5)) return T(0);
  if (a < T(0.5)) return std::cos(pi_v<T> * a);
  return -std::cos(pi_v<T> * (T(1) - a));
}

inline double sinpi(double x) { return sinpi_t(x); }
inline double cospi(double x) { return cospi_t(x); }

/// sin(x)/x with the removable singularity filled in.
inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

/// sin(pi x)/(pi x) evaluated through sinpi.
template <class T>
T sincpi_t(T x) {
  return x == T(0) ? T(1) : sinpi_t(x) / (pi_v<T> * x);
}

inline double sincpi(double x) { return sincpi_t(x); }

/// log Gamma on the positive axis via the Lanczos approximation (g = 7, 9
/// terms). Relative accuracy is a few 1e-15 on gamma for x >= 1, which the
/// tests pin down against exact factorials.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  static const double c[9] = {
      0.99999999999980993,
      676.5203681218851,
      -1259.1392167224028,
      771.32342877765313,
      -176.61502916214059,
      12.507343278686905,
      -0.13857109526572012,
      9.9843695780195716e-6,
      1.5056327351493116e-7,
  };
  const double z = x - 1.0;
  double s = c[0];
  for (int k = 1; k < 9; ++k) s += c[k] / (z + k);
  const double base = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(base) - base + std::log(s);
}

}  // namespace zigzag
