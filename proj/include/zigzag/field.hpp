#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/stencil.hpp"

namespace zigzag {

struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Boundary { periodic, neumann };

/// Values sampled on a uniform grid x_i = origin + i*dx.
struct Field1D {
  double dx = 1.0;
  double origin = 0.0;
  Boundary boundary = Boundary::periodic;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double x(std::size_t i) const { return origin + dx * static_cast<double>(i); }
};

namespace detail {

/// Resolve a possibly out-of-range index against the boundary condition:
/// periodic wraps, Neumann reflects evenly (f_{-k} = f_k, f_{n-1+k} = f_{n-1-k}).
inline std::size_t resolve_index(long i, long n, Boundary bc) {
  if (bc == Boundary::periodic) {
    long m = i % n;
    if (m < 0) m += n;
    return static_cast<std::size_t>(m);
  }
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return static_cast<std::size_t>(i);
}

struct IntStencil {
  std::vector<long> offsets;
  std::vector<double> weights;
  long span = 0;
};

/// Scale rational offsets by `denom_scale` (1 for collocated stencils, 2 for
/// the half-spacing grid) and demand they land on integers.
inline IntStencil to_int_stencil(const Stencil& st, int denom_scale) {
  IntStencil is;
  is.offsets.reserve(st.entries.size());
  is.weights.reserve(st.entries.size());
  for (const auto& e : st.entries) {
    const Rational scaled = e.offset * Rational(denom_scale);
    if (scaled.den() != 1)
      throw UnsupportedScheme("stencil offsets do not land on the sampling grid");
    const long o = scaled.num().convert_to<long>();
    is.offsets.push_back(o);
    is.weights.push_back(e.weight.to_double());
    is.span = std::max(is.span, std::labs(o));
  }
  return is;
}

}  // namespace detail

/// Apply a collocated stencil: out_i = sum_m w_m f_{i+m} / dx^d.
inline Field1D apply(const Stencil& st, const Field1D& f) {
  const auto is = detail::to_int_stencil(st, 1);
  const long n = static_cast<long>(f.size());
  if (n < is.span + 1)
    throw SizeError("field of " + std::to_string(n) + " points is shorter than the stencil span");
  Field1D out = f;
  const double scale = std::pow(f.dx, -st.derivative);
  for (long i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < is.offsets.size(); ++k)
      s += is.weights[k] * f.values[detail::resolve_index(i + is.offsets[k], n, f.boundary)];
    out.values[static_cast<std::size_t>(i)] = s * scale;
  }
  return out;
}

/// Apply a staggered stencil. The input field lives on the half-spacing grid
/// h = dx/2 (fine.dx == h), covering both integer and half-integer positions
/// of the coarse grid; output values sit at the even fine indices, spacing dx.
/// Stencils with purely half-integer offsets read only the odd slots; the
/// staggered zigzags additionally read the collocation point itself.
inline Field1D staggered_apply(const Stencil& st, const Field1D& fine) {
  const auto is = detail::to_int_stencil(st, 2);
  const long nf = static_cast<long>(fine.size());
  if (fine.boundary == Boundary::periodic && nf % 2 != 0)
    throw SizeError("periodic staggered_apply needs an even fine-grid point count");
  if (nf < 2 * (is.span + 1)) throw SizeError("fine field is shorter than the stencil span");
  const double dx = 2.0 * fine.dx;
  Field1D out;
  out.dx = dx;
  out.origin = fine.origin;
  out.boundary = fine.boundary;
  out.values.resize(static_cast<std::size_t>((nf + 1) / 2));
  const double scale = std::pow(dx, -st.derivative);
  for (long i = 0; 2 * i < nf; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < is.offsets.size(); ++k)
      s += is.weights[k] * fine.values[detail::resolve_index(2 * i + is.offsets[k], nf, fine.boundary)];
    out.values[static_cast<std::size_t>(i)] = s * scale;
  }
  return out;
}

}  // namespace zigzag
