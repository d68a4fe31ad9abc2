#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/coefficients.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

struct UnsupportedScheme : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Identity of a spatial scheme. Staggering is carried by the family;
/// centred families need an even order, staggered ones are first-derivative
/// only, and the second derivative exists for collocated centred, one-sided
/// and zigzag schemes.
struct SchemeSpec {
  Family family{};
  int order = 0;
  int derivative = 1;

  void validate() const {
    if (derivative != 1 && derivative != 2)
      throw UnsupportedScheme("derivative must be 1 or 2");
    if (is_centred_family(family)) detail::require_even(order);
    else detail::require_positive(order);
    if (derivative == 2 && (is_staggered(family) || family == Family::centred_staggered))
      throw UnsupportedScheme("staggered schemes define the first derivative only");
  }
};

/// Nodal stencil: offsets are exact rational multiples of dx (integers for
/// collocated schemes, half-integers for staggered ones) and weights carry
/// units dx^-derivative.
struct StencilEntry {
  Rational offset;
  Rational weight;
};

struct Stencil {
  Family family{};
  int order = 0;       // formal accuracy order (0 for truncated infinite rules)
  int derivative = 1;
  std::vector<StencilEntry> entries;  // sorted by offset

  Rational weight_at(const Rational& offset) const {
    for (const auto& e : entries)
      if (e.offset == offset) return e.weight;
    return Rational(0);
  }

  /// Moment sum_m w_m m^p / p!; equals delta_{p,d} for p up to d + order - 1.
  Rational moment(int p) const {
    Rational s;
    for (const auto& e : entries) {
      Rational mp(1);
      for (int k = 0; k < p; ++k) mp *= e.offset;
      s += e.weight * mp;
    }
    return s / Rational(factorial(static_cast<unsigned>(p)));
  }

  bool satisfies_moment_conditions() const {
    for (int p = 0; p <= derivative + order - 1; ++p) {
      const Rational expect = (p == derivative) ? Rational(1) : Rational(0);
      if (moment(p) != expect) return false;
    }
    return true;
  }
};

namespace detail {

/// Signed node offset of the j-th quotient, in dx units.
inline Rational quotient_offset(Family f, int j) {
  switch (f) {
    case Family::forward: return Rational(j);
    case Family::backward: return Rational(-j);
    case Family::zigzag_forward_first: return Rational(j % 2 == 1 ? j : -j);
    case Family::zigzag_backward_first: return Rational(j % 2 == 1 ? -j : j);
    case Family::zigzag_staggered_forward_first:
      return Rational(j % 2 == 1 ? (2 * j - 1) : -(2 * j - 1), 2);
    case Family::zigzag_staggered_backward_first:
      return Rational(j % 2 == 1 ? -(2 * j - 1) : (2 * j - 1), 2);
    default: throw UnsupportedScheme("quotient_offset: centred families are handled directly");
  }
}

inline Stencil assemble(Family family, int order, int derivative,
                        const std::map<Rational, Rational>& acc) {
  Stencil st{family, order, derivative, {}};
  st.entries.reserve(acc.size());
  for (const auto& [off, w] : acc)
    if (!w.is_zero()) st.entries.push_back({off, w});
  return st;
}

}  // namespace detail

/// Nodal offsets of a first-derivative scheme, the node set the Vandermonde
/// oracle is run on. Quotient-form schemes include the collocation point 0.
inline std::vector<Rational> scheme_offsets(Family f, int order) {
  std::vector<Rational> offs;
  if (f == Family::centred) {
    for (int j = order / 2; j >= 1; --j) offs.push_back(Rational(-j));
    for (int j = 1; j <= order / 2; ++j) offs.push_back(Rational(j));
    return offs;
  }
  if (f == Family::centred_staggered) {
    for (int j = order / 2; j >= 1; --j) offs.push_back(Rational(-(2 * j - 1), 2));
    for (int j = 1; j <= order / 2; ++j) offs.push_back(Rational(2 * j - 1, 2));
    return offs;
  }
  offs.push_back(Rational(0));
  for (int j = 1; j <= order; ++j) offs.push_back(detail::quotient_offset(f, j));
  std::sort(offs.begin(), offs.end());
  return offs;
}

/// Turn a scheme into nodal weights. The quotient of coefficient j spreads as
/// coeff/offset onto its node and -coeff/offset onto the collocation point;
/// centred quotients split symmetrically; second derivatives use the
/// three-node combinations of the defining formulas.
inline Stencil build_stencil(const SchemeSpec& spec) {
  spec.validate();
  const CoefficientSet cs = coeffs_for(spec.family, spec.order);
  std::map<Rational, Rational> acc;

  if (spec.family == Family::centred || spec.family == Family::centred_staggered) {
    const bool stag = spec.family == Family::centred_staggered;
    for (int j = 1; j <= spec.order / 2; ++j) {
      const Rational& c = cs.values[j - 1];
      if (spec.derivative == 1) {
        const Rational off = stag ? Rational(2 * j - 1, 2) : Rational(j);
        const Rational w = stag ? c / Rational(2 * j - 1) : c / Rational(2 * j);
        acc[off] += w;
        acc[-off] -= w;
      } else {
        acc[Rational(j)] += c / Rational(static_cast<long long>(j) * j);
        acc[Rational(-j)] += c / Rational(static_cast<long long>(j) * j);
        acc[Rational(0)] -= Rational(2) * c / Rational(static_cast<long long>(j) * j);
      }
    }
    return detail::assemble(spec.family, spec.order, spec.derivative, acc);
  }

  for (int j = 1; j <= spec.order; ++j) {
    const Rational& c = cs.values[j - 1];
    const Rational off = detail::quotient_offset(spec.family, j);
    if (spec.derivative == 1) {
      acc[off] += c / off;
      acc[Rational(0)] -= c / off;
    } else {
      const Rational jj(static_cast<long long>(j) * j);
      acc[off * Rational(2)] += c / jj;
      acc[off] -= Rational(2) * c / jj;
      acc[Rational(0)] += c / jj;
    }
  }
  return detail::assemble(spec.family, spec.order, spec.derivative, acc);
}

/// Stencil from the first `terms` coefficients of an infinite-order rule
/// (exact rules only: centred and the collocated zigzags). The result is an
/// approximation; `order` is reported as 0 since the truncation has no formal
/// order, and its symbol converges to the closed forms in the symbols module.
inline Stencil build_stencil_truncated(Family family, int terms) {
  if (terms < 1) throw InvalidOrder("need at least one term");
  std::map<Rational, Rational> acc;
  if (family == Family::centred) {
    for (int j = 1; j <= terms; ++j) {
      const Rational w = centred_inf_coeff(j) / Rational(2 * j);
      acc[Rational(j)] += w;
      acc[Rational(-j)] -= w;
    }
  } else if (family == Family::zigzag_forward_first || family == Family::zigzag_backward_first) {
    for (int j = 1; j <= terms; ++j) {
      const Rational off = detail::quotient_offset(family, j);
      const Rational w = zigzag_inf_coeff(j) / off;
      acc[off] += w;
      acc[Rational(0)] -= w;
    }
  } else {
    throw UnsupportedScheme(
        std::string("no exact infinite-order stencil for family ") + family_name(family));
  }
  return detail::assemble(family, 0, 1, acc);
}

/// Forward-first <-> backward-first and forward <-> backward mirroring:
/// offsets negate, first-derivative weights negate, second-derivative weights
/// are preserved.
inline Stencil mirror(const Stencil& st) {
  Stencil m = st;
  for (auto& e : m.entries) {
    e.offset = -e.offset;
    if (st.derivative == 1) e.weight = -e.weight;
  }
  std::sort(m.entries.begin(), m.entries.end(),
            [](const StencilEntry& a, const StencilEntry& b) { return a.offset < b.offset; });
  return m;
}

}  // namespace zigzag
