#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zigzag/stability.hpp"

using namespace zigzag;

namespace {

double crit(Family f, int order, int rk) { return critical_lambda({f, order, 1}, {rk}); }

double max_abs_g(Family f, int order, int rk, double lambda, int samples = 4096) {
  const auto sym = SymbolEvaluator::finite(f, order);
  const TimeIntegrator integ{rk};
  double best = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double kappa = static_cast<double>(i) / samples;
    best = std::max(best, std::abs(amplification(
                              lambda * stable_lambda_sign(f), kappa, sym, integ)));
  }
  return best;
}

}  // namespace

TEST_CASE("stability function is the truncated exponential") {
  const TimeIntegrator rk4{4};
  const Complex z(0.3, -0.7);
  Complex expect(1.0), term(1.0);
  for (int m = 1; m <= 4; ++m) {
    term *= z / static_cast<double>(m);
    expect += term;
  }
  CHECK(std::abs(rk4.stability_function(z) - expect) <= 1e-15);
  CHECK_THROWS_AS(TimeIntegrator{0}.validate(), std::invalid_argument);
  CHECK_THROWS_AS(TimeIntegrator{8}.validate(), std::invalid_argument);
}

TEST_CASE("amplification factor") {
  const SchemeSpec fw1{Family::forward, 1, 1};
  SUBCASE("lambda = 0 gives G = 1 for every kappa and scheme") {
    for (int i = 0; i <= 16; ++i)
      CHECK(std::abs(amplification(0.0, i / 16.0, fw1, {3}) - Complex(1.0)) <= 1e-15);
  }
  SUBCASE("Euler + centred: |G| = sqrt(1 + (pi lambda kappa sigma)^2)") {
    const SchemeSpec c2{Family::centred, 2, 1};
    for (const double lambda : {0.25, 1.0}) {
      for (const double kappa : {0.25, 0.5, 0.75}) {
        const double y = M_PI * lambda * kappa * sigma_centred(kappa, 2);
        CHECK(std::abs(amplification(lambda, kappa, c2, {1})) ==
              doctest::Approx(std::sqrt(1.0 + y * y)).epsilon(1e-13));
      }
    }
  }
  SUBCASE("Euler + forward order 1 at the stability edge") {
    CHECK(std::abs(amplification(-1.0, 1.0, fw1, {1})) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("critical stability-numbers: closed-form anchors to 1e-6") {
  CHECK(std::fabs(crit(Family::zigzag_forward_first, 2, 2) - std::cbrt(2.0 / 3.0)) <= 1e-6);
  CHECK(std::fabs(crit(Family::zigzag_forward_first, 3, 2) - 15.0 / 14.0) <= 1e-6);
  CHECK(std::fabs(crit(Family::centred, 2, 3) - std::sqrt(3.0)) <= 1e-6);
  CHECK(std::fabs(crit(Family::centred, 2, 4) - 2.0 * std::sqrt(2.0)) <= 1e-6);
}

TEST_CASE("order-1 one-sided column equals the negative-axis stability radii") {
  const double expect[7] = {1.0, 1.0, 1.2563, 1.3926, 1.6085, 1.7767, 1.9770};
  for (int p = 1; p <= 7; ++p)
    CHECK(std::fabs(crit(Family::forward, 1, p) - expect[p - 1]) <= 1.5e-3);
}

TEST_CASE("reference table entries") {
  struct Entry { Family f; int order; int rk; double value; };
  const Entry entries[] = {
      {Family::forward, 2, 2, 0.5},
      {Family::zigzag_forward_first, 4, 2, 0.0},
      {Family::zigzag_staggered_forward_first, 1, 2, 1.5436},
      {Family::zigzag_staggered_forward_first, 2, 2, 1.2599},
      {Family::zigzag_staggered_forward_first, 3, 2, 1.7099},
      {Family::centred, 2, 3, 1.7320},
      {Family::centred_staggered, 2, 3, 1.7320},
      {Family::centred_staggered, 4, 3, 1.4845},
      {Family::zigzag_forward_first, 2, 3, 1.8845},
      {Family::zigzag_staggered_forward_first, 2, 3, 2.5187},
      {Family::centred, 2, 4, 2.8284},
      {Family::centred, 4, 4, 2.0612},
      {Family::zigzag_forward_first, 2, 5, 2.4127},
      {Family::zigzag_forward_first, 3, 5, 1.7234},
      {Family::zigzag_forward_first, 5, 5, 1.7592},
      {Family::zigzag_forward_first, 6, 5, 0.4547},  // printed 0.4542; resolution artifact
      {Family::zigzag_staggered_forward_first, 7, 6, 3.0350},
      {Family::zigzag_forward_first, 6, 6, 2.2240},
      {Family::centred, 2, 7, 1.7644},
      {Family::zigzag_forward_first, 2, 7, 2.9656},
  };
  for (const auto& e : entries)
    CHECK(std::fabs(crit(e.f, e.order, e.rk) - e.value) <= 1.5e-3);
}

TEST_CASE("documented deviations from the printed tables stay frozen") {
  // These four onsets have |G| excesses of 2-3 ulp at the printed values and
  // depend on the original pipeline's rounding; our machinery's values are
  // pinned so changes surface. RK5/RK6 zigzag order 7 differ because the
  // printed entries trace to the mis-typeset coefficient formula (the
  // corrected scheme is no longer reported unconditionally unstable).
  CHECK(crit(Family::zigzag_forward_first, 4, 5) == doctest::Approx(2.1112).epsilon(2e-3));
  CHECK(crit(Family::zigzag_staggered_forward_first, 6, 5) ==
        doctest::Approx(0.6761).epsilon(2e-3));
  CHECK(crit(Family::zigzag_staggered_forward_first, 7, 5) ==
        doctest::Approx(0.7884).epsilon(2e-3));
  CHECK(crit(Family::zigzag_forward_first, 6, 7) == doctest::Approx(2.4749).epsilon(2e-3));
  CHECK(crit(Family::zigzag_forward_first, 7, 5) == doctest::Approx(0.5386).epsilon(2e-3));
  CHECK(crit(Family::zigzag_forward_first, 7, 6) == doctest::Approx(1.9623).epsilon(2e-3));
}

TEST_CASE("zero pattern of the centred schemes across integrators") {
  for (const int p : {1, 2, 5, 6}) {
    CHECK(crit(Family::centred, 2, p) == 0.0);
    CHECK(crit(Family::centred_staggered, 2, p) == 0.0);
  }
  for (const int p : {3, 4, 7}) {
    CHECK(crit(Family::centred, 2, p) > 1.0);
    CHECK(crit(Family::centred_staggered, 4, p) > 1.0);
  }
}

TEST_CASE("forward-first and backward-first zigzag have identical critical numbers") {
  for (const int order : {1, 2, 3, 5}) {
    for (const int p : {2, 3}) {
      CHECK(crit(Family::zigzag_forward_first, order, p) ==
            crit(Family::zigzag_backward_first, order, p));
    }
  }
  CHECK(crit(Family::zigzag_staggered_forward_first, 2, 3) ==
        crit(Family::zigzag_staggered_backward_first, 2, 3));
  CHECK(crit(Family::forward, 2, 3) == crit(Family::backward, 2, 3));
}

TEST_CASE("monotone boundary around sharp critical numbers") {
  struct Pair { Family f; int order; int rk; };
  for (const auto& pr : {Pair{Family::centred, 2, 3}, Pair{Family::forward, 1, 2},
                         Pair{Family::zigzag_staggered_forward_first, 2, 3},
                         Pair{Family::zigzag_forward_first, 3, 2}}) {
    const double star = crit(pr.f, pr.order, pr.rk);
    REQUIRE(star > 0.0);
    CHECK(max_abs_g(pr.f, pr.order, pr.rk, star - 1e-4) <= 1.0 + 1e-9);
    CHECK(max_abs_g(pr.f, pr.order, pr.rk, star + 1e-3) > 1.0 + 1e-9);
  }
  // The kappa->0 governed onset departs too gently for an |G| threshold; the
  // exact Taylor channel carries the boundary instead.
  const double star = crit(Family::zigzag_forward_first, 2, 2);
  CHECK(max_abs_g(Family::zigzag_forward_first, 2, 2, star - 1e-4) <= 1.0 + 1e-9);
  const auto series =
      detail::sigma_series_from_stencil(build_stencil({Family::zigzag_forward_first, 2, 1}));
  const detail::OriginChannel origin{series, 1.0, 2};
  CHECK(origin.stable(-(star - 1e-4)));
  CHECK(!origin.stable(-(star + 1e-4)));
}

TEST_CASE("plateau at the Euler + forward edge is not misread as instability") {
  CHECK(max_abs_g(Family::forward, 1, 1, 1.0) <= 1.0 + 1e-12);
}

TEST_CASE("stability regions") {
  SUBCASE("Euler + centred 2: nothing is stable except lambda = 0") {
    const auto scan = stability_region({Family::centred, 2, 1}, {1}, -2.0, 2.0, 65, 65);
    for (std::size_t il = 0; il < scan.lambda_grid.size(); ++il) {
      const bool zero_row = scan.lambda_grid[il] == 0.0;
      for (std::size_t ik = 0; ik < scan.kappa_grid.size(); ++ik) {
        const double kappa = scan.kappa_grid[ik];
        if (zero_row || kappa == 0.0 || std::fabs(kappa) == 1.0) {
          CHECK(scan.stable_at(il, ik));
        } else {
          CHECK(!scan.stable_at(il, ik));
        }
      }
    }
  }
  SUBCASE("RK2 + forward 1: the stable band is lambda in [-1, 0]") {
    const auto scan = stability_region({Family::forward, 1, 1}, {2}, -2.0, 2.0, 129, 65);
    for (std::size_t il = 0; il < scan.lambda_grid.size(); ++il) {
      bool all = true;
      for (std::size_t ik = 0; ik < scan.kappa_grid.size(); ++ik)
        all = all && scan.stable_at(il, ik);
      const double l = scan.lambda_grid[il];
      const bool expect = l >= -1.0 - 1e-12 && l <= 1e-12;
      CHECK(all == expect);
    }
  }
  CHECK_THROWS_AS(stability_region({Family::centred, 2, 1}, {2}, -1.0, 1.0, 32, 65),
                  std::invalid_argument);
}

TEST_CASE("table sweep batches cells and never aborts") {
  const auto cells = table_sweep({2}, 4, false);
  int count = 0;
  for (const auto& cell : cells) {
    CHECK(cell.error.empty());
    REQUIRE(cell.lambda_max.has_value());
    if (cell.family == Family::zigzag_forward_first && cell.order == 3)
      CHECK(*cell.lambda_max == doctest::Approx(15.0 / 14.0).epsilon(1e-4));
    if (cell.family == Family::centred) CHECK(*cell.lambda_max == 0.0);
    ++count;
  }
  CHECK(count == 2 + 2 + 4 + 4 + 4);  // centred families carry even orders only
}

TEST_CASE("infinite-order cells evaluate the finite order-300 scheme") {
  // The staggered zigzag entry lands on the printed value; the other
  // families' order-300 values still drift toward their exact limits
  // (centred: sqrt(3)/pi under RK3), checked below.
  const double zs_inf = critical_lambda_infinite(Family::zigzag_staggered_forward_first, {3}, 300);
  CHECK(zs_inf == doctest::Approx(2.1407).epsilon(1e-3));
  const double c_inf = critical_lambda_infinite(Family::centred, {3}, 300);
  CHECK(c_inf == doctest::Approx(0.6154).epsilon(2e-3));  // frozen order-300 value
  CHECK_THROWS_AS(critical_lambda_infinite(Family::forward, {3}, 300), UnsupportedLimit);
}

TEST_CASE("high-order centred critical numbers descend toward sqrt(3)/pi under RK3") {
  const double limit = std::sqrt(3.0) / M_PI;
  double prev = critical_lambda({Family::centred, 100, 1}, {3});
  for (const int order : {200, 300}) {
    const double cur = critical_lambda({Family::centred, order, 1}, {3});
    CHECK(cur < prev);
    CHECK(cur > limit);
    prev = cur;
  }
  CHECK(prev == doctest::Approx(limit).epsilon(0.12));
}
