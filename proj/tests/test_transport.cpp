#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zigzag/linalg.hpp"
#include "zigzag/transport.hpp"

using namespace zigzag;

namespace {

AdvectConfig periodic_config(Family f, int order, int rk, double lambda, int n) {
  AdvectConfig cfg;
  cfg.spec = {f, order, 1};
  cfg.rk_order = rk;
  cfg.x_lo = 0.0;
  cfg.x_hi = 1.0;
  cfg.dx = 1.0 / n;
  cfg.c = stable_lambda_sign(f) >= 0 ? 1.0 : -1.0;
  cfg.dt = std::fabs(lambda) * cfg.dx / std::fabs(cfg.c);
  cfg.boundary = Boundary::periodic;
  cfg.ic = InitialCondition::gaussian;
  cfg.check_stability = false;
  return cfg;
}

/// Broadband deterministic samples, every mode excited.
std::vector<double> noisy_samples(int n) {
  std::vector<double> u(static_cast<std::size_t>(n));
  unsigned state = 123456789u;
  for (int i = 0; i < n; ++i) {
    state = state * 1664525u + 1013904223u;
    u[static_cast<std::size_t>(i)] =
        std::sin(2.0 * M_PI * i / n) + 1e-3 * ((state >> 8) % 10007) / 10007.0;
  }
  return u;
}

}  // namespace

TEST_CASE("banded LU solves and reports singularities") {
  BandedLU lu(5, 1, 1);
  // tridiagonal [-1, 2, -1]
  for (int i = 0; i < 5; ++i) {
    lu.at(i, i) = 2.0;
    if (i > 0) lu.at(i, i - 1) = -1.0;
    if (i < 4) lu.at(i, i + 1) = -1.0;
  }
  lu.factor();
  std::vector<double> b = {1, 0, 0, 0, 1};
  lu.solve(b);
  CHECK(b[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b[2] == doctest::Approx(1.0).epsilon(1e-12));

  BandedLU sing(3, 1, 1);
  sing.at(0, 0) = 1.0;  // row 1 left all zero
  sing.at(2, 2) = 1.0;
  CHECK_THROWS_AS(sing.factor(), SolverError);
  CHECK_THROWS_WITH_AS(sing.factor(), doctest::Contains("pivot"), SolverError);
}

TEST_CASE("banded LU agrees with dense LU on random banded systems") {
  unsigned state = 42u;
  auto rnd = [&]() {
    state = state * 1664525u + 1013904223u;
    return ((state >> 8) % 20011) / 10005.0 - 1.0;  // [-1, 1)
  };
  for (const int n : {7, 20, 57}) {
    const int kl = 2, ku = 3;
    BandedLU banded(n, kl, ku);
    DenseLU dense(n);
    for (int i = 0; i < n; ++i)
      for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j) {
        const double v = rnd() + (i == j ? 4.0 : 0.0);  // diagonally dominant-ish
        banded.at(i, j) = v;
        dense.at(i, j) = v;
      }
    banded.factor();
    dense.factor();
    std::vector<double> b1(static_cast<std::size_t>(n)), b2;
    for (auto& v : b1) v = rnd();
    b2 = b1;
    banded.solve(b1);
    dense.solve(b2);
    for (int i = 0; i < n; ++i)
      CHECK(b1[static_cast<std::size_t>(i)] ==
            doctest::Approx(b2[static_cast<std::size_t>(i)]).epsilon(1e-11));
  }
  CHECK_THROWS_AS(BandedLU(4, 1, 1).at(0, 3), std::invalid_argument);
}

TEST_CASE("dense LU round trip") {
  DenseLU lu(3);
  const double a[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) lu.at(i, j) = a[i][j];
  lu.factor();
  std::vector<double> b = {3, 5, 5};  // solution {1, 1, 1}
  lu.solve(b);
  for (double v : b) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero celerity leaves the field untouched") {
  AdvectConfig cfg = periodic_config(Family::zigzag_forward_first, 2, 3, 0.5, 64);
  cfg.c = 0.0;
  cfg.dt = 0.01;
  cfg.t_end = 0.5;
  cfg.snapshot_times = {0.0, 0.5};
  const Trajectory t = advect(cfg);
  for (std::size_t i = 0; i < t.snapshots[0].size(); ++i)
    CHECK(std::fabs(t.snapshots[0].values[i] - t.snapshots[1].values[i]) <= 1e-14);
}

TEST_CASE("config validation") {
  AdvectConfig cfg = periodic_config(Family::zigzag_forward_first, 2, 3, 0.5, 64);
  cfg.dx = 0.3;  // domain length 1 is not a multiple
  CHECK_THROWS_AS(advect(cfg), std::invalid_argument);
  cfg = periodic_config(Family::zigzag_staggered_forward_first, 2, 3, 0.5, 64);
  CHECK_THROWS_AS(advect(cfg), UnsupportedScheme);
  cfg = periodic_config(Family::zigzag_forward_first, 2, 5, 0.5, 64);
  CHECK_THROWS_AS(advect(cfg), std::invalid_argument);  // rk 1..4
}

TEST_CASE("explicit stepping warns outside the stable range") {
  AdvectConfig cfg = periodic_config(Family::forward, 1, 2, 1.2, 64);
  cfg.t_end = cfg.dt * 4;
  cfg.check_stability = true;
  CHECK(!advect(cfg).warnings.empty());
  // wrong upwind direction also warns
  AdvectConfig wrong = periodic_config(Family::forward, 1, 2, 0.5, 64);
  wrong.c = -wrong.c;  // looks stable by magnitude, but runs downwind
  wrong.t_end = wrong.dt * 4;
  wrong.check_stability = true;
  CHECK(!advect(wrong).warnings.empty());
  AdvectConfig ok = periodic_config(Family::forward, 1, 2, 0.5, 64);
  ok.t_end = ok.dt * 4;
  ok.check_stability = true;
  CHECK(advect(ok).warnings.empty());
}

TEST_CASE("travelling-wave convergence of zigzag order 2 under RK3") {
  // one full traversal at lambda = -0.5, L2 error against the exact translate
  std::vector<double> errors;
  for (const int n : {64, 128, 256}) {
    AdvectConfig cfg = periodic_config(Family::zigzag_forward_first, 2, 3, 0.5, n);
    cfg.ic = InitialCondition::gaussian;
    cfg.ic_width = 0.08;
    cfg.t_end = 1.0 / std::fabs(cfg.c);  // exactly one domain traversal
    const long steps = std::lround(cfg.t_end / cfg.dt);
    cfg.t_end = steps * cfg.dt;  // integral step count; translation offset below
    cfg.snapshot_times = {cfg.t_end};
    const Trajectory t = advect(cfg);
    const Field1D& f = t.snapshots.back();
    const double shift = cfg.c * cfg.t_end;
    double l2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      double x = f.x(i) - shift - 0.5;  // gaussian centred at 0.5
      x -= std::floor(x + 0.5);         // wrap to [-0.5, 0.5)
      const double exact = std::exp(-0.5 * (x / cfg.ic_width) * (x / cfg.ic_width));
      l2 += (f.values[i] - exact) * (f.values[i] - exact);
    }
    errors.push_back(std::sqrt(l2 * cfg.dx));
  }
  const double slope = std::log2(errors[0] / errors[2]) / 2.0;
  CHECK(slope == doctest::Approx(2.0).epsilon(0.125));
}

TEST_CASE("explicit centred order 2 with Euler grows energy every step") {
  AdvectConfig cfg = periodic_config(Family::centred, 2, 1, 0.5, 64);
  cfg.c = 1.0;
  cfg.t_end = cfg.dt * 50;
  cfg.ic = InitialCondition::gaussian;
  const Trajectory t = advect(cfg);
  for (std::size_t s = 1; s < t.energy.size(); ++s)
    CHECK(t.energy[s].second > t.energy[s - 1].second);
}

TEST_CASE("implicit Euler on periodic centred grids never gains energy") {
  for (const int order : {2, 4}) {
    AdvectConfig cfg = periodic_config(Family::centred, order, 1, 2.0, 128);
    cfg.time_mode = TimeMode::implicit_euler;
    cfg.t_end = cfg.dt * 100;
    cfg.ic = InitialCondition::gaussian;
    cfg.ic_width = 0.02;
    const Trajectory t = advect(cfg);
    for (std::size_t s = 1; s < t.energy.size(); ++s)
      CHECK(t.energy[s].second <= t.energy[s - 1].second * (1.0 + 1e-12));
  }
}

TEST_CASE("cross-module consistency with the critical stability-number") {
  struct Pair { Family f; int order; int rk; };
  for (const auto& pr : {Pair{Family::forward, 1, 2}, Pair{Family::zigzag_forward_first, 2, 3}}) {
    const double star = critical_lambda({pr.f, pr.order, 1}, {pr.rk});
    REQUIRE(star > 0.0);
    auto energy_after = [&](double frac) {
      AdvectConfig cfg = periodic_config(pr.f, pr.order, pr.rk, frac * star, 128);
      cfg.ic = InitialCondition::custom;
      cfg.ic_samples = noisy_samples(128);
      cfg.t_end = cfg.dt * 500;
      const Trajectory t = advect(cfg);
      return std::make_pair(t.initial_energy(), t.final_energy());
    };
    const auto [e0_ok, e1_ok] = energy_after(0.95);
    CHECK(e1_ok <= e0_ok * (1.0 + 1e-6));
    const auto [e0_bad, e1_bad] = energy_after(1.05);
    CHECK(e1_bad > 10.0 * e0_bad);
  }
}

TEST_CASE("truncated infinite-order centred scheme approaches spectral translation") {
  // half-Nyquist mode, resolved by every truncation tested; the truncation
  // decides the phase speed error, so L-inf error falls as terms grow
  const int n = 256, mode = 64;
  const double dx = 1.0 / n;
  const double dt = dx / 16.0;  // lambda = 1/16 exactly
  const long steps = 16;
  std::vector<double> errors;
  for (const int terms : {4, 16, 64}) {
    const Stencil st = build_stencil_truncated(Family::centred, terms);
    Field1D u{dx, 0.0, Boundary::periodic, {}};
    u.values.resize(n);
    for (int i = 0; i < n; ++i)
      u.values[static_cast<std::size_t>(i)] = std::sin(2.0 * M_PI * mode * i * dx);
    std::vector<double> term(u.values.size());
    for (long s2 = 0; s2 < steps; ++s2) {
      term = u.values;
      for (int m = 1; m <= 4; ++m) {
        Field1D tf{dx, 0.0, Boundary::periodic, term};
        const Field1D lt = apply(st, tf);
        for (std::size_t i = 0; i < term.size(); ++i) {
          term[i] = -lt.values[i] * dt / m;
          u.values[i] += term[i];
        }
      }
    }
    const double t_end = steps * dt;
    double linf = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
      const double exact = std::sin(2.0 * M_PI * mode * (i * dx - t_end));
      linf = std::max(linf, std::fabs(u.values[i] - exact));
    }
    errors.push_back(linf);
  }
  CHECK(errors[1] < errors[0]);
  CHECK(errors[2] < errors[1]);
}

TEST_CASE("numerical diffusion ordering of the three order-2 schemes") {
  const EnergyComparison e = energy_comparison();
  CHECK(e.centred > 0.0);
  CHECK(e.zigzag > 0.0);
  CHECK(e.upwind > 0.0);
  CHECK(e.centred < e.zigzag);
  CHECK(e.zigzag < e.upwind);
}

TEST_CASE("ghost experiment") {
  SUBCASE("t = 0 snapshot equals the initial condition exactly") {
    const AdvectConfig cfg = ghost_config({Family::centred, 2, 1}, 200, {0.0, 0.1});
    Trajectory t = advect(cfg);
    const auto ic = detail::initial_samples(cfg);
    REQUIRE(t.snapshots.front().size() == ic.size());
    for (std::size_t i = 0; i < ic.size(); ++i)
      CHECK(t.snapshots.front().values[i] == ic[i]);
  }
  SUBCASE("zigzag lets the wave out; centred keeps a ghost") {
    const GhostResult zig = ghost_experiment({Family::zigzag_backward_first, 2, 1});
    const GhostResult cen = ghost_experiment({Family::centred, 2, 1});
    CHECK(zig.metric <= 0.05);
    CHECK(cen.metric >= 0.5);
  }
}
