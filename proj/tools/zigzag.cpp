// Command-line frontend for the zigzag finite-difference toolkit: coefficient
// tables, stencils, sigma-factors, von Neumann stability analysis and the
// linear-advection experiments, all as CSV/JSON files fit for plotting.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zigzag/coefficients.hpp"
#include "zigzag/io.hpp"
#include "zigzag/stability.hpp"
#include "zigzag/stencil.hpp"
#include "zigzag/symbols.hpp"
#include "zigzag/transport.hpp"
#include "zigzag/vandermonde.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zigzag;

constexpr int kExitInvalidSpec = 2;
constexpr int kExitAnalysisFailure = 3;
constexpr int kExitSolverFailure = 4;

Family parse_family(std::string name, bool staggered_flag) {
  static const std::map<std::string, Family> table = {
      {"centred", Family::centred},
      {"centred-staggered", Family::centred_staggered},
      {"forward", Family::forward},
      {"backward", Family::backward},
      {"zigzag", Family::zigzag_forward_first},
      {"zigzag-forward-first", Family::zigzag_forward_first},
      {"zigzag-backward-first", Family::zigzag_backward_first},
      {"zigzag-staggered", Family::zigzag_staggered_forward_first},
      {"zigzag-staggered-forward-first", Family::zigzag_staggered_forward_first},
      {"zigzag-staggered-backward-first", Family::zigzag_staggered_backward_first},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw InvalidOrder("unknown family: " + name);
  Family f = it->second;
  if (staggered_flag) {
    switch (f) {
      case Family::centred: f = Family::centred_staggered; break;
      case Family::zigzag_forward_first: f = Family::zigzag_staggered_forward_first; break;
      case Family::zigzag_backward_first: f = Family::zigzag_staggered_backward_first; break;
      case Family::centred_staggered:
      case Family::zigzag_staggered_forward_first:
      case Family::zigzag_staggered_backward_first: break;  // already staggered
      default:
        throw InvalidOrder("--staggered does not apply to one-sided schemes");
    }
  }
  return f;
}

struct OrderArg {
  bool infinite = false;
  int value = 0;
};

OrderArg parse_order(const std::string& s) {
  if (s == "inf" || s == "infinity") return {true, 0};
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return {false, v};
  } catch (const std::exception&) {
    throw InvalidOrder("order must be a positive integer or 'inf', got '" + s + "'");
  }
}

/// "family:order" scheme syntax used by the solver subcommands.
SchemeSpec parse_scheme(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw InvalidOrder("scheme must be written family:order, e.g. zigzag:2");
  const Family f = parse_family(s.substr(0, colon), false);
  const OrderArg ord = parse_order(s.substr(colon + 1));
  if (ord.infinite) throw InvalidOrder("the solver needs a finite scheme order");
  return SchemeSpec{f, ord.value, 1};
}

std::string order_label(bool infinite, int order) {
  return infinite ? "inf" : std::to_string(order);
}

const char* stagger_label(Family f) { return is_staggered(f) ? "staggered" : "collocated"; }

/// Family name with the staggering folded out into the stagger field.
const char* base_family_name(Family f) {
  switch (f) {
    case Family::centred_staggered: return "centred";
    case Family::zigzag_staggered_forward_first: return "zigzag-forward-first";
    case Family::zigzag_staggered_backward_first: return "zigzag-backward-first";
    default: return family_name(f);
  }
}

// ---------------------------------------------------------------------------

struct CoeffsOptions {
  std::string family;
  std::string order;
  bool staggered = false;
  bool exact = false;
  std::string float_method = "exact";
  bool magnitude = false;
  int max_order = 0;
  std::string out = "-";
};

int run_coeffs(const CoeffsOptions& opt) {
  const Family fam = parse_family(opt.family, opt.staggered);
  OutputFile out(opt.out);
  auto& os = out.stream();

  if (opt.magnitude) {
    const int hi = opt.max_order > 0 ? opt.max_order : parse_order(opt.order).value;
    if (hi < 1) throw InvalidOrder("--max-order must be positive");
    os << "family,order,j,magnitude\n";
    const int step = is_centred_family(fam) ? 2 : 1;
    for (int ord = step; ord <= hi; ord += step) {
      const CoefficientSet cs = coeffs_for(fam, ord);
      for (std::size_t j = 0; j < cs.float_values.size(); ++j)
        os << family_name(fam) << ',' << ord << ',' << (j + 1) << ','
           << format_double(std::fabs(cs.float_values[j])) << '\n';
    }
    return 0;
  }

  const OrderArg ord = parse_order(opt.order);
  if (ord.infinite) throw InvalidOrder("coefficient export needs a finite order");
  FloatMethod method = FloatMethod::exact;
  if (opt.float_method == "direct") method = FloatMethod::direct;
  else if (opt.float_method == "gammaln") method = FloatMethod::gammaln;
  else if (opt.float_method == "log1p") method = FloatMethod::log1p;
  else if (opt.float_method != "exact")
    throw InvalidOrder("--float-method must be direct, gammaln, log1p or exact");
  if (method != FloatMethod::exact && !is_centred_family(fam))
    throw InvalidOrder("float methods are defined for the centred families only");

  const CoefficientSet cs = coeffs_for(fam, ord.value);
  os << "family,order,j,numerator,denominator,float64\n";
  for (std::size_t j = 0; j < cs.values.size(); ++j) {
    os << family_name(fam) << ',' << ord.value << ',' << (j + 1) << ',';
    if (opt.exact) os << cs.values[j].num().str() << ',' << cs.values[j].den().str() << ',';
    else os << ",,";
    std::string float_cell;
    try {
      float_cell = format_double(method == FloatMethod::exact
                                     ? cs.float_values[j]
                                     : coeff_float(method, fam, ord.value,
                                                   static_cast<int>(j) + 1));
    } catch (const CoeffOverflow&) {
      float_cell = "overflow";  // row-level marker, not a failure
    }
    os << float_cell << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct StencilOptions {
  std::string family;
  std::string order;
  bool staggered = false;
  int derivative = 1;
  int truncate = 0;
  std::string out = "-";
};

int run_stencil(const StencilOptions& opt) {
  const Family fam = parse_family(opt.family, opt.staggered);
  const OrderArg ord = parse_order(opt.order);
  Stencil st;
  if (ord.infinite) {
    if (opt.truncate < 1)
      throw InvalidOrder("infinite-order stencils need --trunc (number of terms)");
    st = build_stencil_truncated(fam, opt.truncate);
  } else {
    st = build_stencil({fam, ord.value, opt.derivative});
  }
  OutputFile out(opt.out);
  auto& os = out.stream();
  os << "family,order,derivative,offset_num,offset_den,weight_num,weight_den,weight_float\n";
  for (const auto& e : st.entries)
    os << family_name(fam) << ',' << order_label(ord.infinite, ord.value) << ','
       << st.derivative << ',' << e.offset.num().str() << ',' << e.offset.den().str() << ','
       << e.weight.num().str() << ',' << e.weight.den().str() << ','
       << format_double(e.weight.to_double()) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct SigmaOptions {
  std::string family;
  std::string order;
  bool staggered = false;
  int samples = 201;
  int truncate = 0;
  std::string out = "-";
};

int run_sigma(const SigmaOptions& opt) {
  const Family fam = parse_family(opt.family, opt.staggered);
  const OrderArg ord = parse_order(opt.order);
  if (opt.samples < 2) throw InvalidOrder("--samples must be at least 2");

  std::function<Complex(double)> sig;
  if (!ord.infinite) {
    const SymbolEvaluator ev = SymbolEvaluator::finite(fam, ord.value);
    // centred families validate the even order through the coefficients
    if (is_centred_family(fam)) detail::require_even(ord.value);
    sig = [ev](double k) { return ev(k); };
  } else if (fam == Family::forward || fam == Family::backward) {
    throw InvalidOrder("the one-sided coefficients diverge with the order; no infinite limit");
  } else if (fam == Family::zigzag_forward_first) {
    sig = [](double k) { return sigma_zigzag_infinite(k, ZigzagVariant::forward_first); };
  } else if (fam == Family::zigzag_backward_first) {
    sig = [](double k) { return sigma_zigzag_infinite(k, ZigzagVariant::backward_first); };
  } else {
    if (opt.truncate < 1)
      throw InvalidOrder("this family has no closed-form infinite symbol; pass --trunc");
    const SymbolEvaluator ev = SymbolEvaluator::infinite(fam, opt.truncate);
    sig = [ev](double k) { return ev(k); };
  }

  OutputFile out(opt.out);
  auto& os = out.stream();
  os << "family,order,kappa,sigma_re,sigma_im\n";
  for (int i = 0; i < opt.samples; ++i) {
    const double kappa = -1.0 + 2.0 * static_cast<double>(i) / (opt.samples - 1);
    const Complex s = sig(kappa);
    os << family_name(fam) << ',' << order_label(ord.infinite, ord.value) << ','
       << format_double(kappa) << ',' << format_double(s.real()) << ','
       << format_double(s.imag()) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct StabilityOptions {
  std::string mode;  // critical | region | tables
  std::string family;
  std::string order;
  bool staggered = false;
  int rk = 2;
  double tol = 1e-4;
  int truncation = 300;
  double lambda_min = -4.0;
  double lambda_max = 4.0;
  int resolution = 129;
  std::string out = "-";
};

int run_stability(const StabilityOptions& opt) {
  const TimeIntegrator rk{opt.rk};
  rk.validate();
  OutputFile out(opt.out);
  auto& os = out.stream();

  if (opt.mode == "critical") {
    const Family fam = parse_family(opt.family, opt.staggered);
    const OrderArg ord = parse_order(opt.order);
    double lambda_max = 0.0;
    if (ord.infinite) lambda_max = critical_lambda_infinite(fam, rk, opt.truncation, opt.tol);
    else lambda_max = critical_lambda({fam, ord.value, 1}, rk, opt.tol);
    json j;
    j["family"] = base_family_name(fam);
    j["stagger"] = stagger_label(fam);
    if (ord.infinite) j["order"] = "inf";
    else j["order"] = ord.value;
    j["rk_order"] = opt.rk;
    j["lambda_max"] = lambda_max;
    j["tolerance"] = opt.tol;
    if (ord.infinite) j["truncation_order"] = opt.truncation;
    os << j.dump(2) << '\n';
    return 0;
  }

  if (opt.mode == "region") {
    const Family fam = parse_family(opt.family, opt.staggered);
    const OrderArg ord = parse_order(opt.order);
    const SymbolEvaluator ev = ord.infinite
                                   ? SymbolEvaluator::infinite(fam, opt.truncation)
                                   : SymbolEvaluator::finite(fam, ord.value);
    const StabilityScan scan = stability_region(ev, rk, opt.lambda_min, opt.lambda_max,
                                                opt.resolution, opt.resolution);
    os << "lambda,kappa,absG,stable\n";
    for (std::size_t il = 0; il < scan.lambda_grid.size(); ++il)
      for (std::size_t ik = 0; ik < scan.kappa_grid.size(); ++ik)
        os << format_double(scan.lambda_grid[il]) << ',' << format_double(scan.kappa_grid[ik])
           << ',' << format_double(scan.at(il, ik)) << ',' << (scan.stable_at(il, ik) ? 1 : 0)
           << '\n';
    return 0;
  }

  if (opt.mode == "tables") {
    int max_order = 6;
    bool include_inf = false;
    if (opt.rk == 1) max_order = 2;
    else if (opt.rk == 2) max_order = 4;
    else if (opt.rk == 5 || opt.rk == 6) max_order = 7;
    else include_inf = true;  // RK3, RK4, RK7 tabulate the infinite order
    const auto cells = table_sweep(rk, max_order, include_inf, opt.truncation, opt.tol);
    std::map<std::pair<std::string, int>, std::string> value;  // (family, order or -1=inf)
    for (const auto& cell : cells)
      value[{family_name(cell.family), cell.infinite ? -1 : cell.order}] =
          cell.lambda_max ? format_fixed(*cell.lambda_max, 4) : "error";
    os << "family";
    for (int n = 1; n <= max_order; ++n) os << ',' << n;
    if (include_inf) os << ",inf";
    os << '\n';
    for (const char* fam : {"centred", "centred-staggered", "forward", "zigzag-forward-first",
                            "zigzag-staggered-forward-first"}) {
      os << fam;
      for (int n = 1; n <= max_order; ++n) {
        os << ',';
        const auto it = value.find({fam, n});
        if (it != value.end()) os << it->second;
      }
      if (include_inf) {
        os << ',';
        const auto it = value.find({fam, -1});
        if (it != value.end()) os << it->second;
      }
      os << '\n';
    }
    return 0;
  }

  throw InvalidOrder("stability mode must be critical, region or tables");
}

// ---------------------------------------------------------------------------

struct AdvectOptions {
  std::string scheme;
  int rk = 3;
  double c = 1.0;
  double dx = 0.01;
  double dt = 0.005;
  double t_end = 1.0;
  double x_lo = 0.0;
  double x_hi = 1.0;
  std::string ic = "gaussian";
  double ic_width = 0.0;
  std::string bc = "periodic";
  bool implicit = false;
  std::vector<double> snapshots;
  std::string snapshot_out;
  std::string out = "-";
};

int run_advect(const AdvectOptions& opt) {
  AdvectConfig cfg;
  cfg.spec = parse_scheme(opt.scheme);
  cfg.rk_order = opt.rk;
  cfg.c = opt.c;
  cfg.dx = opt.dx;
  cfg.dt = opt.dt;
  cfg.t_end = opt.t_end;
  cfg.x_lo = opt.x_lo;
  cfg.x_hi = opt.x_hi;
  cfg.ic_width = opt.ic_width;
  if (opt.ic == "erf") cfg.ic = InitialCondition::periodised_erf;
  else if (opt.ic == "gaussian") cfg.ic = InitialCondition::gaussian;
  else if (opt.ic == "bump") cfg.ic = InitialCondition::bump;
  else throw InvalidOrder("--ic must be erf, gaussian or bump");
  if (opt.bc == "periodic") cfg.boundary = Boundary::periodic;
  else if (opt.bc == "neumann") cfg.boundary = Boundary::neumann;
  else throw InvalidOrder("--bc must be periodic or neumann");
  cfg.time_mode = opt.implicit ? TimeMode::implicit_euler : TimeMode::explicit_rk;
  cfg.snapshot_times = opt.snapshots;

  const Trajectory traj = advect(cfg);
  for (const auto& w : traj.warnings) std::cerr << "warning: " << w << '\n';

  OutputFile out(opt.out);
  auto& os = out.stream();
  os << "t,E\n";
  for (const auto& [t, e] : traj.energy)
    os << format_double(t) << ',' << format_double(e) << '\n';

  if (!opt.snapshot_out.empty()) {
    OutputFile snap(opt.snapshot_out);
    auto& ss = snap.stream();
    ss << "t,x,u\n";
    for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
      const Field1D& f = traj.snapshots[k];
      for (std::size_t i = 0; i < f.size(); ++i)
        ss << format_double(traj.snapshot_times[k]) << ',' << format_double(f.x(i)) << ','
           << format_double(f.values[i]) << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct GhostOptions {
  std::string scheme = "zigzag-backward-first:2";
  int points = 1000;
  std::vector<double> snapshot_times = {0, 0.5, 1, 1.5, 2, 4};
  std::string snapshot_out;
  std::string out = "-";
};

int run_ghost(const GhostOptions& opt) {
  const GhostResult res = ghost_experiment(parse_scheme(opt.scheme), opt.points,
                                           opt.snapshot_times);
  json j;
  j["scheme"] = opt.scheme;
  j["M"] = res.metric;
  j["snapshot_times"] = opt.snapshot_times;
  OutputFile out(opt.out);
  out.stream() << j.dump(2) << '\n';
  if (!opt.snapshot_out.empty()) {
    OutputFile snap(opt.snapshot_out);
    auto& ss = snap.stream();
    ss << "t,x,u\n";
    for (std::size_t k = 0; k < res.trajectory.snapshots.size(); ++k) {
      const Field1D& f = res.trajectory.snapshots[k];
      for (std::size_t i = 0; i < f.size(); ++i)
        ss << format_double(res.trajectory.snapshot_times[k]) << ',' << format_double(f.x(i))
           << ',' << format_double(f.values[i]) << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
  std::vector<int> orders = {20, 160, 200, 500, 600};
  std::vector<std::string> methods = {"direct", "gammaln", "log1p"};
  int samples = 1001;
  std::string out = "-";
};

int run_bench(const BenchOptions& opt) {
  OutputFile out(opt.out);
  auto& os = out.stream();
  os << "order,method,seconds,status\n";
  for (const int order : opt.orders) {
    if (order < 2 || order % 2 != 0)
      throw InvalidOrder("bench orders must be even (staggered centred family)");
    for (const auto& name : opt.methods) {
      FloatMethod method;
      if (name == "direct") method = FloatMethod::direct;
      else if (name == "gammaln") method = FloatMethod::gammaln;
      else if (name == "log1p") method = FloatMethod::log1p;
      else throw InvalidOrder("bench methods: direct, gammaln, log1p");
      const auto t0 = std::chrono::steady_clock::now();
      std::string status = "ok";
      std::vector<double> coeff(static_cast<std::size_t>(order / 2), 0.0);
      try {
        for (int j = 1; j <= order / 2; ++j)
          coeff[static_cast<std::size_t>(j - 1)] =
              coeff_float(method, Family::centred_staggered, order, j);
        // the workload the timings describe: the sigma-factor on a kappa grid
        double sink = 0.0;
        for (int i = 0; i < opt.samples; ++i) {
          const double kappa = -1.0 + 2.0 * static_cast<double>(i) / (opt.samples - 1);
          double s = 0.0;
          for (int j = 1; j <= order / 2; ++j)
            s += coeff[static_cast<std::size_t>(j - 1)] * sincpi((j - 0.5) * kappa);
          sink += s;
        }
        if (!std::isfinite(sink)) status = "overflow";
      } catch (const CoeffOverflow&) {
        status = "overflow";
      }
      const auto t1 = std::chrono::steady_clock::now();
      const double secs = std::chrono::duration<double>(t1 - t0).count();
      os << order << ',' << name << ',' << format_double(secs) << ',' << status << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zigzag finite-difference scheme toolkit"};
  app.require_subcommand(1);

  CoeffsOptions co;
  auto* coeffs = app.add_subcommand("coeffs", "export scheme coefficients as CSV");
  coeffs->add_option("family", co.family, "scheme family")->required();
  coeffs->add_option("order", co.order, "scheme order (positive integer)");
  coeffs->add_flag("--staggered", co.staggered, "use the staggered variant of the family");
  coeffs->add_flag("--exact", co.exact, "emit exact numerator/denominator columns");
  coeffs->add_option("--float-method", co.float_method,
                     "float evaluation path: exact|direct|gammaln|log1p");
  coeffs->add_flag("--magnitude", co.magnitude,
                   "emit |coefficient| per j for every order up to --max-order");
  coeffs->add_option("--max-order", co.max_order, "largest order for --magnitude sweeps");
  coeffs->add_option("-o,--output", co.out, "output path ('-' for stdout)");

  StencilOptions so;
  auto* stencil = app.add_subcommand("stencil", "export nodal stencils as CSV");
  stencil->add_option("family", so.family)->required();
  stencil->add_option("order", so.order, "order or 'inf'")->required();
  stencil->add_flag("--staggered", so.staggered);
  stencil->add_option("--derivative", so.derivative, "derivative order (1 or 2)");
  stencil->add_option("--trunc", so.truncate, "terms kept for infinite-order stencils");
  stencil->add_option("-o,--output", so.out);

  SigmaOptions sg;
  auto* sigma = app.add_subcommand("sigma", "sample sigma-factors over kappa in [-1,1]");
  sigma->add_option("family", sg.family)->required();
  sigma->add_option("order", sg.order, "order or 'inf'")->required();
  sigma->add_flag("--staggered", sg.staggered);
  sigma->add_option("--samples", sg.samples, "number of kappa samples (default 201)");
  sigma->add_option("--trunc", sg.truncate, "truncation for infinite orders without closed form");
  sigma->add_option("-o,--output", sg.out);

  StabilityOptions st;
  auto* stability = app.add_subcommand("stability", "von Neumann analysis");
  stability->add_option("mode", st.mode, "critical | region | tables")->required();
  stability->add_option("family", st.family, "scheme family (critical/region)");
  stability->add_option("order", st.order, "order or 'inf' (critical/region)");
  stability->add_flag("--staggered", st.staggered);
  stability->add_option("--rk", st.rk, "integrator order 1..7")->required();
  stability->add_option("--tol", st.tol, "critical-lambda tolerance (default 1e-4)");
  stability->add_option("--trunc", st.truncation, "truncation for infinite orders (default 300)");
  stability->add_option("--lambda-min", st.lambda_min, "region raster lower lambda");
  stability->add_option("--lambda-max", st.lambda_max, "region raster upper lambda");
  stability->add_option("--resolution", st.resolution, "region raster points per axis (>= 64)");
  stability->add_option("-o,--output", st.out);

  AdvectOptions ao;
  auto* adv = app.add_subcommand("advect", "solve the linear advection equation");
  adv->add_option("--scheme", ao.scheme, "spatial scheme, family:order")->required();
  adv->add_option("--rk", ao.rk, "explicit integrator order 1..4");
  adv->add_option("--c", ao.c, "wave celerity")->required();
  adv->add_option("--dx", ao.dx)->required();
  adv->add_option("--dt", ao.dt)->required();
  adv->add_option("--t-end", ao.t_end)->required();
  adv->add_option("--x-lo", ao.x_lo);
  adv->add_option("--x-hi", ao.x_hi);
  adv->add_option("--ic", ao.ic, "initial condition: erf | gaussian | bump");
  adv->add_option("--ic-width", ao.ic_width, "initial-condition width parameter");
  adv->add_option("--bc", ao.bc, "periodic | neumann");
  adv->add_flag("--implicit", ao.implicit, "implicit Euler instead of explicit stepping");
  adv->add_option("--snapshots", ao.snapshots, "snapshot times (multiples of dt)");
  adv->add_option("--snapshot-out", ao.snapshot_out, "write t,x,u CSV here");
  adv->add_option("-o,--output", ao.out, "energy CSV output");

  GhostOptions go;
  auto* ghost = app.add_subcommand("ghost", "ghost-solution experiment (Neumann, implicit)");
  ghost->add_option("--scheme", go.scheme, "centred:2 or zigzag-backward-first:2");
  ghost->add_option("--points", go.points, "grid points (default 1000)");
  ghost->add_option("--snapshot-times", go.snapshot_times);
  ghost->add_option("--snapshot-out", go.snapshot_out);
  ghost->add_option("-o,--output", go.out, "metric JSON output");

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "time the coefficient evaluation paths");
  bench->add_option("--orders", bo.orders, "orders to time (even)");
  bench->add_option("--methods", bo.methods, "subset of direct,gammaln,log1p");
  bench->add_option("--samples", bo.samples, "kappa samples in the timed workload");
  bench->add_option("-o,--output", bo.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidSpec;
  }

  try {
    if (*coeffs) return run_coeffs(co);
    if (*stencil) return run_stencil(so);
    if (*sigma) return run_sigma(sg);
    if (*stability) return run_stability(st);
    if (*adv) return run_advect(ao);
    if (*ghost) return run_ghost(go);
    if (*bench) return run_bench(bo);
  } catch (const AnalysisError& e) {
    std::cerr << "analysis failure: " << e.what() << '\n';
    return kExitAnalysisFailure;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid specification: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid specification: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
