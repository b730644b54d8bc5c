// wigneg: Wigner-function negativity indicators for N-level systems.
//
// Subcommands: kz qubit / kz qutrit / kz sweep, wigner, global, verify.
// Exit codes: 0 ok, 2 invalid input, 3 convergence or verification failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wigneg/haar.hpp"
#include "wigneg/indicators.hpp"
#include "wigneg/liealg.hpp"
#include "wigneg/quadrature.hpp"
#include "wigneg/states.hpp"
#include "wigneg/swkernel.hpp"
#include "wigneg/wigner.hpp"

using json = nlohmann::ordered_json;
using namespace wigneg;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotConverged = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string method = "quadrature";
  int nodes = 0;
  long samples = 1000000;
  uint64_t seed = 20240901ULL;
  int threads = 0;
  double tolerance = 0.0;
  std::string format;  // "json" or "csv"; empty = per-command default
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_method = true) {
  if (with_method) {
    cmd->add_option("--method", o.method, "closed | quadrature | mc")
        ->check(CLI::IsMember({"closed", "quadrature", "mc"}));
  }
  cmd->add_option("--nodes", o.nodes, "quadrature nodes per active angle (0 = default)");
  cmd->add_option("--samples", o.samples, "Monte-Carlo sample count");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  cmd->add_option("--tolerance", o.tolerance,
                  "flag non-convergence when the error estimate exceeds this");
  cmd->add_option("--format", o.format, "report format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("-o,--output", o.output, "write the report here instead of stdout");
}

IntegratorConfig to_config(const CommonOpts& o) {
  IntegratorConfig cfg;
  cfg.method = o.method == "mc" ? IntegrationMethod::MonteCarlo
                                : IntegrationMethod::Quadrature;
  cfg.nodes_per_dim = o.nodes;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.target_tolerance = o.tolerance;
  return cfg;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << text;
}

// Zeta options shared by the qutrit-facing commands.
struct ZetaOpt {
  std::optional<double> zeta;
  std::optional<double> zeta_frac;
  double resolve() const {
    if (zeta && zeta_frac) throw std::domain_error("give --zeta or --zeta-frac, not both");
    if (zeta) return *zeta;
    if (zeta_frac) return *zeta_frac * kPi / 3.0;
    throw std::domain_error("missing --zeta (radians) or --zeta-frac (fraction of pi/3)");
  }
};

void add_zeta(CLI::App* cmd, ZetaOpt& z) {
  cmd->add_option("--zeta", z.zeta, "kernel moduli angle in radians, [0, pi/3]");
  cmd->add_option("--zeta-frac", z.zeta_frac, "moduli angle as a fraction of pi/3");
}

// State options for qutrit commands: exactly one of the three forms.
struct StateOpt {
  std::optional<double> xi3, xi8;
  std::vector<double> bloch;
  std::string matrix_file;

  BlochState resolve(json* inputs) const {
    const int forms = int(xi3.has_value() || xi8.has_value()) + int(!bloch.empty()) +
                      int(!matrix_file.empty());
    if (forms != 1) {
      throw std::domain_error(
          "state must be given exactly one way: --xi3/--xi8, --bloch, or --matrix-file");
    }
    if (xi3 || xi8) {
      if (!(xi3 && xi8)) throw std::domain_error("--xi3 and --xi8 go together");
      (*inputs)["xi3"] = *xi3;
      (*inputs)["xi8"] = *xi8;
      return BlochState::qutrit_diagonal(*xi3, *xi8);
    }
    if (!bloch.empty()) {
      if (bloch.size() != 8) throw std::domain_error("--bloch needs 8 components");
      RVector xi(8);
      for (int i = 0; i < 8; ++i) xi(i) = bloch[size_t(i)];
      (*inputs)["bloch"] = bloch;
      return BlochState(3, xi);
    }
    std::ifstream in(matrix_file);
    if (!in) throw std::domain_error("cannot read matrix file: " + matrix_file);
    json jm = json::parse(in);
    if (!jm.is_array() || jm.size() != 3) {
      throw std::domain_error("matrix file must hold a 3x3 array");
    }
    CMatrix rho(3, 3);
    for (int i = 0; i < 3; ++i) {
      if (!jm[size_t(i)].is_array() || jm[size_t(i)].size() != 3) {
        throw std::domain_error("matrix file must hold a 3x3 array");
      }
      for (int j = 0; j < 3; ++j) {
        const json& e = jm[size_t(i)][size_t(j)];
        if (e.is_number()) {
          rho(i, j) = Complex(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2) {
          rho(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
          throw std::domain_error("matrix entries are numbers or [re, im] pairs");
        }
      }
    }
    (*inputs)["matrix_file"] = matrix_file;
    return bloch_from_density(rho);
  }
};

void add_state(CLI::App* cmd, StateOpt& s) {
  cmd->add_option("--xi3", s.xi3, "diagonal Bloch invariant xi3");
  cmd->add_option("--xi8", s.xi8, "diagonal Bloch invariant xi8");
  cmd->add_option("--bloch", s.bloch, "full 8-component Bloch vector")->delimiter(',');
  cmd->add_option("--matrix-file", s.matrix_file,
                  "JSON file with the 3x3 density matrix ([re, im] entries allowed)");
}

json base_report(const std::string& command) {
  json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["inputs"] = json::object();
  return j;
}

std::string indicator_csv(const json& report) {
  std::ostringstream out;
  out << "value,method,error_estimate,stratum,runtime_ms\r\n";
  out << fmt17(report["value"].get<double>()) << ',' << report["method"].get<std::string>()
      << ',' << fmt17(report["error_estimate"].get<double>()) << ','
      << report["stratum"].get<std::string>() << ',' << report["runtime_ms"].get<long>()
      << "\r\n";
  return out.str();
}

int finish_indicator(json& report, const CommonOpts& opts,
                     std::chrono::steady_clock::time_point t0, bool converged) {
  const auto t1 = std::chrono::steady_clock::now();
  report["runtime_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  const std::string format = opts.format.empty() ? "json" : opts.format;
  emit(format == "json" ? report.dump(2) + "\n" : indicator_csv(report), opts.output);
  if (!converged) {
    std::cerr << "warning: error estimate " << fmt17(report["error_estimate"].get<double>())
              << " exceeds the requested tolerance " << fmt17(opts.tolerance) << "\n";
  }
  return converged ? kExitOk : kExitNotConverged;
}

// ---------------------------------------------------------------------------
// kz qubit

int run_kz_qubit(double r, const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  json report = base_report("kz qubit");
  report["inputs"]["r"] = r;
  report["inputs"]["method"] = opts.method;
  report["inputs"]["seed"] = opts.seed;

  bool converged = true;
  if (opts.method == "closed") {
    report["value"] = kz_closed_qubit(r);
    report["method"] = method_name(IntegrationMethod::ClosedForm);
    report["error_estimate"] = 0.0;
    report["stratum"] = "(12)";
  } else {
    const IndicatorResult res =
        kz_numeric(BlochState::qubit_diagonal(r), KernelModuli::qubit(), to_config(opts));
    report["value"] = res.value;
    report["method"] = method_name(res.method);
    report["error_estimate"] = res.error_estimate;
    report["stratum"] = res.stratum.name();
    converged = res.converged;
  }
  return finish_indicator(report, opts, t0, converged);
}

// ---------------------------------------------------------------------------
// kz qutrit

int run_kz_qutrit(const StateOpt& state_opt, const ZetaOpt& zeta_opt,
                  const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  json report = base_report("kz qutrit");
  const double zeta = zeta_opt.resolve();
  report["inputs"]["zeta"] = zeta;
  report["inputs"]["method"] = opts.method;
  report["inputs"]["seed"] = opts.seed;
  const BlochState state = state_opt.resolve(&report["inputs"]);
  const KernelModuli kern = KernelModuli::from_zeta(zeta);

  bool converged = true;
  if (opts.method == "closed") {
    const auto [sp, u] = diagonalize(density_from_bloch(state));
    const bool at_zero = std::abs(zeta) < 1e-9;
    const bool at_pi3 = std::abs(zeta - kPi / 3.0) < 1e-9;
    if (!at_zero && !at_pi3) {
      throw std::domain_error("closed forms exist for zeta = 0 and zeta = pi/3 only");
    }
    const ClosedFormEval ev = at_zero ? kz_closed_qutrit_zeta0_eval(sp.xi3, sp.xi8)
                                      : kz_closed_qutrit_zetapi3_eval(sp.xi3, sp.xi8);
    report["value"] = ev.value;
    report["method"] = method_name(IntegrationMethod::ClosedForm);
    report["error_estimate"] = 0.0;
    report["stratum"] = at_zero ? "(1|23)" : "(12|3)";
    report["region"] = region_name(ev.region);
    report["boundary_displaced"] = ev.boundary_displaced;
  } else {
    const IndicatorResult res = kz_numeric(state, kern, to_config(opts));
    report["value"] = res.value;
    report["method"] = method_name(res.method);
    report["error_estimate"] = res.error_estimate;
    report["stratum"] = res.stratum.name();
    converged = res.converged;
  }
  return finish_indicator(report, opts, t0, converged);
}

// ---------------------------------------------------------------------------
// kz sweep

int run_kz_sweep(const ZetaOpt& zeta_opt, int grid, const CommonOpts& opts) {
  if (grid < 2) throw std::domain_error("--grid must be >= 2");
  if (opts.format == "json") throw std::domain_error("sweep emits CSV only");
  const double zeta = zeta_opt.resolve();
  const KernelModuli kern = KernelModuli::from_zeta(zeta);
  const bool at_zero = std::abs(zeta) < 1e-9;
  const bool at_pi3 = std::abs(zeta - kPi / 3.0) < 1e-9;

  IntegratorConfig cfg = to_config(opts);
  std::ostringstream out;
  out << "xi3,xi8,delta_closed,delta_numeric,err\r\n";
  for (int i = 0; i < grid; ++i) {
    const double xi8 = 0.5 * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double xi3 = kSqrt3 * xi8 * j / (grid - 1);
      double closed = std::numeric_limits<double>::quiet_NaN();
      if (at_zero) closed = kz_closed_qutrit_zeta0(xi3, xi8);
      if (at_pi3) closed = kz_closed_qutrit_zetapi3(xi3, xi8);
      const IndicatorResult res =
          kz_numeric(BlochState::qutrit_diagonal(xi3, xi8), kern, cfg);
      out << fmt17(xi3) << ',' << fmt17(xi8) << ',' << fmt17(closed) << ','
          << fmt17(res.value) << ',' << fmt17(res.error_estimate) << "\r\n";
    }
  }
  emit(out.str(), opts.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// wigner grid dump

int run_wigner(const StateOpt& state_opt, const ZetaOpt& zeta_opt, int grid,
               const CommonOpts& opts) {
  if (grid < 2) throw std::domain_error("--grid must be >= 2");
  if (opts.format == "json") throw std::domain_error("wigner emits CSV only");
  json inputs;
  const BlochState state = state_opt.resolve(&inputs);
  const double zeta = zeta_opt.resolve();
  const KernelModuli kern = KernelModuli::from_zeta(zeta);
  const KernelSpectrum ks = spectrum_from_moduli(kern);
  const PhaseSpaceMeasure measure = phase_measure(stratum_of(ks));
  const auto& active = measure.active_angles();

  const auto angle_name = [](EulerAngle a) {
    switch (a) {
      case EulerAngle::Alpha: return "alpha";
      case EulerAngle::Beta: return "beta";
      case EulerAngle::Gamma: return "gamma";
      case EulerAngle::Theta: return "theta";
      case EulerAngle::A: return "a";
      case EulerAngle::B: return "b";
      case EulerAngle::C: return "c";
      case EulerAngle::Phi: return "phi";
    }
    return "?";
  };

  std::ostringstream out;
  for (size_t d = 0; d < active.size(); ++d) out << angle_name(active[d]) << ',';
  out << "W\r\n";

  std::vector<int> idx(active.size(), 0);
  for (;;) {
    EulerPointSU3 p;
    for (size_t d = 0; d < active.size(); ++d) {
      const double lo = angle_lo(active[d]);
      const double hi = angle_hi(active[d]);
      set_angle(p, active[d], lo + (hi - lo) * idx[d] / (grid - 1));
    }
    const WignerEvaluation ev = evaluate_wigner(state, kern, p, &measure);
    for (size_t d = 0; d < active.size(); ++d) out << fmt17(get_angle(p, active[d])) << ',';
    out << fmt17(ev.value) << "\r\n";
    size_t d = active.size();
    for (;;) {
      if (d == 0) goto done;
      --d;
      if (++idx[d] < grid) break;
      idx[d] = 0;
      if (d == 0) goto done;
    }
  }
done:
  emit(out.str(), opts.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// global indicator

int run_global(const ZetaOpt& zeta_opt, const std::string& measure,
               const std::string& method, const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const double zeta = zeta_opt.resolve();
  DegenerateKernel kern;
  if (std::abs(zeta) < 1e-9) {
    kern = DegenerateKernel::Zeta0;
  } else if (std::abs(zeta - kPi / 3.0) < 1e-9) {
    kern = DegenerateKernel::ZetaPi3;
  } else {
    throw std::domain_error("global indicator is defined for zeta = 0 and pi/3");
  }
  const GlobalMeasure gm =
      measure == "euclidean" ? GlobalMeasure::Euclidean : GlobalMeasure::HilbertSchmidt;
  const GlobalMethod gmeth =
      method == "exact" ? GlobalMethod::ExactRegion : GlobalMethod::Sampling;

  const GlobalResult res = global_indicator(kern, gm, gmeth, to_config(opts));

  json report = base_report("global");
  report["inputs"]["zeta"] = zeta;
  report["inputs"]["measure"] = measure;
  report["inputs"]["method"] = method;
  report["inputs"]["seed"] = opts.seed;
  if (gmeth == GlobalMethod::Sampling) report["inputs"]["samples"] = opts.samples;
  report["value"] = res.value;
  report["method"] = method == "exact" ? "exact-region" : "sampling";
  report["error_estimate"] = res.error_estimate;
  report["stratum"] = kern == DegenerateKernel::Zeta0 ? "(1|23)" : "(12|3)";
  const bool converged =
      opts.tolerance <= 0.0 || res.error_estimate <= opts.tolerance;
  return finish_indicator(report, opts, t0, converged);
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  double observed;
  double expected;
  double tol;
  bool pass() const { return std::abs(observed - expected) <= tol; }
};

int run_verify(bool fast, const CommonOpts& opts) {
  std::vector<Check> checks;
  const CounterRng rng(opts.seed);

  {  // basis structure
    double worst = 0.0;
    for (int n : {2, 3, 4}) {
      const GellMannBasis& b = basis_for(n);
      for (int mu = 1; mu <= b.size(); ++mu) {
        worst = std::max(worst, std::abs(b.element(mu).trace()));
        for (int nu = mu; nu <= b.size(); ++nu) {
          const double want = mu == nu ? 2.0 : 0.0;
          worst = std::max(worst,
                           std::abs((b.element(mu) * b.element(nu)).trace() - want));
        }
      }
    }
    checks.push_back({"basis orthonormality (N=2,3,4)", worst, 0.0, 1e-12});
  }
  {  // master equations over the moduli arc
    double worst = 0.0;
    for (int k = 0; k <= 60; ++k) {
      const KernelSpectrum s =
          spectrum_from_moduli(KernelModuli::from_zeta(kPi / 3.0 * k / 60.0));
      worst = std::max(worst, std::abs(s.pis().sum() - 1.0));
      worst = std::max(worst, std::abs(s.pis().squaredNorm() - 3.0));
    }
    checks.push_back({"kernel master equations on the moduli arc", worst, 0.0, 1e-12});
    checks.push_back({"spec(Delta) at zeta=0, top eigenvalue",
                      spectrum_from_moduli(KernelModuli::from_zeta(0.0)).pi(1), 1.0, 1e-12});
    checks.push_back({"spec(Delta) at zeta=pi/3, top eigenvalue",
                      spectrum_from_moduli(KernelModuli::from_zeta(kPi / 3.0)).pi(1),
                      5.0 / 3.0, 1e-12});
  }
  {  // Haar normalization and measure masses
    checks.push_back({"Haar chart mass", haar_chart_mass(64), 1.0, 1e-8});
    for (const StratumLabel& s :
         {StratumLabel::qubit(), StratumLabel::generic(3),
          StratumLabel::qutrit_pi12_degenerate(), StratumLabel::qutrit_pi23_degenerate()}) {
      const PhaseSpaceMeasure m = phase_measure(s);
      double mass = m.normalization();
      for (EulerAngle ang : m.active_angles()) mass *= m.axis(ang, 64).mass();
      checks.push_back({"coset measure mass " + s.name(), mass,
                        static_cast<double>(s.dim()), 1e-8});
    }
  }
  {  // Euler charts produce special unitaries
    double worst = 0.0;
    for (uint64_t i = 0; i < 16; ++i) {
      EulerPointSU3 p;
      p.alpha = draw_angle(EulerAngle::Alpha, rng.uniform(11, i));
      p.beta = draw_angle(EulerAngle::Beta, rng.uniform(12, i));
      p.gamma = draw_angle(EulerAngle::Gamma, rng.uniform(13, i));
      p.theta = draw_angle(EulerAngle::Theta, rng.uniform(14, i));
      p.a = draw_angle(EulerAngle::A, rng.uniform(15, i));
      p.b = draw_angle(EulerAngle::B, rng.uniform(16, i));
      p.c = draw_angle(EulerAngle::C, rng.uniform(17, i));
      p.phi = draw_angle(EulerAngle::Phi, rng.uniform(18, i));
      const CMatrix u = su3_from_euler(p);
      worst = std::max(worst,
                       (u * u.adjoint() - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(u.determinant() - Complex(1.0, 0.0)));
    }
    checks.push_back({"Euler chart unitarity", worst, 0.0, 1e-12});
  }
  {  // Wigner evaluation paths agree; values stay inside the bounds
    double worst = 0.0, violation = 0.0;
    for (uint64_t i = 0; i < 64; ++i) {
      const double xi8 = 0.5 * rng.uniform(21, i);
      const double xi3 = kSqrt3 * xi8 * rng.uniform(22, i);
      const double zeta = kPi / 3.0 * rng.uniform(23, i);
      const BlochState st = BlochState::qutrit_diagonal(xi3, xi8);
      const KernelModuli km = KernelModuli::from_zeta(zeta);
      const CMatrix u = sample_haar_unitary(3, rng, 4000 + i);
      const double wb = wigner_value(st, km, u);
      worst = std::max(worst, std::abs(wb - wigner_value_matrix(st, km, u)));
      const SimplexPoint sp = simplex_from_xi(xi3, xi8);
      RVector r(3);
      r << sp.r1, sp.r2, sp.r3;
      const auto [lo, hi] = wigner_bounds(r, spectrum_from_moduli(km));
      violation = std::max(violation, std::max(lo - wb, wb - hi));
    }
    checks.push_back({"Bloch vs matrix Wigner evaluation", worst, 0.0, 1e-12});
    checks.push_back({"Wigner values inside the spectral bounds", std::max(violation, 0.0),
                      0.0, 1e-12});
  }
  {  // geometry of the zero regions
    checks.push_back({"Euclidean positive fraction (zeta=0)",
                      euclidean_positive_fraction(DegenerateKernel::Zeta0), 0.25, 0.0});
    checks.push_back({"Euclidean positive fraction (zeta=pi/3)",
                      euclidean_positive_fraction(DegenerateKernel::ZetaPi3), 0.25, 0.0});
    double worst = 0.0;
    for (double x8 : {0.2, 0.3, 0.45}) {
      const double x3 = (1.0 - 2.0 * x8) / (2.0 * kSqrt3);
      worst = std::max(worst, std::abs(kz_closed_qutrit_zeta0(x3 + 1e-6, x8) -
                                       kz_closed_qutrit_zeta0(x3 - 1e-6, x8)));
    }
    for (double x3 : {0.1, 0.2, 0.4}) {
      worst = std::max(worst, std::abs(kz_closed_qutrit_zetapi3(x3, 0.25 + 1e-6) -
                                       kz_closed_qutrit_zetapi3(x3, 0.25 - 1e-6)));
    }
    checks.push_back({"closed-form continuity at the zero boundaries", worst, 0.0, 1e-9});
  }

  if (!fast) {
    checks.push_back({"w3 volume of the simplex", hs_orbit_integral_whole_simplex(),
                      1.0 / 10080.0, 1e-9 / 10080.0});
    checks.push_back({"w3 volume of OAP", hs_orbit_integral(RegionLabel::OAP),
                      1.0 / 2580480.0, 1e-9 / 2580480.0});
    checks.push_back({"w3 volume of OSQ", hs_orbit_integral(RegionLabel::OSQ),
                      1.0 / 2580480.0, 1e-9 / 2580480.0});
    checks.push_back({"global indicator, Hilbert-Schmidt exact path",
                      global_indicator(DegenerateKernel::Zeta0, GlobalMeasure::HilbertSchmidt,
                                       GlobalMethod::ExactRegion)
                          .value,
                      1.0 / 256.0, 1e-12});
    for (double zeta : {0.0, kPi / 4.0}) {
      const CMatrix res = integrate_kernel_su3(KernelModuli::from_zeta(zeta), 32);
      checks.push_back({"kernel resolution of identity (zeta=" + fmt17(zeta).substr(0, 6) + ")",
                        (res - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 0.0, 1e-8});
    }
    {
      IntegratorConfig cfg;
      cfg.threads = opts.threads;
      double worst = 0.0;
      for (double r : {0.4, 1.0}) {
        const IndicatorResult res =
            kz_numeric(BlochState::qubit_diagonal(r), KernelModuli::qubit(), cfg);
        worst = std::max(worst, std::abs(res.value - kz_closed_qubit(r)));
      }
      checks.push_back({"qubit quadrature vs closed form", worst, 0.0, 1e-6});
      const IndicatorResult c0 =
          kz_numeric(BlochState::qutrit_diagonal(kSqrt3 / 2.0, 0.5),
                     KernelModuli::from_zeta(0.0), cfg);
      checks.push_back({"qutrit quadrature at vertex C (zeta=0)", c0.value, 0.5,
                        std::max(1e-3, 3.0 * c0.error_estimate)});
      const IndicatorResult c1 =
          kz_numeric(BlochState::qutrit_diagonal(kSqrt3 / 2.0, 0.5),
                     KernelModuli::from_zeta(kPi / 3.0), cfg);
      checks.push_back({"qutrit quadrature at vertex C (zeta=pi/3)", c1.value, 17.0 / 54.0,
                        std::max(1e-3, 3.0 * c1.error_estimate)});

      IntegratorConfig mc = cfg;
      mc.method = IntegrationMethod::MonteCarlo;
      mc.samples = 200000;
      mc.seed = opts.seed;
      const IndicatorResult mcr =
          kz_numeric(BlochState::qutrit_diagonal(0.3, 0.4), KernelModuli::from_zeta(0.0), mc);
      checks.push_back({"Monte-Carlo vs closed form at (0.3, 0.4)", mcr.value,
                        kz_closed_qutrit_zeta0(0.3, 0.4),
                        std::max(1e-3, 4.0 * mcr.error_estimate)});

      const CMatrix g = sample_haar_unitary(3, rng, 90001);
      const CMatrix rho =
          density_from_bloch(BlochState::qutrit_diagonal(0.55, 0.42));
      const IndicatorResult base =
          kz_numeric(BlochState::qutrit_diagonal(0.55, 0.42), KernelModuli::from_zeta(0.0), cfg);
      const IndicatorResult rot = kz_numeric(bloch_from_density(g * rho * g.adjoint()),
                                             KernelModuli::from_zeta(0.0), cfg);
      checks.push_back({"unitary invariance of delta", rot.value, base.value,
                        3.0 * std::max(base.error_estimate, 1e-12) + 1e-10});
    }
  }

  int failed = 0;
  std::printf("%-52s %-24s %-24s %-10s %s\n", "check", "observed", "expected", "tol",
              "status");
  for (const Check& c : checks) {
    const bool ok = c.pass();
    if (!ok) ++failed;
    std::printf("%-52s %-24.16g %-24.16g %-10.3g %s\n", c.name.c_str(), c.observed,
                c.expected, c.tol, ok ? "PASS" : "FAIL");
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failed,
              checks.size());
  return failed == 0 ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner-function negativity indicators for N-level systems"};
  app.require_subcommand(1);

  // kz
  CLI::App* kz = app.add_subcommand("kz", "Kenfack-Zyczkowski negativity indicator");
  kz->require_subcommand(1);

  CLI::App* kzq = kz->add_subcommand("qubit", "indicator of a qubit state");
  double qubit_r = 0.0;
  kzq->add_option("--r", qubit_r, "Bloch radius in [0, 1]")->required();
  CommonOpts qubit_opts;
  add_common(kzq, qubit_opts);

  CLI::App* kzt = kz->add_subcommand("qutrit", "indicator of a qutrit state");
  StateOpt kzt_state;
  ZetaOpt kzt_zeta;
  CommonOpts kzt_opts;
  add_state(kzt, kzt_state);
  add_zeta(kzt, kzt_zeta);
  add_common(kzt, kzt_opts);

  CLI::App* kzs = kz->add_subcommand("sweep", "indicator over a simplex grid (CSV)");
  ZetaOpt kzs_zeta;
  int kzs_grid = 8;
  CommonOpts kzs_opts;
  add_zeta(kzs, kzs_zeta);
  kzs->add_option("--grid", kzs_grid, "grid points per simplex direction")->required();
  add_common(kzs, kzs_opts);

  // wigner
  CLI::App* wig = app.add_subcommand("wigner", "Wigner function over an angle grid (CSV)");
  StateOpt wig_state;
  ZetaOpt wig_zeta;
  int wig_grid = 16;
  CommonOpts wig_opts;
  add_state(wig, wig_state);
  add_zeta(wig, wig_zeta);
  wig->add_option("--grid", wig_grid, "grid points per active angle")->required();
  add_common(wig, wig_opts, /*with_method=*/false);

  // global
  CLI::App* glob = app.add_subcommand("global", "global classicality indicator Q");
  ZetaOpt glob_zeta;
  std::string glob_measure = "euclidean";
  std::string glob_method = "exact";
  CommonOpts glob_opts;
  add_zeta(glob, glob_zeta);
  glob->add_option("--measure", glob_measure, "euclidean | hs")
      ->check(CLI::IsMember({"euclidean", "hs"}));
  glob->add_option("--method", glob_method, "exact | sampling")
      ->check(CLI::IsMember({"exact", "sampling"}));
  add_common(glob, glob_opts, /*with_method=*/false);

  // verify
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  bool verify_fast = false;
  verify->add_flag("--fast", verify_fast, "structural invariants only");
  CommonOpts verify_opts;
  add_common(verify, verify_opts, /*with_method=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (kzq->parsed()) return run_kz_qubit(qubit_r, qubit_opts);
    if (kzt->parsed()) return run_kz_qutrit(kzt_state, kzt_zeta, kzt_opts);
    if (kzs->parsed()) return run_kz_sweep(kzs_zeta, kzs_grid, kzs_opts);
    if (wig->parsed()) return run_wigner(wig_state, wig_zeta, wig_grid, wig_opts);
    if (glob->parsed()) return run_global(glob_zeta, glob_measure, glob_method, glob_opts);
    if (verify->parsed()) return run_verify(verify_fast, verify_opts);
  } catch (const NotAStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
