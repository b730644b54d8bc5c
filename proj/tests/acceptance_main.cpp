// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Runs straight against the library API.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wigneg/haar.hpp"
#include "wigneg/indicators.hpp"
#include "wigneg/liealg.hpp"
#include "wigneg/quadrature.hpp"
#include "wigneg/states.hpp"
#include "wigneg/swkernel.hpp"
#include "wigneg/wigner.hpp"

using namespace wigneg;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

int g_failed = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CMatrix random_density3(const CounterRng& rng, uint64_t idx) {
  CMatrix g(3, 3);
  uint64_t k = idx * 18;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g(i, j) = Complex(rng.normal(7001, k), rng.normal(7002, k));
      ++k;
    }
  CMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

const std::vector<std::pair<double, double>>& sample_points() {
  static const std::vector<std::pair<double, double>> pts = {
      {0.0, 0.0},          {0.05, 0.1},        {kSqrt3 / 8.0, 0.125},
      {0.1, 0.3},          {0.2, 0.25},        {0.0, 0.45},
      {0.3, 0.25},         {0.3, 0.4},         {0.4, 0.35},
      {kSqrt3 / 4.0, 0.25},{0.55, 0.42},       {0.6, 0.45},
      {0.75, 0.48},        {0.2, 0.48},        {kSqrt3 / 2.0, 0.5}};
  return pts;
}

// --- criterion 1: qubit quadrature against the closed form ------------------

void criterion1() {
  IntegratorConfig cfg;  // default 1024 nodes/dim on (alpha, beta)
  double worst = 0.0;
  bool pass = true;
  for (int k = 0; k <= 10; ++k) {
    const double r = 0.1 * k;
    const IndicatorResult res =
        kz_numeric(BlochState::qubit_diagonal(r), KernelModuli::qubit(), cfg);
    const double want = kz_closed_qubit(r);
    const double diff = std::abs(res.value - want);
    worst = std::max(worst, diff);
    if (diff > 1e-6) pass = false;
    if (r <= 1.0 / kSqrt3 && std::abs(res.value) > 1e-6) pass = false;
  }
  const double d1 = std::abs(
      kz_numeric(BlochState::qubit_diagonal(1.0), KernelModuli::qubit(), cfg).value -
      (2.0 / kSqrt3 - 1.0));
  if (d1 > 1e-6) pass = false;
  report(1, pass, "qubit quadrature matches the closed form on r = 0..1",
         "max |diff| = " + fmt(worst) + ", tol 1e-6");
}

// --- criteria 2 and 3: qutrit degenerate kernels ----------------------------

void criterion_qutrit(int id, double zeta,
                      double (*closed)(double, double), const char* what) {
  IntegratorConfig cfg;  // default 48 nodes/dim on the 3-angle chart
  bool pass = true;
  double worst = 0.0;
  for (const auto& [x3, x8] : sample_points()) {
    const IndicatorResult res = kz_numeric(BlochState::qutrit_diagonal(x3, x8),
                                           KernelModuli::from_zeta(zeta), cfg);
    const double want = closed(x3, x8);
    const double diff = std::abs(res.value - want);
    const double tol = std::max(1e-3, 3.0 * res.error_estimate);
    worst = std::max(worst, diff);
    if (diff > tol) pass = false;
    if (res.value < -1e-9) pass = false;
    if (want == 0.0 && std::abs(res.value) > 1e-6) pass = false;
  }
  report(id, pass, what, "max |numeric - closed| = " + fmt(worst) + " over 15 points");
}

// --- criterion 4: kernel spectra --------------------------------------------

void criterion4() {
  bool pass = true;
  const KernelSpectrum s0 = spectrum_from_moduli(KernelModuli::from_zeta(0.0));
  const KernelSpectrum s1 = spectrum_from_moduli(KernelModuli::from_zeta(kPi / 3.0));
  pass &= std::abs(s0.pi(1) - 1.0) < 1e-12 && std::abs(s0.pi(2) - 1.0) < 1e-12 &&
          std::abs(s0.pi(3) + 1.0) < 1e-12;
  pass &= std::abs(s1.pi(1) - 5.0 / 3.0) < 1e-12 &&
          std::abs(s1.pi(2) + 1.0 / 3.0) < 1e-12 &&
          std::abs(s1.pi(3) + 1.0 / 3.0) < 1e-12;
  double worst = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const KernelSpectrum s =
        spectrum_from_moduli(KernelModuli::from_zeta(kPi / 3.0 * k / 100.0));
    worst = std::max(worst, std::abs(s.pis().sum() - 1.0));
    worst = std::max(worst, std::abs(s.pis().squaredNorm() - 3.0));
  }
  if (worst > 1e-12) pass = false;
  report(4, pass, "kernel spectra at zeta = 0, pi/3 and master equations on a 100-point grid",
         "worst master-equation residual = " + fmt(worst));
}

// --- criterion 5: Haar and measure normalization ----------------------------

void criterion5() {
  bool pass = true;
  std::string detail;

  const double haar_mass = haar_chart_mass(64);
  if (std::abs(haar_mass - 1.0) > 1e-8) pass = false;
  detail += "Haar mass - 1 = " + fmt(haar_mass - 1.0);

  double worst_mass = 0.0;
  for (const StratumLabel& s :
       {StratumLabel::qubit(), StratumLabel::generic(3),
        StratumLabel::qutrit_pi12_degenerate(), StratumLabel::qutrit_pi23_degenerate()}) {
    const PhaseSpaceMeasure m = phase_measure(s);
    double mass = m.normalization();
    for (EulerAngle ang : m.active_angles()) mass *= m.axis(ang, 64).mass();
    worst_mass = std::max(worst_mass, std::abs(mass / s.dim() - 1.0));
  }
  if (worst_mass > 1e-8) pass = false;
  detail += ", worst rel mass error = " + fmt(worst_mass);

  // integral of W over the coset = 1 for 20 random qutrit states (the
  // indicator path is spectrum-only, so states enter via their diagonal
  // representative).
  const CounterRng rng(808);
  double worst_w = 0.0;
  for (uint64_t i = 0; i < 20; ++i) {
    const auto [sp, u] = diagonalize(random_density3(rng, i));
    const BlochState diag = BlochState::qutrit_diagonal(sp.xi3, sp.xi8);
    const StratumLabel stratum = (i % 3 == 0)   ? StratumLabel::qutrit_pi12_degenerate()
                                 : (i % 3 == 1) ? StratumLabel::qutrit_pi23_degenerate()
                                                : StratumLabel::generic(3);
    const double zeta = (i % 3 == 0) ? 0.0 : (i % 3 == 1) ? kPi / 3.0 : kPi / 5.0;
    const KernelModuli kern = KernelModuli::from_zeta(zeta);
    const PhaseSpaceMeasure m = phase_measure(stratum);
    const int nodes = stratum.is_generic() ? 16 : 32;
    double integral = 0.0;
    for (const auto& [p, w] : quadrature_grid(m, nodes)) {
      integral += w * wigner_value(diag, kern, m.representative(p));
    }
    worst_w = std::max(worst_w, std::abs(integral - 1.0));
  }
  if (worst_w > 1e-6) pass = false;
  detail += ", worst |int W dOmega - 1| = " + fmt(worst_w);

  report(5, pass, "Haar / coset measure normalization and Wigner trace normalization",
         detail);
}

// --- criterion 6: orbit-space exact values ----------------------------------

void criterion6() {
  bool pass = true;
  std::string detail;

  const double whole = hs_orbit_integral_whole_simplex();
  const double oap = hs_orbit_integral(RegionLabel::OAP);
  const double osq = hs_orbit_integral(RegionLabel::OSQ);
  const double rel1 = std::abs(whole * 10080.0 - 1.0);
  const double rel2 = std::abs(oap * 2580480.0 - 1.0);
  const double rel3 = std::abs(osq * 2580480.0 - 1.0);
  if (rel1 > 1e-9 || rel2 > 1e-9 || rel3 > 1e-9) pass = false;
  detail += "w3 rel errors " + fmt(rel1) + "/" + fmt(rel2) + "/" + fmt(rel3);

  for (DegenerateKernel kern : {DegenerateKernel::Zeta0, DegenerateKernel::ZetaPi3}) {
    const double eu =
        global_indicator(kern, GlobalMeasure::Euclidean, GlobalMethod::ExactRegion).value;
    if (eu != 0.25) pass = false;
    const double hs =
        global_indicator(kern, GlobalMeasure::HilbertSchmidt, GlobalMethod::ExactRegion)
            .value;
    if (std::abs(hs * 256.0 - 1.0) > 1e-12) pass = false;
  }
  detail += ", exact-region Q ok";

  IntegratorConfig cfg;
  cfg.samples = 1000000;
  cfg.seed = 424242;
  const GlobalResult eu_s = global_indicator(DegenerateKernel::Zeta0,
                                             GlobalMeasure::Euclidean,
                                             GlobalMethod::Sampling, cfg);
  const GlobalResult hs_s = global_indicator(DegenerateKernel::ZetaPi3,
                                             GlobalMeasure::HilbertSchmidt,
                                             GlobalMethod::Sampling, cfg);
  if (std::abs(eu_s.value - 0.25) > 3.0 * eu_s.error_estimate) pass = false;
  if (std::abs(hs_s.value - 1.0 / 256.0) > 3.0 * hs_s.error_estimate) pass = false;
  detail += ", sampling offsets " + fmt(eu_s.value - 0.25) + " and " +
            fmt(hs_s.value - 1.0 / 256.0);

  report(6, pass, "Hilbert-Schmidt orbit volumes 1/10080, 1/2580480 and Q = 1/4, 1/256",
         detail);
}

// --- criterion 7: spectral bounds --------------------------------------------

void criterion7() {
  bool pass = true;
  const CounterRng rng(31415);
  long checked = 0;
  double worst_violation = 0.0;
  for (uint64_t pair = 0; pair < 1000; ++pair) {
    const CMatrix rho = random_density3(rng, pair);
    const BlochState state = bloch_from_density(rho);
    const double zeta = kPi / 3.0 * rng.uniform(401, pair);
    const KernelModuli kern = KernelModuli::from_zeta(zeta);
    const auto [eigs, evec] = eigen_decompose_descending(rho);
    const auto [lo, hi] = wigner_bounds(eigs, spectrum_from_moduli(kern));
    for (uint64_t j = 0; j < 1000; ++j) {
      EulerPointSU3 p;
      p.alpha = draw_angle(EulerAngle::Alpha, rng.uniform(410, pair * 1000 + j));
      p.beta = draw_angle(EulerAngle::Beta, rng.uniform(411, pair * 1000 + j));
      p.gamma = draw_angle(EulerAngle::Gamma, rng.uniform(412, pair * 1000 + j));
      p.theta = draw_angle(EulerAngle::Theta, rng.uniform(413, pair * 1000 + j));
      p.a = draw_angle(EulerAngle::A, rng.uniform(414, pair * 1000 + j));
      p.b = draw_angle(EulerAngle::B, rng.uniform(415, pair * 1000 + j));
      const CMatrix u = su3_from_euler(p);
      const double w = wigner_value_diagonal(eigs, spectrum_from_moduli(kern),
                                             evec * u);
      ++checked;
      worst_violation = std::max(worst_violation, std::max(lo - w, w - hi));
    }
  }
  if (worst_violation > 1e-12) pass = false;

  // attainability: a fine inclusive grid over the torus-reduced angles must
  // approach both ends for diagonal states
  double worst_gap = 0.0;
  const struct {
    double x3, x8, zeta;
  } probes[] = {{kSqrt3 / 2.0, 0.5, 0.0},
                {0.3, 0.4, kPi / 3.0},
                {0.55, 0.42, kPi / 6.0},
                {0.2, 0.48, 0.3},
                {0.6, 0.45, 0.9}};
  for (const auto& pr : probes) {
    const SimplexPoint sp = simplex_from_xi(pr.x3, pr.x8);
    RVector r(3);
    r << sp.r1, sp.r2, sp.r3;
    const KernelSpectrum ks = spectrum_from_moduli(KernelModuli::from_zeta(pr.zeta));
    const auto [lo, hi] = wigner_bounds(r, ks);
    double seen_lo = 1e300, seen_hi = -1e300;
    const int g = 9;
    for (int ib = 0; ib < g; ++ib)
      for (int ig = 0; ig < g; ++ig)
        for (int it = 0; it < g; ++it)
          for (int ia = 0; ia < g; ++ia)
            for (int ibb = 0; ibb < g; ++ibb) {
              EulerPointSU3 p;
              p.beta = kPi * ib / (g - 1);
              p.gamma = 4.0 * kPi * ig / (g - 1);
              p.theta = kPi / 2.0 * it / (g - 1);
              p.a = 2.0 * kPi * ia / (g - 1);
              p.b = kPi * ibb / (g - 1);
              const double w = wigner_value_diagonal(r, ks, su3_from_euler(p));
              seen_lo = std::min(seen_lo, w);
              seen_hi = std::max(seen_hi, w);
            }
    worst_gap = std::max(worst_gap, std::max(seen_lo - lo, hi - seen_hi));
  }
  if (worst_gap > 1e-3) pass = false;

  report(7, pass, "every sampled W inside the spectral bounds; grid search attains them",
         "worst violation = " + fmt(worst_violation) + " over 1e6 points, worst gap = " +
             fmt(worst_gap));
}

// --- criterion 8: unitary invariance -----------------------------------------

void criterion8() {
  bool pass = true;
  IntegratorConfig cfg;
  const BlochState diag = BlochState::qutrit_diagonal(0.55, 0.42);
  const CMatrix rho = density_from_bloch(diag);
  const CounterRng rng(2718);
  double worst = 0.0;
  for (double zeta : {0.0, kPi / 3.0}) {
    const KernelModuli kern = KernelModuli::from_zeta(zeta);
    const IndicatorResult base = kz_numeric(diag, kern, cfg);
    for (uint64_t k = 0; k < 10; ++k) {
      const CMatrix g = sample_haar_unitary(3, rng, 100 * static_cast<uint64_t>(zeta * 10) + k);
      const BlochState rotated = bloch_from_density(g * rho * g.adjoint());
      const IndicatorResult res = kz_numeric(rotated, kern, cfg);
      const double diff = std::abs(res.value - base.value);
      worst = std::max(worst, diff);
      if (diff > 3.0 * std::max({base.error_estimate, res.error_estimate, 1e-12})) {
        pass = false;
      }
    }
  }
  report(8, pass, "delta is invariant under 10 random SU(3) conjugations",
         "max |diff| = " + fmt(worst));
}

// --- criterion 9: continuity at the quantum-classical boundaries -------------

void criterion9() {
  bool pass = true;
  double worst = 0.0;
  for (double x8 : {0.2, 0.25, 0.3, 0.35, 0.4, 0.45}) {
    const double x3 = (1.0 - 2.0 * x8) / (2.0 * kSqrt3);
    const double jump = std::abs(kz_closed_qutrit_zeta0(x3 + 1e-6, x8) -
                                 kz_closed_qutrit_zeta0(x3 - 1e-6, x8));
    worst = std::max(worst, jump);
  }
  for (double x3 : {0.05, 0.15, 0.25, 0.35, 0.42}) {
    const double jump = std::abs(kz_closed_qutrit_zetapi3(x3, 0.25 + 1e-6) -
                                 kz_closed_qutrit_zetapi3(x3, 0.25 - 1e-6));
    worst = std::max(worst, jump);
  }
  worst = std::max(worst, std::abs(kz_closed_qubit(1.0 / kSqrt3 + 1e-6) -
                                   kz_closed_qubit(1.0 / kSqrt3 - 1e-6)));
  if (worst > 1e-9) pass = false;
  report(9, pass, "closed-form delta is continuous across the zero boundaries",
         "max jump across +-1e-6 = " + fmt(worst) + ", tol 1e-9");
}

// --- generic-zeta property ----------------------------------------------------

void criterion_generic() {
  bool pass = true;
  std::string detail;
  IntegratorConfig cfg;  // default 24 nodes/dim on the 5-angle chart

  const BlochState state = BlochState::qutrit_diagonal(0.3, 0.4);
  const IndicatorResult mid = kz_numeric(state, KernelModuli::from_zeta(kPi / 6.0), cfg);
  if (mid.error_estimate > 1e-4) pass = false;
  detail += "doubling residual at pi/6 = " + fmt(mid.error_estimate);
  // anchor cross-validated against an independent Monte-Carlo estimate
  if (std::abs(mid.value - 0.04194) > 5e-4) pass = false;

  const IndicatorResult near0 = kz_numeric(state, KernelModuli::from_zeta(1e-3), cfg);
  const double d0 = std::abs(near0.value - kz_closed_qutrit_zeta0(0.3, 0.4));
  if (d0 > 1e-3) pass = false;

  const IndicatorResult near1 =
      kz_numeric(state, KernelModuli::from_zeta(kPi / 3.0 - 1e-3), cfg);
  const double d1 = std::abs(near1.value - kz_closed_qutrit_zetapi3(0.3, 0.4));
  if (d1 > 1e-3) pass = false;
  detail += ", limit offsets " + fmt(d0) + " / " + fmt(d1);

  report(10, pass, "generic-zeta path converges and meets both degenerate limits", detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion_qutrit(2, 0.0, &kz_closed_qutrit_zeta0,
                   "qutrit zeta=0 quadrature matches the closed form");
  criterion_qutrit(3, kPi / 3.0, &kz_closed_qutrit_zetapi3,
                   "qutrit zeta=pi/3 quadrature matches the closed form");
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion_generic();
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();
  std::printf("%s — %d criterion(s) failed, %.1f s total\n",
              g_failed == 0 ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILURES",
              g_failed, secs);
  return g_failed == 0 ? 0 : 1;
}
