#pragma once

#include <cstdint>
#include <string>

#include "wigneg/haar.hpp"
#include "wigneg/states.hpp"
#include "wigneg/swkernel.hpp"
#include "wigneg/types.hpp"

namespace wigneg {

enum class IntegrationMethod { ClosedForm, Quadrature, MonteCarlo };

std::string method_name(IntegrationMethod m);

struct IntegratorConfig {
  IntegrationMethod method = IntegrationMethod::Quadrature;
  // Quadrature nodes per active angle; 0 picks the per-stratum default
  // (1024 for the qubit coset, 48 for the degenerate qutrit strata, 24 for
  // the 5-angle generic stratum).
  int nodes_per_dim = 0;
  long samples = 1000000;
  uint64_t seed = 20240901ULL;
  int threads = 0;  // 0 = hardware concurrency
  double degeneracy_tol = 1e-9;
  // When > 0, results whose error estimate exceeds this are flagged as not
  // converged (reported, never silently accepted).
  double target_tolerance = 0.0;
};

struct IndicatorResult {
  explicit IndicatorResult(StratumLabel s) : stratum(std::move(s)) {}
  double value = 0.0;
  IntegrationMethod method = IntegrationMethod::Quadrature;
  double error_estimate = 0.0;
  StratumLabel stratum;
  bool converged = true;
};

// KZ negativity indicator delta = integral |W| dOmega - 1 over the stratum
// measure selected by the kernel's degeneracy pattern. The state is first
// rotated to its diagonal representative (delta is a unitary invariant and
// depends on the spectrum only). Internally the equivalent nonnegative form
// integral (|W| - W) dOmega is integrated (the coset integral of W is
// exactly 1), so estimates never dip below zero. Quadrature reports a
// grid-doubling error estimate, Monte-Carlo its standard error. Dimensions
// above 3 are served by the Monte-Carlo path only.
IndicatorResult kz_numeric(const BlochState& state, const KernelModuli& m,
                           const IntegratorConfig& cfg = {});

// delta for a qubit with Bloch radius r:
//   0 for r <= 1/sqrt(3),  sqrt(3)/2 (r + 1/(3r)) - 1 for r in (1/sqrt(3), 1].
double kz_closed_qubit(double r);

// The two degenerate qutrit kernels the closed forms are known for.
enum class DegenerateKernel { Zeta0, ZetaPi3 };

// Negativity regions of the ordered simplex. For the zeta=0 kernel the
// simplex splits into OAP (delta = 0) and APC; for zeta=pi/3 into OSQ
// (delta = 0), the trapezium ARQS and the triangle CQR.
enum class RegionLabel { OAP, APC, OSQ, ARQS, CQR };

std::string region_name(RegionLabel r);

// Region containing (xi3, xi8). Points on a zero-region boundary resolve to
// the zero region; points on the ARQS/CQR boundary (where both formulas
// agree to machine precision) resolve to ARQS.
RegionLabel classify_region(double xi3, double xi8, DegenerateKernel kernel);

struct ClosedFormEval {
  double value = 0.0;
  RegionLabel region = RegionLabel::OAP;
  // Set when a vanishing denominator forced evaluation at a point displaced
  // 1e-6 inward; delta is continuous, so the reported value is the limit.
  bool boundary_displaced = false;
};

ClosedFormEval kz_closed_qutrit_zeta0_eval(double xi3, double xi8);
ClosedFormEval kz_closed_qutrit_zetapi3_eval(double xi3, double xi8);

double kz_closed_qutrit_zeta0(double xi3, double xi8);
double kz_closed_qutrit_zetapi3(double xi3, double xi8);

// (area of the zero-delta region) / (area of the whole ordered simplex),
// from exact triangle areas. Equals 1/4 for both degenerate kernels.
double euclidean_positive_fraction(DegenerateKernel kernel);

// Integral of the Hilbert-Schmidt orbit-space volume form
//   w3 = 8/(9 sqrt(3)) xi3^2 (xi3^2/3 - xi8^2)^2 dxi3 dxi8
// over a region, or over the whole simplex.
double hs_orbit_integral(RegionLabel region);
double hs_orbit_integral_whole_simplex();

enum class GlobalMeasure { Euclidean, HilbertSchmidt };
enum class GlobalMethod { ExactRegion, Sampling };

struct GlobalResult {
  double value = 0.0;
  double error_estimate = 0.0;  // standard error of the sampling path
  GlobalMethod method = GlobalMethod::ExactRegion;
};

// Global classicality indicator Q = P(delta = 0) under the chosen
// eigenvalue-simplex measure: the exact-region path uses region areas /
// w3 volumes, the sampling path draws simplex points and classifies them.
GlobalResult global_indicator(DegenerateKernel kernel, GlobalMeasure measure,
                              GlobalMethod method, const IntegratorConfig& cfg = {});

}  // namespace wigneg
