#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wigneg/quadrature.hpp"
#include "wigneg/swkernel.hpp"
#include "wigneg/types.hpp"

namespace wigneg {

// Symmetric 3-2-3 Euler chart of SU(2):
//   U = exp(i a/2 s3) exp(i b/2 s2) exp(i g/2 s3).
struct EulerPointSU2 {
  double alpha = 0.0;  // [0, 2pi]
  double beta = 0.0;   // [0, pi]
  double gamma = 0.0;  // [0, 4pi]
};

// Generalized Euler chart of SU(3):
//   U = e^{i al/2 l3} e^{i be/2 l2} e^{i ga/2 l3} e^{i th l5}
//       e^{i a/2 l3} e^{i b/2 l2} e^{i c/2 l3} e^{i phi l8}.
// Ranges cover the group up to a measure-zero set.
struct EulerPointSU3 {
  double alpha = 0.0;  // [0, 2pi]
  double beta = 0.0;   // [0, pi]
  double gamma = 0.0;  // [0, 4pi]
  double theta = 0.0;  // [0, pi/2]
  double a = 0.0;      // [0, 2pi]
  double b = 0.0;      // [0, pi]
  double c = 0.0;      // [0, 4pi]
  double phi = 0.0;    // [0, sqrt(3) pi]
};

enum class EulerAngle { Alpha, Beta, Gamma, Theta, A, B, C, Phi };

double angle_lo(EulerAngle which);
double angle_hi(EulerAngle which);
double get_angle(const EulerPointSU3& p, EulerAngle which);
void set_angle(EulerPointSU3& p, EulerAngle which, double value);

CMatrix su2_from_euler(const EulerPointSU2& p);
CMatrix su3_from_euler(const EulerPointSU3& p);

// Normalized Haar density in the SU(3) Euler chart:
//   (1 / 64 sqrt(3) pi^5) cos(th) sin^3(th) sin(be) sin(b).
double haar_density_su3(const EulerPointSU3& p);

// Phase-space (coset) measure of a kernel stratum, normalized so that the
// total mass is N. The chart is the Euler decomposition restricted to the
// listed active angles; the remaining angles parameterize the isotropy
// group and are dropped. For the stratum with the lower pair of kernel
// eigenvalues degenerate the chart is anchored at a Weyl-rotated base
// point (see frame()), because the Euler decomposition above is adapted to
// the stratum with the upper pair degenerate.
class PhaseSpaceMeasure {
 public:
  const StratumLabel& stratum() const { return stratum_; }
  int dim() const { return stratum_.dim(); }
  const std::vector<EulerAngle>& active_angles() const { return active_; }

  // Constant prefactor fixed by  integral(dOmega) = N.
  double normalization() const { return norm_; }
  // Full density, normalization included.
  double density(const EulerPointSU3& p) const;

  // Coset representative evaluated at p: U(p) * frame. 2x2 for the qubit.
  CMatrix representative(const EulerPointSU3& p) const;
  const CMatrix& frame() const { return frame_; }

  // Per-axis quadrature axis with the density factor folded into the
  // weights (normalization spread evenly is not attempted; it multiplies
  // the product in quadrature_grid / integration).
  QuadratureAxis axis(EulerAngle which, int nodes) const;

 private:
  friend PhaseSpaceMeasure phase_measure(const StratumLabel& stratum);
  explicit PhaseSpaceMeasure(StratumLabel stratum) : stratum_(std::move(stratum)) {}
  StratumLabel stratum_;
  std::vector<EulerAngle> active_;
  double norm_ = 1.0;
  CMatrix frame_;
};

// Supported strata: the qubit coset, and for N=3 the generic stratum
// (active angles beta, gamma, theta, a, b) and the two degenerate strata
// (active angles beta, theta, b).
PhaseSpaceMeasure phase_measure(const StratumLabel& stratum);

// Haar-distributed Euler points; reproducible for a fixed seed and
// independent of chunking/thread count.
std::vector<EulerPointSU3> sample_haar_su3(long count, uint64_t seed);

// Points of the stratum measure, distributed per its normalized density.
std::vector<EulerPointSU3> sample_measure(const PhaseSpaceMeasure& measure,
                                          long count, uint64_t seed);

// Tensor-product Gauss-Legendre grid over the active angles; the weights
// include the measure density, so they sum to N.
std::vector<std::pair<EulerPointSU3, double>> quadrature_grid(
    const PhaseSpaceMeasure& measure, int nodes_per_dim);

// Inverse-CDF draw of one angle from its factor of the Haar density
// (uniform for the torus angles, sin for beta/b, cos sin^3 for theta).
double draw_angle(EulerAngle which, double u01);

// Haar-distributed unitary of any dimension (QR of a Ginibre matrix with
// the phase convention fixed); used by the Monte-Carlo path for N > 3.
CMatrix sample_haar_unitary(int dim, const CounterRng& rng, uint64_t index);

// Integral of the Haar density over the full 8-angle chart (= 1), computed
// as the product of the per-angle 1-D integrals.
double haar_chart_mass(int nodes_per_angle = 64);

// N * integral of Delta(Omega) over SU(N=3) by nested factorized
// quadrature; resolves to the identity matrix.
CMatrix integrate_kernel_su3(const KernelModuli& m, int nodes_per_angle = 32);

}  // namespace wigneg
