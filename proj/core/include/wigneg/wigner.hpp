#pragma once

#include <utility>
#include <vector>

#include "wigneg/haar.hpp"
#include "wigneg/states.hpp"
#include "wigneg/swkernel.hpp"
#include "wigneg/types.hpp"

namespace wigneg {

// For each Cartan index s: n^(s)_mu = tr(U lam_s U^dag lam_mu) / 2, a unit
// vector in R^{N^2-1}; the set is orthonormal. U must be special unitary.
std::vector<RVector> n_vectors(const CMatrix& u, int dim);

// Bloch-form Wigner function
//   W = (1/N) (1 + (N^2-1)/sqrt(N+1) (xi, n)),   n = sum_s mu_s n^(s).
double wigner_value(const BlochState& state, const KernelModuli& m, const CMatrix& u);

// Matrix-form pairing W = tr(rho Delta(U)); the cross-validation oracle for
// wigner_value. Both agree to 1e-12.
double wigner_value_matrix(const BlochState& state, const KernelModuli& m,
                           const CMatrix& u);

// Fast path for states given by their ordered spectrum (the density matrix
// diagonal in the reference frame): W = sum_ij pi_j r_i |U_ij|^2.
double wigner_value_diagonal(const RVector& state_spectrum,
                             const KernelSpectrum& kernel_spectrum,
                             const CMatrix& u);

// Spectral envelope: lower = sum_i pi_i r_{N-i+1}, upper = sum_i pi_i r_i,
// both spectra sorted descending and the state spectrum summing to 1. Every
// Wigner value lies inside, and both ends are attained somewhere on phase
// space.
std::pair<double, double> wigner_bounds(const RVector& state_spectrum,
                                        const KernelSpectrum& kernel_spectrum);

// One Wigner evaluation with its provenance. Construction computes both
// the Bloch and the matrix pairing and rejects the point if they disagree
// beyond 1e-12 or the value escapes the spectral bounds.
struct WignerEvaluation {
  double value;
  BlochState state;
  KernelModuli moduli;
  EulerPointSU3 point;
};

// Evaluates at the coset representative of `chart` when one is given
// (applying its base-point frame), otherwise at the bare Euler unitary.
WignerEvaluation evaluate_wigner(const BlochState& state, const KernelModuli& m,
                                 const EulerPointSU3& point,
                                 const PhaseSpaceMeasure* chart = nullptr);

}  // namespace wigneg
