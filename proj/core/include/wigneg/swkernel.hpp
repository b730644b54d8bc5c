#pragma once

#include <string>
#include <vector>

#include "wigneg/types.hpp"

namespace wigneg {

// Normalization constant kappa = sqrt(N(N^2-1)/2) of the kernel expansion.
double kernel_kappa(int dim);

// Point on the kernel moduli sphere: the N-1 Cartan expansion coefficients
// (mu_3, mu_8, ..., mu_{N^2-1}) with sum of squares 1. For N=3 the sphere
// degenerates to a unit-circle arc parameterized by the apex angle
// zeta in [0, pi/3] via mu_3 = sin(zeta), mu_8 = cos(zeta).
class KernelModuli {
 public:
  static KernelModuli from_zeta(double zeta);          // N = 3
  static KernelModuli qubit();                         // N = 2, mu = (1)
  static KernelModuli from_mu(int dim, RVector mu);    // general N

  int dim() const { return dim_; }
  const RVector& mu() const { return mu_; }
  // Apex angle; only meaningful for N = 3.
  double zeta() const;

 private:
  KernelModuli(int dim, RVector mu);
  int dim_;
  RVector mu_;
};

// Ordered kernel eigenvalues pi_1 >= ... >= pi_N satisfying the master
// equations sum(pi) = 1 and sum(pi^2) = N.
class KernelSpectrum {
 public:
  explicit KernelSpectrum(RVector pis);
  int dim() const { return static_cast<int>(pis_.size()); }
  const RVector& pis() const { return pis_; }
  double pi(int i) const { return pis_(i - 1); }  // 1-based

 private:
  RVector pis_;
};

KernelSpectrum spectrum_from_moduli(const KernelModuli& m);

// Delta = (1/N) U (I + kappa sum_s mu_s lam_s) U^dag. U must be special
// unitary to 1e-10.
CMatrix kernel_matrix(const KernelModuli& m, const CMatrix& u);

// Degeneracy pattern of a kernel spectrum. Equal eigenvalues are joined by
// a bar in the printed name, so the qutrit kernel at zeta=0 ({1,1,-1},
// pi_1 = pi_2) is "(1|23)" and the one at zeta=pi/3 ({5/3,-1/3,-1/3},
// pi_2 = pi_3) is "(12|3)".
class StratumLabel {
 public:
  StratumLabel(int dim, std::vector<int> multiplicities);
  static StratumLabel generic(int dim);
  static StratumLabel qutrit_pi12_degenerate();  // (1|23)
  static StratumLabel qutrit_pi23_degenerate();  // (12|3)
  static StratumLabel qubit();                   // (12)

  int dim() const { return dim_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  bool is_generic() const;
  std::string name() const;

  bool operator==(const StratumLabel& other) const = default;

 private:
  int dim_;
  std::vector<int> mult_;
};

// Pattern of eigenvalue equalities within tol.
StratumLabel stratum_of(const KernelSpectrum& s, double tol = 1e-9);

}  // namespace wigneg
