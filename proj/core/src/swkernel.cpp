#include "wigneg/swkernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wigneg/liealg.hpp"

namespace wigneg {

double kernel_kappa(int dim) {
  return std::sqrt(dim * (static_cast<double>(dim) * dim - 1.0) / 2.0);
}

KernelModuli::KernelModuli(int dim, RVector mu) : dim_(dim), mu_(std::move(mu)) {}

KernelModuli KernelModuli::from_zeta(double zeta) {
  if (zeta < 0.0 || zeta > std::numbers::pi / 3.0 + 1e-15) {
    throw std::domain_error("KernelModuli: zeta must lie in [0, pi/3]");
  }
  RVector mu(2);
  mu << std::sin(zeta), std::cos(zeta);
  return KernelModuli(3, std::move(mu));
}

KernelModuli KernelModuli::qubit() {
  RVector mu(1);
  mu << 1.0;
  return KernelModuli(2, std::move(mu));
}

KernelModuli KernelModuli::from_mu(int dim, RVector mu) {
  if (dim < 2) throw std::invalid_argument("KernelModuli: dimension must be >= 2");
  if (mu.size() != dim - 1) {
    throw std::invalid_argument("KernelModuli: expected N-1 Cartan coefficients");
  }
  if (std::abs(mu.squaredNorm() - 1.0) > 1e-9) {
    throw std::domain_error("KernelModuli: coefficients must lie on the unit sphere");
  }
  KernelModuli m(dim, std::move(mu));
  // Only the chamber with a descending spectrum is accepted; this is the
  // zeta range condition for N=3 and the analogous region above.
  const KernelSpectrum s = spectrum_from_moduli(m);
  for (int i = 0; i + 1 < dim; ++i) {
    if (s.pis()(i) < s.pis()(i + 1) - 1e-12) {
      throw std::domain_error("KernelModuli: spectrum not descending for this point");
    }
  }
  return m;
}

double KernelModuli::zeta() const {
  if (dim_ != 3) throw std::logic_error("KernelModuli::zeta is defined for N=3 only");
  return std::atan2(mu_(0), mu_(1));
}

KernelSpectrum::KernelSpectrum(RVector pis) : pis_(std::move(pis)) {
  const int n = static_cast<int>(pis_.size());
  if (n < 2) throw std::invalid_argument("KernelSpectrum: need at least 2 eigenvalues");
  for (int i = 0; i + 1 < n; ++i) {
    if (pis_(i) < pis_(i + 1) - kStructuralTol) {
      throw std::domain_error("KernelSpectrum: eigenvalues must be descending");
    }
  }
  if (std::abs(pis_.sum() - 1.0) > kStructuralTol ||
      std::abs(pis_.squaredNorm() - n) > 1e-10) {
    throw std::domain_error("KernelSpectrum: master equations violated");
  }
}

KernelSpectrum spectrum_from_moduli(const KernelModuli& m) {
  const int n = m.dim();
  const GellMannBasis& basis = basis_for(n);
  const double kappa = kernel_kappa(n);
  RVector pis = RVector::Constant(n, 1.0 / n);
  const auto& cartan = basis.cartan_indices();
  for (size_t s = 0; s < cartan.size(); ++s) {
    const CMatrix& lam = basis.element(cartan[s]);
    for (int i = 0; i < n; ++i) {
      pis(i) += kappa / n * m.mu()(static_cast<Eigen::Index>(s)) * lam(i, i).real();
    }
  }
  return KernelSpectrum(std::move(pis));
}

CMatrix kernel_matrix(const KernelModuli& m, const CMatrix& u) {
  const int n = m.dim();
  if (u.rows() != n || u.cols() != n) {
    throw std::invalid_argument("kernel_matrix: unitary has wrong dimension");
  }
  if ((u * u.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10 ||
      std::abs(u.determinant() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("kernel_matrix: U must be special unitary to 1e-10");
  }
  const GellMannBasis& basis = basis_for(n);
  const double kappa = kernel_kappa(n);
  CMatrix core = CMatrix::Identity(n, n);
  const auto& cartan = basis.cartan_indices();
  for (size_t s = 0; s < cartan.size(); ++s) {
    core += kappa * m.mu()(static_cast<Eigen::Index>(s)) * basis.element(cartan[s]);
  }
  return (u * core * u.adjoint()) / static_cast<double>(n);
}

StratumLabel::StratumLabel(int dim, std::vector<int> multiplicities)
    : dim_(dim), mult_(std::move(multiplicities)) {
  int total = 0;
  for (int k : mult_) {
    if (k < 1) throw std::invalid_argument("StratumLabel: multiplicities must be >= 1");
    total += k;
  }
  if (total != dim_) {
    throw std::invalid_argument("StratumLabel: multiplicities must sum to the dimension");
  }
}

StratumLabel StratumLabel::generic(int dim) {
  return StratumLabel(dim, std::vector<int>(static_cast<size_t>(dim), 1));
}

StratumLabel StratumLabel::qutrit_pi12_degenerate() { return StratumLabel(3, {2, 1}); }
StratumLabel StratumLabel::qutrit_pi23_degenerate() { return StratumLabel(3, {1, 2}); }
StratumLabel StratumLabel::qubit() { return StratumLabel(2, {1, 1}); }

bool StratumLabel::is_generic() const {
  return static_cast<int>(mult_.size()) == dim_;
}

std::string StratumLabel::name() const {
  std::string out = "(";
  int pos = 1;
  for (int k : mult_) {
    for (int j = 0; j < k; ++j) {
      if (j > 0) out += '|';
      out += std::to_string(pos++);
    }
  }
  out += ')';
  return out;
}

StratumLabel stratum_of(const KernelSpectrum& s, double tol) {
  std::vector<int> mult;
  int run = 1;
  for (int i = 1; i < s.dim(); ++i) {
    if (std::abs(s.pis()(i - 1) - s.pis()(i)) <= tol) {
      ++run;
    } else {
      mult.push_back(run);
      run = 1;
    }
  }
  mult.push_back(run);
  return StratumLabel(s.dim(), std::move(mult));
}

}  // namespace wigneg
