#include "wigneg/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "wigneg/liealg.hpp"

namespace wigneg {

namespace {

void check_special_unitary(const CMatrix& u, int dim) {
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("expected a " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " unitary");
  }
  if ((u * u.adjoint() - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-10 ||
      std::abs(u.determinant() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("matrix is not special unitary to 1e-10");
  }
}

}  // namespace

std::vector<RVector> n_vectors(const CMatrix& u, int dim) {
  check_special_unitary(u, dim);
  const GellMannBasis& basis = basis_for(dim);
  std::vector<RVector> out;
  out.reserve(basis.cartan_indices().size());
  for (int s : basis.cartan_indices()) {
    const CMatrix rotated = u * basis.element(s) * u.adjoint();
    RVector n(basis.size());
    for (int mu = 1; mu <= basis.size(); ++mu) {
      n(mu - 1) = 0.5 * (rotated * basis.element(mu)).trace().real();
    }
    out.push_back(std::move(n));
  }
  return out;
}

double wigner_value(const BlochState& state, const KernelModuli& m, const CMatrix& u) {
  const int n = state.dim();
  if (m.dim() != n) throw std::invalid_argument("wigner_value: dimension mismatch");
  const auto ns = n_vectors(u, n);
  double dot = 0.0;
  for (size_t s = 0; s < ns.size(); ++s) {
    dot += m.mu()(static_cast<Eigen::Index>(s)) * state.bloch().dot(ns[s]);
  }
  const double coeff = (static_cast<double>(n) * n - 1.0) / std::sqrt(n + 1.0);
  return (1.0 + coeff * dot) / n;
}

double wigner_value_matrix(const BlochState& state, const KernelModuli& m,
                           const CMatrix& u) {
  if (m.dim() != state.dim()) {
    throw std::invalid_argument("wigner_value_matrix: dimension mismatch");
  }
  const CMatrix rho = density_from_bloch(state);
  return (rho * kernel_matrix(m, u)).trace().real();
}

double wigner_value_diagonal(const RVector& state_spectrum,
                             const KernelSpectrum& kernel_spectrum,
                             const CMatrix& u) {
  const int n = kernel_spectrum.dim();
  if (state_spectrum.size() != n || u.rows() != n || u.cols() != n) {
    throw std::invalid_argument("wigner_value_diagonal: dimension mismatch");
  }
  double w = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w += kernel_spectrum.pis()(j) * state_spectrum(i) * std::norm(u(i, j));
    }
  }
  return w;
}

WignerEvaluation evaluate_wigner(const BlochState& state, const KernelModuli& m,
                                 const EulerPointSU3& point,
                                 const PhaseSpaceMeasure* chart) {
  const CMatrix u = chart != nullptr
                        ? chart->representative(point)
                        : (state.dim() == 2
                               ? su2_from_euler({point.alpha, point.beta, point.gamma})
                               : su3_from_euler(point));
  const double bloch_form = wigner_value(state, m, u);
  const double matrix_form = wigner_value_matrix(state, m, u);
  if (std::abs(bloch_form - matrix_form) > 1e-12) {
    throw std::logic_error("evaluate_wigner: Bloch and matrix pairings disagree");
  }
  const auto [eigs, evec] = eigen_decompose_descending(density_from_bloch(state));
  const auto [lo, hi] = wigner_bounds(eigs, spectrum_from_moduli(m));
  if (bloch_form < lo - 1e-10 || bloch_form > hi + 1e-10) {
    throw std::logic_error("evaluate_wigner: value escapes the spectral bounds");
  }
  return {bloch_form, state, m, point};
}

std::pair<double, double> wigner_bounds(const RVector& state_spectrum,
                                        const KernelSpectrum& kernel_spectrum) {
  const int n = kernel_spectrum.dim();
  if (state_spectrum.size() != n) {
    throw std::invalid_argument("wigner_bounds: dimension mismatch");
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (state_spectrum(i) < state_spectrum(i + 1) - 1e-12) {
      throw std::invalid_argument("wigner_bounds: state spectrum must be descending");
    }
  }
  if (std::abs(state_spectrum.sum() - 1.0) > 1e-10) {
    throw std::invalid_argument("wigner_bounds: state spectrum must sum to 1");
  }
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    lo += kernel_spectrum.pis()(i) * state_spectrum(n - 1 - i);
    hi += kernel_spectrum.pis()(i) * state_spectrum(i);
  }
  return {lo, hi};
}

}  // namespace wigneg
