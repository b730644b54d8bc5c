#include "wigneg/states.hpp"

#include <algorithm>
#include <cmath>

#include "wigneg/liealg.hpp"

namespace wigneg {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

void check_state_dim(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("BlochState: dimension must be >= 2");
  }
}

}  // namespace

double bloch_scale(int dim) {
  return std::sqrt((dim - 1.0) / (2.0 * dim));
}

BlochState::BlochState(int dim, RVector bloch) : dim_(dim), bloch_(std::move(bloch)) {
  check_state_dim(dim_);
  if (bloch_.size() != static_cast<Eigen::Index>(dim_) * dim_ - 1) {
    throw std::invalid_argument("BlochState: Bloch vector must have length N^2-1");
  }
  // Reconstruct and check positivity; throws NotAStateError if violated.
  (void)density_from_bloch(*this);
}

BlochState BlochState::maximally_mixed(int dim) {
  check_state_dim(dim);
  return BlochState(dim, RVector::Zero(static_cast<Eigen::Index>(dim) * dim - 1));
}

BlochState BlochState::qutrit_diagonal(double xi3, double xi8) {
  RVector xi = RVector::Zero(8);
  xi(2) = xi3;
  xi(7) = xi8;
  return BlochState(3, xi);
}

BlochState BlochState::qubit_diagonal(double r) {
  RVector xi = RVector::Zero(3);
  xi(2) = r;
  return BlochState(2, xi);
}

CMatrix density_from_bloch(const BlochState& state) {
  const int n = state.dim();
  const GellMannBasis& basis = basis_for(n);
  CMatrix rho = CMatrix::Identity(n, n) / static_cast<double>(n);
  const double scale = bloch_scale(n);
  for (int mu = 1; mu <= basis.size(); ++mu) {
    const double c = state.bloch()(mu - 1);
    if (c != 0.0) rho += scale * c * basis.element(mu);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) throw NotAStateError(min_eig);
  return rho;
}

BlochState bloch_from_density(const CMatrix& rho) {
  const int n = static_cast<int>(rho.rows());
  check_state_dim(n);
  if (rho.cols() != n) {
    throw std::invalid_argument("bloch_from_density: matrix must be square");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("bloch_from_density: trace must be 1 to 1e-10");
  }
  if (!is_hermitian(rho, 1e-10)) {
    throw std::invalid_argument("bloch_from_density: matrix must be Hermitian");
  }
  const GellMannBasis& basis = basis_for(n);
  RVector xi(basis.size());
  const double scale = 2.0 * bloch_scale(n);
  for (int mu = 1; mu <= basis.size(); ++mu) {
    xi(mu - 1) = (rho * basis.element(mu)).trace().real() / scale;
  }
  return BlochState(n, std::move(xi));
}

bool inside_ordered_simplex(double xi3, double xi8, double slack) {
  return xi3 >= -slack && xi3 <= kSqrt3 / 2.0 + slack &&
         xi8 >= xi3 / kSqrt3 - slack && xi8 <= 0.5 + slack;
}

SimplexPoint simplex_from_xi(double xi3, double xi8) {
  if (!inside_ordered_simplex(xi3, xi8)) {
    throw std::domain_error("simplex_from_xi: (xi3, xi8) outside the ordered simplex");
  }
  SimplexPoint p;
  p.xi3 = xi3;
  p.xi8 = xi8;
  p.r1 = 1.0 / 3.0 + xi3 / kSqrt3 + xi8 / 3.0;
  p.r2 = 1.0 / 3.0 - xi3 / kSqrt3 + xi8 / 3.0;
  p.r3 = 1.0 / 3.0 - 2.0 * xi8 / 3.0;
  return p;
}

SimplexPoint simplex_from_eigenvalues(double r1, double r2, double r3) {
  double r[3] = {r1, r2, r3};
  std::sort(r, r + 3, std::greater<double>());
  if (std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-10 || r[2] < -kPsdTol) {
    throw std::domain_error("simplex_from_eigenvalues: not a qutrit spectrum");
  }
  SimplexPoint p;
  p.r1 = r[0];
  p.r2 = r[1];
  p.r3 = r[2];
  p.xi3 = kSqrt3 * (r[0] - r[1]) / 2.0;
  p.xi8 = (1.0 - 3.0 * r[2]) / 2.0;
  return p;
}

std::pair<RVector, CMatrix> eigen_decompose_descending(const CMatrix& herm) {
  if (!is_hermitian(herm, 1e-10)) {
    throw std::invalid_argument("eigen_decompose_descending: matrix must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  const int n = static_cast<int>(herm.rows());
  RVector eigs(n);
  CMatrix u(n, n);
  // Eigen sorts ascending; reverse so that u * herm * u^dag = diag(descending).
  for (int i = 0; i < n; ++i) {
    eigs(i) = es.eigenvalues()(n - 1 - i);
    u.row(i) = es.eigenvectors().col(n - 1 - i).adjoint();
  }
  return {eigs, u};
}

std::pair<SimplexPoint, CMatrix> diagonalize(const CMatrix& rho) {
  if (rho.rows() != 3 || rho.cols() != 3) {
    throw std::invalid_argument("diagonalize: expected a 3x3 density matrix");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("diagonalize: trace must be 1 to 1e-10");
  }
  auto [eigs, u] = eigen_decompose_descending(rho);
  if (eigs(2) < -kPsdTol) throw NotAStateError(eigs(2));
  return {simplex_from_eigenvalues(eigs(0), eigs(1), eigs(2)), u};
}

}  // namespace wigneg
