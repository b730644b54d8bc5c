#include "wigneg/liealg.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace wigneg {

namespace {

CMatrix zero(int n) { return CMatrix::Zero(n, n); }

}  // namespace

GellMannBasis::GellMannBasis(int dim, std::vector<CMatrix> elements,
                             std::vector<int> cartan)
    : dim_(dim), elements_(std::move(elements)), cartan_(std::move(cartan)) {}

const CMatrix& GellMannBasis::element(int mu) const {
  if (mu < 1 || mu > size()) {
    throw std::out_of_range("GellMannBasis::element: index " +
                            std::to_string(mu) + " outside 1.." +
                            std::to_string(size()));
  }
  return elements_[static_cast<size_t>(mu - 1)];
}

GellMannBasis GellMannBasis::make(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("GellMannBasis: dimension must be >= 2, got " +
                                std::to_string(dim));
  }
  const int n = dim;
  std::vector<CMatrix> el;
  el.reserve(static_cast<size_t>(n * n - 1));
  std::vector<int> cartan;

  // For k = 2..N append the off-diagonal pairs coupling (j,k), j<k, then the
  // k-1st diagonal generator. This places the diagonal generators at k^2-1
  // and reproduces the Pauli / Gell-Mann ordering for N=2,3.
  for (int k = 2; k <= n; ++k) {
    for (int j = 1; j < k; ++j) {
      CMatrix sym = zero(n);
      sym(j - 1, k - 1) = 1.0;
      sym(k - 1, j - 1) = 1.0;
      el.push_back(sym);

      CMatrix asym = zero(n);
      asym(j - 1, k - 1) = Complex(0.0, -1.0);
      asym(k - 1, j - 1) = Complex(0.0, 1.0);
      el.push_back(asym);
    }
    CMatrix diag = zero(n);
    const double norm = std::sqrt(2.0 / (static_cast<double>(k) * (k - 1)));
    for (int j = 0; j < k - 1; ++j) diag(j, j) = norm;
    diag(k - 1, k - 1) = -norm * (k - 1);
    el.push_back(diag);
    cartan.push_back(k * k - 1);
  }

  GellMannBasis basis(n, std::move(el), std::move(cartan));

  // tr(lam_mu lam_nu) = 2 delta_{mu nu}, tracelessness, hermiticity.
  for (int mu = 1; mu <= basis.size(); ++mu) {
    const CMatrix& a = basis.element(mu);
    if (std::abs(a.trace()) > kStructuralTol || !is_hermitian(a)) {
      throw std::logic_error("GellMannBasis: element failed structure check");
    }
    for (int nu = mu; nu <= basis.size(); ++nu) {
      const Complex t = (a * basis.element(nu)).trace();
      const double want = (mu == nu) ? 2.0 : 0.0;
      if (std::abs(t - want) > kStructuralTol) {
        throw std::logic_error("GellMannBasis: orthonormality violated");
      }
    }
  }
  return basis;
}

GellMannBasis generate_basis(int dim) { return GellMannBasis::make(dim); }

const GellMannBasis& basis_for(int dim) {
  static std::mutex mu;
  static std::map<int, GellMannBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dim);
  if (it == cache.end()) {
    it = cache.emplace(dim, GellMannBasis::make(dim)).first;
  }
  return it->second;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool commutes(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("commutes: dimension mismatch");
  }
  return (a * b - b * a).cwiseAbs().maxCoeff() < tol;
}

RVector expand_traceless(const CMatrix& m, const GellMannBasis& basis) {
  if (m.rows() != basis.dim() || m.cols() != basis.dim()) {
    throw std::invalid_argument("expand_traceless: dimension mismatch");
  }
  RVector c(basis.size());
  for (int mu = 1; mu <= basis.size(); ++mu) {
    c(mu - 1) = 0.5 * (m * basis.element(mu)).trace().real();
  }
  return c;
}

CMatrix reconstruct(const RVector& coeffs, const GellMannBasis& basis) {
  if (coeffs.size() != basis.size()) {
    throw std::invalid_argument("reconstruct: coefficient count mismatch");
  }
  CMatrix m = CMatrix::Zero(basis.dim(), basis.dim());
  for (int mu = 1; mu <= basis.size(); ++mu) {
    m += coeffs(mu - 1) * basis.element(mu);
  }
  return m;
}

}  // namespace wigneg
