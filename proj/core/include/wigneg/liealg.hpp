#pragma once

#include <vector>

#include "wigneg/types.hpp"

namespace wigneg {

// Orthonormal Hermitian basis of su(N): the Pauli matrices for N=2, the
// standard Gell-Mann matrices for N=3 and their generalization above.
// Elements are indexed 1..N^2-1; the N-1 diagonal (Cartan) generators sit
// at the conventional slots k^2-1 (3, 8, 15, ...). Normalization is
// tr(lam_mu lam_nu) = 2 delta_{mu nu}.
class GellMannBasis {
 public:
  static GellMannBasis make(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }

  // 1-based index matching the usual physics convention.
  const CMatrix& element(int mu) const;
  const std::vector<CMatrix>& elements() const { return elements_; }

  // 1-based indices of the diagonal generators, ascending.
  const std::vector<int>& cartan_indices() const { return cartan_; }

 private:
  GellMannBasis(int dim, std::vector<CMatrix> elements, std::vector<int> cartan);

  int dim_;
  std::vector<CMatrix> elements_;
  std::vector<int> cartan_;
};

// Builds (and validates) the basis for the given dimension. dim < 2 is an
// invalid-dimension error.
GellMannBasis generate_basis(int dim);

// Shared, lazily constructed basis per dimension. Bases are immutable, so
// handing out references is thread-safe.
const GellMannBasis& basis_for(int dim);

bool is_hermitian(const CMatrix& m, double tol = kStructuralTol);

// True iff ||ab - ba||_max < tol. Throws on dimension mismatch.
bool commutes(const CMatrix& a, const CMatrix& b, double tol = kStructuralTol);

// Expansion coefficients c_mu = tr(m lam_mu)/2 of a traceless Hermitian
// matrix; reconstruct() inverts this.
RVector expand_traceless(const CMatrix& m, const GellMannBasis& basis);
CMatrix reconstruct(const RVector& coeffs, const GellMannBasis& basis);

}  // namespace wigneg
