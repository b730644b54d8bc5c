#pragma once

#include <stdexcept>
#include <utility>

#include "wigneg/types.hpp"

namespace wigneg {

// Thrown when a would-be density matrix has an eigenvalue below -kPsdTol.
struct NotAStateError : std::domain_error {
  explicit NotAStateError(double min_eig)
      : std::domain_error("not a state: most negative eigenvalue " +
                          std::to_string(min_eig)),
        min_eigenvalue(min_eig) {}
  double min_eigenvalue;
};

// A state of an N-level system as the (N^2-1)-dimensional Bloch vector of
//   rho = I/N + sqrt((N-1)/2N) (xi, lam).
// Positive semidefiniteness is checked on construction.
class BlochState {
 public:
  BlochState(int dim, RVector bloch);

  static BlochState maximally_mixed(int dim);
  // Diagonal qutrit state with only the Cartan components set.
  static BlochState qutrit_diagonal(double xi3, double xi8);
  // Diagonal qubit state (0, 0, r).
  static BlochState qubit_diagonal(double r);

  int dim() const { return dim_; }
  const RVector& bloch() const { return bloch_; }

 private:
  int dim_;
  RVector bloch_;
};

// Bloch radius scale sqrt((N-1)/2N).
double bloch_scale(int dim);

CMatrix density_from_bloch(const BlochState& state);

// Inverts density_from_bloch: xi_mu = tr(rho lam_mu) / (2 sqrt((N-1)/2N)).
// Requires unit trace to 1e-10 and hermiticity.
BlochState bloch_from_density(const CMatrix& rho);

// Ordered qutrit eigenvalues (r1 >= r2 >= r3, sum 1) together with the
// redundant invariants (xi3, xi8) of the diagonal representative.
struct SimplexPoint {
  double r1, r2, r3;
  double xi3, xi8;
};

// (xi3, xi8) must satisfy 0 <= xi3 <= sqrt(3)/2, xi3/sqrt(3) <= xi8 <= 1/2
// (small negative slack is tolerated for boundary points).
SimplexPoint simplex_from_xi(double xi3, double xi8);

// Sorts the eigenvalues descending and fills in the invariants.
SimplexPoint simplex_from_eigenvalues(double r1, double r2, double r3);

bool inside_ordered_simplex(double xi3, double xi8, double slack = 1e-12);

// Eigen-decomposition of a Hermitian matrix with eigenvalues descending;
// returns (eigenvalues, U) with U herm U^dag = diag(eigenvalues).
std::pair<RVector, CMatrix> eigen_decompose_descending(const CMatrix& herm);

// Qutrit specialization returning the simplex point of the spectrum.
std::pair<SimplexPoint, CMatrix> diagonalize(const CMatrix& rho);

}  // namespace wigneg
