#pragma once

#include <Eigen/Dense>
#include <complex>

namespace wigneg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

// Tolerance for structural identities (hermiticity, orthonormality,
// master equations). All matrices in this library are tiny, so there is
// no reason to be looser than this.
inline constexpr double kStructuralTol = 1e-12;

// Eigenvalues of a density matrix may dip this far below zero and the
// state is still accepted; pure states sit exactly on the boundary.
inline constexpr double kPsdTol = 1e-12;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wigneg
