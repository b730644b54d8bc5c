#include <doctest.h>

#include <cmath>
#include <random>

#include "wigneg/liealg.hpp"

using namespace wigneg;

namespace {

CMatrix random_traceless_hermitian(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(gen), dist(gen));
  CMatrix h = (m + m.adjoint()) / 2.0;
  h -= (h.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
  return h;
}

}  // namespace

TEST_CASE("pauli basis for N=2") {
  const GellMannBasis b = generate_basis(2);
  REQUIRE(b.size() == 3);
  CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, Complex(0, -1), Complex(0, 1), 0;
  s3 << 1, 0, 0, -1;
  CHECK((b.element(1) - s1).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  CHECK((b.element(2) - s2).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  CHECK((b.element(3) - s3).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const double want = i == j ? 2.0 : 0.0;
      CHECK(std::abs((b.element(i) * b.element(j)).trace() - want) < 1e-12);
    }
}

TEST_CASE("gell-mann basis for N=3") {
  const GellMannBasis b = generate_basis(3);
  REQUIRE(b.size() == 8);
  CHECK(b.cartan_indices() == std::vector<int>{3, 8});

  CMatrix l3 = CMatrix::Zero(3, 3), l8 = CMatrix::Zero(3, 3);
  l3.diagonal() << 1, -1, 0;
  l8.diagonal() << 1, 1, -2;
  l8 /= std::sqrt(3.0);
  CHECK((b.element(3) - l3).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((b.element(8) - l8).cwiseAbs().maxCoeff() < 1e-15);

  for (int mu = 1; mu <= 8; ++mu) {
    CHECK(std::abs(b.element(mu).trace()) < 1e-12);
    CHECK(is_hermitian(b.element(mu)));
    for (int nu = 1; nu <= 8; ++nu) {
      const double want = mu == nu ? 2.0 : 0.0;
      CHECK(std::abs((b.element(mu) * b.element(nu)).trace() - want) < 1e-12);
    }
  }
}

TEST_CASE("generalized basis for N=4") {
  const GellMannBasis b = generate_basis(4);
  REQUIRE(b.size() == 15);
  CHECK(b.cartan_indices() == std::vector<int>{3, 8, 15});
  for (int mu = 1; mu <= 15; ++mu) {
    CHECK(std::abs(b.element(mu).trace()) < 1e-12);
    for (int nu = 1; nu <= 15; ++nu) {
      const double want = mu == nu ? 2.0 : 0.0;
      CHECK(std::abs((b.element(mu) * b.element(nu)).trace() - want) < 1e-12);
    }
  }
}

TEST_CASE("cartan elements are diagonal and mutually commute") {
  for (int n : {2, 3, 4, 5}) {
    const GellMannBasis& b = basis_for(n);
    for (int s : b.cartan_indices()) {
      const CMatrix& lam = b.element(s);
      CHECK((lam - CMatrix(lam.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-15);
      for (int t : b.cartan_indices()) CHECK(commutes(lam, b.element(t)));
    }
  }
}

TEST_CASE("commutes") {
  const GellMannBasis& b = basis_for(3);
  CHECK(commutes(b.element(3), b.element(8)));
  CHECK(!commutes(b.element(1), b.element(2)));
  CHECK(commutes(b.element(3), b.element(3)));
  CHECK_THROWS_AS(commutes(b.element(1), basis_for(2).element(1)), std::invalid_argument);
}

TEST_CASE("invalid dimensions") {
  CHECK_THROWS_AS(generate_basis(1), std::invalid_argument);
  CHECK_THROWS_AS(generate_basis(0), std::invalid_argument);
  CHECK_THROWS_AS(generate_basis(-3), std::invalid_argument);
}

TEST_CASE("traceless hermitian reconstruction") {
  for (int n : {2, 3, 4}) {
    const GellMannBasis& b = basis_for(n);
    const CMatrix m = random_traceless_hermitian(n, 17u + static_cast<unsigned>(n));
    const RVector c = expand_traceless(m, b);
    CHECK((reconstruct(c, b) - m).cwiseAbs().maxCoeff() < 1e-12);
  }
}
