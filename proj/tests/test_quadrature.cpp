#include <doctest.h>

#include <cmath>

#include "wigneg/quadrature.hpp"

using namespace wigneg;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  double mass = 0.0, x2 = 0.0, x14 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mass += w[i];
    x2 += w[i] * x[i] * x[i];
    x14 += w[i] * std::pow(x[i], 14);
  }
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(x14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));  // degree 14 <= 2*8-1
}

TEST_CASE("composite axis with density") {
  const QuadratureAxis ax = make_axis(0.0, M_PI, 48, [](double x) { return std::sin(x); });
  CHECK(ax.mass() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ax.x.size() == 48);
}

TEST_CASE("tensor integration is deterministic across thread counts") {
  std::vector<QuadratureAxis> axes = {make_axis(0.0, 1.0, 16), make_axis(0.0, 1.0, 16),
                                      make_axis(0.0, 1.0, 16)};
  auto f = [](const double* c) { return std::exp(-c[0] * c[1]) + std::cos(c[2]); };
  const double v1 = integrate_tensor(axes, f, 1);
  const double v2 = integrate_tensor(axes, f, 2);
  const double v7 = integrate_tensor(axes, f, 7);
  CHECK(v1 == v2);
  CHECK(v1 == v7);
}

TEST_CASE("counter rng is reproducible and uniform-ish") {
  const CounterRng a(42), b(42), c(43);
  CHECK(a.bits(1, 7) == b.bits(1, 7));
  CHECK(a.bits(1, 7) != c.bits(1, 7));
  double mean = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = a.uniform(5, static_cast<uint64_t>(i));
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    mean += u;
  }
  mean /= n;
  CHECK(std::abs(mean - 0.5) < 0.01);

  double nsum = 0.0, nsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = a.normal(6, static_cast<uint64_t>(i));
    nsum += g;
    nsq += g * g;
  }
  CHECK(std::abs(nsum / n) < 0.03);
  CHECK(std::abs(nsq / n - 1.0) < 0.05);
}

TEST_CASE("triangle quadrature") {
  const double v0[2] = {0.0, 0.0}, v1[2] = {1.0, 0.0}, v2[2] = {0.0, 1.0};
  const double area = integrate_triangle(v0, v1, v2, [](double, double) { return 1.0; });
  CHECK(area == doctest::Approx(0.5).epsilon(1e-14));
  // int over unit triangle of x*y = 1/24
  const double xy = integrate_triangle(v0, v1, v2, [](double x, double y) { return x * y; });
  CHECK(xy == doctest::Approx(1.0 / 24.0).epsilon(1e-13));
}
