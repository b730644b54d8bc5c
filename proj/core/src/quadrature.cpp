#include "wigneg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wigneg {

namespace {

// Newton iteration on Legendre P_n starting from the Chebyshev-like guess.
void gauss_legendre_raw(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<size_t>(n), 0.0);
  w.assign(static_cast<size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[static_cast<size_t>(i)] = -z;
    x[static_cast<size_t>(n - 1 - i)] = z;
    const double wi = 2.0 / ((1.0 - z * z) * pp * pp);
    w[static_cast<size_t>(i)] = wi;
    w[static_cast<size_t>(n - 1 - i)] = wi;
  }
}

const std::pair<std::vector<double>, std::vector<double>>& cached_gl(int n) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> x, w;
    gauss_legendre_raw(n, x, w);
    it = cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first;
  }
  return it->second;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  const auto& [x, w] = cached_gl(n);
  nodes = x;
  weights = w;
}

double QuadratureAxis::mass() const {
  KahanSum s;
  for (double v : w) s.add(v);
  return s.value();
}

QuadratureAxis make_axis(double lo, double hi, int nodes_total,
                         double (*density)(double), int panel_size) {
  if (nodes_total < 2) throw std::invalid_argument("make_axis: need >= 2 nodes");
  if (panel_size < 2) panel_size = 2;
  if (panel_size > nodes_total) panel_size = nodes_total;
  // never fewer nodes than asked for
  const int panels = (nodes_total + panel_size - 1) / panel_size;
  std::vector<double> gx, gw;
  gauss_legendre(panel_size, gx, gw);

  QuadratureAxis axis;
  axis.x.reserve(static_cast<size_t>(panels) * gx.size());
  axis.w.reserve(static_cast<size_t>(panels) * gx.size());
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double mid = a + width / 2.0;
    const double half = width / 2.0;
    for (size_t j = 0; j < gx.size(); ++j) {
      const double xx = mid + half * gx[j];
      double ww = half * gw[j];
      if (density != nullptr) ww *= density(xx);
      axis.x.push_back(xx);
      axis.w.push_back(ww);
    }
  }
  return axis;
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

uint64_t CounterRng::bits(uint64_t stream, uint64_t counter) const {
  uint64_t z = seed_;
  z ^= stream * 0xA24BAED4963EE407ULL + 0x9E3779B97F4A7C15ULL;
  z += counter * 0x9E3779B97F4A7C15ULL + 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

double CounterRng::uniform(uint64_t stream, uint64_t counter) const {
  return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
}

double CounterRng::normal(uint64_t stream, uint64_t counter) const {
  double u1 = uniform(stream, 2 * counter);
  const double u2 = uniform(stream, 2 * counter + 1);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double integrate_triangle(const double v0[2], const double v1[2], const double v2[2],
                          double (*f)(double, double), int order) {
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  const double e1x = v1[0] - v0[0], e1y = v1[1] - v0[1];
  const double e2x = v2[0] - v0[0], e2y = v2[1] - v0[1];
  const double jac = std::abs(e1x * e2y - e1y * e2x);
  // Collapse the unit square onto the reference triangle: (u, uv) with
  // an extra factor u in the Jacobian.
  KahanSum acc;
  for (int i = 0; i < order; ++i) {
    const double u = 0.5 * (gx[static_cast<size_t>(i)] + 1.0);
    const double wu = 0.5 * gw[static_cast<size_t>(i)];
    for (int j = 0; j < order; ++j) {
      const double v = 0.5 * (gx[static_cast<size_t>(j)] + 1.0);
      const double wv = 0.5 * gw[static_cast<size_t>(j)];
      // (a, t) = (u(1-v), uv) sweeps {a,t >= 0, a+t <= 1} with Jacobian u.
      const double t = u * v;
      const double a = u - t;
      const double px = v0[0] + a * e1x + t * e2x;
      const double py = v0[1] + a * e1y + t * e2y;
      acc.add(wu * wv * u * jac * f(px, py));
    }
  }
  return acc.value();
}

}  // namespace wigneg
