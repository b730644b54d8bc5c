#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "wigneg/types.hpp"

namespace wigneg {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Nodes and weights on [lo, hi]; weights absorb the per-axis density factor
// when one is given. The rule is composite: nodes_total points split into
// panels of panel_size Gauss-Legendre points, which keeps convergence
// graceful on integrands with kinks (|W| crossing zero).
struct QuadratureAxis {
  std::vector<double> x;
  std::vector<double> w;
  double mass() const;
};

QuadratureAxis make_axis(double lo, double hi, int nodes_total,
                         double (*density)(double) = nullptr, int panel_size = 8);

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

int resolve_thread_count(int requested);

// Tensor-product integration over the given axes with f seeing the node
// index per axis (so callers can precompute per-axis tables). The
// outermost axis index partitions the work; per-index partial sums are
// combined in index order, so the result is bitwise identical for any
// thread count.
template <class F>
double integrate_tensor_indexed(const std::vector<QuadratureAxis>& axes, F&& f,
                                int threads = 0) {
  const size_t ndim = axes.size();
  if (ndim == 0) return 0.0;
  const size_t outer = axes[0].x.size();
  std::vector<double> partial(outer, 0.0);

  auto run_outer = [&](size_t i0) {
    std::vector<size_t> idx(ndim, 0);
    idx[0] = i0;
    KahanSum acc;
    if (ndim == 1) {
      acc.add(axes[0].w[i0] * f(idx.data()));
    } else {
      for (;;) {
        double wprod = axes[0].w[i0];
        for (size_t d = 1; d < ndim; ++d) wprod *= axes[d].w[idx[d]];
        acc.add(wprod * f(idx.data()));
        size_t d = ndim - 1;
        for (;;) {
          if (++idx[d] < axes[d].x.size()) break;
          idx[d] = 0;
          if (--d == 0) goto done;
        }
      }
    done:;
    }
    partial[i0] = acc.value();
  };

  const int nthreads = resolve_thread_count(threads);
  if (nthreads <= 1 || outer < 2) {
    for (size_t i = 0; i < outer; ++i) run_outer(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= outer) return;
          run_outer(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  KahanSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

// Same, with f seeing the node coordinates instead of indexes. Supports up
// to 8 axes (the full Euler chart).
template <class F>
double integrate_tensor(const std::vector<QuadratureAxis>& axes, F&& f, int threads = 0) {
  const size_t ndim = axes.size();
  return integrate_tensor_indexed(
      axes,
      [&axes, &f, ndim](const size_t* idx) {
        double coord[8];
        for (size_t d = 0; d < ndim && d < 8; ++d) coord[d] = axes[d].x[idx[d]];
        return f(coord);
      },
      threads);
}

// Counter-based generator: draw k of stream s under a fixed seed is a pure
// function of (seed, s, k). Parallel chunks reproduce the same sequence for
// any scheduling. SplitMix64 finalizer.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t bits(uint64_t stream, uint64_t counter) const;
  // Uniform on [0, 1).
  double uniform(uint64_t stream, uint64_t counter) const;
  // Standard normal; consumes counters 2k and 2k+1 of the stream.
  double normal(uint64_t stream, uint64_t counter) const;

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
};

// Exact integral of a bivariate polynomial-like integrand over a triangle,
// via a Duffy-type collapse to a tensor Gauss-Legendre grid.
double integrate_triangle(const double v0[2], const double v1[2], const double v2[2],
                          double (*f)(double, double), int order = 24);

}  // namespace wigneg
