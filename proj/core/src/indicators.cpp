#include "wigneg/indicators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "wigneg/liealg.hpp"
#include "wigneg/quadrature.hpp"
#include "wigneg/wigner.hpp"

namespace wigneg {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kPi = std::numbers::pi;

// Simplex vertices and the derived region corners.
constexpr double kVertO[2] = {0.0, 0.0};
constexpr double kVertA[2] = {0.0, 0.5};
constexpr double kVertC[2] = {kSqrt3 / 2.0, 0.5};
constexpr double kVertP[2] = {kSqrt3 / 8.0, 0.125};
constexpr double kVertS[2] = {0.0, 0.25};
constexpr double kVertQ[2] = {kSqrt3 / 4.0, 0.25};
constexpr double kVertR[2] = {kSqrt3 / 3.0, 0.5};

int default_nodes(const StratumLabel& s) {
  if (s.dim() == 2) return 1024;
  return s.is_generic() ? 24 : 48;
}

// ---------------------------------------------------------------------------
// Fast integrands over the stratum charts for states diagonal in the
// reference frame. Each returns |W| - W = 2 max(0, -W): since the coset
// integral of W itself is exactly 1, delta = integral(|W| - W) dOmega, and
// this form keeps every estimate nonnegative and removes the smooth part
// of the integrand from the error budget. Each integrand caches per-axis
// trig tables so the inner loop is branch- and trig-free; all are
// cross-validated against wigner_value / wigner_value_matrix in the tests.

// Qubit coset, active angles (alpha, beta):  W depends on beta only.
struct QubitIntegrand {
  std::vector<double> wvals;  // |W| per beta node
  QubitIntegrand(const RVector& r, const KernelSpectrum& ks,
                 const QuadratureAxis& beta_axis) {
    wvals.reserve(beta_axis.x.size());
    for (double beta : beta_axis.x) {
      const double c2 = std::cos(beta / 2.0) * std::cos(beta / 2.0);
      const double s2 = 1.0 - c2;
      const double w = ks.pis()(0) * (r(0) * c2 + r(1) * s2) +
                       ks.pis()(1) * (r(0) * s2 + r(1) * c2);
      wvals.push_back(std::abs(w) - w);
    }
  }
  double operator()(const size_t* idx) const { return wvals[idx[1]]; }
};

// Degenerate qutrit strata, active angles (beta, theta, b); all-real chart.
// pcol holds the kernel eigenvalue attached to each column of the coset
// representative (reversed when the chart is anchored at the Weyl-rotated
// base point).
struct DegenerateQutritIntegrand {
  double r1, r2, r3;
  double pc1, pc2, pc3;
  std::vector<double> cb2, sb2, ct, st, cbb2, sbb2;

  DegenerateQutritIntegrand(const RVector& r, const double pcol[3],
                            const std::vector<QuadratureAxis>& axes)
      : r1(r(0)), r2(r(1)), r3(r(2)), pc1(pcol[0]), pc2(pcol[1]), pc3(pcol[2]) {
    for (double v : axes[0].x) {
      cb2.push_back(std::cos(v / 2.0));
      sb2.push_back(std::sin(v / 2.0));
    }
    for (double v : axes[1].x) {
      ct.push_back(std::cos(v));
      st.push_back(std::sin(v));
    }
    for (double v : axes[2].x) {
      cbb2.push_back(std::cos(v / 2.0));
      sbb2.push_back(std::sin(v / 2.0));
    }
  }

  double operator()(const size_t* idx) const {
    const double cb = cb2[idx[0]], sb = sb2[idx[0]];
    const double c = ct[idx[1]], s = st[idx[1]];
    const double cb3 = cbb2[idx[2]], sb3 = sbb2[idx[2]];
    // columns of B(beta) D(theta) F(b)
    const double u11 = cb * c * cb3 - sb * sb3;
    const double u21 = -sb * c * cb3 - cb * sb3;
    const double u31 = -s * cb3;
    const double u12 = cb * c * sb3 + sb * cb3;
    const double u22 = -sb * c * sb3 + cb * cb3;
    const double u32 = -s * sb3;
    const double u13 = cb * s;
    const double u23 = -sb * s;
    const double u33 = c;
    const double w = pc1 * (r1 * u11 * u11 + r2 * u21 * u21 + r3 * u31 * u31) +
                     pc2 * (r1 * u12 * u12 + r2 * u22 * u22 + r3 * u32 * u32) +
                     pc3 * (r1 * u13 * u13 + r2 * u23 * u23 + r3 * u33 * u33);
    return std::abs(w) - w;
  }
};

// Generic qutrit stratum, active angles (beta, gamma, theta, a, b).
struct GenericQutritIntegrand {
  double r1, r2, r3;
  double p1, p2, p3;
  std::vector<double> cb2, sb2, ct, st, cbb2, sbb2;
  std::vector<Complex> eg, ea;

  GenericQutritIntegrand(const RVector& r, const KernelSpectrum& ks,
                         const std::vector<QuadratureAxis>& axes)
      : r1(r(0)), r2(r(1)), r3(r(2)),
        p1(ks.pis()(0)), p2(ks.pis()(1)), p3(ks.pis()(2)) {
    for (double v : axes[0].x) {
      cb2.push_back(std::cos(v / 2.0));
      sb2.push_back(std::sin(v / 2.0));
    }
    for (double v : axes[1].x) eg.push_back(std::polar(1.0, v / 2.0));
    for (double v : axes[2].x) {
      ct.push_back(std::cos(v));
      st.push_back(std::sin(v));
    }
    for (double v : axes[3].x) ea.push_back(std::polar(1.0, v / 2.0));
    for (double v : axes[4].x) {
      cbb2.push_back(std::cos(v / 2.0));
      sbb2.push_back(std::sin(v / 2.0));
    }
  }

  double operator()(const size_t* idx) const {
    const double cb = cb2[idx[0]], sb = sb2[idx[0]];
    const Complex g = eg[idx[1]];
    const double c = ct[idx[2]], s = st[idx[2]];
    const Complex e = ea[idx[3]];
    const double cb3 = cbb2[idx[4]], sb3 = sbb2[idx[4]];

    const Complex ge = g * e;
    const Complex gec = std::conj(ge);
    // columns of B(beta) C(gamma) D(theta) E(a) F(b)
    const Complex v1 = ge * (c * cb3);
    const Complex v2 = -gec * sb3;
    const double v3 = -s * cb3;  // phase of e drops under |.|^2
    const Complex w1 = ge * (c * sb3);
    const Complex w2 = gec * cb3;
    const double w3 = -s * sb3;

    const double q11 = std::norm(cb * v1 + sb * v2);
    const double q21 = std::norm(-sb * v1 + cb * v2);
    const double q31 = v3 * v3;
    const double q12 = std::norm(cb * w1 + sb * w2);
    const double q22 = std::norm(-sb * w1 + cb * w2);
    const double q32 = w3 * w3;
    const double q13 = cb * cb * s * s;
    const double q23 = sb * sb * s * s;
    const double q33 = c * c;

    const double w = p1 * (r1 * q11 + r2 * q21 + r3 * q31) +
                     p2 * (r1 * q12 + r2 * q22 + r3 * q32) +
                     p3 * (r1 * q13 + r2 * q23 + r3 * q33);
    return std::abs(w) - w;
  }
};

std::vector<QuadratureAxis> measure_axes(const PhaseSpaceMeasure& measure, int nodes) {
  std::vector<QuadratureAxis> axes;
  axes.reserve(measure.active_angles().size());
  for (EulerAngle ang : measure.active_angles()) {
    axes.push_back(measure.axis(ang, nodes));
  }
  return axes;
}

// One pass of the negative-part quadrature over the stratum measure at the
// given per-dimension resolution; returns delta directly.
double neg_part_integral(const PhaseSpaceMeasure& measure, const RVector& r,
                         const KernelSpectrum& ks, int nodes, int threads) {
  const auto axes = measure_axes(measure, nodes);
  double integral = 0.0;
  if (measure.dim() == 2) {
    const QubitIntegrand f(r, ks, axes[1]);
    integral = integrate_tensor_indexed(axes, f, threads);
  } else if (measure.stratum().is_generic()) {
    const GenericQutritIntegrand f(r, ks, axes);
    integral = integrate_tensor_indexed(axes, f, threads);
  } else {
    double pcol[3] = {ks.pis()(0), ks.pis()(1), ks.pis()(2)};
    if (measure.stratum() == StratumLabel::qutrit_pi23_degenerate()) {
      std::swap(pcol[0], pcol[2]);
    }
    const DegenerateQutritIntegrand f(r, pcol, axes);
    integral = integrate_tensor_indexed(axes, f, threads);
  }
  return measure.normalization() * integral;
}

struct McAccumulator {
  double sum = 0.0;
  double sumsq = 0.0;
};

// Deterministic chunked Monte-Carlo mean; the per-sample draws are
// pure functions of (seed, angle index, sample index), so the estimate is
// identical for any thread count.
template <class Eval>
McAccumulator mc_mean(long samples, int threads, const Eval& eval) {
  constexpr long kChunk = 1L << 16;
  const long nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<McAccumulator> partial(static_cast<size_t>(nchunks));

  auto run_chunk = [&](long ci) {
    const long lo = ci * kChunk;
    const long hi = std::min(samples, lo + kChunk);
    KahanSum s, s2;
    for (long i = lo; i < hi; ++i) {
      const double v = eval(i);
      s.add(v);
      s2.add(v * v);
    }
    partial[static_cast<size_t>(ci)] = {s.value(), s2.value()};
  };

  const int nthreads = resolve_thread_count(threads);
  if (nthreads <= 1 || nchunks < 2) {
    for (long c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const long c = next.fetch_add(1);
          if (c >= nchunks) return;
          run_chunk(c);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  McAccumulator total;
  KahanSum s, s2;
  for (const auto& p : partial) {
    s.add(p.sum);
    s2.add(p.sumsq);
  }
  total.sum = s.value();
  total.sumsq = s2.value();
  return total;
}

RVector state_spectrum_descending(const BlochState& state) {
  const CMatrix rho = density_from_bloch(state);
  auto [eigs, u] = eigen_decompose_descending(rho);
  (void)u;
  return eigs;
}

ClosedFormEval closed_eval(double xi3, double xi8, DegenerateKernel kernel, int depth);

// Displace a point with a vanishing branch denominator 1e-6 inward along
// the inward normal of the singular edge; delta is continuous, so the
// displaced value is the boundary limit.
ClosedFormEval displaced(double xi3, double xi8, double nx, double ny,
                         DegenerateKernel kernel, int depth) {
  constexpr double kStep = 1e-6;
  ClosedFormEval out = closed_eval(xi3 + kStep * nx, xi8 + kStep * ny, kernel, depth + 1);
  out.boundary_displaced = true;
  return out;
}

ClosedFormEval closed_eval(double xi3, double xi8, DegenerateKernel kernel, int depth) {
  if (!inside_ordered_simplex(xi3, xi8, 1e-9)) {
    throw std::domain_error("kz closed form: point outside the ordered simplex");
  }
  const RegionLabel region = classify_region(xi3, xi8, kernel);
  ClosedFormEval out;
  out.region = region;
  switch (region) {
    case RegionLabel::OAP:
    case RegionLabel::OSQ:
      out.value = 0.0;
      return out;
    case RegionLabel::APC: {
      const double den = xi3 * (xi3 + kSqrt3 * xi8);
      if (std::abs(den) < 1e-10 && depth == 0) {
        return displaced(xi3, xi8, 1.0, 0.0, kernel, depth);  // edge OA
      }
      const double t = 2.0 * (kSqrt3 * xi3 + xi8) - 1.0;
      out.value = t * t * t / (36.0 * den);
      return out;
    }
    case RegionLabel::ARQS: {
      const double den = xi3 * xi3 - 3.0 * xi8 * xi8;
      if (std::abs(den) < 1e-10 && depth == 0) {
        return displaced(xi3, xi8, -0.5, kSqrt3 / 2.0, kernel, depth);  // edge OC
      }
      const double t = 1.0 - 4.0 * xi8;
      out.value = t * t * t / (18.0 * den);
      return out;
    }
    case RegionLabel::CQR: {
      const double den = xi3 * (xi3 + kSqrt3 * xi8);
      if (std::abs(den) < 1e-10 && depth == 0) {
        return displaced(xi3, xi8, 1.0, 0.0, kernel, depth);
      }
      const double t = 2.0 * (kSqrt3 * xi3 + xi8) + 1.0;
      out.value = t * t * t / (36.0 * den) - 2.0;
      return out;
    }
  }
  throw std::logic_error("kz closed form: unreachable region");
}

double w3_density(double xi3, double xi8) {
  const double q = xi3 * xi3 / 3.0 - xi8 * xi8;
  return 8.0 / (9.0 * kSqrt3) * xi3 * xi3 * q * q;
}

double triangle_area(const double a[2], const double b[2], const double c[2]) {
  return std::abs(a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1])) /
         2.0;
}

}  // namespace

std::string method_name(IntegrationMethod m) {
  switch (m) {
    case IntegrationMethod::ClosedForm: return "closed-form";
    case IntegrationMethod::Quadrature: return "quadrature";
    case IntegrationMethod::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

std::string region_name(RegionLabel r) {
  switch (r) {
    case RegionLabel::OAP: return "OAP";
    case RegionLabel::APC: return "APC";
    case RegionLabel::OSQ: return "OSQ";
    case RegionLabel::ARQS: return "ARQS";
    case RegionLabel::CQR: return "CQR";
  }
  return "?";
}

IndicatorResult kz_numeric(const BlochState& state, const KernelModuli& m,
                           const IntegratorConfig& cfg) {
  if (state.dim() != m.dim()) {
    throw std::invalid_argument("kz_numeric: state and kernel dimensions differ");
  }
  if (cfg.method == IntegrationMethod::ClosedForm) {
    throw std::invalid_argument("kz_numeric: pick quadrature or monte-carlo");
  }
  const int n = state.dim();
  const RVector r = state_spectrum_descending(state);
  const KernelSpectrum ks = spectrum_from_moduli(m);
  const StratumLabel stratum = stratum_of(ks, cfg.degeneracy_tol);

  IndicatorResult result(stratum);
  result.method = cfg.method;

  if (cfg.method == IntegrationMethod::Quadrature) {
    if (n > 3) {
      throw std::invalid_argument(
          "kz_numeric: quadrature charts exist for N=2,3 only; use monte-carlo");
    }
    const PhaseSpaceMeasure measure = phase_measure(stratum);
    const int nodes = cfg.nodes_per_dim > 0 ? cfg.nodes_per_dim : default_nodes(stratum);
    const double coarse = neg_part_integral(measure, r, ks, nodes, cfg.threads);
    const double fine = neg_part_integral(measure, r, ks, 2 * nodes, cfg.threads);
    result.value = fine;
    result.error_estimate = std::abs(fine - coarse);
  } else {
    if (cfg.samples < 2) throw std::invalid_argument("kz_numeric: need >= 2 samples");
    const CounterRng rng(cfg.seed);
    McAccumulator acc;
    if (n <= 3) {
      const PhaseSpaceMeasure measure = phase_measure(stratum);
      const auto& active = measure.active_angles();
      // representative() applies the coset frame, so the plain column
      // pairing below is the right Wigner value for every stratum.
      acc = mc_mean(cfg.samples, cfg.threads, [&](long i) {
        EulerPointSU3 p;
        for (size_t k = 0; k < active.size(); ++k) {
          set_angle(p, active[k], draw_angle(active[k], rng.uniform(
              static_cast<uint64_t>(k), static_cast<uint64_t>(i))));
        }
        const CMatrix u = measure.representative(p);
        double w = 0.0;
        for (int ii = 0; ii < n; ++ii) {
          for (int jj = 0; jj < n; ++jj) {
            w += ks.pis()(jj) * r(ii) * std::norm(u(ii, jj));
          }
        }
        return std::abs(w) - w;
      });
    } else {
      acc = mc_mean(cfg.samples, cfg.threads, [&](long i) {
        const CMatrix u = sample_haar_unitary(n, rng, static_cast<uint64_t>(i));
        const double w = wigner_value_diagonal(r, ks, u);
        return std::abs(w) - w;
      });
    }
    const double mean = acc.sum / static_cast<double>(cfg.samples);
    const double var = std::max(
        0.0, (acc.sumsq - static_cast<double>(cfg.samples) * mean * mean) /
                 (static_cast<double>(cfg.samples) - 1.0));
    result.value = n * mean;
    result.error_estimate = n * std::sqrt(var / static_cast<double>(cfg.samples));
  }

  if (cfg.target_tolerance > 0.0 && result.error_estimate > cfg.target_tolerance) {
    result.converged = false;
  }
  return result;
}

double kz_closed_qubit(double r) {
  if (r < 0.0 || r > 1.0 + 1e-12) {
    throw std::domain_error("kz_closed_qubit: Bloch radius must lie in [0, 1]");
  }
  const double rc = 1.0 / kSqrt3;
  if (r <= rc) return 0.0;
  return kSqrt3 / 2.0 * (r + 1.0 / (3.0 * r)) - 1.0;
}

RegionLabel classify_region(double xi3, double xi8, DegenerateKernel kernel) {
  if (!inside_ordered_simplex(xi3, xi8, 1e-9)) {
    throw std::domain_error("classify_region: point outside the ordered simplex");
  }
  if (kernel == DegenerateKernel::Zeta0) {
    // Boundary line AP: 2(sqrt(3) xi3 + xi8) = 1, i.e. r1 = 1/2.
    return (2.0 * (kSqrt3 * xi3 + xi8) - 1.0 > 0.0) ? RegionLabel::APC : RegionLabel::OAP;
  }
  // zeta = pi/3. Zero boundary SQ: xi8 = 1/4 (r3 = 1/6); branch boundary QR:
  // xi3 = (1 + 2 xi8) / (2 sqrt(3)) (r2 = 1/6).
  if (xi8 <= 0.25) return RegionLabel::OSQ;
  if (xi3 <= (1.0 + 2.0 * xi8) / (2.0 * kSqrt3)) return RegionLabel::ARQS;
  return RegionLabel::CQR;
}

ClosedFormEval kz_closed_qutrit_zeta0_eval(double xi3, double xi8) {
  return closed_eval(xi3, xi8, DegenerateKernel::Zeta0, 0);
}

ClosedFormEval kz_closed_qutrit_zetapi3_eval(double xi3, double xi8) {
  return closed_eval(xi3, xi8, DegenerateKernel::ZetaPi3, 0);
}

double kz_closed_qutrit_zeta0(double xi3, double xi8) {
  return kz_closed_qutrit_zeta0_eval(xi3, xi8).value;
}

double kz_closed_qutrit_zetapi3(double xi3, double xi8) {
  return kz_closed_qutrit_zetapi3_eval(xi3, xi8).value;
}

double euclidean_positive_fraction(DegenerateKernel kernel) {
  const double whole = triangle_area(kVertO, kVertA, kVertC);
  const double zero = (kernel == DegenerateKernel::Zeta0)
                          ? triangle_area(kVertO, kVertA, kVertP)
                          : triangle_area(kVertO, kVertS, kVertQ);
  return zero / whole;
}

double hs_orbit_integral(RegionLabel region) {
  switch (region) {
    case RegionLabel::OAP:
      return integrate_triangle(kVertO, kVertA, kVertP, &w3_density);
    case RegionLabel::OSQ:
      return integrate_triangle(kVertO, kVertS, kVertQ, &w3_density);
    case RegionLabel::APC:
      return integrate_triangle(kVertA, kVertP, kVertC, &w3_density);
    case RegionLabel::ARQS:
      return integrate_triangle(kVertA, kVertR, kVertQ, &w3_density) +
             integrate_triangle(kVertA, kVertQ, kVertS, &w3_density);
    case RegionLabel::CQR:
      return integrate_triangle(kVertC, kVertQ, kVertR, &w3_density);
  }
  throw std::logic_error("hs_orbit_integral: unreachable");
}

double hs_orbit_integral_whole_simplex() {
  return integrate_triangle(kVertO, kVertA, kVertC, &w3_density);
}

GlobalResult global_indicator(DegenerateKernel kernel, GlobalMeasure measure,
                              GlobalMethod method, const IntegratorConfig& cfg) {
  GlobalResult out;
  out.method = method;
  if (method == GlobalMethod::ExactRegion) {
    if (measure == GlobalMeasure::Euclidean) {
      out.value = euclidean_positive_fraction(kernel);
    } else {
      const RegionLabel zero =
          (kernel == DegenerateKernel::Zeta0) ? RegionLabel::OAP : RegionLabel::OSQ;
      out.value = hs_orbit_integral(zero) / hs_orbit_integral_whole_simplex();
    }
    return out;
  }

  if (cfg.samples < 2) throw std::invalid_argument("global_indicator: need >= 2 samples");
  const CounterRng rng(cfg.seed);
  // Uniform draws over the triangle O-A-C; the Hilbert-Schmidt path filters
  // them through rejection against w3 (envelope = max of w3 on the simplex,
  // attained at (1/2, 1/2)).
  const double max_w3 = w3_density(0.5, 0.5);
  long zero_hits = 0;
  uint64_t proposal = 0;
  for (long i = 0; i < cfg.samples; ++i) {
    double xi3 = 0.0, xi8 = 0.0;
    for (;;) {
      const double u1 = rng.uniform(101, proposal);
      const double u2 = rng.uniform(102, proposal);
      const double u3 = rng.uniform(103, proposal);
      ++proposal;
      const double su = std::sqrt(u1);
      xi3 = su * u2 * kSqrt3 / 2.0;
      xi8 = su * 0.5;
      if (measure == GlobalMeasure::Euclidean) break;
      if (u3 * max_w3 <= w3_density(xi3, xi8)) break;
    }
    const RegionLabel reg = classify_region(xi3, xi8, kernel);
    if (reg == RegionLabel::OAP || reg == RegionLabel::OSQ) ++zero_hits;
  }
  const double p = static_cast<double>(zero_hits) / static_cast<double>(cfg.samples);
  out.value = p;
  out.error_estimate = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.samples));
  return out;
}

}  // namespace wigneg
