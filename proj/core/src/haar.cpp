#include "wigneg/haar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigneg {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

using Eigen::Matrix3cd;

Matrix3cd phase3(double t) {
  Matrix3cd m = Matrix3cd::Zero();
  m(0, 0) = std::polar(1.0, t / 2.0);
  m(1, 1) = std::polar(1.0, -t / 2.0);
  m(2, 2) = 1.0;
  return m;
}

Matrix3cd rot12(double t) {
  const double c = std::cos(t / 2.0), s = std::sin(t / 2.0);
  Matrix3cd m = Matrix3cd::Identity();
  m(0, 0) = c;
  m(0, 1) = s;
  m(1, 0) = -s;
  m(1, 1) = c;
  return m;
}

Matrix3cd rot13(double t) {
  const double c = std::cos(t), s = std::sin(t);
  Matrix3cd m = Matrix3cd::Identity();
  m(0, 0) = c;
  m(0, 2) = s;
  m(2, 0) = -s;
  m(2, 2) = c;
  return m;
}

Matrix3cd phase8(double t) {
  Matrix3cd m = Matrix3cd::Zero();
  m(0, 0) = std::polar(1.0, t / kSqrt3);
  m(1, 1) = std::polar(1.0, t / kSqrt3);
  m(2, 2) = std::polar(1.0, -2.0 * t / kSqrt3);
  return m;
}

void check_range(double v, double lo, double hi, const char* name) {
  if (v < lo - 1e-12 || v > hi + 1e-12) {
    throw std::domain_error(std::string("euler angle ") + name + " out of range");
  }
}

double dens_sin(double x) { return std::sin(x); }
double dens_cos_sin3(double x) {
  const double s = std::sin(x);
  return std::cos(x) * s * s * s;
}

// Weyl rotation exchanging the first and third eigenvector, det +1.
Matrix3cd weyl_13() {
  Matrix3cd m = Matrix3cd::Zero();
  m(0, 2) = 1.0;
  m(1, 1) = -1.0;
  m(2, 0) = 1.0;
  return m;
}

enum class AxisKind { Uniform, Sin, CosSin3 };

AxisKind axis_kind(EulerAngle which) {
  switch (which) {
    case EulerAngle::Beta:
    case EulerAngle::B:
      return AxisKind::Sin;
    case EulerAngle::Theta:
      return AxisKind::CosSin3;
    default:
      return AxisKind::Uniform;
  }
}

// Mass of the un-normalized 1-D density over the angle's full range.
double axis_mass(EulerAngle which) {
  switch (axis_kind(which)) {
    case AxisKind::Sin:
      return 2.0;
    case AxisKind::CosSin3:
      return 0.25;
    case AxisKind::Uniform:
      return angle_hi(which) - angle_lo(which);
  }
  return 0.0;
}

constexpr EulerAngle kAllAngles[8] = {
    EulerAngle::Alpha, EulerAngle::Beta, EulerAngle::Gamma, EulerAngle::Theta,
    EulerAngle::A,     EulerAngle::B,    EulerAngle::C,     EulerAngle::Phi};

}  // namespace

double angle_lo(EulerAngle) { return 0.0; }

double angle_hi(EulerAngle which) {
  switch (which) {
    case EulerAngle::Alpha:
    case EulerAngle::A:
      return 2.0 * kPi;
    case EulerAngle::Beta:
    case EulerAngle::B:
      return kPi;
    case EulerAngle::Gamma:
    case EulerAngle::C:
      return 4.0 * kPi;
    case EulerAngle::Theta:
      return kPi / 2.0;
    case EulerAngle::Phi:
      return kSqrt3 * kPi;
  }
  return 0.0;
}

double get_angle(const EulerPointSU3& p, EulerAngle which) {
  switch (which) {
    case EulerAngle::Alpha: return p.alpha;
    case EulerAngle::Beta: return p.beta;
    case EulerAngle::Gamma: return p.gamma;
    case EulerAngle::Theta: return p.theta;
    case EulerAngle::A: return p.a;
    case EulerAngle::B: return p.b;
    case EulerAngle::C: return p.c;
    case EulerAngle::Phi: return p.phi;
  }
  return 0.0;
}

void set_angle(EulerPointSU3& p, EulerAngle which, double value) {
  switch (which) {
    case EulerAngle::Alpha: p.alpha = value; break;
    case EulerAngle::Beta: p.beta = value; break;
    case EulerAngle::Gamma: p.gamma = value; break;
    case EulerAngle::Theta: p.theta = value; break;
    case EulerAngle::A: p.a = value; break;
    case EulerAngle::B: p.b = value; break;
    case EulerAngle::C: p.c = value; break;
    case EulerAngle::Phi: p.phi = value; break;
  }
}

CMatrix su2_from_euler(const EulerPointSU2& p) {
  check_range(p.alpha, 0.0, 2.0 * kPi, "alpha");
  check_range(p.beta, 0.0, kPi, "beta");
  check_range(p.gamma, 0.0, 4.0 * kPi, "gamma");
  Eigen::Matrix2cd za, rb, zg;
  za << std::polar(1.0, p.alpha / 2.0), 0.0, 0.0, std::polar(1.0, -p.alpha / 2.0);
  const double cb = std::cos(p.beta / 2.0), sb = std::sin(p.beta / 2.0);
  rb << cb, sb, -sb, cb;
  zg << std::polar(1.0, p.gamma / 2.0), 0.0, 0.0, std::polar(1.0, -p.gamma / 2.0);
  return za * rb * zg;
}

CMatrix su3_from_euler(const EulerPointSU3& p) {
  for (EulerAngle ang : kAllAngles) {
    check_range(get_angle(p, ang), angle_lo(ang), angle_hi(ang), "su3");
  }
  Matrix3cd u = phase3(p.alpha) * rot12(p.beta) * phase3(p.gamma) * rot13(p.theta) *
                phase3(p.a) * rot12(p.b) * phase3(p.c) * phase8(p.phi);
  return u;
}

double haar_density_su3(const EulerPointSU3& p) {
  const double s = std::sin(p.theta);
  return std::cos(p.theta) * s * s * s * std::sin(p.beta) * std::sin(p.b) /
         (64.0 * kSqrt3 * kPi * kPi * kPi * kPi * kPi);
}

double PhaseSpaceMeasure::density(const EulerPointSU3& p) const {
  double d = norm_;
  for (EulerAngle ang : active_) {
    switch (axis_kind(ang)) {
      case AxisKind::Sin:
        d *= std::sin(get_angle(p, ang));
        break;
      case AxisKind::CosSin3: {
        const double s = std::sin(get_angle(p, ang));
        d *= std::cos(get_angle(p, ang)) * s * s * s;
        break;
      }
      case AxisKind::Uniform:
        break;
    }
  }
  return d;
}

CMatrix PhaseSpaceMeasure::representative(const EulerPointSU3& p) const {
  if (dim() == 2) {
    return su2_from_euler({p.alpha, p.beta, p.gamma});
  }
  return su3_from_euler(p) * frame_;
}

QuadratureAxis PhaseSpaceMeasure::axis(EulerAngle which, int nodes) const {
  double (*dens)(double) = nullptr;
  switch (axis_kind(which)) {
    case AxisKind::Sin: dens = &dens_sin; break;
    case AxisKind::CosSin3: dens = &dens_cos_sin3; break;
    case AxisKind::Uniform: dens = nullptr; break;
  }
  return make_axis(angle_lo(which), angle_hi(which), nodes, dens);
}

PhaseSpaceMeasure phase_measure(const StratumLabel& stratum) {
  PhaseSpaceMeasure m(stratum);
  if (stratum == StratumLabel::qubit()) {
    m.active_ = {EulerAngle::Alpha, EulerAngle::Beta};
    m.frame_ = CMatrix::Identity(2, 2);
  } else if (stratum == StratumLabel::generic(3)) {
    m.active_ = {EulerAngle::Beta, EulerAngle::Gamma, EulerAngle::Theta,
                 EulerAngle::A, EulerAngle::B};
    m.frame_ = CMatrix::Identity(3, 3);
  } else if (stratum == StratumLabel::qutrit_pi12_degenerate()) {
    m.active_ = {EulerAngle::Beta, EulerAngle::Theta, EulerAngle::B};
    m.frame_ = CMatrix::Identity(3, 3);
  } else if (stratum == StratumLabel::qutrit_pi23_degenerate()) {
    m.active_ = {EulerAngle::Beta, EulerAngle::Theta, EulerAngle::B};
    m.frame_ = weyl_13();
  } else {
    throw std::invalid_argument("phase_measure: unsupported stratum " + stratum.name());
  }
  double mass = 1.0;
  for (EulerAngle ang : m.active_) mass *= axis_mass(ang);
  m.norm_ = static_cast<double>(stratum.dim()) / mass;
  return m;
}

std::vector<EulerPointSU3> sample_haar_su3(long count, uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_haar_su3: count must be >= 1");
  const CounterRng rng(seed);
  std::vector<EulerPointSU3> out(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) {
    EulerPointSU3 p;
    for (int k = 0; k < 8; ++k) {
      set_angle(p, kAllAngles[k], draw_angle(kAllAngles[k], rng.uniform(
          static_cast<uint64_t>(k), static_cast<uint64_t>(i))));
    }
    out[static_cast<size_t>(i)] = p;
  }
  return out;
}

std::vector<EulerPointSU3> sample_measure(const PhaseSpaceMeasure& measure,
                                          long count, uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_measure: count must be >= 1");
  const CounterRng rng(seed);
  std::vector<EulerPointSU3> out(static_cast<size_t>(count));
  const auto& active = measure.active_angles();
  for (long i = 0; i < count; ++i) {
    EulerPointSU3 p;
    for (size_t k = 0; k < active.size(); ++k) {
      set_angle(p, active[k], draw_angle(active[k], rng.uniform(
          static_cast<uint64_t>(k), static_cast<uint64_t>(i))));
    }
    out[static_cast<size_t>(i)] = p;
  }
  return out;
}

std::vector<std::pair<EulerPointSU3, double>> quadrature_grid(
    const PhaseSpaceMeasure& measure, int nodes_per_dim) {
  if (nodes_per_dim < 2) {
    throw std::invalid_argument("quadrature_grid: nodes_per_dim must be >= 2");
  }
  const auto& active = measure.active_angles();
  std::vector<QuadratureAxis> axes;
  axes.reserve(active.size());
  for (EulerAngle ang : active) axes.push_back(measure.axis(ang, nodes_per_dim));

  std::vector<std::pair<EulerPointSU3, double>> grid;
  size_t total = 1;
  for (const auto& ax : axes) total *= ax.x.size();
  grid.reserve(total);

  std::vector<size_t> idx(axes.size(), 0);
  for (;;) {
    EulerPointSU3 p;
    double w = measure.normalization();
    for (size_t d = 0; d < axes.size(); ++d) {
      set_angle(p, active[d], axes[d].x[idx[d]]);
      w *= axes[d].w[idx[d]];
    }
    grid.emplace_back(p, w);
    size_t d = axes.size();
    for (;;) {
      if (d == 0) return grid;
      --d;
      if (++idx[d] < axes[d].x.size()) break;
      idx[d] = 0;
      if (d == 0) return grid;
    }
  }
}

double draw_angle(EulerAngle which, double u) {
  switch (axis_kind(which)) {
    case AxisKind::Sin:
      return std::acos(1.0 - 2.0 * u);
    case AxisKind::CosSin3:
      return std::asin(std::pow(u, 0.25));
    case AxisKind::Uniform:
      return angle_lo(which) + u * (angle_hi(which) - angle_lo(which));
  }
  return 0.0;
}

double haar_chart_mass(int nodes_per_angle) {
  double mass = 1.0 / (64.0 * kSqrt3 * kPi * kPi * kPi * kPi * kPi);
  for (EulerAngle ang : kAllAngles) {
    double (*dens)(double) = nullptr;
    switch (axis_kind(ang)) {
      case AxisKind::Sin: dens = &dens_sin; break;
      case AxisKind::CosSin3: dens = &dens_cos_sin3; break;
      case AxisKind::Uniform: dens = nullptr; break;
    }
    mass *= make_axis(angle_lo(ang), angle_hi(ang), nodes_per_angle, dens).mass();
  }
  return mass;
}

CMatrix integrate_kernel_su3(const KernelModuli& m, int nodes_per_angle) {
  if (m.dim() != 3) {
    throw std::invalid_argument("integrate_kernel_su3: kernel must be a qutrit kernel");
  }
  const EulerPointSU3 origin;
  const Matrix3cd core = 3.0 * kernel_matrix(m, su3_from_euler(origin));

  auto normalized_axis = [nodes_per_angle](EulerAngle ang) {
    double (*dens)(double) = nullptr;
    switch (axis_kind(ang)) {
      case AxisKind::Sin: dens = &dens_sin; break;
      case AxisKind::CosSin3: dens = &dens_cos_sin3; break;
      case AxisKind::Uniform: dens = nullptr; break;
    }
    QuadratureAxis ax = make_axis(angle_lo(ang), angle_hi(ang), nodes_per_angle, dens);
    const double inv = 1.0 / axis_mass(ang);
    for (double& w : ax.w) w *= inv;
    return ax;
  };

  // The diagonal factors (c, phi) commute with the core and integrate away;
  // the remaining sandwich is averaged inside-out.
  const QuadratureAxis axA = normalized_axis(EulerAngle::A);
  const QuadratureAxis axB = normalized_axis(EulerAngle::B);
  Matrix3cd x1 = Matrix3cd::Zero();
  for (size_t i = 0; i < axA.x.size(); ++i) {
    for (size_t j = 0; j < axB.x.size(); ++j) {
      const Matrix3cd ef = phase3(axA.x[i]) * rot12(axB.x[j]);
      x1 += axA.w[i] * axB.w[j] * (ef * core * ef.adjoint());
    }
  }
  const QuadratureAxis axT = normalized_axis(EulerAngle::Theta);
  Matrix3cd x2 = Matrix3cd::Zero();
  for (size_t i = 0; i < axT.x.size(); ++i) {
    const Matrix3cd d = rot13(axT.x[i]);
    x2 += axT.w[i] * (d * x1 * d.adjoint());
  }
  const QuadratureAxis axBe = normalized_axis(EulerAngle::Beta);
  const QuadratureAxis axG = normalized_axis(EulerAngle::Gamma);
  Matrix3cd x3 = Matrix3cd::Zero();
  for (size_t i = 0; i < axBe.x.size(); ++i) {
    for (size_t j = 0; j < axG.x.size(); ++j) {
      const Matrix3cd bc = rot12(axBe.x[i]) * phase3(axG.x[j]);
      x3 += axBe.w[i] * axG.w[j] * (bc * x2 * bc.adjoint());
    }
  }
  const QuadratureAxis axAl = normalized_axis(EulerAngle::Alpha);
  Matrix3cd x4 = Matrix3cd::Zero();
  for (size_t i = 0; i < axAl.x.size(); ++i) {
    const Matrix3cd a = phase3(axAl.x[i]);
    x4 += axAl.w[i] * (a * x3 * a.adjoint());
  }
  return x4;
}

CMatrix sample_haar_unitary(int dim, const CounterRng& rng, uint64_t index) {
  if (dim < 2) throw std::invalid_argument("sample_haar_unitary: dim must be >= 2");
  CMatrix z(dim, dim);
  const uint64_t per = 2ULL * static_cast<uint64_t>(dim) * static_cast<uint64_t>(dim);
  uint64_t k = index * per;
  constexpr uint64_t kGinibreStream = 0x61BE5Eu;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = rng.normal(kGinibreStream, k++);
      const double im = rng.normal(kGinibreStream, k++);
      z(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const Complex ph = (std::abs(d) == 0.0) ? Complex(1.0, 0.0) : d / std::abs(d);
    q.col(i) *= ph;
  }
  // Rotate the overall phase so that det = 1; the kernel conjugation is
  // insensitive to it, but downstream validation expects SU(N).
  const Complex det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / dim);
  return q;
}

}  // namespace wigneg
