#include "stationary/ruled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include "stationary/error.hpp"
#include "stationary/quadrature.hpp"
#include "stationary/taylor.hpp"

namespace stationary {

CurveJet TrigCurve::operator()(double s) const {
  CurveJet j;
  j.p = c0;
  const std::size_t n = std::max(cos_terms.size(), sin_terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(i + 1);
    const double cs = std::cos(k * s), sn = std::sin(k * s);
    const Vec3 a = i < cos_terms.size() ? cos_terms[i] : Vec3::Zero();
    const Vec3 b = i < sin_terms.size() ? sin_terms[i] : Vec3::Zero();
    // d/ds (a cos + b sin) cycles through (-a sin + b cos) k, -(a cos + b sin) k^2, ...
    const Vec3 f = a * cs + b * sn;
    const Vec3 g = -a * sn + b * cs;
    j.p += f;
    j.d1 += k * g;
    j.d2 -= k * k * f;
    j.d3 -= k * k * k * g;
  }
  return j;
}

CurveFn normalized(CurveFn v) {
  return [v = std::move(v)](double s) {
    const CurveJet j = v(s);
    using T = Taylor<3>;
    std::array<T, 3> x;
    for (int i = 0; i < 3; ++i) {
      x[i][0] = j.p[i];
      x[i][1] = j.d1[i];
      x[i][2] = j.d2[i] / 2;
      x[i][3] = j.d3[i] / 6;
    }
    const T inv = T(1.0) / sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    CurveJet out;
    out.order = j.order;
    for (int i = 0; i < 3; ++i) {
      const T w = x[i] * inv;
      out.p[i] = w.derivative(0);
      out.d1[i] = w.derivative(1);
      out.d2[i] = w.derivative(2);
      out.d3[i] = j.order >= 3 ? w.derivative(3) : 0.0;
    }
    return out;
  };
}

RuledInvariants check_invariants(const RuledSpec& spec, int samples) {
  RuledInvariants inv;
  inv.min_beta_speed = std::numeric_limits<double>::infinity();
  for (double s : sample_axis(spec.s_range, false, samples, 0.0)) {
    const CurveJet g = spec.gamma(s), b = spec.beta(s);
    inv.max_speed_defect = std::max(inv.max_speed_defect, std::abs(g.d1.norm() - 1));
    inv.max_beta_norm_defect = std::max(inv.max_beta_norm_defect, std::abs(b.p.norm() - 1));
    inv.min_beta_speed = std::min(inv.min_beta_speed, b.d1.norm());
    inv.max_striction_defect = std::max(inv.max_striction_defect, std::abs(g.d1.dot(b.d1)));
  }
  return inv;
}

ParametricPatch ruled_patch(const RuledSpec& spec) {
  auto eval = [gamma = spec.gamma, beta = spec.beta](double s, double t) {
    const CurveJet g = gamma(s), b = beta(s);
    Jet2 j;
    j.P = g.p + t * b.p;
    j.Pu = g.d1 + t * b.d1;
    j.Pv = b.p;
    j.Puu = g.d2 + t * b.d2;
    j.Puv = b.d1;
    j.Pvv = Vec3::Zero();
    return j;
  };
  return ParametricPatch(eval, spec.s_range, spec.t_range, false,
                         spec.cylindrical ? "cylinder" : "ruled");
}

namespace {

/// Solves F(s) = target for increasing F given on a knot table, with
/// F_local(k, s) evaluating F on [s_k, s_{k+1}] and dF its derivative.
template <typename Local, typename Deriv>
double invert_monotone(const std::vector<double>& sk, const std::vector<double>& Fk, double target,
                       const Local& F_local, const Deriv& dF) {
  auto it = std::upper_bound(Fk.begin(), Fk.end(), target);
  std::size_t k = it == Fk.begin() ? 0 : static_cast<std::size_t>(it - Fk.begin()) - 1;
  k = std::min(k, sk.size() - 2);
  double a = sk[k], b = sk[k + 1];
  const double fa = Fk[k], fb = Fk[k + 1];
  if (target <= fa) return a;
  if (target >= fb && k + 2 == sk.size()) return b;
  double x = a + (b - a) * (target - fa) / (fb - fa);
  for (int iter = 0; iter < 60; ++iter) {
    const double r = F_local(k, x) - target;
    if (r > 0) b = x;
    else a = x;
    double next = x - r / dF(x);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

constexpr int kReparamPanels = 256;
constexpr int kPanelNodes = 8;

}  // namespace

RuledSpec striction_line(const RuledSpec& spec) {
  const CurveFn gamma = spec.gamma, beta = spec.beta;
  for (double s : sample_axis(spec.s_range, false, 64, 0.0)) {
    if (beta(s).d1.norm() < 1e-12) {
      std::ostringstream os;
      os << "beta' vanishes at s = " << s;
      throw Error(ErrorKind::kCylindricalInput, os.str());
    }
  }

  // gamma~ = gamma - mu beta with mu = <gamma', beta'>/|beta'|^2
  struct Shifted {
    Vec3 p, d1, d2;
    CurveJet b;
  };
  auto shifted = [gamma, beta](double s) {
    const CurveJet g = gamma(s), b = beta(s);
    const double num = g.d1.dot(b.d1);
    const double dnum = g.d2.dot(b.d1) + g.d1.dot(b.d2);
    const double ddnum = g.d3.dot(b.d1) + 2 * g.d2.dot(b.d2) + g.d1.dot(b.d3);
    const double den = b.d1.squaredNorm();
    const double dden = 2 * b.d1.dot(b.d2);
    const double ddden = 2 * b.d2.squaredNorm() + 2 * b.d1.dot(b.d3);
    const double mu = num / den;
    const double dmu = (dnum * den - num * dden) / (den * den);
    const double ddmu = (ddnum - 2 * dmu * dden - mu * ddden) / den;
    Shifted out;
    out.p = g.p - mu * b.p;
    out.d1 = g.d1 - dmu * b.p - mu * b.d1;
    out.d2 = g.d2 - ddmu * b.p - 2 * dmu * b.d1 - mu * b.d2;
    out.b = b;
    return out;
  };
  auto speed = [shifted](double s) { return shifted(s).d1.norm(); };

  // cumulative arc length on a panel table
  auto table = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>();
  auto& [sk, Fk] = *table;
  const QuadratureRule unit = gauss_legendre(kPanelNodes);
  auto panel_integral = [unit, speed](double a, double b) {
    double sum = 0;
    for (int i = 0; i < kPanelNodes; ++i)
      sum += unit.weights[i] * speed(0.5 * (a + b) + 0.5 * (b - a) * unit.nodes[i]);
    return 0.5 * (b - a) * sum;
  };
  sk = sample_axis(spec.s_range, false, kReparamPanels + 1, 0.0);
  Fk.assign(sk.size(), 0.0);
  for (std::size_t k = 1; k < sk.size(); ++k) Fk[k] = Fk[k - 1] + panel_integral(sk[k - 1], sk[k]);
  for (double s : sk) {
    if (speed(s) < 1e-12)
      throw Error(ErrorKind::kDegenerateParametrization, "striction line is singular");
  }

  auto s_of = [table, panel_integral, speed](double sigma) {
    const auto& [sk, Fk] = *table;
    return invert_monotone(
        sk, Fk, sigma, [&](std::size_t k, double s) { return Fk[k] + panel_integral(sk[k], s); },
        speed);
  };

  RuledSpec out;
  out.s_range = {0.0, Fk.back()};
  out.t_range = spec.t_range;
  out.cylindrical = false;
  out.gamma = [shifted, s_of](double sigma) {
    const double s = s_of(sigma);
    const Shifted c = shifted(s);
    const double g = c.d1.norm();
    const double ds = 1 / g;
    const double dds = -c.d1.dot(c.d2) / (g * g * g * g);
    CurveJet j;
    j.order = 2;
    j.p = c.p;
    j.d1 = c.d1 * ds;
    j.d2 = c.d2 * ds * ds + c.d1 * dds;
    return j;
  };
  out.beta = [shifted, s_of](double sigma) {
    const double s = s_of(sigma);
    const Shifted c = shifted(s);
    const double g = c.d1.norm();
    const double ds = 1 / g;
    const double dds = -c.d1.dot(c.d2) / (g * g * g * g);
    CurveJet j;
    j.order = 2;
    j.p = c.b.p;
    j.d1 = c.b.d1 * ds;
    j.d2 = c.b.d2 * ds * ds + c.b.d1 * dds;
    return j;
  };
  return out;
}

std::vector<CylinderPair> cylinder_check(const PlanarCurve& curve, double alpha, int samples) {
  const Vec3 axis = curve.axis.normalized();
  std::vector<CylinderPair> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (double s : sample_axis(curve.s_range, false, samples, 0.0)) {
    const CurveJet j = curve.curve(s);
    if (std::abs(j.d1.dot(axis)) > 1e-8 || std::abs(j.d2.dot(axis)) > 1e-8) {
      std::ostringstream os;
      os << "directrix leaves its plane at s = " << s;
      throw Error(ErrorKind::kPlanarity, os.str());
    }
    const Vec3 gamma = j.p - j.p.dot(axis) * axis;
    Vec3 n = j.d1.cross(axis).normalized();
    double kappa = j.d2.dot(n);
    if (kappa < 0) {
      kappa = -kappa;
      n = -n;
    }
    out.push_back({s, kappa, kappa * gamma.squaredNorm() - alpha * n.dot(gamma)});
  }
  return out;
}

ParametricPatch cylinder_patch(const PlanarCurve& curve, Interval t_range) {
  RuledSpec spec;
  spec.gamma = curve.curve;
  spec.beta = [axis = curve.axis.normalized().eval()](double) {
    CurveJet j;
    j.p = axis;
    return j;
  };
  spec.s_range = curve.s_range;
  spec.t_range = t_range;
  spec.cylindrical = true;
  return ruled_patch(spec);
}

AdaptedCoords adapted_coords(const RuledSpec& spec, double s) {
  const CurveJet g = spec.gamma(s), bj = spec.beta(s);
  const Vec3 b0(std::cos(s), std::sin(s), 0.0);
  const Vec3 b1(-std::sin(s), std::cos(s), 0.0);
  if ((bj.p - b0).norm() > 1e-10 || (bj.d1 - b1).norm() > 1e-10) {
    std::ostringstream os;
    os << "beta is not the equator at s = " << s;
    throw Error(ErrorKind::kFrame, os.str());
  }
  const Vec3 b2 = -b0, b3 = -b1;
  const Vec3 e3 = Vec3::UnitZ();
  AdaptedCoords c;
  c.a = g.p.dot(b0);
  c.da = g.d1.dot(b0) + g.p.dot(b1);
  c.dda = g.d2.dot(b0) + 2 * g.d1.dot(b1) + g.p.dot(b2);
  c.b = g.p.dot(b1);
  c.db = g.d1.dot(b1) + g.p.dot(b2);
  c.ddb = g.d2.dot(b1) + 2 * g.d1.dot(b2) + g.p.dot(b3);
  c.c = g.p.dot(e3);
  c.dc = g.d1.dot(e3);
  c.ddc = g.d2.dot(e3);
  return c;
}

std::array<double, 5> ruled_coeffs(const RuledSpec& spec, double alpha, double s) {
  if (spec.cylindrical)
    throw Error(ErrorKind::kCylindricalInput, "coefficient system needs a non-cylindrical spec");
  const CurveJet G = spec.gamma(s), B = spec.beta(s);
  const Vec3 &g = G.p, &g1 = G.d1, &g2 = G.d2;
  const Vec3 &b = B.p, &b1 = B.d1, &b2 = B.d2;
  if (std::abs(g1.dot(b1)) > 1e-6) {
    std::ostringstream os;
    os << "directrix is not the striction line at s = " << s << " (<gamma', beta'> = "
       << g1.dot(b1) << ")";
    throw Error(ErrorKind::kPrecondition, os.str());
  }

  const double f = g1.dot(b);
  const double gb = g.dot(b);
  const double gg = g.squaredNorm();

  const double k0 = triple(g1, b, g2) - 2 * f * triple(g1, b, b1);
  const double k1 = triple(b1, b, g2) + triple(g1, b, b2);
  const double k2 = triple(b1, b, b2);
  const double m0 = triple(g1, b, g);
  const double m1 = triple(b1, b, g);
  const double w0 = g1.squaredNorm() - f * f;
  const double w1 = 2 * g1.dot(b1);
  const double w2 = b1.squaredNorm();

  return {
      gg * k0 - alpha * m0 * w0,
      2 * gb * k0 + gg * k1 - alpha * (m1 * w0 + m0 * w1),
      k0 + 2 * gb * k1 + gg * k2 - alpha * (m0 * w2 + m1 * w1),
      k1 + 2 * gb * k2 - alpha * m1 * w2,
      k2,
  };
}

NormalizedRuled normalize_beta(const RuledSpec& spec) {
  const CurveFn gamma = spec.gamma, beta = spec.beta;
  const auto probe = sample_axis(spec.s_range, false, 64, 0.0);
  for (double s : probe) {
    const CurveJet b = beta(s);
    if (std::abs(triple(b.d1, b.p, b.d2)) > 1e-8) {
      std::ostringstream os;
      os << "beta is not a great circle at s = " << s;
      throw Error(ErrorKind::kNormalization, os.str());
    }
  }
  const CurveJet b0 = beta(spec.s_range.lo);
  const Vec3 m = b0.p.cross(b0.d1);
  if (m.norm() < 1e-12) throw Error(ErrorKind::kNormalization, "beta' vanishes");
  const Mat3 R = Eigen::Quaterniond::FromTwoVectors(m.normalized(), Vec3::UnitZ()).toRotationMatrix();

  // phi(s): polar angle of R beta(s), unwrapped along a knot table
  auto table = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>();
  auto& [sk, Fk] = *table;
  sk = sample_axis(spec.s_range, false, kReparamPanels + 1, 0.0);
  Fk.resize(sk.size());
  auto angle = [beta, R](double s) {
    const Vec3 p = R * beta(s).p;
    return std::atan2(p.y(), p.x());
  };
  for (std::size_t k = 0; k < sk.size(); ++k) {
    const double raw = angle(sk[k]);
    if (k == 0) {
      Fk[k] = raw;
      continue;
    }
    Fk[k] = Fk[k - 1] + std::remainder(raw - Fk[k - 1], 2 * std::numbers::pi);
  }
  auto speed = [beta](double s) { return beta(s).d1.norm(); };
  auto s_of = [table, angle, speed](double sigma) {
    const auto& [sk, Fk] = *table;
    return invert_monotone(
        sk, Fk, sigma,
        [&](std::size_t k, double s) {
          return Fk[k] + std::remainder(angle(s) - Fk[k], 2 * std::numbers::pi);
        },
        speed);
  };

  NormalizedRuled out;
  out.rotation = R;
  out.spec.s_range = {Fk.front(), Fk.back()};
  out.spec.t_range = spec.t_range;
  out.spec.cylindrical = false;
  out.spec.beta = [](double sigma) {
    const double c = std::cos(sigma), s = std::sin(sigma);
    CurveJet j;
    j.p = {c, s, 0};
    j.d1 = {-s, c, 0};
    j.d2 = {-c, -s, 0};
    j.d3 = {s, -c, 0};
    return j;
  };
  out.spec.gamma = [gamma, beta, R, s_of](double sigma) {
    const double s = s_of(sigma);
    const CurveJet g = gamma(s), b = beta(s);
    const double v = b.d1.norm();
    const double dv = b.d1.dot(b.d2) / v;
    const double ds = 1 / v;
    const double dds = -dv / (v * v * v);
    CurveJet j;
    j.order = 2;
    j.p = R * g.p;
    j.d1 = R * (g.d1 * ds);
    j.d2 = R * (g.d2 * ds * ds + g.d1 * dds);
    return j;
  };
  return out;
}

}  // namespace stationary
