#include "stationary/surface.hpp"

#include <cmath>
#include <sstream>

#include "stationary/error.hpp"

namespace stationary {

ParametricPatch::ParametricPatch(Evaluator evaluator, Interval u_range, Interval v_range,
                                 bool v_periodic, std::string label, bool u_periodic)
    : evaluator_(std::move(evaluator)),
      u_range_(u_range),
      v_range_(v_range),
      v_periodic_(v_periodic),
      u_periodic_(u_periodic),
      label_(std::move(label)) {}

ParametricPatch ParametricPatch::with_domain(Interval u_range, Interval v_range) const {
  ParametricPatch p = *this;
  p.u_range_ = u_range;
  p.v_range_ = v_range;
  return p;
}

namespace {

bool inside(const Interval& r, double x) {
  const double slack = 1e-12 * std::max(1.0, std::max(std::abs(r.lo), std::abs(r.hi)));
  return x >= r.lo - slack && x <= r.hi + slack;
}

}  // namespace

Jet2 eval_jet2(const ParametricPatch& patch, double u, double v) {
  if (!patch.u_periodic() && !inside(patch.u_range(), u)) {
    std::ostringstream os;
    os << "u = " << u << " outside [" << patch.u_range().lo << ", " << patch.u_range().hi << "]";
    throw Error(ErrorKind::kParameterOutOfRange, os.str(), {u, v});
  }
  if (!patch.v_periodic() && !inside(patch.v_range(), v)) {
    std::ostringstream os;
    os << "v = " << v << " outside [" << patch.v_range().lo << ", " << patch.v_range().hi << "]";
    throw Error(ErrorKind::kParameterOutOfRange, os.str(), {u, v});
  }
  try {
    return patch.evaluator()(u, v);
  } catch (const Error& e) {
    if (e.where()) throw;
    throw e.at({u, v});
  }
}

FundamentalData fundamental_data(const Jet2& j) {
  FundamentalData d;
  d.E = j.Pu.dot(j.Pu);
  d.F = j.Pu.dot(j.Pv);
  d.G = j.Pv.dot(j.Pv);
  const Vec3 cross = j.Pu.cross(j.Pv);
  // |Pu x Pv|^2 equals EG - F^2 but does not cancel catastrophically.
  d.W = cross.squaredNorm();
  if (!(d.W > 0) || !std::isfinite(d.W))
    throw Error(ErrorKind::kDegenerateParametrization, "EG - F^2 <= 0");
  d.normal = cross / std::sqrt(d.W);
  d.L = j.Puu.dot(d.normal);
  d.M = j.Puv.dot(d.normal);
  d.Nff = j.Pvv.dot(d.normal);
  d.H = (d.G * d.L - 2 * d.F * d.M + d.E * d.Nff) / d.W;
  return d;
}

Jet2 fd_jet2(const ParametricPatch& patch, double u, double v, double h) {
  if (!(h > 0)) throw Error(ErrorKind::kPrecondition, "fd_jet2: h must be positive");
  const auto& ur = patch.u_range();
  const auto& vr = patch.v_range();
  if (!patch.u_periodic() && (!inside(ur, u - 2 * h) || !inside(ur, u + 2 * h)))
    throw Error(ErrorKind::kParameterOutOfRange, "fd_jet2: u stencil leaves the domain", {u, v});
  if (!patch.v_periodic() && (!inside(vr, v - 2 * h) || !inside(vr, v + 2 * h)))
    throw Error(ErrorKind::kParameterOutOfRange, "fd_jet2: v stencil leaves the domain", {u, v});

  auto P = [&](double a, double b) { return eval_jet2(patch, a, b).P; };
  const Vec3 p00 = P(u, v);
  const Vec3 pu_p = P(u + h, v), pu_m = P(u - h, v);
  const Vec3 pv_p = P(u, v + h), pv_m = P(u, v - h);
  const Vec3 ppp = P(u + h, v + h), ppm = P(u + h, v - h);
  const Vec3 pmp = P(u - h, v + h), pmm = P(u - h, v - h);

  Jet2 j;
  j.P = p00;
  j.Pu = (pu_p - pu_m) / (2 * h);
  j.Pv = (pv_p - pv_m) / (2 * h);
  j.Puu = (pu_p - 2 * p00 + pu_m) / (h * h);
  j.Pvv = (pv_p - 2 * p00 + pv_m) / (h * h);
  j.Puv = (ppp - ppm - pmp + pmm) / (4 * h * h);
  return j;
}

std::vector<double> sample_axis(const Interval& range, bool periodic, int n, double margin) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  if (periodic) {
    for (int j = 0; j < n; ++j) xs[j] = range.lo + j * range.length() / n;
    return xs;
  }
  const double lo = range.lo + margin, hi = range.hi - margin;
  if (n == 1) {
    xs[0] = 0.5 * (lo + hi);
    return xs;
  }
  for (int j = 0; j < n; ++j) xs[j] = lo + j * (hi - lo) / (n - 1);
  return xs;
}

ParametricPatch swap_uv(const ParametricPatch& patch) {
  auto inner = patch.evaluator();
  auto eval = [inner](double u, double v) {
    const Jet2 j = inner(v, u);
    return Jet2{j.P, j.Pv, j.Pu, j.Pvv, j.Puv, j.Puu};
  };
  return ParametricPatch(eval, patch.v_range(), patch.u_range(), patch.u_periodic(),
                         "swap(" + patch.label() + ")", patch.v_periodic());
}

ParametricPatch scaled(const ParametricPatch& patch, double lambda) {
  auto inner = patch.evaluator();
  auto eval = [inner, lambda](double u, double v) {
    const Jet2 j = inner(u, v);
    return Jet2{lambda * j.P,   lambda * j.Pu,  lambda * j.Pv,
                lambda * j.Puu, lambda * j.Puv, lambda * j.Pvv};
  };
  std::ostringstream os;
  os << lambda << "*" << patch.label();
  return ParametricPatch(eval, patch.u_range(), patch.v_range(), patch.v_periodic(), os.str(),
                         patch.u_periodic());
}

ParametricPatch rotated(const ParametricPatch& patch, const Mat3& R) {
  auto inner = patch.evaluator();
  auto eval = [inner, R](double u, double v) {
    const Jet2 j = inner(u, v);
    return Jet2{R * j.P, R * j.Pu, R * j.Pv, R * j.Puu, R * j.Puv, R * j.Pvv};
  };
  return ParametricPatch(eval, patch.u_range(), patch.v_range(), patch.v_periodic(),
                         "rot(" + patch.label() + ")", patch.u_periodic());
}

ParametricPatch translated(const ParametricPatch& patch, const Vec3& offset) {
  auto inner = patch.evaluator();
  auto eval = [inner, offset](double u, double v) {
    Jet2 j = inner(u, v);
    j.P += offset;
    return j;
  };
  std::ostringstream os;
  os << patch.label() << "+(" << offset.x() << "," << offset.y() << "," << offset.z() << ")";
  return ParametricPatch(eval, patch.u_range(), patch.v_range(), patch.v_periodic(), os.str(),
                         patch.u_periodic());
}

}  // namespace stationary
