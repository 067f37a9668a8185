#include "stationary/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stationary/error.hpp"

namespace stationary {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Gram-Schmidt on (t, n), b = t x n. Returns the largest defect removed.
double reorthonormalize(Vec3& t, Vec3& n, Vec3& b) {
  const double defect = std::max({std::abs(t.squaredNorm() - 1), std::abs(n.squaredNorm() - 1),
                                  std::abs(b.squaredNorm() - 1), std::abs(t.dot(n)),
                                  std::abs(t.dot(b)), std::abs(n.dot(b))});
  t.normalize();
  n = (n - n.dot(t) * t).normalized();
  b = t.cross(n);
  return defect;
}

std::string at_u(double u) {
  std::ostringstream os;
  os << " at u = " << u;
  return os.str();
}

}  // namespace

CurveFrame::CurveFrame(std::vector<FrameSample> samples, ScalarFunction kappa, ScalarFunction tau,
                       Init init, double max_drift)
    : samples_(std::move(samples)),
      kappa_(std::move(kappa)),
      tau_(std::move(tau)),
      init_(init),
      max_drift_(max_drift) {
  std::vector<double> us;
  std::vector<Jet1<Vec3>> P, T, N, B;
  for (const auto& s : samples_) {
    const ScalarJet k = kappa_(s.u), w = tau_(s.u);
    const Vec3 dt = k.f * s.n;
    const Vec3 dn = -k.f * s.t + w.f * s.b;
    const Vec3 db = -w.f * s.n;
    us.push_back(s.u);
    P.push_back({s.position, s.t, dt});
    T.push_back({s.t, dt, k.d1 * s.n + k.f * dn});
    N.push_back({s.n, dn, -k.d1 * s.t - k.f * dt + w.d1 * s.b + w.f * db});
    B.push_back({s.b, db, -w.d1 * s.n - w.f * dn});
  }
  position_ = QuinticHermite<Vec3>(us, std::move(P));
  tangent_ = QuinticHermite<Vec3>(us, std::move(T));
  normal_ = QuinticHermite<Vec3>(us, std::move(N));
  binormal_ = QuinticHermite<Vec3>(std::move(us), std::move(B));
}

FrameSample CurveFrame::at(double u) const {
  FrameSample s;
  s.u = u;
  s.position = position_(u).f;
  s.t = tangent_(u).f;
  s.n = normal_(u).f;
  s.b = binormal_(u).f;
  reorthonormalize(s.t, s.n, s.b);
  s.kappa = kappa_.value(u);
  s.tau = tau_.value(u);
  return s;
}

CurveFrame frame_from_curvature(const ScalarFunction& kappa, const ScalarFunction& tau,
                                Interval u_range, CurveFrame::Init init, double max_step) {
  if (!(u_range.hi > u_range.lo)) throw Error(ErrorKind::kPrecondition, "empty curve range");
  const int steps = std::max(1, static_cast<int>(std::ceil(u_range.length() / max_step)));
  const double h = u_range.length() / steps;

  struct State {
    Vec3 p, t, n, b;
  };
  auto k_at = [&](double u) {
    const double k = kappa.value(u);
    if (!(k > 0)) throw Error(ErrorKind::kFrameUndefined, "curvature is not positive" + at_u(u));
    return k;
  };
  auto rhs = [&](double u, const State& s) {
    const double k = k_at(u), w = tau.value(u);
    return State{s.t, k * s.n, -k * s.t + w * s.b, -w * s.n};
  };
  auto axpy = [](const State& s, double c, const State& d) {
    return State{s.p + c * d.p, s.t + c * d.t, s.n + c * d.n, s.b + c * d.b};
  };

  State s{init.position, init.t, init.n, init.b};
  double drift = reorthonormalize(s.t, s.n, s.b);
  if (drift > 1e-8) throw Error(ErrorKind::kPrecondition, "initial frame is not orthonormal");
  drift = 0;

  std::vector<FrameSample> samples;
  samples.reserve(static_cast<std::size_t>(steps) + 1);
  auto record = [&](double u) {
    samples.push_back({u, s.p, s.t, s.n, s.b, k_at(u), tau.value(u)});
  };
  record(u_range.lo);
  for (int i = 0; i < steps; ++i) {
    const double u = u_range.lo + i * h;
    const State k1 = rhs(u, s);
    const State k2 = rhs(u + h / 2, axpy(s, h / 2, k1));
    const State k3 = rhs(u + h / 2, axpy(s, h / 2, k2));
    const State k4 = rhs(u + h, axpy(s, h, k3));
    s.p += h / 6 * (k1.p + 2 * k2.p + 2 * k3.p + k4.p);
    s.t += h / 6 * (k1.t + 2 * k2.t + 2 * k3.t + k4.t);
    s.n += h / 6 * (k1.n + 2 * k2.n + 2 * k3.n + k4.n);
    s.b += h / 6 * (k1.b + 2 * k2.b + 2 * k3.b + k4.b);
    drift = std::max(drift, reorthonormalize(s.t, s.n, s.b));
    record(i + 1 == steps ? u_range.hi : u_range.lo + (i + 1) * h);
  }
  return CurveFrame(std::move(samples), kappa, tau, init, drift);
}

namespace {

// Derivative of x t + y n + z b along the frame, in frame coordinates.
Vec3 frame_derivative(const Vec3& x, const Vec3& dx, double k, double w) {
  return {dx.x() - k * x.y(), dx.y() + k * x.x() - w * x.z(), dx.z() + w * x.y()};
}

Vec3 in_frame(const FrameSample& f, const Vec3& x) { return x.x() * f.t + x.y() * f.n + x.z() * f.b; }

ParametricPatch build_parallel(const CyclicSpec& spec) {
  auto eval = [a = spec.a, b = spec.b, r = spec.r](double u, double v) {
    const ScalarJet A = a(u), B = b(u), R = r(u);
    if (!(R.f > 0)) throw Error(ErrorKind::kSpecValidation, "radius is not positive" + at_u(u));
    const Vec3 e(std::cos(v), std::sin(v), 0.0);
    const Vec3 de(-std::sin(v), std::cos(v), 0.0);
    Jet2 j;
    j.P = Vec3(A.f, B.f, u) + R.f * e;
    j.Pu = Vec3(A.d1, B.d1, 1.0) + R.d1 * e;
    j.Pv = R.f * de;
    j.Puu = Vec3(A.d2, B.d2, 0.0) + R.d2 * e;
    j.Puv = R.d1 * de;
    j.Pvv = -R.f * e;
    return j;
  };
  return ParametricPatch(eval, spec.u_range, {0.0, kTwoPi}, true, "cyclic[parallel]");
}

ParametricPatch build_frenet(const CyclicSpec& spec) {
  auto eval = [a = spec.a, b = spec.b, c = spec.c, r = spec.r, frame = spec.frame](double u,
                                                                                  double v) {
    const ScalarJet A = a(u), B = b(u), C = c(u), R = r(u);
    if (!(R.f > 0)) throw Error(ErrorKind::kSpecValidation, "radius is not positive" + at_u(u));
    const ScalarJet K = frame.kappa()(u), T = frame.tau()(u);
    if (!(K.f > 0)) throw Error(ErrorKind::kFrameUndefined, "curvature is not positive" + at_u(u));
    const FrameSample f = frame.at(u);
    const double cv = std::cos(v), sv = std::sin(v);

    // coordinates (a, b + r cos v, c + r sin v) and their u-derivatives
    const Vec3 x(A.f, B.f + R.f * cv, C.f + R.f * sv);
    const Vec3 dx(A.d1, B.d1 + R.d1 * cv, C.d1 + R.d1 * sv);
    const Vec3 ddx(A.d2, B.d2 + R.d2 * cv, C.d2 + R.d2 * sv);

    const double k = K.f, w = T.f;
    const Vec3 x1 = frame_derivative(x, dx, k, w);
    // u-derivative of x1 componentwise
    const Vec3 dx1(ddx.x() - K.d1 * x.y() - k * dx.y(),
                   ddx.y() + K.d1 * x.x() + k * dx.x() - T.d1 * x.z() - w * dx.z(),
                   ddx.z() + T.d1 * x.y() + w * dx.y());
    const Vec3 x2 = frame_derivative(x1, dx1, k, w);

    const Vec3 xv(0.0, -R.f * sv, R.f * cv);
    const Vec3 dxv(0.0, -R.d1 * sv, R.d1 * cv);
    const Vec3 xvv(0.0, -R.f * cv, -R.f * sv);

    Jet2 j;
    j.P = in_frame(f, x);
    j.Pu = in_frame(f, x1);
    j.Puu = in_frame(f, x2);
    j.Pv = in_frame(f, xv);
    j.Puv = in_frame(f, frame_derivative(xv, dxv, k, w));
    j.Pvv = in_frame(f, xvv);
    return j;
  };
  return ParametricPatch(eval, spec.u_range, {0.0, kTwoPi}, true, "cyclic[frenet]");
}

}  // namespace

ParametricPatch build_cyclic(const CyclicSpec& spec) {
  if (!(spec.u_range.hi > spec.u_range.lo))
    throw Error(ErrorKind::kSpecValidation, "cyclic: empty u range");
  const bool frenet = spec.mode == CyclicMode::kFrenet;
  if (frenet) {
    if (spec.frame.samples().empty())
      throw Error(ErrorKind::kSpecValidation, "cyclic: frenet mode needs a frame");
    const Interval fr = spec.frame.range();
    const double slack = 1e-12 * std::max(1.0, std::abs(fr.hi));
    if (spec.u_range.lo < fr.lo - slack || spec.u_range.hi > fr.hi + slack)
      throw Error(ErrorKind::kSpecValidation, "cyclic: frame does not cover the u range");
  }
  for (double u : sample_axis(spec.u_range, false, 257, 0.0)) {
    if (!(spec.r.value(u) > 0))
      throw Error(ErrorKind::kSpecValidation, "cyclic: radius r is not positive" + at_u(u));
    if (frenet && !(spec.frame.kappa().value(u) > 0))
      throw Error(ErrorKind::kSpecValidation, "cyclic: curvature kappa is not positive" + at_u(u));
  }
  return frenet ? build_frenet(spec) : build_parallel(spec);
}

std::pair<double, double> parallel_A3B3(double a, double da, double b, double db, double r,
                                        double alpha, double u) {
  const double f = alpha * r * r * r / 4;
  const double A3 = f * (-2 * b * da * db - (a - 3 * u * da) * db * db + (a - u * da) * da * da);
  const double B3 = f * (da * (2 * a - 3 * u * da) * db + b * (da * da - db * db) + u * db * db * db);
  return {A3, B3};
}

std::pair<double, double> frenet_A4B4(double a, double b, double c, double db, double dc, double r,
                                      double k, double w, double alpha) {
  const double f = (alpha + 4) * r * r * r * r * k / 8;
  const double A4 =
      f * (2 * dc * (c * (a * k + db - c * w) + b * b * w) -
           b * (2 * a * k * (db - 2 * c * w) + a * a * k * k - 4 * c * w * db + db * db -
                w * w * (b * b - 3 * c * c) + r * r * k * k) +
           b * dc * dc);
  const double B4 =
      -f * (2 * a * k * (c * (db - c * w) + b * dc + b * b * w) + a * a * c * k * k +
            c * (db * db - (b * w + dc) * (3 * b * w + dc) + r * r * k * k) +
            2 * b * db * (b * w + dc) - 2 * c * c * w * db + c * c * c * w * w);
  return {A4, B4};
}

double frenet_A4B4_combination(double a, double b, double c, double db, double dc, double r,
                               double k, double w, double alpha) {
  return 0.25 * (alpha + 4) * r * r * r * r * k * (b * b + c * c) * (b * w + dc) *
         (a * k + db - c * w);
}

std::array<double, 3> neg2_equations(double a, double a1, double a2, double r, double r1,
                                     double r2, double k, double k1) {
  const double a_2 = a * a, a_3 = a_2 * a, a_4 = a_3 * a;
  const double r_2 = r * r, r_3 = r_2 * r;
  const double e21 = a_2 * r * (k * (-3 * a1 * a1 + r * r2 + 3 * r1 * r1) - r * r1 * k1) +
                     r_3 * (k * (a1 * a1 + r * r2 - r1 * r1) - r * r1 * k1) +
                     a_3 * (r * k * a2 + a1 * (2 * k * r1 - r * k1)) +
                     a * r_2 * (r * k * a2 - a1 * (6 * k * r1 + r * k1));
  const double e22 = a * r * r1 * (2 * (a1 * a1 + r1 * r1) + r_2 * k * k) + a_4 * k * k * a1 +
                     a_2 * (r * a2 * r1 - r * a1 * r2 + a1 * r1 * r1 + r_2 * k * k * a1 +
                            a1 * a1 * a1) -
                     r_2 * (-r * a2 * r1 + a1 * (r * r2 + r1 * r1) + a1 * a1 * a1) +
                     a_3 * r * k * k * r1;
  const double e23 = a * r * k * (-2 * a1 * a1 + 2 * r1 * r1 + r_2 * k * k) +
                     r_2 * (k * (r * a2 - 2 * a1 * r1) - r * a1 * k1) +
                     a_2 * (k * (r * a2 + 2 * a1 * r1) - r * a1 * k1) + a_3 * r * k * k * k;
  return {e21, e22, e23};
}

Neg2Family integrate_neg2_family(const ScalarFunction& kappa, double a0, double da0, double r0,
                                 double dr0, Interval u_range, double max_step) {
  if (!(r0 > 0)) throw Error(ErrorKind::kSpecValidation, "r0 must be positive");
  if (!(u_range.hi > u_range.lo)) throw Error(ErrorKind::kSpecValidation, "empty u range");
  const int steps = std::max(1, static_cast<int>(std::ceil(u_range.length() / max_step)));
  const double h = u_range.length() / steps;

  using State = std::array<double, 4>;  // a, a', r, r'
  // Both equations are affine in (a'', r''); recover the 2x2 system by probing.
  auto second = [&](double u, const State& s) -> std::pair<double, double> {
    const auto [a, a1, r, r1] = s;
    if (!(r > 1e-12)) throw Error(ErrorKind::kFoliationCollapse, "radius reached 0" + at_u(u));
    const ScalarJet k = kappa(u);
    if (!(k.f > 0)) throw Error(ErrorKind::kFrameUndefined, "curvature is not positive" + at_u(u));
    const auto e0 = neg2_equations(a, a1, 0, r, r1, 0, k.f, k.d1);
    const auto ea = neg2_equations(a, a1, 1, r, r1, 0, k.f, k.d1);
    const auto er = neg2_equations(a, a1, 0, r, r1, 1, k.f, k.d1);
    const double m11 = ea[0] - e0[0], m12 = er[0] - e0[0];
    const double m21 = ea[2] - e0[2], m22 = er[2] - e0[2];
    const double det = m11 * m22 - m12 * m21;
    const double scale = std::max({std::abs(m11 * m22), std::abs(m12 * m21), 1e-300});
    if (std::abs(det) <= 1e-12 * scale || !std::isfinite(det))
      throw Error(ErrorKind::kDegenerateFamily, "singular system for (a'', r'')" + at_u(u));
    const double dda = (-e0[0] * m22 + e0[2] * m12) / det;
    const double ddr = (-e0[2] * m11 + e0[0] * m21) / det;
    return {dda, ddr};
  };
  auto rhs = [&](double u, const State& s) {
    const auto [dda, ddr] = second(u, s);
    return State{s[1], dda, s[3], ddr};
  };
  auto axpy = [](const State& s, double c, const State& d) {
    return State{s[0] + c * d[0], s[1] + c * d[1], s[2] + c * d[2], s[3] + c * d[3]};
  };

  Neg2Family fam;
  State s{a0, da0, r0, dr0};
  auto record = [&](double u) {
    const auto [dda, ddr] = second(u, s);
    const ScalarJet k = kappa(u);
    const auto eq = neg2_equations(s[0], s[1], dda, s[2], s[3], ddr, k.f, k.d1);
    fam.solution.push_back({u, s[0], s[1], dda, s[2], s[3], ddr, k.f, k.d1, eq[1]});
  };
  record(u_range.lo);
  for (int i = 0; i < steps; ++i) {
    const double u = u_range.lo + i * h;
    const State k1 = rhs(u, s);
    const State k2 = rhs(u + h / 2, axpy(s, h / 2, k1));
    const State k3 = rhs(u + h / 2, axpy(s, h / 2, k2));
    const State k4 = rhs(u + h, axpy(s, h, k3));
    for (int c = 0; c < 4; ++c) s[c] += h / 6 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
    record(i + 1 == steps ? u_range.hi : u_range.lo + (i + 1) * h);
  }

  ScalarFunction::Table ta, tr;
  for (const auto& row : fam.solution) {
    ta.u.push_back(row.u);
    ta.f.push_back(row.a);
    ta.df.push_back(row.da);
    ta.d2f.push_back(row.dda);
    tr.u.push_back(row.u);
    tr.f.push_back(row.r);
    tr.df.push_back(row.dr);
    tr.d2f.push_back(row.ddr);
  }
  fam.spec.mode = CyclicMode::kFrenet;
  fam.spec.u_range = u_range;
  fam.spec.a = ScalarFunction::table(std::move(ta));
  fam.spec.b = ScalarFunction::constant(0.0);
  fam.spec.c = ScalarFunction::constant(0.0);
  fam.spec.r = ScalarFunction::table(std::move(tr));
  fam.spec.frame = frame_from_curvature(kappa, ScalarFunction::constant(0.0), u_range, {}, max_step);
  return fam;
}

ParametricPatch log_spiral_example(Interval u_range) {
  if (!(u_range.lo > 0) || !(u_range.hi > u_range.lo))
    throw Error(ErrorKind::kDomain, "log spiral example needs 0 < u_lo < u_hi");
  auto eval = [](double u, double v) {
    if (!(u > 0)) throw Error(ErrorKind::kDomain, "log spiral example needs u > 0");
    const double L = std::log(u), sl = std::sin(L), cl = std::cos(L);
    const double cv = std::cos(v), sv = std::sin(v);
    Jet2 j;
    j.P = {-u * sl * cv, u * cl * cv, u * sv};
    j.Pu = {-(sl + cl) * cv, (cl - sl) * cv, sv};
    j.Puu = {-(cl - sl) / u * cv, -(sl + cl) / u * cv, 0.0};
    j.Pv = {u * sl * sv, -u * cl * sv, u * cv};
    j.Puv = {(sl + cl) * sv, -(cl - sl) * sv, cv};
    j.Pvv = {u * sl * cv, -u * cl * cv, -u * sv};
    return j;
  };
  return ParametricPatch(eval, u_range, {0.0, kTwoPi}, true, "log_spiral_neg2");
}

}  // namespace stationary
