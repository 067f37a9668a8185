#include "stationary/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stationary/error.hpp"
#include "stationary/hermite.hpp"
#include "stationary/inversion.hpp"
#include "stationary/stationary.hpp"

namespace stationary {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::kSpecValidation, what);
}

void require_interval(const Interval& r, const std::string& name) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo))
    invalid(name + " must satisfy lo < hi");
}

void require_finite(const Vec3& v, const std::string& name) {
  if (!v.allFinite()) invalid(name + " must be finite");
}

// Orthonormal (e1, e2) with e1 x e2 = a for a unit vector a.
std::pair<Vec3, Vec3> plane_basis(const Vec3& a) {
  const Vec3 e1 = a.unitOrthogonal();
  return {e1, a.cross(e1)};
}

std::string vec_text(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v.x() << "," << v.y() << "," << v.z() << ")";
  return os.str();
}

ParametricPatch polar_plane(const Vec3& normal, double offset, Interval radius,
                            const std::string& label) {
  const Vec3 n = normal.normalized();
  const auto [e1, e2] = plane_basis(n);
  const Vec3 base = offset * n;
  auto eval = [n, e1, e2, base](double rho, double phi) {
    const Vec3 d = std::cos(phi) * e1 + std::sin(phi) * e2;
    const Vec3 dd = -std::sin(phi) * e1 + std::cos(phi) * e2;
    Jet2 j;
    j.P = base + rho * d;
    j.Pu = d;
    j.Pv = rho * dd;
    j.Puv = dd;
    j.Pvv = -rho * d;
    return j;
  };
  return ParametricPatch(eval, radius, {0.0, kTwoPi}, true, label);
}

ParametricPatch sphere_patch(const family::Sphere& s) {
  const Vec3 c = s.center;
  const double R = s.radius;
  const Vec3 a = c.norm() > 0 ? Vec3(c.normalized()) : Vec3::UnitZ();
  const auto [e1, e2] = plane_basis(a);
  auto eval = [c, R, a, e1, e2](double u, double v) {
    const double cu = std::cos(u), su = std::sin(u);
    const Vec3 d = std::cos(v) * e1 + std::sin(v) * e2;
    const Vec3 dd = -std::sin(v) * e1 + std::cos(v) * e2;
    Jet2 j;
    j.P = c + R * (cu * d + su * a);
    j.Pu = R * (-su * d + cu * a);
    j.Puu = R * (-cu * d - su * a);
    j.Pv = R * cu * dd;
    j.Puv = -R * su * dd;
    j.Pvv = -R * cu * d;
    return j;
  };
  return ParametricPatch(eval, {-std::numbers::pi / 2, std::numbers::pi / 2}, {0.0, kTwoPi}, true,
                         "sphere(center=" + vec_text(c) + ", R=" + std::to_string(R) + ")");
}

ParametricPatch torus_patch(const family::Torus& t) {
  const Vec3 c = t.center;
  const double R = t.major, r = t.minor;
  auto eval = [c, R, r](double u, double v) {
    const double cu = std::cos(u), su = std::sin(u);
    const Vec3 d(std::cos(v), std::sin(v), 0.0);
    const Vec3 dd(-std::sin(v), std::cos(v), 0.0);
    const Vec3 e3 = Vec3::UnitZ();
    Jet2 j;
    j.P = c + (R + r * cu) * d + r * su * e3;
    j.Pu = -r * su * d + r * cu * e3;
    j.Puu = -r * cu * d - r * su * e3;
    j.Pv = (R + r * cu) * dd;
    j.Puv = -r * su * dd;
    j.Pvv = -(R + r * cu) * d;
    return j;
  };
  return ParametricPatch(eval, {0.0, kTwoPi}, {0.0, kTwoPi}, true, "torus", true);
}

ParametricPatch helicoid_patch(const family::Helicoid& h) {
  const double k = h.pitch;
  const Vec3 o = h.offset;
  auto eval = [k, o](double s, double t) {
    const double cs = std::cos(s), sn = std::sin(s);
    Jet2 j;
    j.P = Vec3(t * cs, t * sn, k * s) + o;
    j.Pu = {-t * sn, t * cs, k};
    j.Pv = {cs, sn, 0.0};
    j.Puu = {-t * cs, -t * sn, 0.0};
    j.Puv = {-sn, cs, 0.0};
    return j;
  };
  return ParametricPatch(eval, h.s_range, h.t_range, false,
                         "helicoid(pitch=" + std::to_string(k) + ")");
}

ParametricPatch catenoid_patch(const family::Catenoid& c) {
  const double w = c.waist;
  const Vec3 o = c.offset;
  auto eval = [w, o](double u, double v) {
    const double ch = std::cosh(u / w), sh = std::sinh(u / w);
    const Vec3 d(std::cos(v), std::sin(v), 0.0);
    const Vec3 dd(-std::sin(v), std::cos(v), 0.0);
    Jet2 j;
    j.P = w * ch * d + Vec3(0.0, 0.0, u) + o;
    j.Pu = sh * d + Vec3::UnitZ();
    j.Puu = ch / w * d;
    j.Pv = w * ch * dd;
    j.Puv = sh * dd;
    j.Pvv = -w * ch * d;
    return j;
  };
  return ParametricPatch(eval, c.u_range, {0.0, kTwoPi}, true,
                         "catenoid(waist=" + std::to_string(w) + ")");
}

RuledSpec ruled_generic_spec(const family::RuledGeneric& g) {
  RuledSpec spec;
  spec.gamma = g.gamma;
  spec.beta = normalized(g.direction);
  spec.s_range = g.s_range;
  spec.t_range = g.t_range;
  return g.striction ? striction_line(spec) : spec;
}

void validate_function_positive(const ScalarFunction& f, Interval range, const std::string& name) {
  for (double u : sample_axis(range, false, 257, 0.0)) {
    const double x = f.value(u);
    if (!(x > 0)) {
      std::ostringstream os;
      os << name << " must be positive (" << name << "(" << u << ") = " << x << ")";
      invalid(os.str());
    }
  }
}

void validate_function_finite(const ScalarFunction& f, Interval range, const std::string& name) {
  for (double u : sample_axis(range, false, 257, 0.0)) {
    const ScalarJet j = f(u);
    if (!std::isfinite(j.f) || !std::isfinite(j.d1) || !std::isfinite(j.d2))
      invalid(name + " is not finite on the u range");
  }
}

}  // namespace

std::string FamilySpec::kind() const {
  return std::visit(
      overloaded{
          [](const family::VectorPlane&) { return "vector_plane"; },
          [](const family::AffinePlane&) { return "affine_plane"; },
          [](const family::Sphere&) { return "sphere"; },
          [](const family::Torus&) { return "torus"; },
          [](const family::CylinderOverCurve&) { return "cylinder_over_curve"; },
          [](const family::Helicoid&) { return "helicoid"; },
          [](const family::Catenoid&) { return "catenoid"; },
          [](const family::RuledGeneric&) { return "ruled_generic"; },
          [](const family::ParallelCyclic&) { return "parallel_cyclic"; },
          [](const family::FrenetCyclic&) { return "frenet_cyclic"; },
          [](const family::Inverted&) { return "inverted"; },
          [](const family::LogSpiralNeg2&) { return "log_spiral_neg2"; },
          [](const family::RiemannMinimal&) { return "riemann_minimal"; },
          [](const family::Neg2Ode&) { return "neg2_ode"; },
      },
      params);
}

FamilySpec invert_spec(FamilySpec inner) {
  return FamilySpec{family::Inverted{std::make_shared<const FamilySpec>(std::move(inner))}};
}

PlanarCurve planar_curve(const family::CylinderOverCurve& cyl) {
  return std::visit(
      overloaded{
          [](const family::CircleCurve& c) {
            const double rho = c.radius;
            const Vec3 ctr(c.cx, c.cy, 0.0);
            PlanarCurve pc;
            pc.s_range = {0.0, kTwoPi * rho};
            pc.curve = [rho, ctr](double s) {
              const double th = s / rho, ct = std::cos(th), st = std::sin(th);
              CurveJet j;
              j.p = ctr + rho * Vec3(ct, st, 0.0);
              j.d1 = {-st, ct, 0.0};
              j.d2 = Vec3(-ct, -st, 0.0) / rho;
              j.d3 = Vec3(st, -ct, 0.0) / (rho * rho);
              return j;
            };
            return pc;
          },
          [](const family::LineCurve& l) {
            const Vec3 p(l.px, l.py, 0.0);
            const Vec3 d = Vec3(l.dx, l.dy, 0.0).normalized();
            PlanarCurve pc;
            pc.s_range = l.s_range;
            pc.curve = [p, d](double s) {
              CurveJet j;
              j.p = p + s * d;
              j.d1 = d;
              return j;
            };
            return pc;
          },
          [](const family::EulerCurve& e) {
            return euler_planar_curve(e.alpha, e.r0, e.theta0, e.kappa0_sign, e.length,
                                      e.tangent_angle)
                .curve;
          },
      },
      cyl.curve);
}

void validate(const FamilySpec& spec) {
  std::visit(
      overloaded{
          [](const family::VectorPlane& p) {
            require_finite(p.normal, "vector_plane.normal");
            if (!(p.normal.norm() > 0)) invalid("vector_plane.normal must be nonzero");
            require_interval(p.radius, "vector_plane.radius");
            if (!(p.radius.lo >= 0)) invalid("vector_plane.radius must be nonnegative");
          },
          [](const family::AffinePlane& p) {
            require_finite(p.normal, "affine_plane.normal");
            if (!(p.normal.norm() > 0)) invalid("affine_plane.normal must be nonzero");
            if (!std::isfinite(p.offset)) invalid("affine_plane.offset must be finite");
            require_interval(p.radius, "affine_plane.radius");
            if (!(p.radius.lo >= 0)) invalid("affine_plane.radius must be nonnegative");
          },
          [](const family::Sphere& s) {
            require_finite(s.center, "sphere.center");
            if (!(s.radius > 0) || !std::isfinite(s.radius)) invalid("sphere.radius must be > 0");
          },
          [](const family::Torus& t) {
            require_finite(t.center, "torus.center");
            if (!(t.minor > 0)) invalid("torus.minor must be > 0");
            if (!(t.major > t.minor)) invalid("torus.major must exceed torus.minor");
          },
          [](const family::CylinderOverCurve& c) {
            require_interval(c.t_range, "cylinder_over_curve.t_range");
            std::visit(overloaded{
                           [](const family::CircleCurve& k) {
                             if (!(k.radius > 0)) invalid("circle.radius must be > 0");
                           },
                           [](const family::LineCurve& k) {
                             if (!(std::hypot(k.dx, k.dy) > 0))
                               invalid("line direction must be nonzero");
                             require_interval(k.s_range, "line.s_range");
                           },
                           [](const family::EulerCurve& k) {
                             if (!(k.r0 > 0)) invalid("euler.r0 must be > 0");
                             if (!(k.length > 0)) invalid("euler.length must be > 0");
                             if (k.kappa0_sign != 1 && k.kappa0_sign != -1)
                               invalid("euler.kappa0_sign must be +1 or -1");
                           },
                       },
                       c.curve);
          },
          [](const family::Helicoid& h) {
            if (!(h.pitch != 0) || !std::isfinite(h.pitch)) invalid("helicoid.pitch must be nonzero");
            require_finite(h.offset, "helicoid.offset");
            require_interval(h.s_range, "helicoid.s_range");
            require_interval(h.t_range, "helicoid.t_range");
          },
          [](const family::Catenoid& c) {
            if (!(c.waist > 0)) invalid("catenoid.waist must be > 0");
            require_finite(c.offset, "catenoid.offset");
            require_interval(c.u_range, "catenoid.u_range");
          },
          [](const family::RuledGeneric& g) {
            require_interval(g.s_range, "ruled_generic.s_range");
            require_interval(g.t_range, "ruled_generic.t_range");
            for (double s : sample_axis(g.s_range, false, 65, 0.0)) {
              if (!(g.direction(s).p.norm() > 1e-12)) invalid("ruled_generic.direction vanishes");
              if (!(g.gamma(s).d1.norm() > 0) && !g.striction)
                invalid("ruled_generic.gamma is singular");
            }
          },
          [](const family::ParallelCyclic& c) {
            require_interval(c.u_range, "parallel_cyclic.u_range");
            validate_function_finite(c.a, c.u_range, "parallel_cyclic.a");
            validate_function_finite(c.b, c.u_range, "parallel_cyclic.b");
            validate_function_positive(c.r, c.u_range, "parallel_cyclic.r");
          },
          [](const family::FrenetCyclic& c) {
            require_interval(c.u_range, "frenet_cyclic.u_range");
            validate_function_positive(c.kappa, c.u_range, "frenet_cyclic.kappa");
            validate_function_finite(c.tau, c.u_range, "frenet_cyclic.tau");
            validate_function_finite(c.a, c.u_range, "frenet_cyclic.a");
            validate_function_finite(c.b, c.u_range, "frenet_cyclic.b");
            validate_function_finite(c.c, c.u_range, "frenet_cyclic.c");
            validate_function_positive(c.r, c.u_range, "frenet_cyclic.r");
          },
          [](const family::Inverted& i) {
            if (!i.inner) invalid("inverted.inner is missing");
            validate(*i.inner);
            const ParametricPatch inner = make_patch(*i.inner);
            const auto us = sample_axis(inner.u_range(), inner.u_periodic(), 32, kDomainMargin);
            const auto vs = sample_axis(inner.v_range(), inner.v_periodic(), 32, kDomainMargin);
            for (double u : us)
              for (double v : vs)
                if (!(eval_jet2(inner, u, v).P.norm() >= kInversionCutoff)) {
                  std::ostringstream os;
                  os << "inverted.inner passes through 0 near (u=" << u << ", v=" << v << ")";
                  invalid(os.str());
                }
          },
          [](const family::LogSpiralNeg2& l) {
            require_interval(l.u_range, "log_spiral_neg2.u_range");
            if (!(l.u_range.lo > 0)) invalid("log_spiral_neg2.u_range must be positive");
          },
          [](const family::RiemannMinimal& r) {
            if (!(r.r0 > 0)) invalid("riemann_minimal.r0 must be > 0");
            if (!(r.span > 0)) invalid("riemann_minimal.span must be > 0");
            if (!std::isfinite(r.c_drift)) invalid("riemann_minimal.c_drift must be finite");
          },
          [](const family::Neg2Ode& n) {
            require_interval(n.u_range, "neg2_ode.u_range");
            if (!(n.r0 > 0)) invalid("neg2_ode.r0 must be > 0");
            validate_function_positive(n.kappa, n.u_range, "neg2_ode.kappa");
          },
      },
      spec.params);
}

ParametricPatch make_patch(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      overloaded{
          [](const family::VectorPlane& p) {
            return polar_plane(p.normal, 0.0, p.radius, "vector_plane(n=" + vec_text(p.normal) + ")");
          },
          [](const family::AffinePlane& p) {
            return polar_plane(p.normal, p.offset, p.radius,
                               "affine_plane(n=" + vec_text(p.normal) + ")");
          },
          [](const family::Sphere& s) { return sphere_patch(s); },
          [](const family::Torus& t) { return torus_patch(t); },
          [](const family::CylinderOverCurve& c) { return cylinder_patch(planar_curve(c), c.t_range); },
          [](const family::Helicoid& h) { return helicoid_patch(h); },
          [](const family::Catenoid& c) { return catenoid_patch(c); },
          [](const family::RuledGeneric& g) { return ruled_patch(ruled_generic_spec(g)); },
          [](const family::ParallelCyclic& c) {
            CyclicSpec cs;
            cs.mode = CyclicMode::kParallel;
            cs.u_range = c.u_range;
            cs.a = c.a;
            cs.b = c.b;
            cs.r = c.r;
            return build_cyclic(cs);
          },
          [](const family::FrenetCyclic& c) {
            CyclicSpec cs;
            cs.mode = CyclicMode::kFrenet;
            cs.u_range = c.u_range;
            cs.a = c.a;
            cs.b = c.b;
            cs.c = c.c;
            cs.r = c.r;
            cs.frame = frame_from_curvature(c.kappa, c.tau, c.u_range, c.init);
            return build_cyclic(cs);
          },
          [](const family::Inverted& i) { return invert_patch(make_patch(*i.inner)); },
          [](const family::LogSpiralNeg2& l) { return log_spiral_example(l.u_range); },
          [](const family::RiemannMinimal& r) { return riemann_minimal(r.c_drift, r.r0, r.span); },
          [](const family::Neg2Ode& n) {
            return build_cyclic(integrate_neg2_family(n.kappa, n.a0, n.da0, n.r0, n.dr0, n.u_range).spec);
          },
      },
      spec.params);
}

FamilySpec tabulate(const FamilySpec& spec) {
  if (const auto* n = std::get_if<family::Neg2Ode>(&spec.params)) {
    const Neg2Family fam = integrate_neg2_family(n->kappa, n->a0, n->da0, n->r0, n->dr0, n->u_range);
    family::FrenetCyclic f;
    f.kappa = n->kappa;
    f.tau = ScalarFunction::constant(0.0);
    f.a = fam.spec.a;
    f.b = fam.spec.b;
    f.c = fam.spec.c;
    f.r = fam.spec.r;
    f.u_range = n->u_range;
    return FamilySpec{f};
  }
  if (const auto* r = std::get_if<family::RiemannMinimal>(&spec.params)) {
    const CyclicSpec cs = riemann_minimal_spec(r->c_drift, r->r0, r->span);
    return FamilySpec{family::ParallelCyclic{cs.a, cs.b, cs.r, cs.u_range}};
  }
  if (const auto* i = std::get_if<family::Inverted>(&spec.params)) {
    if (i->inner) return invert_spec(tabulate(*i->inner));
  }
  return spec;
}

EulerCurveTable euler_planar_curve(double alpha, double r0, double theta0, int kappa0_sign,
                                   double length, double tangent_angle, double max_step) {
  if (!(r0 > 0)) throw Error(ErrorKind::kSpecValidation, "euler curve: r0 must be > 0");
  if (!(length > 0)) throw Error(ErrorKind::kSpecValidation, "euler curve: length must be > 0");
  const int steps = std::max(1, static_cast<int>(std::ceil(length / max_step)));
  const double h = length / steps;

  using State = std::array<double, 3>;  // x, y, tangent angle
  auto kappa = [alpha](const State& s) {
    const double r2 = s[0] * s[0] + s[1] * s[1];
    if (!(r2 >= 1e-12)) throw Error(ErrorKind::kOriginCollision, "euler curve reached 0");
    // left normal (-sin th, cos th)
    return alpha * (-std::sin(s[2]) * s[0] + std::cos(s[2]) * s[1]) / r2;
  };
  auto rhs = [&](const State& s) { return State{std::cos(s[2]), std::sin(s[2]), kappa(s)}; };
  auto axpy = [](const State& s, double c, const State& d) {
    return State{s[0] + c * d[0], s[1] + c * d[1], s[2] + c * d[2]};
  };

  EulerCurveTable table;
  State s{r0 * std::cos(theta0), r0 * std::sin(theta0), theta0 + kappa0_sign * tangent_angle};
  auto record = [&](double arc) {
    const double k = kappa(s);
    table.samples.push_back({arc, Vec3(s[0], s[1], 0.0),
                             Vec3(-std::sin(s[2]), std::cos(s[2]), 0.0), k});
  };
  record(0.0);
  for (int i = 0; i < steps; ++i) {
    const State k1 = rhs(s);
    const State k2 = rhs(axpy(s, h / 2, k1));
    const State k3 = rhs(axpy(s, h / 2, k2));
    const State k4 = rhs(axpy(s, h, k3));
    for (int c = 0; c < 3; ++c) s[c] += h / 6 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
    record(i + 1 == steps ? length : (i + 1) * h);
  }

  std::vector<double> knots;
  std::vector<Jet1<Vec3>> jets;
  for (const auto& e : table.samples) {
    const Vec3 t(e.normal.y(), -e.normal.x(), 0.0);
    knots.push_back(e.s);
    jets.push_back({e.position, t, e.kappa * e.normal});
  }
  auto interp = std::make_shared<const QuinticHermite<Vec3>>(std::move(knots), std::move(jets));
  table.curve.s_range = {0.0, length};
  table.curve.axis = Vec3::UnitZ();
  table.curve.curve = [interp](double s) {
    const Jet1<Vec3> j = (*interp)(s);
    CurveJet c;
    c.order = 2;
    c.p = j.f;
    c.d1 = j.d1;
    c.d2 = j.d2;
    return c;
  };
  return table;
}

CyclicSpec riemann_minimal_spec(double c_drift, double r0, double span, double max_step) {
  if (!(r0 > 0)) throw Error(ErrorKind::kSpecValidation, "riemann_minimal: r0 must be > 0");
  if (!(span > 0)) throw Error(ErrorKind::kSpecValidation, "riemann_minimal: span must be > 0");
  const int steps = std::max(1, static_cast<int>(std::ceil(span / max_step)));
  const double h = span / steps;

  using State = std::array<double, 4>;  // a, a', r, r'
  constexpr int kSamples = 8;  // the defect only carries frequencies n <= 2

  // n = 0 and n = 1 cosine coefficients of the alpha = 0 weighted defect
  // for given second derivatives.
  auto coeffs = [](double u, const State& s, double dda, double ddr) {
    std::vector<double> d(kSamples);
    for (int k = 0; k < kSamples; ++k) {
      const double v = kTwoPi * k / kSamples;
      const Vec3 e(std::cos(v), std::sin(v), 0.0);
      const Vec3 de(-std::sin(v), std::cos(v), 0.0);
      Jet2 j;
      j.P = Vec3(s[0], 0.0, u) + s[2] * e;
      j.Pu = Vec3(s[1], 0.0, 1.0) + s[3] * e;
      j.Puu = Vec3(dda, 0.0, 0.0) + ddr * e;
      j.Pv = s[2] * de;
      j.Puv = s[3] * de;
      j.Pvv = -s[2] * e;
      d[k] = weighted_defect(j, 0.0);
    }
    const FourierCoeffs fc = fourier_coefficients(d, 0.0, 1);
    return std::array<double, 2>{fc.A[0], fc.A[1]};
  };
  auto second = [&](double u, const State& s) -> std::pair<double, double> {
    if (!(s[2] > 1e-12)) {
      std::ostringstream os;
      os << "riemann_minimal: radius reached 0 at u = " << u;
      throw Error(ErrorKind::kFoliationCollapse, os.str());
    }
    const auto c0 = coeffs(u, s, 0, 0);
    const auto ca = coeffs(u, s, 1, 0);
    const auto cr = coeffs(u, s, 0, 1);
    const double m11 = ca[0] - c0[0], m12 = cr[0] - c0[0];
    const double m21 = ca[1] - c0[1], m22 = cr[1] - c0[1];
    const double det = m11 * m22 - m12 * m21;
    if (!(std::abs(det) > 1e-14 * std::max(std::abs(m11 * m22), std::abs(m12 * m21))))
      throw Error(ErrorKind::kDegenerateFamily, "riemann_minimal: singular coefficient system");
    return {(-c0[0] * m22 + c0[1] * m12) / det, (-c0[1] * m11 + c0[0] * m21) / det};
  };
  auto rhs = [&](double u, const State& s) {
    const auto [dda, ddr] = second(u, s);
    return State{s[1], dda, s[3], ddr};
  };
  auto axpy = [](const State& s, double c, const State& d) {
    return State{s[0] + c * d[0], s[1] + c * d[1], s[2] + c * d[2], s[3] + c * d[3]};
  };

  struct Row {
    double u;
    State s;
    double dda, ddr;
  };
  auto integrate = [&](double dir) {
    std::vector<Row> rows;
    State s{0.0, c_drift, r0, 0.0};
    auto record = [&](double u) {
      const auto [dda, ddr] = second(u, s);
      rows.push_back({u, s, dda, ddr});
    };
    record(0.0);
    const double hh = dir * h;
    for (int i = 0; i < steps; ++i) {
      const double u = i * hh;
      const State k1 = rhs(u, s);
      const State k2 = rhs(u + hh / 2, axpy(s, hh / 2, k1));
      const State k3 = rhs(u + hh / 2, axpy(s, hh / 2, k2));
      const State k4 = rhs(u + hh, axpy(s, hh, k3));
      for (int c = 0; c < 4; ++c) s[c] += hh / 6 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
      record(i + 1 == steps ? dir * span : (i + 1) * hh);
    }
    return rows;
  };
  std::vector<Row> back = integrate(-1.0);
  const std::vector<Row> fwd = integrate(1.0);
  std::reverse(back.begin(), back.end());
  back.insert(back.end(), fwd.begin() + 1, fwd.end());

  ScalarFunction::Table ta, tr;
  for (const auto& row : back) {
    ta.u.push_back(row.u);
    ta.f.push_back(row.s[0]);
    ta.df.push_back(row.s[1]);
    ta.d2f.push_back(row.dda);
    tr.u.push_back(row.u);
    tr.f.push_back(row.s[2]);
    tr.df.push_back(row.s[3]);
    tr.d2f.push_back(row.ddr);
  }
  CyclicSpec cs;
  cs.mode = CyclicMode::kParallel;
  cs.u_range = {-span, span};
  cs.a = ScalarFunction::table(std::move(ta));
  cs.b = ScalarFunction::constant(0.0);
  cs.r = ScalarFunction::table(std::move(tr));
  return cs;
}

ParametricPatch riemann_minimal(double c_drift, double r0, double span) {
  return build_cyclic(riemann_minimal_spec(c_drift, r0, span));
}

}  // namespace stationary
