#pragma once

#include <memory>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "stationary/cyclic.hpp"
#include "stationary/function.hpp"
#include "stationary/ruled.hpp"
#include "stationary/surface.hpp"

namespace stationary {

struct FamilySpec;

namespace family {

/// Plane through 0, polar chart: radius in `radius`, angle periodic.
struct VectorPlane {
  Vec3 normal = Vec3::UnitZ();
  Interval radius{0.5, 2.0};
};

/// Plane {<x, normal> = offset}, same polar chart around offset * normal.
struct AffinePlane {
  Vec3 normal = Vec3::UnitZ();
  double offset = 1.0;
  Interval radius{0.5, 2.0};
};

/// The chart pole points along center/|center| so a sphere through 0 has
/// the origin at an excluded pole.
struct Sphere {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
};

struct Torus {
  Vec3 center = Vec3::Zero();
  double major = 2.0;
  double minor = 0.5;
};

struct CircleCurve {
  double cx = 0, cy = 0;
  double radius = 1.0;
};

struct LineCurve {
  double px = 0, py = 0;
  double dx = 1, dy = 0;
  Interval s_range{-1.0, 1.0};
};

struct EulerCurve {
  double alpha = 2.0;
  double r0 = 1.0;
  double theta0 = 0.0;
  int kappa0_sign = 1;
  double length = 1.0;
  double tangent_angle = std::numbers::pi / 2;
};

/// Cylinder over a planar curve in the xy-plane with rulings along e3.
struct CylinderOverCurve {
  std::variant<CircleCurve, LineCurve, EulerCurve> curve;
  Interval t_range{-1.0, 1.0};
};

/// (t cos s, t sin s, pitch s) + offset.
struct Helicoid {
  double pitch = 1.0;
  Vec3 offset = Vec3::Zero();
  Interval s_range{-std::numbers::pi, std::numbers::pi};
  Interval t_range{-1.5, 1.5};
};

/// (w cosh(u/w) cos v, w cosh(u/w) sin v, u) + offset.
struct Catenoid {
  double waist = 1.0;
  Vec3 offset = Vec3::Zero();
  Interval u_range{-1.0, 1.0};
};

/// gamma + t beta with trigonometric gamma and beta = normalized(direction).
struct RuledGeneric {
  TrigCurve gamma;
  TrigCurve direction;
  Interval s_range{0.0, 1.0};
  Interval t_range{-1.0, 1.0};
  bool striction = true;  // move the directrix to the striction line first
};

struct ParallelCyclic {
  ScalarFunction a, b, r;
  Interval u_range{-0.5, 0.5};
};

struct FrenetCyclic {
  ScalarFunction kappa, tau;
  ScalarFunction a, b, c, r;
  Interval u_range{0.0, 1.0};
  CurveFrame::Init init;
};

struct Inverted {
  std::shared_ptr<const FamilySpec> inner;
};

struct LogSpiralNeg2 {
  Interval u_range{1.0, std::numbers::e};
};

struct RiemannMinimal {
  double c_drift = 0.5;
  double r0 = 1.0;
  double span = 1.0;
};

/// Planar cyclic (-2)-stationary family generated from kappa.
struct Neg2Ode {
  ScalarFunction kappa;
  Interval u_range{1.0, std::numbers::e};
  double a0 = 0, da0 = 0;
  double r0 = 1, dr0 = 1;
};

}  // namespace family

struct FamilySpec {
  using Params = std::variant<family::VectorPlane, family::AffinePlane, family::Sphere,
                              family::Torus, family::CylinderOverCurve, family::Helicoid,
                              family::Catenoid, family::RuledGeneric, family::ParallelCyclic,
                              family::FrenetCyclic, family::Inverted, family::LogSpiralNeg2,
                              family::RiemannMinimal, family::Neg2Ode>;
  Params params;

  /// JSON/CLI name: vector_plane, affine_plane, sphere, torus,
  /// cylinder_over_curve, helicoid, catenoid, ruled_generic,
  /// parallel_cyclic, frenet_cyclic, inverted, log_spiral_neg2,
  /// riemann_minimal, neg2_ode.
  std::string kind() const;
};

FamilySpec invert_spec(FamilySpec inner);

/// Throws kSpecValidation naming the violated invariant.
void validate(const FamilySpec& spec);

/// Validates, then builds the patch with analytic jets.
ParametricPatch make_patch(const FamilySpec& spec);

/// ODE-backed kinds (neg2_ode, riemann_minimal) replaced by their tabulated
/// cyclic equivalents; all other kinds are returned unchanged.
FamilySpec tabulate(const FamilySpec& spec);

struct EulerSample {
  double s;
  Vec3 position;
  Vec3 normal;   // tangent rotated by +90 degrees in the xy-plane
  double kappa;  // signed curvature with respect to `normal`
};

struct EulerCurveTable {
  std::vector<EulerSample> samples;
  PlanarCurve curve;  // quintic Hermite through the samples, axis e3
};

/// Arc-length directrix of a cylinder family (circle, line or Euler curve).
PlanarCurve planar_curve(const family::CylinderOverCurve& cyl);

/// Planar curve with kappa(s) = alpha <n, gamma>/|gamma|^2, started on the
/// ray at angle theta0 at distance r0. The initial tangent is the outward
/// radial direction rotated by kappa0_sign * tangent_angle. Fixed-step RK4.
/// Throws kOriginCollision when |gamma| < 1e-6.
EulerCurveTable euler_planar_curve(double alpha, double r0, double theta0, int kappa0_sign,
                                   double length, double tangent_angle = std::numbers::pi / 2,
                                   double max_step = 1e-3);

/// Minimal surface foliated by circles in the planes z = u, center
/// (a(u), 0, u), radius r(u), a(0) = 0, a'(0) = c_drift, r(0) = r0,
/// r'(0) = 0, integrated on [-span, span]. c_drift = 0 is the catenoid.
/// Throws kFoliationCollapse when r reaches 0.
CyclicSpec riemann_minimal_spec(double c_drift, double r0, double span, double max_step = 1e-3);
ParametricPatch riemann_minimal(double c_drift, double r0, double span);

}  // namespace stationary
