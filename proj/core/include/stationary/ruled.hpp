#pragma once

#include <array>
#include <functional>
#include <vector>

#include "stationary/surface.hpp"

namespace stationary {

/// Point of a space curve with derivatives up to `order` (2 or 3).
struct CurveJet {
  Vec3 p = Vec3::Zero();
  Vec3 d1 = Vec3::Zero();
  Vec3 d2 = Vec3::Zero();
  Vec3 d3 = Vec3::Zero();
  int order = 3;
};

using CurveFn = std::function<CurveJet(double)>;

/// Vector trigonometric polynomial c0 + sum_k (cos_k cos(ks) + sin_k sin(ks)).
struct TrigCurve {
  Vec3 c0 = Vec3::Zero();
  std::vector<Vec3> cos_terms;  // k = 1..
  std::vector<Vec3> sin_terms;  // k = 1..

  CurveJet operator()(double s) const;
};

/// Curve s -> v(s)/|v(s)| with derivatives through order 3.
CurveFn normalized(CurveFn v);

/// Ruled surface data Psi(s, t) = gamma(s) + t beta(s), |beta| = 1.
struct RuledSpec {
  CurveFn gamma;
  CurveFn beta;
  Interval s_range;
  Interval t_range{-1.0, 1.0};
  bool cylindrical = false;
};

struct RuledInvariants {
  double max_speed_defect = 0;        // max | |gamma'| - 1 |
  double max_beta_norm_defect = 0;    // max | |beta| - 1 |
  double min_beta_speed = 0;          // min |beta'|
  double max_striction_defect = 0;    // max |<gamma', beta'>|
};

/// Measures the RuledSpec invariants at n uniform samples.
RuledInvariants check_invariants(const RuledSpec& spec, int samples = 64);

ParametricPatch ruled_patch(const RuledSpec& spec);

/// Moves the directrix to the striction line gamma - (<gamma',beta'>/|beta'|^2) beta
/// and re-parametrizes both curves by arc length of the new directrix.
/// Requires third derivatives on input; output carries order 2.
/// Throws kCylindricalInput if beta' vanishes at a sample.
RuledSpec striction_line(const RuledSpec& spec);

/// Planar directrix of a cylinder gamma(s) + t axis; gamma arc-length and
/// orthogonal to `axis`.
struct PlanarCurve {
  CurveFn curve;
  Interval s_range;
  Vec3 axis = Vec3::UnitZ();
};

struct CylinderPair {
  double s;
  double C2;  // kappa
  double C0;  // kappa |gamma|^2 - alpha <n, gamma>
};

/// Coefficients of kappa t^2 + kappa |gamma|^2 - alpha <n,gamma> at n samples,
/// with n the Frenet normal where kappa != 0 and the in-plane normal
/// gamma' x axis on straight pieces. Throws kPlanarity when gamma' or gamma''
/// leaves the plane orthogonal to the axis by more than 1e-8.
std::vector<CylinderPair> cylinder_check(const PlanarCurve& curve, double alpha, int samples = 64);

/// Cylinder patch gamma(s) + t axis over a planar curve.
ParametricPatch cylinder_patch(const PlanarCurve& curve, Interval t_range);

/// Coordinates of gamma in the frame {beta, beta', e3} when beta is the
/// equator (cos s, sin s, 0), with two derivatives each.
struct AdaptedCoords {
  double a, da, dda;
  double b, db, ddb;
  double c, dc, ddc;

  /// gamma' in the same frame: (a' - b, a + b', c').
  Vec3 velocity() const { return {da - b, a + db, dc}; }
  /// gamma'' in the same frame: (a'' - 2b' - a, 2a' + b'' - b, c'').
  Vec3 acceleration() const { return {dda - 2 * db - a, 2 * da + ddb - b, ddc}; }
  /// a + b', zero on the striction line.
  double striction_defect() const { return a + db; }
  /// (b'' + b)^2 + c'^2 - 1, zero for an arc-length striction directrix.
  double arclength_defect() const { return (ddb + b) * (ddb + b) + dc * dc - 1.0; }
  /// <gamma'' - alpha gamma, e3> = c'' - alpha c.
  double vertical_defect(double alpha) const { return ddc - alpha * c; }
};

/// Throws kFrame when beta is not the equator within 1e-10.
AdaptedCoords adapted_coords(const RuledSpec& spec, double s);

/// Coefficients A0..A4 of the weighted defect as a polynomial in t.
/// Throws kPrecondition when |<gamma', beta'>| exceeds 1e-6.
std::array<double, 5> ruled_coeffs(const RuledSpec& spec, double alpha, double s);

struct NormalizedRuled {
  RuledSpec spec;
  Mat3 rotation;
};

/// Rotates a great-circle beta into the xy-plane and re-parametrizes it as
/// (cos s, sin s, 0); gamma gets the same rotation and reparametrization.
/// Throws kNormalization when (beta', beta, beta'') does not vanish.
NormalizedRuled normalize_beta(const RuledSpec& spec);

}  // namespace stationary
