#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "stationary/catalog.hpp"
#include "stationary/error.hpp"
#include "stationary/ruled.hpp"
#include "stationary/stationary.hpp"
#include "test_support.hpp"

using namespace stationary;
namespace st = stationary::testing;
using st::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

TrigCurve sample_curve() {
  TrigCurve c;
  c.c0 = {2.0, -1.0, 0.5};
  c.cos_terms = {{0.3, 0.1, -0.2}, {0.05, -0.1, 0.02}};
  c.sin_terms = {{-0.4, 0.2, 0.1}, {0.0, 0.07, -0.03}};
  return c;
}

template <class F>
Vec3 central(F f, double s, double h = 1e-5) {
  return (f(s + h) - f(s - h)) / (2 * h);
}

ErrorKind caught(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kIo;
}

PlanarCurve circle_about_origin(double rho) {
  family::CylinderOverCurve cyl;
  cyl.curve = family::CircleCurve{0, 0, rho};
  return planar_curve(cyl);
}

}  // namespace

TEST(TrigCurve, DerivativesMatchFiniteDifferences) {
  const TrigCurve c = sample_curve();
  for (double s : {-1.0, 0.2, 2.9}) {
    const CurveJet j = c(s);
    EXPECT_LT((central([&](double x) { return c(x).p; }, s) - j.d1).norm(), 1e-9);
    EXPECT_LT((central([&](double x) { return c(x).d1; }, s) - j.d2).norm(), 1e-9);
    EXPECT_LT((central([&](double x) { return c(x).d2; }, s) - j.d3).norm(), 1e-9);
  }
  EXPECT_EQ(TrigCurve{}(1.3).p, Vec3::Zero());
}

TEST(Normalized, UnitLengthWithConsistentDerivatives) {
  const CurveFn b = normalized(sample_curve());
  for (double s : {-0.7, 0.4, 1.8}) {
    const CurveJet j = b(s);
    EXPECT_NEAR(j.p.norm(), 1.0, 1e-15);
    EXPECT_NEAR(j.p.dot(j.d1), 0.0, 1e-14);
    EXPECT_LT((central([&](double x) { return b(x).p; }, s) - j.d1).norm(), 1e-8);
    EXPECT_LT((central([&](double x) { return b(x).d1; }, s) - j.d2).norm(), 1e-8);
    EXPECT_LT((central([&](double x) { return b(x).d2; }, s) - j.d3).norm(), 1e-7);
  }
}

TEST(StrictionLine, IsArcLengthAndSatisfiesStrictionCondition) {
  Rng rng(4242);
  for (int k = 0; k < 5; ++k) {
    const RuledSpec rs = st::ruled_spec(st::random_ruled(rng));
    const RuledInvariants inv = check_invariants(rs);
    EXPECT_LT(inv.max_speed_defect, 1e-9);
    EXPECT_LT(inv.max_beta_norm_defect, 1e-13);
    EXPECT_LT(inv.max_striction_defect, 1e-9);
    EXPECT_GT(inv.min_beta_speed, 0.0);
  }
}

TEST(StrictionLine, PreservesTheSurface) {
  // every point of the moved patch lies on a ruling of the original one
  Rng rng(5);
  const family::RuledGeneric g = st::random_ruled(rng);
  RuledSpec raw{g.gamma, normalized(g.direction), g.s_range, g.t_range, false};
  const RuledSpec moved = striction_line(raw);
  for (double sigma : sample_axis(moved.s_range, false, 7, 1e-3)) {
    const Vec3 p = moved.gamma(sigma).p;
    const Vec3 b = moved.beta(sigma).p;
    // find s with beta(s) = b by a scan then Newton on <beta(s), b> = 1
    double best = g.s_range.lo, best_dot = -2;
    for (double s : sample_axis(g.s_range, false, 2001, 0.0)) {
      const double d = raw.beta(s).p.dot(b);
      if (d > best_dot) best_dot = d, best = s;
    }
    for (int it = 0; it < 8; ++it) {
      const CurveJet bj = raw.beta(best);
      best -= bj.d1.dot(b) / bj.d2.dot(b);
    }
    const Vec3 off = p - raw.gamma(best).p;
    const Vec3 rb = raw.beta(best).p;
    EXPECT_LT((off - off.dot(rb) * rb).norm(), 1e-9);
  }
}

TEST(StrictionLine, RejectsCylinders) {
  RuledSpec rs;
  rs.gamma = sample_curve();
  rs.beta = [](double) {
    CurveJet j;
    j.p = Vec3::UnitZ();
    return j;
  };
  rs.s_range = {0, 1};
  EXPECT_EQ(caught([&] { striction_line(rs); }), ErrorKind::kCylindricalInput);
  rs.cylindrical = true;
  EXPECT_EQ(caught([&] { ruled_coeffs(rs, 1.0, 0.5); }), ErrorKind::kCylindricalInput);
}

TEST(RuledCoeffs, PolynomialReproducesTheWeightedDefect) {
  Rng rng(31);
  for (int k = 0; k < 4; ++k) {
    const RuledSpec rs = st::ruled_spec(st::random_ruled(rng));
    const ParametricPatch patch = ruled_patch(rs);
    for (double alpha : {-2.5, 0.0, 1.3}) {
      for (double s : sample_axis(rs.s_range, false, 5, 1e-2)) {
        const auto A = ruled_coeffs(rs, alpha, s);
        for (double t : {-0.4, 0.1, 0.45}) {
          const double poly = A[0] + t * (A[1] + t * (A[2] + t * (A[3] + t * A[4])));
          const double direct = weighted_defect(eval_jet2(patch, s, t), alpha);
          EXPECT_NEAR(poly, direct, 1e-9 * (1 + std::abs(direct)));
        }
      }
    }
  }
}

TEST(RuledCoeffs, RequiresStrictionDirectrix) {
  TrigCurve dir;
  dir.c0 = {0, 0, 1};
  dir.cos_terms = {{1, 0, 0}};
  dir.sin_terms = {{0, 1, 0}};
  TrigCurve gamma;
  gamma.c0 = {3, 0, 0};
  gamma.cos_terms = {{1, 0, 0}};
  RuledSpec rs{gamma, normalized(dir), {0, 1}, {-1, 1}, false};
  EXPECT_EQ(caught([&] { ruled_coeffs(rs, 0.0, 0.3); }), ErrorKind::kPrecondition);
}

TEST(CylinderCheck, CircleAboutTheOrigin) {
  for (double rho : {0.5, 2.0})
    for (double alpha : {-2.0, -1.0, 0.7}) {
      for (const CylinderPair& c : cylinder_check(circle_about_origin(rho), alpha, 16)) {
        EXPECT_NEAR(c.C2, 1 / rho, 1e-14);
        EXPECT_NEAR(c.C0, rho * (1 + alpha), 1e-13);
      }
    }
}

TEST(CylinderCheck, LinesThroughAndAwayFromOrigin) {
  family::CylinderOverCurve through;
  through.curve = family::LineCurve{0.3, 0.4, 3, 4, {0.1, 2.0}};
  for (const CylinderPair& c : cylinder_check(planar_curve(through), 1.5)) {
    EXPECT_EQ(c.C2, 0.0);
    EXPECT_NEAR(c.C0, 0.0, 1e-15);
  }
  family::CylinderOverCurve away;
  away.curve = family::LineCurve{0.0, 2.0, 1, 0, {-1.0, 1.0}};
  for (const CylinderPair& c : cylinder_check(planar_curve(away), 1.5))
    EXPECT_NEAR(std::abs(c.C0), 3.0, 1e-14);
}

TEST(CylinderCheck, CoefficientsMatchClearedResidual) {
  // on a unit-speed cylinder W = 1, so residual |p|^2 = +-(C2 t^2 + C0)
  family::CylinderOverCurve cyl;
  cyl.curve = family::CircleCurve{0.4, -0.3, 1.3};
  cyl.t_range = {-1, 1};
  const PlanarCurve pc = planar_curve(cyl);
  const ParametricPatch patch = make_patch({cyl});
  const double alpha = 0.8;
  for (const CylinderPair& c : cylinder_check(pc, alpha, 9)) {
    if (c.s <= pc.s_range.lo || c.s >= pc.s_range.hi) continue;
    for (double t : {-0.8, 0.0, 0.6}) {
      const Jet2 j = eval_jet2(patch, c.s, t);
      const double cleared = residual(j, alpha) * j.P.squaredNorm();
      EXPECT_NEAR(std::abs(cleared), std::abs(c.C2 * t * t + c.C0), 1e-12);
    }
  }
}

TEST(CylinderCheck, RejectsNonPlanarDirectrix) {
  PlanarCurve helix;
  helix.s_range = {0, 1};
  helix.curve = [](double s) {
    const double k = 1 / std::sqrt(2.0);
    CurveJet j;
    j.p = {std::cos(k * s), std::sin(k * s), k * s};
    j.d1 = {-k * std::sin(k * s), k * std::cos(k * s), k};
    j.d2 = {-k * k * std::cos(k * s), -k * k * std::sin(k * s), 0};
    return j;
  };
  EXPECT_EQ(caught([&] { cylinder_check(helix, 0.0); }), ErrorKind::kPlanarity);
}

TEST(AdaptedCoords, FrameComponentsOfVelocityAndAcceleration) {
  RuledSpec rs;
  rs.gamma = sample_curve();
  rs.beta = [](double s) {
    CurveJet j;
    j.p = {std::cos(s), std::sin(s), 0};
    j.d1 = {-std::sin(s), std::cos(s), 0};
    j.d2 = -j.p;
    return j;
  };
  rs.s_range = {0, 2};
  for (double s : {0.3, 1.1}) {
    const AdaptedCoords c = adapted_coords(rs, s);
    const CurveJet g = rs.gamma(s), b = rs.beta(s);
    const Vec3 frame_v(g.d1.dot(b.p), g.d1.dot(b.d1), g.d1.z());
    const Vec3 frame_a(g.d2.dot(b.p), g.d2.dot(b.d1), g.d2.z());
    EXPECT_LT((c.velocity() - frame_v).norm(), 1e-14);
    EXPECT_LT((c.acceleration() - frame_a).norm(), 1e-14);
    EXPECT_NEAR(c.vertical_defect(2.0), g.d2.z() - 2.0 * g.p.z(), 1e-14);
  }
  rs.beta = [](double) {
    CurveJet j;
    j.p = Vec3::UnitX();
    return j;
  };
  EXPECT_EQ(caught([&] { adapted_coords(rs, 0.5); }), ErrorKind::kFrame);
}

TEST(NormalizeBeta, TiltedGreatCircleBecomesTheEquator) {
  const Vec3 e1 = Vec3(1, 1, 1).normalized();
  const Vec3 e2 = Vec3(1, -1, 0).normalized();
  RuledSpec rs;
  rs.gamma = sample_curve();
  rs.beta = [e1, e2](double s) {
    CurveJet j;
    j.p = std::cos(2 * s) * e1 + std::sin(2 * s) * e2;
    j.d1 = 2 * (-std::sin(2 * s) * e1 + std::cos(2 * s) * e2);
    j.d2 = -4 * j.p;
    j.d3 = -4 * j.d1;
    return j;
  };
  rs.s_range = {0.1, 1.4};
  const NormalizedRuled n = normalize_beta(rs);
  EXPECT_NEAR(n.spec.s_range.length(), 2 * rs.s_range.length(), 1e-12);
  EXPECT_LT((n.rotation * n.rotation.transpose() - Mat3::Identity()).norm(), 1e-14);
  for (double sigma : sample_axis(n.spec.s_range, false, 6, 1e-3)) {
    const double s = rs.s_range.lo + (sigma - n.spec.s_range.lo) / 2;
    EXPECT_LT((n.rotation * rs.beta(s).p - n.spec.beta(sigma).p).norm(), 1e-10);
    const CurveJet g = n.spec.gamma(sigma);
    EXPECT_LT((n.rotation.transpose() * g.p - rs.gamma(s).p).norm(), 1e-10);
    EXPECT_LT((n.rotation.transpose() * g.d1 - rs.gamma(s).d1 / 2).norm(), 1e-9);
  }
}

TEST(NormalizeBeta, RejectsSmallCircles) {
  RuledSpec rs;
  rs.gamma = sample_curve();
  rs.beta = [](double s) {
    const double z = 0.6, r = 0.8;
    CurveJet j;
    j.p = {r * std::cos(s), r * std::sin(s), z};
    j.d1 = {-r * std::sin(s), r * std::cos(s), 0};
    j.d2 = {-r * std::cos(s), -r * std::sin(s), 0};
    return j;
  };
  rs.s_range = {0, 1};
  EXPECT_EQ(caught([&] { normalize_beta(rs); }), ErrorKind::kNormalization);
}

TEST(RuledPatch, HelicoidIsMinimal) {
  // helicoid as gamma(s) = (0, 0, s), beta = (cos s, sin s, 0)
  RuledSpec rs;
  rs.gamma = [](double s) {
    CurveJet j;
    j.p = {0, 0, s};
    j.d1 = {0, 0, 1};
    return j;
  };
  rs.beta = [](double s) {
    CurveJet j;
    j.p = {std::cos(s), std::sin(s), 0};
    j.d1 = {-std::sin(s), std::cos(s), 0};
    j.d2 = -j.p;
    return j;
  };
  rs.s_range = {0.5, 2 * kPi};
  const ParametricPatch p = ruled_patch(rs);
  for (double s : {1.0, 3.0})
    for (double t : {-0.5, 0.7}) EXPECT_NEAR(fundamental_data(eval_jet2(p, s, t)).H, 0.0, 1e-14);
  for (double s : {1.0, 4.0}) {
    const auto A = ruled_coeffs(rs, 0.0, s);
    for (double a : A) EXPECT_NEAR(a, 0.0, 1e-14);
  }
}
