#pragma once

#include <array>
#include <utility>
#include <vector>

#include "stationary/function.hpp"
#include "stationary/hermite.hpp"
#include "stationary/surface.hpp"

namespace stationary {

struct FrameSample {
  double u;
  Vec3 position;  // Gamma
  Vec3 t, n, b;
  double kappa;
  double tau;
};

/// Frenet frame of an arc-length curve, tabulated by RK4 integration.
class CurveFrame {
 public:
  struct Init {
    Vec3 position = Vec3::Zero();
    Vec3 t = Vec3::UnitX();
    Vec3 n = Vec3::UnitY();
    Vec3 b = Vec3::UnitZ();
  };

  CurveFrame() = default;
  CurveFrame(std::vector<FrameSample> samples, ScalarFunction kappa, ScalarFunction tau, Init init,
             double max_drift);

  const std::vector<FrameSample>& samples() const { return samples_; }
  const ScalarFunction& kappa() const { return kappa_; }
  const ScalarFunction& tau() const { return tau_; }
  const Init& init() const { return init_; }
  Interval range() const { return {samples_.front().u, samples_.back().u}; }
  /// Largest orthonormality defect removed by a per-step Gram-Schmidt pass.
  double max_drift() const { return max_drift_; }

  /// Frame at arbitrary u: quintic Hermite through the samples (derivatives
  /// from the Frenet equations), then re-orthonormalized.
  FrameSample at(double u) const;

 private:
  std::vector<FrameSample> samples_;
  ScalarFunction kappa_;
  ScalarFunction tau_;
  Init init_;
  double max_drift_ = 0;
  QuinticHermite<Vec3> position_, tangent_, normal_, binormal_;
};

/// Integrates t' = kappa n, n' = -kappa t + tau b, b' = -tau n, Gamma' = t
/// from `init` at u_range.lo with RK4, step <= max_step, Gram-Schmidt each
/// step. Throws kFrameUndefined when kappa <= 0 is met.
CurveFrame frame_from_curvature(const ScalarFunction& kappa, const ScalarFunction& tau,
                                Interval u_range, CurveFrame::Init init = {},
                                double max_step = 1e-3);

enum class CyclicMode { kParallel, kFrenet };

/// Circles foliating a surface.
///
/// parallel: Psi = (a(u), b(u), u) + r(u)(cos v, sin v, 0).
/// frenet:   Psi = a t + b n + c b_hat + r (cos v n + sin v b_hat), where
///           (a, b, c) are the coordinates of the circle center in the
///           Frenet frame of a curve with curvature kappa > 0.
struct CyclicSpec {
  CyclicMode mode = CyclicMode::kParallel;
  Interval u_range{0.0, 1.0};
  ScalarFunction a;
  ScalarFunction b;
  ScalarFunction c;  // frenet only
  ScalarFunction r;
  CurveFrame frame;  // frenet only
};

/// Throws kSpecValidation if r <= 0 or (frenet) kappa <= 0 on a sample of
/// the domain; the returned patch re-checks r and kappa per evaluation.
ParametricPatch build_cyclic(const CyclicSpec& spec);

/// Closed form of the n = 3 defect coefficients for the parallel mode.
std::pair<double, double> parallel_A3B3(double a, double da, double b, double db, double r,
                                        double alpha, double u);

/// Closed form of the n = 4 defect coefficients for the Frenet mode.
std::pair<double, double> frenet_A4B4(double a, double b, double c, double db, double dc, double r,
                                      double kappa, double tau, double alpha);

/// (1/4)(alpha+4) r^4 kappa (b^2+c^2)(b tau + c')(a kappa + b' - c tau),
/// which equals c A4 - b B4.
double frenet_A4B4_combination(double a, double b, double c, double db, double dc, double r,
                               double kappa, double tau, double alpha);

struct Neg2Sample {
  double u;
  double a, da, dda;
  double r, dr, ddr;
  double kappa, dkappa;
  double eq22;  // residual of the companion equation, zero on true solutions
};

struct Neg2Family {
  CyclicSpec spec;
  std::vector<Neg2Sample> solution;
};

/// Planar (tau = 0, b = c = 0) cyclic (-2)-stationary family: kappa is the
/// input, (a'', r'') solve the two linear conditions at every RK4 stage.
/// Throws kDegenerateFamily on a singular 2x2 system and kFoliationCollapse
/// when r reaches 0.
Neg2Family integrate_neg2_family(const ScalarFunction& kappa, double a0, double da0, double r0,
                                 double dr0, Interval u_range, double max_step = 1e-3);

/// Residual of the two planar-family equations for given data (for checks).
std::array<double, 3> neg2_equations(double a, double da, double dda, double r, double dr,
                                     double ddr, double kappa, double dkappa);

/// Psi(u,v) = (-u sin(log u) cos v, u cos(log u) cos v, u sin v), u > 0.
ParametricPatch log_spiral_example(Interval u_range);

}  // namespace stationary
