#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stationary/vec.hpp"

namespace stationary {

/// Position and first/second partials of a patch at one parameter point.
struct Jet2 {
  Vec3 P = Vec3::Zero();
  Vec3 Pu = Vec3::Zero();
  Vec3 Pv = Vec3::Zero();
  Vec3 Puu = Vec3::Zero();
  Vec3 Puv = Vec3::Zero();
  Vec3 Pvv = Vec3::Zero();
};

/// First and second fundamental forms, unit normal and mean curvature.
///
/// `normal` is (Pu x Pv)/|Pu x Pv| and H is the trace of the shape operator
/// -dN (sum of principal curvatures): a unit sphere with outward normal has
/// H = -2, a cylinder over a curve whose principal normal equals N has H = kappa.
struct FundamentalData {
  double E = 0, F = 0, G = 0;
  double L = 0, M = 0, Nff = 0;
  Vec3 normal = Vec3::Zero();
  double H = 0;
  double W = 0;  // EG - F^2
};

/// Default margin removed from non-periodic parameter ends when sampling.
inline constexpr double kDomainMargin = 1e-3;

/// An immutable map (u, v) -> R^3 with analytic second-order jets.
///
/// Periodic directions accept any parameter value; the evaluator is
/// responsible for wrapping. Copies share the evaluator and are safe to
/// evaluate concurrently.
class ParametricPatch {
 public:
  using Evaluator = std::function<Jet2(double, double)>;

  ParametricPatch() = default;
  ParametricPatch(Evaluator evaluator, Interval u_range, Interval v_range, bool v_periodic,
                  std::string label, bool u_periodic = false);

  const Interval& u_range() const { return u_range_; }
  const Interval& v_range() const { return v_range_; }
  bool v_periodic() const { return v_periodic_; }
  bool u_periodic() const { return u_periodic_; }
  const std::string& label() const { return label_; }
  const Evaluator& evaluator() const { return evaluator_; }

  /// Same evaluator on a sub-rectangle (or extended one; callers own the
  /// consequences).
  ParametricPatch with_domain(Interval u_range, Interval v_range) const;

 private:
  Evaluator evaluator_;
  Interval u_range_;
  Interval v_range_;
  bool v_periodic_ = false;
  bool u_periodic_ = false;
  std::string label_;
};

/// Analytic jet at (u, v). Throws kParameterOutOfRange outside the domain in
/// non-periodic directions; evaluator singularities propagate.
Jet2 eval_jet2(const ParametricPatch& patch, double u, double v);

/// Throws kDegenerateParametrization when EG - F^2 <= 0.
FundamentalData fundamental_data(const Jet2& jet);

/// Central-difference jet with step h, an independent check on eval_jet2.
/// The stencil [x - 2h, x + 2h] must fit in non-periodic directions.
Jet2 fd_jet2(const ParametricPatch& patch, double u, double v, double h);

/// Parameter samples: n uniform points on [lo + margin, hi - margin] for a
/// closed direction, or n points lo + j (hi - lo)/n for a periodic one.
std::vector<double> sample_axis(const Interval& range, bool periodic, int n, double margin);

// Patch combinators used by invariance checks and the catalog.
ParametricPatch swap_uv(const ParametricPatch& patch);
ParametricPatch scaled(const ParametricPatch& patch, double lambda);
ParametricPatch rotated(const ParametricPatch& patch, const Mat3& rotation);
ParametricPatch translated(const ParametricPatch& patch, const Vec3& offset);

}  // namespace stationary
