#pragma once

#include "stationary/stationary.hpp"

namespace stationary {

inline constexpr double kInversionCutoff = 1e-6;

/// p / |p|^2. Throws kSingularPoint at p = 0.
Vec3 invert_point(const Vec3& p);

/// Jet of the inverted surface by the chain rule with closed-form dPhi and
/// d^2 Phi. Throws kSingularPoint when |P| < cutoff.
Jet2 invert_jet(const Jet2& jet, double cutoff = kInversionCutoff);

ParametricPatch invert_patch(const ParametricPatch& patch, double cutoff = kInversionCutoff);

/// Exponent carried by the inversion: an alpha-stationary surface maps to a
/// (-alpha - 4)-stationary one (reflection about -2; fixed point -2, and
/// -4 <-> 0 between (-4)-stationary and minimal surfaces).
inline double inverted_exponent(double alpha) { return -alpha - 4.0; }

struct ShiftReport {
  ResidualReport source;  // patch at alpha
  ResidualReport image;   // inverted patch at inverted_exponent(alpha)
};

ShiftReport verify_shift(const ParametricPatch& patch, double alpha, int nu, int nv);

}  // namespace stationary
