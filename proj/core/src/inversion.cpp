#include "stationary/inversion.hpp"

#include <sstream>

#include "stationary/error.hpp"

namespace stationary {

Vec3 invert_point(const Vec3& p) {
  const double p2 = p.squaredNorm();
  if (!(p2 > 0)) throw Error(ErrorKind::kSingularPoint, "inversion is undefined at 0");
  return p / p2;
}

Jet2 invert_jet(const Jet2& jet, double cutoff) {
  const Vec3& p = jet.P;
  const double p2 = p.squaredNorm();
  if (!(p2 >= cutoff * cutoff)) {
    std::ostringstream os;
    os << "inner point within " << cutoff << " of 0";
    throw Error(ErrorKind::kSingularPoint, os.str());
  }
  const double i2 = 1 / p2, i4 = i2 * i2, i6 = i4 * i2;

  auto d1 = [&](const Vec3& h) -> Vec3 { return h * i2 - 2 * p.dot(h) * i4 * p; };
  auto d2 = [&](const Vec3& h, const Vec3& k) -> Vec3 {
    const double ph = p.dot(h), pk = p.dot(k);
    return -2 * i4 * (pk * h + ph * k + h.dot(k) * p) + 8 * i6 * ph * pk * p;
  };

  Jet2 out;
  out.P = p * i2;
  out.Pu = d1(jet.Pu);
  out.Pv = d1(jet.Pv);
  out.Puu = d2(jet.Pu, jet.Pu) + d1(jet.Puu);
  out.Puv = d2(jet.Pu, jet.Pv) + d1(jet.Puv);
  out.Pvv = d2(jet.Pv, jet.Pv) + d1(jet.Pvv);
  return out;
}

ParametricPatch invert_patch(const ParametricPatch& patch, double cutoff) {
  auto inner = patch.evaluator();
  auto eval = [inner, cutoff](double u, double v) { return invert_jet(inner(u, v), cutoff); };
  return ParametricPatch(eval, patch.u_range(), patch.v_range(), patch.v_periodic(),
                         "inverted(" + patch.label() + ")", patch.u_periodic());
}

ShiftReport verify_shift(const ParametricPatch& patch, double alpha, int nu, int nv) {
  ShiftReport r;
  r.source = residual_grid(patch, alpha, nu, nv);
  r.image = residual_grid(invert_patch(patch), inverted_exponent(alpha), nu, nv);
  return r;
}

}  // namespace stationary
