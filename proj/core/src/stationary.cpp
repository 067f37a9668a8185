#include "stationary/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stationary/error.hpp"
#include "stationary/parallel.hpp"
#include "stationary/quadrature.hpp"

namespace stationary {

namespace {

struct DefectTerms {
  double curvature;  // (G (Pu,Pv,Puu) - 2F (Pu,Pv,Puv) + E (Pu,Pv,Pvv)) |p|^2
  double weight;     // alpha (Pu,Pv,p) W
  double magnitude;  // sum of the absolute values of the summands above
};

DefectTerms defect_terms(const Jet2& j, double alpha) {
  const double E = j.Pu.dot(j.Pu);
  const double F = j.Pu.dot(j.Pv);
  const double G = j.Pv.dot(j.Pv);
  const Vec3 n = j.Pu.cross(j.Pv);
  const double W = n.squaredNorm();
  const double p2 = j.P.squaredNorm();
  const double curv = G * n.dot(j.Puu) - 2 * F * n.dot(j.Puv) + E * n.dot(j.Pvv);
  const double mag = (std::abs(G * n.dot(j.Puu)) + 2 * std::abs(F * n.dot(j.Puv)) +
                      std::abs(E * n.dot(j.Pvv))) * p2 +
                     std::abs(alpha) * n.norm() * std::sqrt(p2) * W;
  return {curv * p2, alpha * n.dot(j.P) * W, mag};
}

ResidualRow residual_row(const ParametricPatch& patch, double alpha, double u, double v) {
  const Jet2 jet = eval_jet2(patch, u, v);
  const double p2 = jet.P.squaredNorm();
  if (!(p2 > 0)) throw Error(ErrorKind::kOriginOnSurface, "surface passes through 0", {u, v});
  FundamentalData fd;
  try {
    fd = fundamental_data(jet);
  } catch (const Error& e) {
    throw e.at({u, v});
  }
  const double rhs = alpha * fd.normal.dot(jet.P) / p2;
  return {u, v, jet.P.x(), jet.P.y(), jet.P.z(), fd.H, rhs, fd.H - rhs};
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

double residual(const Jet2& jet, double alpha) {
  const double p2 = jet.P.squaredNorm();
  if (!(p2 > 0)) throw Error(ErrorKind::kOriginOnSurface, "surface passes through 0");
  const FundamentalData fd = fundamental_data(jet);
  return fd.H - alpha * fd.normal.dot(jet.P) / p2;
}

double residual(const ParametricPatch& patch, double alpha, double u, double v) {
  return residual_row(patch, alpha, u, v).residual;
}

double weighted_defect(const Jet2& jet, double alpha) {
  const DefectTerms t = defect_terms(jet, alpha);
  return t.curvature - t.weight;
}

ResidualReport residual_grid(const ParametricPatch& patch, double alpha, int nu, int nv,
                             double margin) {
  if (nu < 2 || nv < 2) throw Error(ErrorKind::kPrecondition, "residual_grid: nu, nv must be >= 2");
  const auto us = sample_axis(patch.u_range(), patch.u_periodic(), nu, margin);
  const auto vs = sample_axis(patch.v_range(), patch.v_periodic(), nv, margin);

  ResidualReport rep;
  rep.alpha = alpha;
  rep.sample_count = nu * nv;
  rep.rows.resize(static_cast<std::size_t>(nu) * nv);
  parallel_for(rep.rows.size(), [&](std::size_t k) {
    rep.rows[k] = residual_row(patch, alpha, us[k / nv], vs[k % nv]);
  });

  double sup = 0, sum2 = 0;
  for (const auto& r : rep.rows) {
    sup = std::max(sup, std::abs(r.residual));
    sum2 += r.residual * r.residual;
  }
  rep.sup_abs = sup;
  rep.rms = std::sqrt(sum2 / static_cast<double>(rep.rows.size()));
  return rep;
}

double energy(const ParametricPatch& patch, double alpha, int nu, int nv) {
  if (nu < 1 || nv < 1) throw Error(ErrorKind::kPrecondition, "energy: nu, nv must be >= 1");

  auto axis = [](const Interval& r, bool periodic, int n) {
    if (!periodic) return gauss_legendre(n, r.lo, r.hi);
    QuadratureRule q;
    q.nodes = sample_axis(r, true, n, 0.0);
    q.weights.assign(static_cast<std::size_t>(n), r.length() / n);
    return q;
  };
  const QuadratureRule qu = axis(patch.u_range(), patch.u_periodic(), nu);
  const QuadratureRule qv = axis(patch.v_range(), patch.v_periodic(), nv);

  std::vector<double> terms(static_cast<std::size_t>(nu) * nv);
  parallel_for(terms.size(), [&](std::size_t k) {
    const double u = qu.nodes[k / nv], v = qv.nodes[k % nv];
    const Jet2 j = eval_jet2(patch, u, v);
    const double area = j.Pu.cross(j.Pv).norm();
    const double value = std::pow(j.P.norm(), alpha) * area;
    if (!std::isfinite(value))
      throw Error(ErrorKind::kSingularIntegrand, "non-finite energy integrand", {u, v});
    terms[k] = qu.weights[k / nv] * qv.weights[k % nv] * value;
  });

  double total = 0;
  for (double t : terms) total += t;
  return total;
}

FourierCoeffs fourier_coefficients(const std::vector<double>& samples, double v0, int n_max) {
  const int m = static_cast<int>(samples.size());
  if (m == 0) throw Error(ErrorKind::kPrecondition, "fourier_coefficients: no samples");
  FourierCoeffs fc;
  fc.A.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  fc.B.assign(static_cast<std::size_t>(n_max), 0.0);
  for (int j = 0; j < m; ++j) fc.A[0] += samples[j];
  fc.A[0] /= m;
  for (int n = 1; n <= n_max; ++n) {
    double a = 0, b = 0;
    for (int j = 0; j < m; ++j) {
      const double v = v0 + 2 * std::numbers::pi * j / m;
      a += samples[j] * std::cos(n * v);
      b += samples[j] * std::sin(n * v);
    }
    fc.A[n] = 2 * a / m;
    fc.B[n - 1] = 2 * b / m;
  }
  return fc;
}

FourierCoeffs fourier_defect(const ParametricPatch& patch, double alpha, double u, int n_max,
                             int nv) {
  if (!patch.v_periodic())
    throw Error(ErrorKind::kPrecondition, "fourier_defect: patch is not periodic in v");
  if (std::abs(patch.v_range().length() - 2 * std::numbers::pi) > 1e-12)
    throw Error(ErrorKind::kPrecondition, "fourier_defect: v period must be 2 pi");
  if (n_max < 0 || !is_power_of_two(nv) || nv < 4 * n_max || nv < 4)
    throw Error(ErrorKind::kPrecondition,
                "fourier_defect: nv must be a power of two with nv >= 4 n_max");

  const double v0 = patch.v_range().lo;
  std::vector<double> d(static_cast<std::size_t>(nv));
  std::vector<double> scale(static_cast<std::size_t>(nv));
  parallel_for(d.size(), [&](std::size_t k) {
    const double v = v0 + 2 * std::numbers::pi * static_cast<double>(k) / nv;
    const DefectTerms t = defect_terms(eval_jet2(patch, u, v), alpha);
    d[k] = t.curvature - t.weight;
    scale[k] = t.magnitude;
  });

  const int n_all = nv / 2;
  FourierCoeffs full = fourier_coefficients(d, v0, n_all);
  // The Nyquist term gets weight 1/m, not 2/m.
  full.A[n_all] *= 0.5;
  full.B[n_all - 1] = 0;

  double max_d = 0, max_scale = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    max_d = std::max(max_d, std::abs(d[k]));
    max_scale = std::max(max_scale, scale[k]);
  }
  // The floor keeps rounding noise of an identically vanishing defect from
  // tripping the guard.
  const double bound = 1e-8 * (max_d + 1e-6 * max_scale);
  for (int n = n_max + 1; n <= n_all; ++n) {
    const double mag = std::max(std::abs(full.A[n]), std::abs(full.B[n - 1]));
    if (mag > bound) {
      std::ostringstream os;
      os << "defect coefficient n = " << n << " has magnitude " << mag << " above the limit "
         << n_max;
      throw Error(ErrorKind::kBandLimitViolation, os.str(), {u, v0});
    }
  }

  FourierCoeffs fc;
  fc.u = u;
  fc.A.assign(full.A.begin(), full.A.begin() + n_max + 1);
  fc.B.assign(full.B.begin(), full.B.begin() + n_max);
  return fc;
}

}  // namespace stationary
