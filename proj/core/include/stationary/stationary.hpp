#pragma once

#include <vector>

#include "stationary/surface.hpp"

namespace stationary {

struct ResidualRow {
  double u, v;
  double x, y, z;
  double H;
  double rhs;       // alpha <N, p> / |p|^2
  double residual;  // H - rhs
};

struct ResidualReport {
  double alpha = 0;
  int sample_count = 0;
  double sup_abs = 0;
  double rms = 0;
  std::vector<ResidualRow> rows;  // u-major
};

struct FourierCoeffs {
  double u = 0;
  std::vector<double> A;  // n = 0..n_max
  std::vector<double> B;  // n = 1..n_max, stored at B[n-1]

  double b(int n) const { return B.at(static_cast<std::size_t>(n - 1)); }
};

/// Euler-Lagrange residual H - alpha <N,p>/|p|^2 of a single jet.
double residual(const Jet2& jet, double alpha);

/// Residual at (u, v). Throws kOriginOnSurface if |p| = 0.
double residual(const ParametricPatch& patch, double alpha, double u, double v);

/// Defect with both denominators cleared:
/// (H - alpha <N,p>/|p|^2) W^{3/2} |p|^2
///   = G (Pu,Pv,Puu) - 2F (Pu,Pv,Puv) + E (Pu,Pv,Pvv)) |p|^2 - alpha (Pu,Pv,p) W,
/// a polynomial in the jet entries.
double weighted_defect(const Jet2& jet, double alpha);

/// Residuals on a uniform grid (non-periodic ends shrunk by `margin`).
/// Per-point failures are rethrown with the offending (u, v) attached.
ResidualReport residual_grid(const ParametricPatch& patch, double alpha, int nu, int nv,
                             double margin = kDomainMargin);

/// Quadrature of |p|^alpha sqrt(EG - F^2) over the patch domain:
/// Gauss-Legendre in non-periodic directions, trapezoid in periodic ones.
double energy(const ParametricPatch& patch, double alpha, int nu, int nv);

/// Real Fourier coefficients of uniformly sampled periodic data:
/// A0 = mean, A_n = (2/m) sum d_j cos(n v_j), B_n = (2/m) sum d_j sin(n v_j),
/// with v_j = v0 + 2 pi j / m.
FourierCoeffs fourier_coefficients(const std::vector<double>& samples, double v0, int n_max);

/// Fourier coefficients in v of the weighted defect at fixed u. Requires a
/// v-periodic patch with period 2 pi, nv a power of two and nv >= 4 n_max.
/// Throws kBandLimitViolation when any coefficient above n_max exceeds
/// 1e-8 max|D|.
FourierCoeffs fourier_defect(const ParametricPatch& patch, double alpha, double u, int n_max,
                             int nv);

}  // namespace stationary
