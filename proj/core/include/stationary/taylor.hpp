#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace stationary {

/// Truncated univariate Taylor series f(x0 + h) = sum_k c[k] h^k, k <= N.
///
/// Arithmetic propagates all N derivatives through elementary functions,
/// which is how analytic jets are produced for expression-defined profiles
/// and for normalized curves.
template <int N>
class Taylor {
 public:
  static_assert(N >= 0);
  static constexpr int kOrder = N;

  constexpr Taylor() : c_{} {}
  constexpr Taylor(double value) : c_{} { c_[0] = value; }  // NOLINT

  /// The independent variable seeded at x0.
  static constexpr Taylor variable(double x0) {
    Taylor t(x0);
    if constexpr (N >= 1) t.c_[1] = 1.0;
    return t;
  }

  constexpr double operator[](int k) const { return c_[k]; }
  constexpr double& operator[](int k) { return c_[k]; }

  constexpr double value() const { return c_[0]; }

  /// k-th derivative at the expansion point.
  constexpr double derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c_[k] * f;
  }

  Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Taylor& operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator-(Taylor a) { return a *= -1.0; }
  friend Taylor operator*(Taylor a, double s) { return a *= s; }
  friend Taylor operator*(double s, Taylor a) { return a *= s; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (int k = 0; k <= N; ++k) {
      double s = a.c_[k];
      for (int j = 0; j < k; ++j) s -= q.c_[j] * b.c_[k - j];
      q.c_[k] = s / b.c_[0];
    }
    return q;
  }

  friend Taylor exp(const Taylor& a) {
    Taylor e;
    e.c_[0] = std::exp(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      double s = 0.0;
      for (int j = 1; j <= k; ++j) s += j * a.c_[j] * e.c_[k - j];
      e.c_[k] = s / k;
    }
    return e;
  }

  friend Taylor log(const Taylor& a) {
    Taylor l;
    l.c_[0] = std::log(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      double s = a.c_[k];
      for (int j = 1; j < k; ++j) s -= (static_cast<double>(j) / k) * l.c_[j] * a.c_[k - j];
      l.c_[k] = s / a.c_[0];
    }
    return l;
  }

  friend Taylor sqrt(const Taylor& a) {
    Taylor r;
    r.c_[0] = std::sqrt(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      double s = a.c_[k];
      for (int j = 1; j < k; ++j) s -= r.c_[j] * r.c_[k - j];
      r.c_[k] = s / (2.0 * r.c_[0]);
    }
    return r;
  }

  // sin/cos and sinh/cosh come in pairs from the same recurrence.
  friend std::array<Taylor, 2> sincos(const Taylor& a) { return trig_pair(a, -1.0, std::sin(a.c_[0]), std::cos(a.c_[0])); }
  friend std::array<Taylor, 2> sinhcosh(const Taylor& a) { return trig_pair(a, 1.0, std::sinh(a.c_[0]), std::cosh(a.c_[0])); }

  friend Taylor sin(const Taylor& a) { return sincos(a)[0]; }
  friend Taylor cos(const Taylor& a) { return sincos(a)[1]; }
  friend Taylor tan(const Taylor& a) {
    auto sc = sincos(a);
    return sc[0] / sc[1];
  }
  friend Taylor sinh(const Taylor& a) { return sinhcosh(a)[0]; }
  friend Taylor cosh(const Taylor& a) { return sinhcosh(a)[1]; }
  friend Taylor tanh(const Taylor& a) {
    auto sc = sinhcosh(a);
    return sc[0] / sc[1];
  }

  /// Real power. Integer exponents go through repeated products so negative
  /// bases stay valid; everything else is exp(p log a).
  friend Taylor pow(const Taylor& a, double p) {
    if (p == std::floor(p) && std::abs(p) <= 64.0) {
      int n = static_cast<int>(std::abs(p));
      Taylor r(1.0);
      Taylor base = a;
      while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
      }
      return p < 0 ? Taylor(1.0) / r : r;
    }
    return exp(p * log(a));
  }

 private:
  static std::array<Taylor, 2> trig_pair(const Taylor& a, double sign, double s0, double c0) {
    Taylor s, c;
    s.c_[0] = s0;
    c.c_[0] = c0;
    for (int k = 1; k <= N; ++k) {
      double ss = 0.0, cc = 0.0;
      for (int j = 1; j <= k; ++j) {
        ss += j * a.c_[j] * c.c_[k - j];
        cc += j * a.c_[j] * s.c_[k - j];
      }
      s.c_[k] = ss / k;
      c.c_[k] = sign * cc / k;
    }
    return {s, c};
  }

  std::array<double, N + 1> c_;
};

}  // namespace stationary
