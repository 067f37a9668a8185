#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stationary {

/// Value with its first two derivatives at one abscissa.
template <typename T>
struct Jet1 {
  T f;
  T d1;
  T d2;
};

/// Piecewise quintic Hermite interpolant through (x_i, f_i, f'_i, f''_i).
/// C2 across knots; exact for quintics. T is double or an Eigen vector.
template <typename T>
class QuinticHermite {
 public:
  QuinticHermite() = default;

  QuinticHermite(std::vector<double> knots, std::vector<Jet1<T>> samples)
      : x_(std::move(knots)), y_(std::move(samples)) {
    if (x_.size() < 2 || x_.size() != y_.size())
      throw std::invalid_argument("QuinticHermite: need >= 2 matching knots and samples");
    for (std::size_t i = 1; i < x_.size(); ++i)
      if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("QuinticHermite: knots must increase");
  }

  double lo() const { return x_.front(); }
  double hi() const { return x_.back(); }
  const std::vector<double>& knots() const { return x_; }
  const std::vector<Jet1<T>>& samples() const { return y_; }
  bool empty() const { return x_.empty(); }

  /// Interval index containing x (clamped to the table).
  std::size_t locate(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
  }

  Jet1<T> operator()(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const auto& a = y_[i];
    const auto& b = y_[i + 1];

    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    // basis values
    const double h0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
    const double h1 = t - 6 * t3 + 8 * t4 - 3 * t5;
    const double h2 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
    const double h3 = 0.5 * (t3 - 2 * t4 + t5);
    const double h4 = -4 * t3 + 7 * t4 - 3 * t5;
    const double h5 = 10 * t3 - 15 * t4 + 6 * t5;
    // first derivatives in t
    const double d0 = -30 * t2 + 60 * t3 - 30 * t4;
    const double d1 = 1 - 18 * t2 + 32 * t3 - 15 * t4;
    const double d2 = 0.5 * (2 * t - 9 * t2 + 12 * t3 - 5 * t4);
    const double d3 = 0.5 * (3 * t2 - 8 * t3 + 5 * t4);
    const double d4 = -12 * t2 + 28 * t3 - 15 * t4;
    const double d5 = 30 * t2 - 60 * t3 + 30 * t4;
    // second derivatives in t
    const double s0 = -60 * t + 180 * t2 - 120 * t3;
    const double s1 = -36 * t + 96 * t2 - 60 * t3;
    const double s2 = 0.5 * (2 - 18 * t + 36 * t2 - 20 * t3);
    const double s3 = 0.5 * (6 * t - 24 * t2 + 20 * t3);
    const double s4 = -24 * t + 84 * t2 - 60 * t3;
    const double s5 = 60 * t - 180 * t2 + 120 * t3;

    const T fa = a.f, fb = b.f;
    const T ga = a.d1 * h, gb = b.d1 * h;
    const T ka = a.d2 * (h * h), kb = b.d2 * (h * h);

    Jet1<T> r{
        fa * h0 + ga * h1 + ka * h2 + kb * h3 + gb * h4 + fb * h5,
        (fa * d0 + ga * d1 + ka * d2 + kb * d3 + gb * d4 + fb * d5) * (1.0 / h),
        (fa * s0 + ga * s1 + ka * s2 + kb * s3 + gb * s4 + fb * s5) * (1.0 / (h * h)),
    };
    return r;
  }

 private:
  std::vector<double> x_;
  std::vector<Jet1<T>> y_;
};

}  // namespace stationary
