// SPDX-License-Identifier: MIT
#ifndef DFS_TORUS_HPP
#define DFS_TORUS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dfs {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces a real number to the canonical torus representative in (-pi, pi].
inline double wrap_angle(double x) {
  double y = x - kTwoPi * std::floor(x / kTwoPi);  // [0, 2pi)
  if (y > std::numbers::pi) y -= kTwoPi;
  if (y <= -std::numbers::pi) y += kTwoPi;  // guards the rounding edge at -pi
  return y;
}

/// Distance on T^1 between canonical representatives.
inline double circle_distance(double a, double b) {
  double d = std::fabs(wrap_angle(a - b));
  return d;
}

/// A point of T^d stored as the canonical representative in (-pi, pi]^d.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> raw) : x_(std::move(raw)) {
    for (auto& v : x_) v = wrap_angle(v);
  }

  int dim() const { return static_cast<int>(x_.size()); }
  double operator[](int j) const { return x_[static_cast<std::size_t>(j)]; }
  const std::vector<double>& coords() const { return x_; }

 private:
  std::vector<double> x_;
};

/// Max per-coordinate circle distance between two torus points.
inline double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("torus_distance: dimension mismatch");
  double d = 0;
  for (int j = 0; j < a.dim(); ++j) d = std::max(d, circle_distance(a[j], b[j]));
  return d;
}

}  // namespace dfs

#endif  // DFS_TORUS_HPP
