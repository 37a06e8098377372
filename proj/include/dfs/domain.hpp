// SPDX-License-Identifier: MIT
#ifndef DFS_DOMAIN_HPP
#define DFS_DOMAIN_HPP

#include <optional>
#include <vector>

#include "dfs/torus.hpp"

namespace dfs {

/// One coordinate factor of a rectangular subset of T^d, written with the
/// half-open conventions of the fundamental-domain descriptions.  Endpoints
/// are canonical representatives in (-pi, pi] except that `hi` may be pi
/// while `lo` is negative; a factor spanning the full circle is flagged.
struct CoordInterval {
  double lo = -std::numbers::pi;
  double hi = std::numbers::pi;
  bool lo_closed = false;
  bool hi_closed = true;
  bool full = false;  ///< covers all of T^1

  static CoordInterval full_circle() {
    return CoordInterval{-std::numbers::pi, std::numbers::pi, false, true, true};
  }
  static CoordInterval make(double lo, double hi, bool lo_closed, bool hi_closed) {
    return CoordInterval{lo, hi, lo_closed, hi_closed, false};
  }

  bool contains(double x, double tol = 0.0) const;
  bool interior_contains(double x) const;
  bool closure_contains(double x, double tol = 0.0) const;
  /// Distance from x to the complement of the interval (+inf for full circle).
  double interior_margin(double x) const;
  double midpoint() const;
};

/// One rectangular piece of D_2: every coordinate is either pinned to a fixed
/// value or ranges over an interval.
struct D2Piece {
  std::vector<std::optional<double>> fixed;    ///< pinned coordinate values
  std::vector<CoordInterval> box;              ///< used where not pinned

  bool contains(const TorusPoint& x, double pin_tol) const;
  TorusPoint representative() const;
};

enum class DomainClass { kInteriorD1, kBoundaryD1, kD2, kOutside };

const char* to_string(DomainClass c);

/// The fundamental-domain data of a transform: D_1 as a product of coordinate
/// intervals and D_2 as a finite list of rectangular pieces.
struct DomainSpec {
  std::vector<CoordInterval> d1;
  std::vector<D2Piece> d2;

  int dim() const { return static_cast<int>(d1.size()); }

  bool in_d1(const TorusPoint& x) const;
  bool in_d1_interior(const TorusPoint& x) const;
  bool in_d1_closure(const TorusPoint& x, double tol = 0.0) const;
  /// Distance from x to the boundary of D_1 (+inf when every factor is full).
  double d1_margin(const TorusPoint& x) const;
  /// Index of the D_2 piece containing x within pin_tol, if any.
  std::optional<std::size_t> d2_piece(const TorusPoint& x, double pin_tol) const;

  DomainClass classify(const TorusPoint& x, double pin_tol) const;

  /// One representative torus point per D_2 piece.
  std::vector<TorusPoint> d2_representatives() const;

  /// Product-domain composition: D_1 = D_1^a x D_1^b and the three mixed
  /// D_2 products.
  static DomainSpec product(const DomainSpec& a, const DomainSpec& b);
};

}  // namespace dfs

#endif  // DFS_DOMAIN_HPP
