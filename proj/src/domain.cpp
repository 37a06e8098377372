// SPDX-License-Identifier: MIT
#include "dfs/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfs {

bool CoordInterval::contains(double x, double tol) const {
  if (full) return true;
  x = wrap_angle(x);
  const bool above = lo_closed ? x >= lo - tol : x > lo + tol;
  const bool below = hi_closed ? x <= hi + tol : x < hi - tol;
  return above && below;
}

bool CoordInterval::interior_contains(double x) const {
  if (full) return true;
  x = wrap_angle(x);
  return x > lo && x < hi;
}

bool CoordInterval::closure_contains(double x, double tol) const {
  if (full) return true;
  x = wrap_angle(x);
  return x >= lo - tol && x <= hi + tol;
}

double CoordInterval::interior_margin(double x) const {
  if (full) return std::numeric_limits<double>::infinity();
  x = wrap_angle(x);
  if (x <= lo || x >= hi) return 0.0;
  return std::min(x - lo, hi - x);
}

double CoordInterval::midpoint() const {
  if (full) return 0.0;
  return 0.5 * (lo + hi);
}

bool D2Piece::contains(const TorusPoint& x, double pin_tol) const {
  const int d = static_cast<int>(fixed.size());
  if (x.dim() != d) throw std::invalid_argument("D2Piece: dimension mismatch");
  for (int j = 0; j < d; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    if (fixed[ju].has_value()) {
      if (circle_distance(x[j], *fixed[ju]) > pin_tol) return false;
    } else if (!box[ju].contains(x[j])) {
      return false;
    }
  }
  return true;
}

TorusPoint D2Piece::representative() const {
  std::vector<double> x(fixed.size());
  for (std::size_t j = 0; j < fixed.size(); ++j)
    x[j] = fixed[j].has_value() ? *fixed[j] : box[j].midpoint();
  return TorusPoint(std::move(x));
}

const char* to_string(DomainClass c) {
  switch (c) {
    case DomainClass::kInteriorD1: return "interior_D1";
    case DomainClass::kBoundaryD1: return "boundary_D1";
    case DomainClass::kD2: return "D2";
    case DomainClass::kOutside: return "outside";
  }
  return "?";
}

bool DomainSpec::in_d1(const TorusPoint& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("DomainSpec: dimension mismatch");
  for (int j = 0; j < dim(); ++j)
    if (!d1[static_cast<std::size_t>(j)].contains(x[j])) return false;
  return true;
}

bool DomainSpec::in_d1_interior(const TorusPoint& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("DomainSpec: dimension mismatch");
  for (int j = 0; j < dim(); ++j)
    if (!d1[static_cast<std::size_t>(j)].interior_contains(x[j])) return false;
  return true;
}

bool DomainSpec::in_d1_closure(const TorusPoint& x, double tol) const {
  if (x.dim() != dim()) throw std::invalid_argument("DomainSpec: dimension mismatch");
  for (int j = 0; j < dim(); ++j)
    if (!d1[static_cast<std::size_t>(j)].closure_contains(x[j], tol)) return false;
  return true;
}

double DomainSpec::d1_margin(const TorusPoint& x) const {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < dim(); ++j)
    m = std::min(m, d1[static_cast<std::size_t>(j)].interior_margin(x[j]));
  return m;
}

std::optional<std::size_t> DomainSpec::d2_piece(const TorusPoint& x,
                                                double pin_tol) const {
  for (std::size_t i = 0; i < d2.size(); ++i)
    if (d2[i].contains(x, pin_tol)) return i;
  return std::nullopt;
}

DomainClass DomainSpec::classify(const TorusPoint& x, double pin_tol) const {
  if (d2_piece(x, pin_tol).has_value()) return DomainClass::kD2;
  if (in_d1_interior(x)) return DomainClass::kInteriorD1;
  if (in_d1_closure(x)) return DomainClass::kBoundaryD1;
  return DomainClass::kOutside;
}

std::vector<TorusPoint> DomainSpec::d2_representatives() const {
  std::vector<TorusPoint> reps;
  reps.reserve(d2.size());
  for (const auto& piece : d2) reps.push_back(piece.representative());
  return reps;
}

namespace {

D2Piece concat_pieces(const D2Piece& a, const D2Piece& b) {
  D2Piece out;
  out.fixed = a.fixed;
  out.fixed.insert(out.fixed.end(), b.fixed.begin(), b.fixed.end());
  out.box = a.box;
  out.box.insert(out.box.end(), b.box.begin(), b.box.end());
  return out;
}

D2Piece d1_as_piece(const DomainSpec& s) {
  D2Piece p;
  p.fixed.assign(s.d1.size(), std::nullopt);
  p.box = s.d1;
  return p;
}

}  // namespace

DomainSpec DomainSpec::product(const DomainSpec& a, const DomainSpec& b) {
  DomainSpec out;
  out.d1 = a.d1;
  out.d1.insert(out.d1.end(), b.d1.begin(), b.d1.end());
  const D2Piece a1 = d1_as_piece(a);
  const D2Piece b1 = d1_as_piece(b);
  for (const auto& q : b.d2) out.d2.push_back(concat_pieces(a1, q));
  for (const auto& p : a.d2) out.d2.push_back(concat_pieces(p, b1));
  for (const auto& p : a.d2)
    for (const auto& q : b.d2) out.d2.push_back(concat_pieces(p, q));
  return out;
}

}  // namespace dfs
