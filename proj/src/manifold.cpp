// SPDX-License-Identifier: MIT
#include "dfs/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dfs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

std::complex<double> cis(double t) { return {std::cos(t), std::sin(t)}; }

}  // namespace

double euclidean_norm(const AmbientPoint& v) {
  double s = 0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

double chebyshev_t(int n, double x) {
  n = std::abs(n);
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

DfsTransform::DfsTransform(std::string name, int d, int dprime,
                           SymmetryGroup group, DomainSpec domain)
    : name_(std::move(name)),
      d_(d),
      dprime_(dprime),
      group_(std::move(group)),
      domain_(std::move(domain)) {
  if (group_.dim() != d_ || domain_.dim() != d_)
    throw std::invalid_argument("DfsTransform: inconsistent dimensions");
}

void DfsTransform::check_index_dim(const MultiIndex& n) const {
  if (static_cast<int>(n.size()) != d_)
    throw std::invalid_argument(name_ + ": multi-index dimension mismatch");
}

void DfsTransform::check_ambient_dim(const AmbientPoint& xi) const {
  if (static_cast<int>(xi.size()) != dprime_)
    throw std::domain_error(name_ + ": ambient point dimension mismatch");
}

AmbientPoint DfsTransform::phi(const TorusPoint& x) const {
  if (x.dim() != d_)
    throw std::invalid_argument(name_ + ": torus point dimension mismatch");
  AmbientPoint out(static_cast<std::size_t>(dprime_));
  eval_phi(x.coords().data(), out.data());
  return out;
}

bool DfsTransform::omega_contains(const MultiIndex& n) const {
  check_index_dim(n);
  return omega_contains_impl(n);
}

std::complex<double> DfsTransform::closed_form_basis(
    const MultiIndex& n, const AmbientPoint& xi) const {
  check_index_dim(n);
  if (!omega_contains_impl(n))
    throw std::invalid_argument(name_ + ": index outside Omega");
  require_on_manifold(xi);
  return basis_impl(n, xi);
}

TorusPoint DfsTransform::symmetry_image(unsigned mask,
                                        const TorusPoint& x) const {
  return TorusPoint(group_.apply(mask, x.coords()));
}

// ---------------------------------------------------------------------------
// Interval [-1,1]:  phi(x) = cos x,  p = 1 with s(x) = -x,  D1 = [0, pi].

namespace {

class IntervalTransform final : public DfsTransform {
 public:
  IntervalTransform()
      : DfsTransform("interval", 1, 1,
                     SymmetryGroup(1, {SymmetryGenerator{{false}, {-1}}}),
                     make_domain()) {}

  TorusPoint inverse(const AmbientPoint& xi) const override {
    require_on_manifold(xi);
    return TorusPoint({std::acos(clamp_unit(xi[0]))});
  }

  double jacobian_weight(const TorusPoint& x) const override {
    return std::fabs(std::sin(x[0]));
  }

  std::string omega_description() const override { return "n >= 0"; }

  void check_constraints(const AmbientPoint& xi, double tol) const override {
    check_ambient_dim(xi);
    if (std::fabs(xi[0]) > 1.0 + tol)
      throw std::domain_error("interval: point outside [-1,1]");
  }

 protected:
  void eval_phi(const double* x, double* out) const override {
    out[0] = std::cos(x[0]);
  }

  bool omega_contains_impl(const MultiIndex& n) const override {
    return n[0] >= 0;
  }

  std::complex<double> basis_impl(const MultiIndex& n,
                                  const AmbientPoint& xi) const override {
    if (n[0] == 0) return 1.0;
    return 2.0 * chebyshev_t(n[0], clamp_unit(xi[0]));
  }

 private:
  static DomainSpec make_domain() {
    DomainSpec s;
    s.d1 = {CoordInterval::make(0.0, kPi, true, true)};
    return s;
  }
};

// ---------------------------------------------------------------------------
// Hyperball B^d (d >= 2), spherical coordinates with the radial variable
// substituted by cos(x_1).  d = 2 is the disk.

SymmetryGroup ball_group(int d) {
  std::vector<SymmetryGenerator> gens;
  {
    SymmetryGenerator g{std::vector<bool>(d, false),
                        std::vector<std::int8_t>(d, 1)};
    g.signs[0] = -1;
    gens.push_back(g);  // (x1, ...) -> (-x1, ...)
  }
  {
    SymmetryGenerator g{std::vector<bool>(d, false),
                        std::vector<std::int8_t>(d, 1)};
    g.half_turn[0] = true;
    g.half_turn[1] = true;
    gens.push_back(g);  // shift x1 and x2 by pi
  }
  for (int k = 2; k < d; ++k) {
    SymmetryGenerator g{std::vector<bool>(d, false),
                        std::vector<std::int8_t>(d, 1)};
    g.signs[static_cast<std::size_t>(k - 1)] = -1;
    g.half_turn[static_cast<std::size_t>(k)] = true;
    gens.push_back(g);  // negate x_k, shift x_{k+1} by pi
  }
  return SymmetryGroup(d, std::move(gens));
}

DomainSpec ball_domain(int d) {
  DomainSpec s;
  s.d1.push_back(CoordInterval::make(0.0, kPi / 2, true, false));
  for (int j = 1; j < d - 1; ++j)
    s.d1.push_back(CoordInterval::make(0.0, kPi, false, false));
  s.d1.push_back(CoordInterval::full_circle());

  // Axis pieces: angles before m in (0,pi), angle m at 0 or pi, rest 0.
  for (int m = 1; m <= d - 2; ++m) {
    for (double pin : {0.0, kPi}) {
      D2Piece p;
      p.fixed.assign(static_cast<std::size_t>(d), std::nullopt);
      p.box.assign(static_cast<std::size_t>(d), CoordInterval{});
      p.box[0] = CoordInterval::make(0.0, kPi / 2, true, false);
      for (int j = 1; j < m; ++j)
        p.box[static_cast<std::size_t>(j)] = CoordInterval::make(0.0, kPi, false, false);
      p.fixed[static_cast<std::size_t>(m)] = pin;
      for (int j = m + 1; j < d; ++j) p.fixed[static_cast<std::size_t>(j)] = 0.0;
      s.d2.push_back(std::move(p));
    }
  }
  // Center piece {pi/2} x {0}^{d-1}.
  D2Piece center;
  center.fixed.assign(static_cast<std::size_t>(d), 0.0);
  center.fixed[0] = kPi / 2;
  center.box.assign(static_cast<std::size_t>(d), CoordInterval{});
  s.d2.push_back(std::move(center));
  return s;
}

class BallTransform : public DfsTransform {
 public:
  explicit BallTransform(int d, std::string name = "")
      : BallTransform(d, name.empty() ? default_name(d) : std::move(name),
                      ball_group(d)) {}

  TorusPoint inverse(const AmbientPoint& xi) const override {
    require_on_manifold(xi);
    const int d = dim();
    std::vector<double> x(static_cast<std::size_t>(d));
    x[0] = std::acos(clamp_unit(euclidean_norm(xi)));
    // Angles from suffix norms; degenerate suffixes land on the D2 pieces.
    for (int i = 0; i + 2 < d; ++i) {
      double tail = 0;
      for (int k = i + 1; k < d; ++k) tail += xi[static_cast<std::size_t>(k)] * xi[static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(i + 1)] = std::atan2(std::sqrt(tail), xi[static_cast<std::size_t>(i)]);
    }
    x[static_cast<std::size_t>(d - 1)] =
        std::atan2(xi[static_cast<std::size_t>(d - 1)], xi[static_cast<std::size_t>(d - 2)]);
    return TorusPoint(std::move(x));
  }

  double jacobian_weight(const TorusPoint& x) const override {
    const int d = dim();
    double g = std::sin(x[0]) * std::pow(std::cos(x[0]), d - 1);
    for (int j = 1; j <= d - 2; ++j)
      g *= std::pow(std::sin(x[j]), d - 1 - j);
    return std::fabs(g);
  }

  void check_constraints(const AmbientPoint& xi, double tol) const override {
    check_ambient_dim(xi);
    if (euclidean_norm(xi) > 1.0 + tol)
      throw std::domain_error(name() + ": point outside the unit ball");
  }

  std::string omega_description() const override {
    return "n_1..n_{d-1} >= 0; n_1+n_2 even; n_{i-1} != 0 or n_i even for 3<=i<=d";
  }

 protected:
  BallTransform(int d, std::string name, SymmetryGroup group)
      : DfsTransform(std::move(name), d, d, std::move(group), ball_domain(d)) {
    if (d < 2) throw std::invalid_argument("ball: dimension must be >= 2");
  }

  void eval_phi(const double* x, double* out) const override {
    const int d = dim();
    double prod = std::cos(x[0]);
    for (int j = 1; j < d; ++j) {
      out[j - 1] = prod * std::cos(x[j]);
      prod *= std::sin(x[j]);
    }
    out[d - 1] = prod;
  }

  bool omega_contains_impl(const MultiIndex& n) const override {
    const int d = dim();
    for (int j = 0; j < d - 1; ++j)
      if (n[static_cast<std::size_t>(j)] < 0) return false;
    if ((n[0] + n[1]) % 2 != 0) return false;
    for (int m = 2; m < d; ++m)
      if (n[static_cast<std::size_t>(m - 1)] == 0 && (n[static_cast<std::size_t>(m)] & 1))
        return false;
    return true;
  }

  std::complex<double> basis_impl(const MultiIndex& n,
                                  const AmbientPoint& xi) const override {
    const int d = dim();
    const TorusPoint x = inverse(xi);
    const double rho = std::cos(x[0]);
    int nonzero = 0;
    for (int j = 0; j < d - 1; ++j)
      if (n[static_cast<std::size_t>(j)] != 0) ++nonzero;
    std::complex<double> val =
        std::pow(2.0, nonzero) * chebyshev_t(n[0], rho);
    for (int m = 1; m <= d - 2; ++m) {
      const int nm = n[static_cast<std::size_t>(m)];
      if (nm == 0) continue;
      const double angle = nm * x[m];  // lambda_m = x_{m+1} in torus coords
      if ((n[static_cast<std::size_t>(m + 1)] & 1) == 0)
        val *= std::cos(angle);
      else
        val *= kI * std::sin(angle);
    }
    val *= cis(n[static_cast<std::size_t>(d - 1)] * x[d - 1]);
    return val;
  }

 private:
  static std::string default_name(int d) {
    return d == 2 ? "disk" : "ball:" + std::to_string(d);
  }

  friend TransformPtr dfs::make_corrupt_disk();
};

// ---------------------------------------------------------------------------
// Hypersphere S^d embedded in R^{d+1} (the restriction of the (d+1)-ball
// transform to radius one).  d = 1 is the circle.

SymmetryGroup sphere_group(int d) {
  std::vector<SymmetryGenerator> gens;
  for (int k = 0; k < d - 1; ++k) {
    SymmetryGenerator g{std::vector<bool>(d, false),
                        std::vector<std::int8_t>(d, 1)};
    g.signs[static_cast<std::size_t>(k)] = -1;
    g.half_turn[static_cast<std::size_t>(k + 1)] = true;
    gens.push_back(g);  // negate x_k, shift x_{k+1} by pi
  }
  return SymmetryGroup(d, std::move(gens));
}

DomainSpec sphere_domain(int d) {
  DomainSpec s;
  for (int j = 0; j < d - 1; ++j)
    s.d1.push_back(CoordInterval::make(0.0, kPi, false, false));
  s.d1.push_back(CoordInterval::full_circle());
  for (int m = 0; m <= d - 2; ++m) {
    for (double pin : {0.0, kPi}) {
      D2Piece p;
      p.fixed.assign(static_cast<std::size_t>(d), std::nullopt);
      p.box.assign(static_cast<std::size_t>(d), CoordInterval{});
      for (int j = 0; j < m; ++j)
        p.box[static_cast<std::size_t>(j)] = CoordInterval::make(0.0, kPi, false, false);
      p.fixed[static_cast<std::size_t>(m)] = pin;
      for (int j = m + 1; j < d; ++j) p.fixed[static_cast<std::size_t>(j)] = 0.0;
      s.d2.push_back(std::move(p));
    }
  }
  return s;
}

class SphereTransform final : public DfsTransform {
 public:
  explicit SphereTransform(int d, std::string name = "")
      : DfsTransform(name.empty() ? "sphere:" + std::to_string(d) : std::move(name),
                     d, d + 1, sphere_group(d), sphere_domain(d)) {
    if (d < 1) throw std::invalid_argument("sphere: dimension must be >= 1");
  }

  TorusPoint inverse(const AmbientPoint& xi) const override {
    require_on_manifold(xi);
    const int d = dim();
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int i = 0; i < d - 1; ++i) {
      double tail = 0;
      for (int k = i + 1; k <= d; ++k) tail += xi[static_cast<std::size_t>(k)] * xi[static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(i)] = std::atan2(std::sqrt(tail), xi[static_cast<std::size_t>(i)]);
    }
    x[static_cast<std::size_t>(d - 1)] =
        std::atan2(xi[static_cast<std::size_t>(d)], xi[static_cast<std::size_t>(d - 1)]);
    return TorusPoint(std::move(x));
  }

  double jacobian_weight(const TorusPoint& x) const override {
    const int d = dim();
    double g = 1.0;
    for (int j = 0; j <= d - 2; ++j)
      g *= std::pow(std::sin(x[j]), d - 1 - j);
    return std::fabs(g);
  }

  void check_constraints(const AmbientPoint& xi, double tol) const override {
    check_ambient_dim(xi);
    if (std::fabs(euclidean_norm(xi) - 1.0) > tol)
      throw std::domain_error(name() + ": point off the unit sphere");
  }

  std::string omega_description() const override {
    return dim() == 1 ? "all n"
                      : "n_1..n_{d-1} >= 0; n_i != 0 or n_{i+1} even for i < d";
  }

 protected:
  void eval_phi(const double* x, double* out) const override {
    const int d = dim();
    double prod = 1.0;
    for (int j = 0; j < d; ++j) {
      out[j] = prod * std::cos(x[j]);
      prod *= std::sin(x[j]);
    }
    out[d] = prod;
  }

  bool omega_contains_impl(const MultiIndex& n) const override {
    const int d = dim();
    for (int j = 0; j < d - 1; ++j)
      if (n[static_cast<std::size_t>(j)] < 0) return false;
    for (int m = 0; m < d - 1; ++m)
      if (n[static_cast<std::size_t>(m)] == 0 && (n[static_cast<std::size_t>(m + 1)] & 1))
        return false;
    return true;
  }

  std::complex<double> basis_impl(const MultiIndex& n,
                                  const AmbientPoint& xi) const override {
    const int d = dim();
    const TorusPoint x = inverse(xi);
    int nonzero = 0;
    for (int j = 0; j < d - 1; ++j)
      if (n[static_cast<std::size_t>(j)] != 0) ++nonzero;
    std::complex<double> val = std::pow(2.0, nonzero);
    for (int m = 0; m < d - 1; ++m) {
      const int nm = n[static_cast<std::size_t>(m)];
      if (nm == 0) continue;
      const double angle = nm * x[m];
      if ((n[static_cast<std::size_t>(m + 1)] & 1) == 0)
        val *= std::cos(angle);
      else
        val *= kI * std::sin(angle);
    }
    val *= cis(n[static_cast<std::size_t>(d - 1)] * x[d - 1]);
    return val;
  }
};

// ---------------------------------------------------------------------------
// Rotation group SO(3), zyz Euler angles R_z(x1) R_y(x2) R_z(x3), embedded
// column-major in R^9.

class So3Transform final : public DfsTransform {
 public:
  So3Transform()
      : DfsTransform("so3", 3, 9,
                     SymmetryGroup(3, {SymmetryGenerator{{true, false, true},
                                                         {1, -1, 1}}}),
                     make_domain()) {}

  TorusPoint inverse(const AmbientPoint& xi) const override {
    require_on_manifold(xi);
    const auto a = [&xi](int r, int c) { return xi[static_cast<std::size_t>(3 * c + r)]; };
    const double beta = std::acos(clamp_unit(a(2, 2)));
    double alpha, gamma;
    if (std::min(beta, kPi - beta) <= kD2SnapTol) {
      gamma = 0.0;
      if (beta <= kD2SnapTol)
        alpha = std::atan2(a(1, 0), a(0, 0));
      else
        alpha = std::atan2(-a(1, 0), -a(0, 0));
      return TorusPoint({alpha, beta <= kD2SnapTol ? 0.0 : kPi, gamma});
    }
    alpha = std::atan2(a(1, 2), a(0, 2));
    gamma = std::atan2(a(2, 1), -a(2, 0));
    return TorusPoint({alpha, beta, gamma});
  }

  double jacobian_weight(const TorusPoint& x) const override {
    return 2.0 * std::numbers::sqrt2 * std::fabs(std::sin(x[1]));
  }

  std::string omega_description() const override {
    return "n_2 >= 0; n_2 != 0 or n_1+n_3 even";
  }

  void check_constraints(const AmbientPoint& xi, double tol) const override {
    check_ambient_dim(xi);
    const auto a = [&xi](int r, int c) { return xi[static_cast<std::size_t>(3 * c + r)]; };
    // A^T A = I entrywise.
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        double dot = 0;
        for (int r = 0; r < 3; ++r) dot += a(r, i) * a(r, j);
        if (std::fabs(dot - (i == j ? 1.0 : 0.0)) > tol)
          throw std::domain_error("so3: matrix is not orthogonal");
      }
    }
    const double det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                       a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                       a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    if (std::fabs(det - 1.0) > 10 * tol)
      throw std::domain_error("so3: matrix determinant is not one");
  }

 protected:
  void eval_phi(const double* x, double* out) const override {
    const double ca = std::cos(x[0]), sa = std::sin(x[0]);
    const double cb = std::cos(x[1]), sb = std::sin(x[1]);
    const double cg = std::cos(x[2]), sg = std::sin(x[2]);
    // Column-major storage of R_z(alpha) R_y(beta) R_z(gamma).
    out[0] = ca * cb * cg - sa * sg;   // A11
    out[1] = sa * cb * cg + ca * sg;   // A21
    out[2] = -sb * cg;                 // A31
    out[3] = -ca * cb * sg - sa * cg;  // A12
    out[4] = -sa * cb * sg + ca * cg;  // A22
    out[5] = sb * sg;                  // A32
    out[6] = ca * sb;                  // A13
    out[7] = sa * sb;                  // A23
    out[8] = cb;                       // A33
  }

  bool omega_contains_impl(const MultiIndex& n) const override {
    if (n[1] < 0) return false;
    return n[1] != 0 || ((n[0] + n[2]) % 2 == 0);
  }

  std::complex<double> basis_impl(const MultiIndex& n,
                                  const AmbientPoint& xi) const override {
    const TorusPoint x = inverse(xi);
    std::complex<double> val = cis(n[0] * x[0]) * cis(n[2] * x[2]);
    if (n[1] == 0) return val;
    if (((n[0] + n[2]) & 1) == 0) return val * (2.0 * std::cos(n[1] * x[1]));
    return val * (2.0 * kI * std::sin(n[1] * x[1]));
  }

 private:
  static DomainSpec make_domain() {
    DomainSpec s;
    s.d1 = {CoordInterval::full_circle(),
            CoordInterval::make(0.0, kPi, false, false),
            CoordInterval::full_circle()};
    for (double pin : {0.0, kPi}) {
      D2Piece p;
      p.fixed = {std::nullopt, pin, 0.0};
      p.box.assign(3, CoordInterval{});
      p.box[0] = CoordInterval::full_circle();
      s.d2.push_back(std::move(p));
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// Product manifold.

SymmetryGroup product_group(const SymmetryGroup& a, const SymmetryGroup& b) {
  const int d = a.dim() + b.dim();
  std::vector<SymmetryGenerator> gens;
  for (const auto& g : a.generators()) {
    SymmetryGenerator e{std::vector<bool>(d, false), std::vector<std::int8_t>(d, 1)};
    std::copy(g.half_turn.begin(), g.half_turn.end(), e.half_turn.begin());
    std::copy(g.signs.begin(), g.signs.end(), e.signs.begin());
    gens.push_back(std::move(e));
  }
  for (const auto& g : b.generators()) {
    SymmetryGenerator e{std::vector<bool>(d, false), std::vector<std::int8_t>(d, 1)};
    std::copy(g.half_turn.begin(), g.half_turn.end(),
              e.half_turn.begin() + a.dim());
    std::copy(g.signs.begin(), g.signs.end(), e.signs.begin() + a.dim());
    gens.push_back(std::move(e));
  }
  return SymmetryGroup(d, std::move(gens));
}

class ProductTransform final : public DfsTransform {
 public:
  ProductTransform(TransformPtr a, TransformPtr b, std::string name)
      : DfsTransform(std::move(name), a->dim() + b->dim(),
                     a->ambient_dim() + b->ambient_dim(),
                     product_group(a->group(), b->group()),
                     DomainSpec::product(a->domain(), b->domain())),
        a_(std::move(a)),
        b_(std::move(b)) {}

  TorusPoint inverse(const AmbientPoint& xi) const override {
    const auto [xa, xb] = split_ambient(xi);
    const TorusPoint ya = a_->inverse(xa);
    const TorusPoint yb = b_->inverse(xb);
    std::vector<double> x = ya.coords();
    x.insert(x.end(), yb.coords().begin(), yb.coords().end());
    return TorusPoint(std::move(x));
  }

  double jacobian_weight(const TorusPoint& x) const override {
    const auto [xa, xb] = split_torus(x);
    return a_->jacobian_weight(xa) * b_->jacobian_weight(xb);
  }

  void check_constraints(const AmbientPoint& xi, double tol) const override {
    const auto [xa, xb] = split_ambient(xi);
    a_->require_on_manifold(xa, tol);
    b_->require_on_manifold(xb, tol);
  }

  std::string omega_description() const override {
    return "(" + a_->omega_description() + ") x (" + b_->omega_description() + ")";
  }

  const TransformPtr& factor_a() const { return a_; }
  const TransformPtr& factor_b() const { return b_; }

 protected:
  void eval_phi(const double* x, double* out) const override {
    a_->phi_raw(x, out);
    b_->phi_raw(x + a_->dim(), out + a_->ambient_dim());
  }

  bool omega_contains_impl(const MultiIndex& n) const override {
    const auto [na, nb] = split_index(n);
    return a_->omega_contains(na) && b_->omega_contains(nb);
  }

  std::complex<double> basis_impl(const MultiIndex& n,
                                  const AmbientPoint& xi) const override {
    const auto [na, nb] = split_index(n);
    const auto [xa, xb] = split_ambient(xi);
    return a_->closed_form_basis(na, xa) * b_->closed_form_basis(nb, xb);
  }

 private:
  std::pair<AmbientPoint, AmbientPoint> split_ambient(const AmbientPoint& xi) const {
    check_ambient_dim(xi);
    const auto na = static_cast<std::size_t>(a_->ambient_dim());
    return {AmbientPoint(xi.begin(), xi.begin() + na),
            AmbientPoint(xi.begin() + na, xi.end())};
  }
  std::pair<MultiIndex, MultiIndex> split_index(const MultiIndex& n) const {
    const auto da = static_cast<std::size_t>(a_->dim());
    return {MultiIndex(n.begin(), n.begin() + da),
            MultiIndex(n.begin() + da, n.end())};
  }
  std::pair<TorusPoint, TorusPoint> split_torus(const TorusPoint& x) const {
    const auto& c = x.coords();
    const auto da = static_cast<std::size_t>(a_->dim());
    return {TorusPoint(std::vector<double>(c.begin(), c.begin() + da)),
            TorusPoint(std::vector<double>(c.begin() + da, c.end()))};
  }

  TransformPtr a_;
  TransformPtr b_;
};

int parse_dimension(const std::string& name, const std::string& arg,
                    const std::map<std::string, std::string>& params,
                    int fallback) {
  if (!arg.empty()) return std::stoi(arg);
  auto it = params.find("d");
  if (it != params.end()) return std::stoi(it->second);
  if (fallback > 0) return fallback;
  throw std::invalid_argument("manifold '" + name + "' needs a dimension (name:d or d=<int>)");
}

}  // namespace

TransformPtr make_product(TransformPtr a, TransformPtr b, std::string name) {
  if (name.empty()) name = "product:" + a->name() + "," + b->name();
  return std::make_shared<ProductTransform>(std::move(a), std::move(b),
                                            std::move(name));
}

TransformPtr make_manifold(const std::string& name,
                           const std::map<std::string, std::string>& params) {
  std::string base = name, arg;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    arg = name.substr(pos + 1);
  }
  if (base == "circle") return std::make_shared<SphereTransform>(1, "circle");
  if (base == "interval") return std::make_shared<IntervalTransform>();
  if (base == "disk") return std::make_shared<BallTransform>(2, "disk");
  if (base == "ball3") return std::make_shared<BallTransform>(3, "ball3");
  if (base == "ball")
    return std::make_shared<BallTransform>(parse_dimension(name, arg, params, -1));
  if (base == "sphere")
    return std::make_shared<SphereTransform>(parse_dimension(name, arg, params, -1));
  if (base == "so3") return std::make_shared<So3Transform>();
  if (base == "cylinder")
    return make_product(std::make_shared<BallTransform>(2, "disk"),
                        std::make_shared<IntervalTransform>(), "cylinder");
  if (base == "product") {
    auto comma = arg.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("product manifold needs two factor names");
    return make_product(make_manifold(arg.substr(0, comma), params),
                        make_manifold(arg.substr(comma + 1), params),
                        "product:" + arg);
  }
  if (base == "corrupt-disk") return make_corrupt_disk();
  throw std::invalid_argument("unknown manifold '" + name + "'");
}

const std::vector<std::string>& registered_manifold_names() {
  static const std::vector<std::string> names = {
      "circle", "interval", "disk",     "ball:3", "ball:4",
      "sphere:2", "sphere:3", "cylinder", "so3"};
  return names;
}

TransformPtr make_corrupt_disk() {
  SymmetryGroup bad(2, {SymmetryGenerator{{false, false}, {-1, -1}},
                        SymmetryGenerator{{true, true}, {1, 1}}});
  struct CorruptDisk : BallTransform {
    explicit CorruptDisk(SymmetryGroup g)
        : BallTransform(2, "corrupt-disk", std::move(g)) {}
  };
  return std::make_shared<CorruptDisk>(std::move(bad));
}

}  // namespace dfs
