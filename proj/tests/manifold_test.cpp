// SPDX-License-Identifier: MIT
#include "dfs/manifold.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dfs/analysis.hpp"
#include "dfs/random.hpp"

namespace dfs {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(TorusPointType, Canonicalization) {
  const TorusPoint p({-kPi, 3 * kPi, 0.0, kPi / 2 + 2 * kPi});
  EXPECT_DOUBLE_EQ(p[0], kPi);
  EXPECT_DOUBLE_EQ(p[1], kPi);
  EXPECT_DOUBLE_EQ(p[2], 0.0);
  EXPECT_NEAR(p[3], kPi / 2, 1e-15);
}

TEST(Phi, SpecValues) {
  const auto disk = make_manifold("disk");
  const AmbientPoint edge = disk->phi(TorusPoint({0.0, 0.0}));
  EXPECT_NEAR(edge[0], 1.0, 1e-15);
  EXPECT_NEAR(edge[1], 0.0, 1e-15);

  const auto so3 = make_manifold("so3");
  const AmbientPoint id = so3->phi(TorusPoint({0.0, 0.0, 0.0}));
  const double expected[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  for (int i = 0; i < 9; ++i)
    EXPECT_NEAR(id[static_cast<std::size_t>(i)], expected[i], 1e-15);

  const auto s2 = make_manifold("sphere:2");
  const AmbientPoint equator = s2->phi(TorusPoint({kPi / 2, 0.0}));
  EXPECT_NEAR(equator[0], 0.0, 1e-15);
  EXPECT_NEAR(equator[1], 1.0, 1e-15);
  EXPECT_NEAR(equator[2], 0.0, 1e-15);
}

TEST(Phi, DimensionMismatch) {
  const auto disk = make_manifold("disk");
  EXPECT_THROW(disk->phi(TorusPoint({0.0})), std::invalid_argument);
}

TEST(Inverse, SpecValues) {
  const auto circle = make_manifold("circle");
  EXPECT_NEAR(circle->inverse({0.0, 1.0})[0], kPi / 2, 1e-15);

  const auto interval = make_manifold("interval");
  EXPECT_NEAR(interval->inverse({0.5})[0], kPi / 3, 1e-15);

  const auto s2 = make_manifold("sphere:2");
  const TorusPoint south = s2->inverse({-1.0, 0.0, 0.0});
  EXPECT_NEAR(south[0], kPi, 1e-15);
  EXPECT_NEAR(south[1], 0.0, 1e-15);
  EXPECT_EQ(s2->classify(south), DomainClass::kD2);
}

TEST(Inverse, RejectsOffManifold) {
  const auto s2 = make_manifold("sphere:2");
  EXPECT_THROW(s2->inverse({1.1, 0.0, 0.0}), std::domain_error);
  const auto so3 = make_manifold("so3");
  EXPECT_THROW(so3->inverse({2, 0, 0, 0, 1, 0, 0, 0, 1}), std::domain_error);
  const auto interval = make_manifold("interval");
  EXPECT_THROW(interval->inverse({1.5}), std::domain_error);
}

TEST(JacobianWeight, SpecValues) {
  const auto circle = make_manifold("circle");
  EXPECT_NEAR(circle->jacobian_weight(TorusPoint({1.234})), 1.0, 1e-15);

  const auto interval = make_manifold("interval");
  EXPECT_NEAR(interval->jacobian_weight(TorusPoint({kPi / 2})), 1.0, 1e-15);

  const auto disk = make_manifold("disk");
  EXPECT_NEAR(disk->jacobian_weight(TorusPoint({kPi / 4, 2.0})), 0.5, 1e-15);
}

TEST(InDomain, DiskClassification) {
  const auto disk = make_manifold("disk");
  EXPECT_EQ(disk->classify(TorusPoint({kPi / 4, 1.0})), DomainClass::kInteriorD1);
  EXPECT_EQ(disk->classify(TorusPoint({kPi / 2, 0.0})), DomainClass::kD2);
  EXPECT_EQ(disk->classify(TorusPoint({-kPi / 4, 0.0})), DomainClass::kOutside);
  EXPECT_EQ(disk->classify(TorusPoint({0.0, 0.5})), DomainClass::kBoundaryD1);
  // On the folding line but off the D2 piece: not in D1 u D2.
  EXPECT_EQ(disk->classify(TorusPoint({kPi / 2, 1.0})), DomainClass::kBoundaryD1);
}

TEST(InDomain, IntervalAndCircle) {
  const auto interval = make_manifold("interval");
  EXPECT_EQ(interval->classify(TorusPoint({kPi / 2})), DomainClass::kInteriorD1);
  EXPECT_EQ(interval->classify(TorusPoint({0.0})), DomainClass::kBoundaryD1);
  EXPECT_EQ(interval->classify(TorusPoint({kPi})), DomainClass::kBoundaryD1);
  EXPECT_EQ(interval->classify(TorusPoint({-kPi / 2})), DomainClass::kOutside);

  const auto circle = make_manifold("circle");
  EXPECT_EQ(circle->classify(TorusPoint({2.9})), DomainClass::kInteriorD1);
}

TEST(OmegaContains, SpecValues) {
  const auto disk = make_manifold("disk");
  EXPECT_TRUE(disk->omega_contains({1, 1}));
  EXPECT_FALSE(disk->omega_contains({1, 0}));
  EXPECT_FALSE(disk->omega_contains({-1, 1}));

  const auto so3 = make_manifold("so3");
  EXPECT_TRUE(so3->omega_contains({1, 0, 1}));
  EXPECT_FALSE(so3->omega_contains({1, 0, 0}));

  const auto b3 = make_manifold("ball3");
  EXPECT_FALSE(b3->omega_contains({0, 0, 1}));
  EXPECT_TRUE(b3->omega_contains({0, 0, 2}));
}

TEST(ClosedFormBasis, SpecValues) {
  const auto interval = make_manifold("interval");
  EXPECT_NEAR(interval->closed_form_basis({2}, {0.5}).real(), -1.0, 1e-15);
  EXPECT_NEAR(interval->closed_form_basis({0}, {0.3}).real(), 1.0, 1e-15);

  const auto disk = make_manifold("disk");
  const AmbientPoint xi = disk->phi(TorusPoint({kPi / 3, kPi / 4}));
  const std::complex<double> val = disk->closed_form_basis({1, 1}, xi);
  EXPECT_NEAR(val.real(), std::cos(kPi / 4), 1e-14);
  EXPECT_NEAR(val.imag(), std::sin(kPi / 4), 1e-14);

  EXPECT_THROW(disk->closed_form_basis({1, 0}, xi), std::invalid_argument);
}

TEST(Product, CylinderStructure) {
  const auto cyl = make_manifold("cylinder");
  EXPECT_EQ(cyl->dim(), 3);
  EXPECT_EQ(cyl->ambient_dim(), 3);
  EXPECT_EQ(cyl->group().size(), 3);

  // The three symmetry relations of the product structure.
  Rng rng(21);
  for (int s = 0; s < 200; ++s) {
    const TorusPoint x = random_torus_point(rng, 3);
    const AmbientPoint base = cyl->phi(x);
    const TorusPoint images[3] = {TorusPoint({-x[0], x[1], x[2]}),
                                  TorusPoint({x[0] + kPi, x[1] + kPi, x[2]}),
                                  TorusPoint({x[0], x[1], -x[2]})};
    for (const auto& y : images) {
      const AmbientPoint mapped = cyl->phi(y);
      for (std::size_t j = 0; j < base.size(); ++j)
        EXPECT_NEAR(mapped[j], base[j], 1e-12);
    }
  }
}

TEST(Product, BasisFactorizes) {
  const auto cyl = make_manifold("cylinder");
  const auto disk = make_manifold("disk");
  const auto interval = make_manifold("interval");

  const AmbientPoint xi_disk = disk->phi(TorusPoint({kPi / 3, kPi / 4}));
  const AmbientPoint xi = {xi_disk[0], xi_disk[1], 0.5};
  const std::complex<double> val = cyl->closed_form_basis({1, 1, 2}, xi);
  const std::complex<double> expected = disk->closed_form_basis({1, 1}, xi_disk) *
                                        interval->closed_form_basis({2}, {0.5});
  EXPECT_NEAR(std::abs(val - expected), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(val - std::polar(1.0, kPi / 4) * (-1.0)), 0.0, 1e-14);

  Rng rng(22);
  for (int s = 0; s < 1000; ++s) {
    const TorusPoint x = random_d1_point(cyl->domain(), rng);
    const AmbientPoint p = cyl->phi(x);
    const AmbientPoint pd = {p[0], p[1]};
    const AmbientPoint pi = {p[2]};
    for (const MultiIndex& n :
         {MultiIndex{1, 1, 2}, MultiIndex{2, 0, 1}, MultiIndex{0, 2, 3}}) {
      const std::complex<double> lhs = cyl->closed_form_basis(n, p);
      const std::complex<double> rhs = disk->closed_form_basis({n[0], n[1]}, pd) *
                                       interval->closed_form_basis({n[2]}, pi);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
  }
}

TEST(Product, FlatTorusFromCircles) {
  const auto t2 = make_manifold("product:circle,circle");
  EXPECT_EQ(t2->dim(), 2);
  EXPECT_EQ(t2->ambient_dim(), 4);
  EXPECT_EQ(t2->group().size(), 0);
  EXPECT_TRUE(t2->omega_contains({-3, 5}));
}

TEST(Registry, UnknownNameThrows) {
  EXPECT_THROW(make_manifold("nope"), std::invalid_argument);
  EXPECT_THROW(make_manifold("ball"), std::invalid_argument);  // missing d
  EXPECT_NO_THROW(make_manifold("ball", {{"d", "3"}}));
}

TEST(Registry, AllRegisteredRoundTrip) {
  for (const auto& name : registered_manifold_names()) {
    const auto t = make_manifold(name);
    Rng rng(23);
    for (int s = 0; s < 1000; ++s) {
      const TorusPoint x = random_d1_point(t->domain(), rng);
      const AmbientPoint xi = t->phi(x);
      t->require_on_manifold(xi, 1e-12);
      const TorusPoint y = t->inverse(xi);
      EXPECT_LT(torus_distance(x, y), 1e-10) << name;
      const AmbientPoint xi2 = t->phi(y);
      for (std::size_t j = 0; j < xi.size(); ++j)
        EXPECT_NEAR(xi2[j], xi[j], 1e-10) << name;
    }
  }
}

TEST(Registry, SymmetryInvariance) {
  for (const auto& name : registered_manifold_names()) {
    const auto t = make_manifold(name);
    EXPECT_LE(symmetry_probe(*t, 1000, 31), 1e-12) << name;
  }
}

TEST(Registry, EvenCover) {
  for (const auto& name : registered_manifold_names()) {
    const auto t = make_manifold(name);
    const auto report = even_cover_probe(*t, 300, 32);
    EXPECT_TRUE(report.pass) << name << ": " << report.detail;
  }
}

TEST(Registry, SmoothnessSpotCheck) {
  for (const auto& name : registered_manifold_names()) {
    const auto t = make_manifold(name);
    EXPECT_LE(smoothness_probe(*t, 2, 300, 1e-2, 33), 1.0 + 1e-4) << name;
  }
}

TEST(Registry, FullRankInterior) {
  for (const auto& name : registered_manifold_names()) {
    const auto t = make_manifold(name);
    Rng rng(34);
    for (int s = 0; s < 50; ++s) {
      TorusPoint x = random_d1_point(t->domain(), rng);
      if (!t->domain().in_d1_interior(x) || t->domain().d1_margin(x) <= 1e-3) {
        --s;
        continue;
      }
      const auto jac = numeric_jacobian(*t, x);
      EXPECT_GT(min_singular_value(jac, t->ambient_dim(), t->dim()), 1e-8) << name;
    }
  }
}

TEST(BallDeterminant, MatchesNumericJacobian) {
  for (int d : {2, 3, 4}) {
    const auto ball = make_manifold("ball:" + std::to_string(d));
    Rng rng(35);
    for (int s = 0; s < 100; ++s) {
      TorusPoint x = random_d1_point(ball->domain(), rng);
      if (!ball->domain().in_d1_interior(x) || ball->domain().d1_margin(x) <= 1e-3) {
        --s;
        continue;
      }
      const auto jac = numeric_jacobian(*ball, x);
      EXPECT_NEAR(gram_weight(jac, d, d), ball->jacobian_weight(x), 1e-6)
          << "d=" << d;
    }
  }
}

TEST(So3Weight, MatchesNumericJacobian) {
  const auto so3 = make_manifold("so3");
  Rng rng(36);
  for (int s = 0; s < 100; ++s) {
    TorusPoint x = random_d1_point(so3->domain(), rng);
    if (so3->domain().d1_margin(x) <= 1e-3) {
      --s;
      continue;
    }
    const auto jac = numeric_jacobian(*so3, x);
    EXPECT_NEAR(gram_weight(jac, 9, 3), so3->jacobian_weight(x), 1e-6);
  }
}

TEST(So3, GimbalInverse) {
  const auto so3 = make_manifold("so3");
  // R_z(0.7) exactly: the beta = 0 branch of the inverse.
  const double c = std::cos(0.7), s = std::sin(0.7);
  const AmbientPoint rz = {c, s, 0, -s, c, 0, 0, 0, 1};
  const TorusPoint x = so3->inverse(rz);
  EXPECT_NEAR(x[0], 0.7, 1e-12);
  EXPECT_NEAR(x[1], 0.0, 1e-15);
  EXPECT_NEAR(x[2], 0.0, 1e-15);
  EXPECT_EQ(so3->classify(x), DomainClass::kD2);
}

TEST(CorruptFixture, BreaksSymmetry) {
  const auto bad = make_corrupt_disk();
  EXPECT_GT(symmetry_probe(*bad, 200, 37), 1e-3);
}

}  // namespace
}  // namespace dfs
