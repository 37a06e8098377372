// SPDX-License-Identifier: MIT
#include "dfs/symmetry.hpp"

#include <gtest/gtest.h>

#include <set>

#include "dfs/random.hpp"

namespace dfs {
namespace {

SymmetryGroup disk_group() {
  return SymmetryGroup(2, {SymmetryGenerator{{false, false}, {-1, 1}},
                           SymmetryGenerator{{true, true}, {1, 1}}});
}

SymmetryGroup so3_group() {
  return SymmetryGroup(3, {SymmetryGenerator{{true, false, true}, {1, -1, 1}}});
}

SymmetryGroup interval_group() {
  return SymmetryGroup(1, {SymmetryGenerator{{false}, {-1}}});
}

SymmetryGroup circle_group() { return SymmetryGroup(1, {}); }

// A four-generator group exercising mixed shift/sign patterns (the 4-ball).
SymmetryGroup ball4_group() {
  return SymmetryGroup(
      4, {SymmetryGenerator{{false, false, false, false}, {-1, 1, 1, 1}},
          SymmetryGenerator{{true, true, false, false}, {1, 1, 1, 1}},
          SymmetryGenerator{{false, false, true, false}, {1, -1, 1, 1}},
          SymmetryGenerator{{false, false, false, true}, {1, 1, -1, 1}}});
}

MultiIndex random_index(Rng& rng, int d, int bound) {
  MultiIndex n(static_cast<std::size_t>(d));
  for (auto& v : n) v = rng.uniform_int(-bound, bound);
  return n;
}

TEST(ApplyReflection, SpecValues) {
  const auto disk = disk_group();
  EXPECT_EQ(disk.reflect(std::vector<int>{0}, {1, 1}), (MultiIndex{-1, 1}));
  EXPECT_EQ(disk.reflect(std::vector<int>{}, {1, 1}), (MultiIndex{1, 1}));
  const auto so3 = so3_group();
  EXPECT_EQ(so3.reflect(std::vector<int>{0}, {1, 2, 3}), (MultiIndex{1, -2, 3}));
}

TEST(ApplyReflection, Errors) {
  const auto disk = disk_group();
  EXPECT_THROW(disk.reflect(std::vector<int>{0}, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(disk.reflect(std::vector<int>{2}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(disk.reflect(std::vector<int>{-1}, {1, 1}), std::invalid_argument);
}

TEST(ShiftParity, SpecValues) {
  EXPECT_EQ(so3_group().shift_parity(std::vector<int>{0}, {1, 2, 3}), 4);
  EXPECT_EQ(disk_group().shift_parity(std::vector<int>{1}, {1, 1}), 2);
  EXPECT_EQ(disk_group().shift_parity(std::vector<int>{}, {1, 1}), 0);
}

TEST(StabilizerCount, SpecValues) {
  EXPECT_EQ(stabilizer_count(circle_group(), {5}), 1);
  EXPECT_EQ(stabilizer_count(disk_group(), {1, 1}), 2);
  EXPECT_EQ(stabilizer_count(disk_group(), {0, 0}), 4);
}

TEST(RDiag, SpecValues) {
  EXPECT_EQ(r_diag(disk_group(), {0, 0}), 1);
  EXPECT_EQ(r_diag(disk_group(), {1, 0}), 0);
  EXPECT_EQ(r_diag(disk_group(), {1, 1}), 1);
}

TEST(RPair, SpecValues) {
  const auto disk = disk_group();
  EXPECT_EQ(r_pair(disk, {1, 1}, {1, 1}), r_diag(disk, {1, 1}));
  EXPECT_EQ(r_pair(disk, {2, 0}, {-2, 0}), 1);
  EXPECT_EQ(r_pair(so3_group(), {1, 2, 2}, {1, -2, 2}), -1);
  EXPECT_THROW(r_pair(disk, {1, 1}, {1, 2}), std::invalid_argument);
}

TEST(OrbitOp, SpecValues) {
  const auto disk = disk_group();
  const Orbit zero = orbit(disk, {0, 0});
  EXPECT_EQ(zero.members, (std::vector<MultiIndex>{{0, 0}}));
  EXPECT_EQ(zero.coefficients, (std::vector<int>{1}));

  const Orbit one = orbit(disk, {1, 1});
  EXPECT_EQ(one.members, (std::vector<MultiIndex>{{-1, 1}, {1, 1}}));
  EXPECT_EQ(one.coefficients, (std::vector<int>{1, 1}));

  const Orbit so3_orbit = orbit(so3_group(), {1, 2, 3});
  EXPECT_EQ(so3_orbit.members, (std::vector<MultiIndex>{{1, -2, 3}, {1, 2, 3}}));
  EXPECT_EQ(so3_orbit.coefficients, (std::vector<int>{1, 1}));
}

TEST(SymmetryLaws, ReflectionsAreInvolutions) {
  Rng rng(11);
  for (const auto& g : {disk_group(), so3_group(), ball4_group()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const MultiIndex n = random_index(rng, g.dim(), 8);
      for (int i = 0; i < g.size(); ++i) {
        const unsigned m = 1u << i;
        EXPECT_EQ(g.reflect(m, g.reflect(m, n)), n);
      }
    }
  }
}

TEST(SymmetryLaws, SymmetricDifference) {
  Rng rng(12);
  for (const auto& g : {disk_group(), so3_group(), ball4_group()}) {
    for (int trial = 0; trial < 300; ++trial) {
      const MultiIndex n = random_index(rng, g.dim(), 8);
      const unsigned i = static_cast<unsigned>(rng.raw()) % g.subset_count();
      const unsigned j = static_cast<unsigned>(rng.raw()) % g.subset_count();
      EXPECT_EQ(g.reflect(i, g.reflect(j, n)), g.reflect(i ^ j, n));
    }
  }
}

TEST(SymmetryLaws, ParityLaw) {
  Rng rng(13);
  for (const auto& g : {disk_group(), so3_group(), ball4_group()}) {
    for (int trial = 0; trial < 300; ++trial) {
      const MultiIndex n = random_index(rng, g.dim(), 8);
      const unsigned i = static_cast<unsigned>(rng.raw()) % g.subset_count();
      const unsigned j = static_cast<unsigned>(rng.raw()) % g.subset_count();
      const int lhs = ((g.shift_parity(i, n) + g.shift_parity(j, n)) % 2 + 2) % 2;
      const int rhs = ((g.shift_parity(i ^ j, n)) % 2 + 2) % 2;
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(SymmetryLaws, OrbitStabilizer) {
  for (const auto& g : {circle_group(), interval_group(), disk_group(),
                        so3_group(), ball4_group()}) {
    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
      const MultiIndex n = random_index(rng, g.dim(), 6);
      const auto orb = orbit(g, n);
      EXPECT_EQ(static_cast<unsigned>(stabilizer_count(g, n)) *
                    static_cast<unsigned>(orb.members.size()),
                g.subset_count());
    }
  }
}

// Independent oracle for r_{n,m}: the subset-averaging formula.
int r_pair_oracle(const SymmetryGroup& g, const MultiIndex& n, const MultiIndex& m) {
  int count = 0;
  long long sum = 0;
  for (unsigned mask = 0; mask < g.subset_count(); ++mask) {
    if (g.reflect(mask, n) != m) continue;
    ++count;
    sum += (g.shift_parity(mask, n) & 1) ? -1 : 1;
  }
  EXPECT_GT(count, 0);
  EXPECT_EQ(sum % count, 0);
  return static_cast<int>(sum / count);
}

TEST(SymmetryLaws, RPairMatchesAveragingOracle) {
  Rng rng(15);
  for (const auto& g : {disk_group(), so3_group(), ball4_group()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const MultiIndex n = random_index(rng, g.dim(), 6);
      for (const auto& m : orbit(g, n).members)
        EXPECT_EQ(r_pair(g, n, m), r_pair_oracle(g, n, m));
    }
  }
}

TEST(SymmetryLaws, RDiagConstantOnOrbits) {
  Rng rng(16);
  for (const auto& g : {disk_group(), so3_group(), ball4_group()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const MultiIndex n = random_index(rng, g.dim(), 6);
      const int rd = r_diag(g, n);
      for (const auto& m : orbit(g, n).members) EXPECT_EQ(r_diag(g, m), rd);
    }
  }
}

TEST(BuildGenericIndexSet, CircleAndInterval) {
  const IndexSet circle = build_generic_index_set(circle_group(), 3);
  EXPECT_EQ(circle.indices,
            (std::vector<MultiIndex>{{-3}, {-2}, {-1}, {0}, {1}, {2}, {3}}));

  const IndexSet interval = build_generic_index_set(interval_group(), 3);
  EXPECT_EQ(interval.indices, (std::vector<MultiIndex>{{0}, {1}, {2}, {3}}));
  EXPECT_TRUE(validate_index_set(interval_group(), interval, 3).valid());
}

TEST(BuildGenericIndexSet, DiskBoundTwo) {
  const auto g = disk_group();
  const IndexSet set = build_generic_index_set(g, 2);
  EXPECT_TRUE(validate_index_set(g, set, 2).valid());
  // Must cover exactly the orbits of the valid indices in the box.
  for (const MultiIndex& rep : {MultiIndex{0, 0}, MultiIndex{1, 1}, MultiIndex{1, -1},
                                MultiIndex{2, 0}, MultiIndex{0, 2}, MultiIndex{0, -2}}) {
    const auto key = orbit_key(g, rep);
    bool covered = false;
    for (const auto& n : set.indices)
      if (orbit_key(g, n) == key) covered = true;
    EXPECT_TRUE(covered);
  }
}

TEST(ValidateIndexSet, PaperDiskOmega) {
  const auto g = disk_group();
  IndexSet omega;
  omega.dim = 2;
  for (int a = 0; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      if ((a + b) % 2 == 0) omega.indices.push_back({a, b});
  EXPECT_TRUE(validate_index_set(g, omega, 4).valid());
}

TEST(ValidateIndexSet, DetectsCollisionsAndGaps) {
  const auto g = disk_group();
  IndexSet colliding;
  colliding.dim = 2;
  colliding.indices = {{1, 1}, {-1, 1}};
  const auto r1 = validate_index_set(g, colliding, 1);
  EXPECT_FALSE(r1.valid());
  EXPECT_EQ(r1.orbit_collisions.size(), 1u);

  IndexSet empty;
  empty.dim = 2;
  const auto r2 = validate_index_set(g, empty, 1);
  EXPECT_FALSE(r2.valid());
  bool zero_uncovered = false;
  for (const auto& n : r2.uncovered)
    if (n == MultiIndex{0, 0}) zero_uncovered = true;
  EXPECT_TRUE(zero_uncovered);

  IndexSet degenerate;
  degenerate.dim = 2;
  degenerate.indices = {{1, 0}};
  EXPECT_FALSE(validate_index_set(g, degenerate, 0).degenerate.empty());
}

TEST(Norms, OneAndSup) {
  EXPECT_EQ(one_norm({1, -2, 3}), 6);
  EXPECT_EQ(sup_norm({1, -2, 3}), 3);
  EXPECT_EQ(one_norm({}), 0);
}

}  // namespace
}  // namespace dfs
