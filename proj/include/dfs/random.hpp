// SPDX-License-Identifier: MIT
#ifndef DFS_RANDOM_HPP
#define DFS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "dfs/domain.hpp"
#include "dfs/torus.hpp"

namespace dfs {

/// Deterministic uniform generator.  Doubles are derived from raw 64-bit
/// draws so sequences are identical across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  int uniform_int(int a, int b) {  // inclusive bounds
    return a + static_cast<int>(eng_() % static_cast<std::uint64_t>(b - a + 1));
  }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline TorusPoint random_torus_point(Rng& rng, int d) {
  std::vector<double> x(static_cast<std::size_t>(d));
  for (auto& v : x) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return TorusPoint(std::move(x));
}

/// Uniform sample from D_1 (interior almost surely).
inline TorusPoint random_d1_point(const DomainSpec& dom, Rng& rng) {
  std::vector<double> x(static_cast<std::size_t>(dom.dim()));
  for (int j = 0; j < dom.dim(); ++j) {
    const auto& iv = dom.d1[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(j)] =
        iv.full ? rng.uniform(-std::numbers::pi, std::numbers::pi)
                : rng.uniform(iv.lo, iv.hi);
  }
  return TorusPoint(std::move(x));
}

constexpr std::uint64_t kDefaultSeed = 0x5EED;

}  // namespace dfs

#endif  // DFS_RANDOM_HPP
