// SPDX-License-Identifier: MIT
#ifndef DFS_BATTERY_HPP
#define DFS_BATTERY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dfs/manifold.hpp"
#include "dfs/random.hpp"

namespace dfs {

struct PropertyResult {
  std::string property;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

struct BatteryOptions {
  std::uint64_t seed = kDefaultSeed;
  int symmetry_samples = 1000;
  int cover_samples = 500;
  int smoothness_samples = 10000;
  int smoothness_order = 3;
  int roundtrip_samples = 1000;
  int jacobian_samples = 200;
  int omega_box = 8;
  /// Orthogonality sweep |n| <= degree on an N^d grid; skipped for d > 3.
  int orthogonality_degree = 6;
  int orthogonality_grid = 64;
  bool run_orthogonality = true;
  bool run_reconstruction = true;
};

/// Runs the per-manifold verification battery: symmetry invariance, even
/// covering, smoothness bound, round trips, Jacobian rank and weight match,
/// BMC and coefficient-symmetry residuals, Omega validation, orthogonality,
/// and a reconstruction spot check.
std::vector<PropertyResult> run_battery(const TransformPtr& t,
                                        const BatteryOptions& opts = {});

bool all_pass(const std::vector<PropertyResult>& results);

}  // namespace dfs

#endif  // DFS_BATTERY_HPP
