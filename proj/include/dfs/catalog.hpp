// SPDX-License-Identifier: MIT
#ifndef DFS_CATALOG_HPP
#define DFS_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfs/analysis.hpp"
#include "dfs/grid.hpp"
#include "dfs/manifold.hpp"

namespace dfs {

/// A bundled test function with its approximation metadata.
struct TestFunction {
  std::string id;
  ManifoldFunction fn;
  std::optional<SmoothnessClass> cls;
  std::optional<double> norm_upper_bound;
  /// Per-coordinate trigonometric degree of the transformed function, when
  /// it is a trigonometric polynomial.
  std::optional<int> bandlimit;
  std::string description;
};

/// Function ids:
///   one        - constant 1
///   coord1     - first ambient coordinate (bandlimited, degree 1)
///   exp1       - exp(xi_1), smooth and non-bandlimited
///   abs1       - |xi_1|, Hölder class (0,1)
///   coordabs1  - xi_1 |xi_1|, Hölder class (1,1)
///   basis:i,j,... - the basis function b_n for the given index
/// Throws std::invalid_argument for unknown ids.
TestFunction catalog_function(const TransformPtr& t, const std::string& id);

const std::vector<std::string>& catalog_ids();

}  // namespace dfs

#endif  // DFS_CATALOG_HPP
