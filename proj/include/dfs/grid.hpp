// SPDX-License-Identifier: MIT
#ifndef DFS_GRID_HPP
#define DFS_GRID_HPP

#include <complex>
#include <functional>
#include <vector>

#include "dfs/manifold.hpp"
#include "dfs/torus.hpp"

namespace dfs {

/// Equispaced periodic product grid with cell-centered nodes
/// x_k = -pi + 2*pi*(k + 1/2)/N_j, k = 0..N_j-1.  Cell-centered nodes never
/// meet the coordinate values {0, +-pi/2, pi} on which the registered
/// transforms fold, so pointwise sampling of functions that are non-smooth on
/// the singular sets stays consistent with their Fourier data.
struct GridSpec {
  std::vector<int> sizes;

  int dim() const { return static_cast<int>(sizes.size()); }
  std::size_t total() const {
    std::size_t t = 1;
    for (int n : sizes) t *= static_cast<std::size_t>(n);
    return t;
  }
  double node(int j, int k) const {
    const int n = sizes[static_cast<std::size_t>(j)];
    return -std::numbers::pi + kTwoPi * (k + 0.5) / n;
  }
  /// First node per coordinate (the phase origin of the DFT).
  double origin(int j) const { return node(j, 0); }

  static GridSpec uniform(int d, int n);
  /// Default sizing rule for a target degree h: N = 2*(h+1)+2 per coordinate.
  static GridSpec for_degree(int d, int h);

  void validate() const;  // all sizes >= 2
};

/// Samples of a torus function on a grid, row-major with the last coordinate
/// fastest.
struct SampleTensor {
  GridSpec grid;
  std::vector<std::complex<double>> values;

  std::complex<double>& at(const std::vector<int>& k);
  std::size_t flat_index(const std::vector<int>& k) const;
};

using ManifoldFunction = std::function<std::complex<double>(const AmbientPoint&)>;
using TorusFunction = std::function<std::complex<double>(const TorusPoint&)>;

/// values[k] = f(phi(x_k)).  Evaluation failures propagate with the grid
/// point appended to the message.
SampleTensor sample_dfs(const DfsTransform& t, const ManifoldFunction& f,
                        const GridSpec& grid);

SampleTensor sample_torus(const TorusFunction& g, const GridSpec& grid);

/// Runs fn(i) for i in [0, count) over min(DFS_NUM_THREADS, hardware) threads
/// with a static partition; results must be written to disjoint slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace dfs

#endif  // DFS_GRID_HPP
