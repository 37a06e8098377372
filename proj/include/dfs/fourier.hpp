// SPDX-License-Identifier: MIT
#ifndef DFS_FOURIER_HPP
#define DFS_FOURIER_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "dfs/grid.hpp"
#include "dfs/manifold.hpp"
#include "dfs/symmetry.hpp"

namespace dfs {

/// Fourier coefficients c_n on the degree window |n_j| <= (N_j-1)/2 of a
/// grid.  Dense storage in a window box; out-of-window queries throw.
class CoefficientTable {
 public:
  CoefficientTable() = default;
  explicit CoefficientTable(std::vector<int> grid_sizes);

  int dim() const { return static_cast<int>(grid_sizes_.size()); }
  const std::vector<int>& grid_sizes() const { return grid_sizes_; }
  /// Per-coordinate window radius w_j; stored indices satisfy |n_j| <= w_j.
  const std::vector<int>& window() const { return window_; }

  bool in_window(const MultiIndex& n) const;
  std::complex<double> at(const MultiIndex& n) const;
  void set(const MultiIndex& n, std::complex<double> v);

  std::size_t window_size() const { return data_.size(); }
  /// All window indices in lexicographic order.
  std::vector<MultiIndex> window_indices() const;
  /// Calls fn(n, c_n) over the window in lexicographic order.
  void for_each(const std::function<void(const MultiIndex&, std::complex<double>)>& fn) const;

 private:
  std::size_t offset(const MultiIndex& n) const;

  std::vector<int> grid_sizes_;
  std::vector<int> window_;
  std::vector<std::complex<double>> data_;
};

/// c_n = (prod N_j)^{-1} sum_k values[k] exp(-i<n, x_k>) via FFT, restricted
/// to the degree window.  Exact for trigonometric polynomials inside the
/// window; aliasing outside it is the caller's responsibility.
CoefficientTable coefficients(const SampleTensor& samples);

/// e_n(x) = sum over the orbit of n of r_{n,m} exp(i<m,x>).
std::complex<double> e_n_eval(const SymmetryGroup& g, const MultiIndex& n,
                              const TorusPoint& x);
std::complex<double> e_n_eval(const Orbit& orbit, const TorusPoint& x);

/// b_n(xi) = e_n(inverse(xi)); n must lie in Omega and xi on the manifold.
std::complex<double> b_n_eval(const DfsTransform& t, const MultiIndex& n,
                              const AmbientPoint& xi);

/// F_Omega at a point: sum over the set of c_n exp(i<n,x>).
std::complex<double> partial_sum_torus(const CoefficientTable& c,
                                       const IndexSet& set, const TorusPoint& x);

/// Partial DFS Fourier sum S_Omega f = sum c_n b_n, prepared once for
/// repeated evaluation.  The index set must lie inside Omega_phi and the
/// coefficient window.
class DfsPartialSum {
 public:
  DfsPartialSum(const DfsTransform& t, const CoefficientTable& c,
                const IndexSet& omega);

  std::complex<double> operator()(const AmbientPoint& xi) const;
  /// Evaluates through a known torus preimage (the F_{M(Omega)} route).
  std::complex<double> at_torus(const TorusPoint& y) const;

 private:
  const DfsTransform& t_;
  std::vector<MultiIndex> modes_;              // orbit members, flattened
  std::vector<std::complex<double>> weights_;  // c_n * r_{n,m}
};

std::complex<double> dfs_partial_sum(const DfsTransform& t,
                                     const CoefficientTable& c,
                                     const IndexSet& omega,
                                     const AmbientPoint& xi);

/// Omega_phi filtered by the 1-norm (|n| <= h) or sup-norm (||n||_inf < h).
IndexSet circular_index_set(const DfsTransform& t, int h);
IndexSet rectangular_index_set(const DfsTransform& t, int h);

/// <f1, f2> in the weighted space, evaluated on the torus side as the grid
/// mean of f1~ conj(f2~) (the transform is an isometry).
std::complex<double> weighted_inner_product(const DfsTransform& t,
                                            const ManifoldFunction& f1,
                                            const ManifoldFunction& f2,
                                            const GridSpec& grid);

/// Max over generators and nodes / samples of |g(s^i(x)) - g(x)|.
/// Tensor input requires even grid sizes (the node set must be closed under
/// the symmetry functions).
double bmc_residual(const SymmetryGroup& g, const SampleTensor& samples);
double bmc_residual(const SymmetryGroup& g, const TorusFunction& fn,
                    int samples, std::uint64_t seed);

/// Max over stored n and subsets I of |c_n - (-1)^{N^I(n)} c_{M^I(n)}|.
double coefficient_symmetry_residual(const SymmetryGroup& g,
                                     const CoefficientTable& c);

}  // namespace dfs

#endif  // DFS_FOURIER_HPP
