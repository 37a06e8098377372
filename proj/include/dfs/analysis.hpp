// SPDX-License-Identifier: MIT
#ifndef DFS_ANALYSIS_HPP
#define DFS_ANALYSIS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfs/fourier.hpp"
#include "dfs/grid.hpp"
#include "dfs/manifold.hpp"
#include "dfs/random.hpp"

namespace dfs {

/// Hölder class C^{k,alpha}; alpha = 1 means k+1 bounded derivatives.
struct SmoothnessClass {
  int k = 0;
  double alpha = 1.0;
};

struct ConvergencePoint {
  int h = 0;
  double sup_error = 0;
  std::optional<double> bound;
};

struct ConvergenceRecord {
  std::vector<ConvergencePoint> rows;
  std::string manifold;
  std::string function_label;
  std::optional<SmoothnessClass> cls;
  std::optional<double> norm_upper_bound;
};

/// Least-squares fit of log(error) against log(h).
struct RateFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

enum class SumShape { kCircular, kRectangular };

/// d/2 - k - alpha; requires 2(k + alpha) > d.
double theoretical_rate(int d, int k, double alpha);

/// The closed-form constant in the sup-error bound
/// ||f - K_h f|| <= M * ||f||_{C^{k,alpha}} * h^{d/2-k-alpha}.
double error_constant(int d, int dprime, int k, double alpha, SumShape shape);

/// Fits rows with sup_error > 1e-13; throws std::invalid_argument with
/// fewer than 3 usable rows.
RateFit fit_rate(const ConvergenceRecord& record);
RateFit fit_loglog(const std::vector<std::pair<double, double>>& points);

struct EvalPointOptions {
  int random_count = 2000;
  bool include_d2 = true;
  /// Adds a uniform fundamental-domain scan for dimensions <= 2.
  bool fine_scan = true;
  int scan_per_dim = 96;
  std::uint64_t seed = kDefaultSeed;
};

/// Sup-error sample: random D_1 points pushed through phi, the D_2
/// representatives, and (for d <= 2) a fine scan of D_1.
std::vector<AmbientPoint> evaluation_points(const DfsTransform& t,
                                            const EvalPointOptions& opts);

struct StudyOptions {
  EvalPointOptions eval;
  SumShape shape = SumShape::kCircular;
  std::optional<SmoothnessClass> cls;
  std::optional<double> norm_upper_bound;
};

/// For each degree h: sample f on the default grid for h, take coefficients,
/// and record the sup over the evaluation points of |f - S_{Omega_h} f|.
/// The bound column is filled when a smoothness class and norm bound are set.
ConvergenceRecord convergence_study(const DfsTransform& t,
                                    const ManifoldFunction& f,
                                    const std::vector<int>& degrees,
                                    const StudyOptions& opts = {});

enum class BlockNorm { kOneNorm, kSupNorm };

/// Sums of |c_n| over dyadic shells 2^l <= |n| < 2^{l+1}, for every shell
/// fully contained in the coefficient window.
std::vector<std::pair<int, double>> dyadic_block_sums(const CoefficientTable& c,
                                                      BlockNorm norm);

/// Least-squares slope of log2(block sum) against l over blocks above the
/// noise floor; throws with fewer than 3 usable blocks.
double dyadic_log2_slope(const std::vector<std::pair<int, double>>& blocks);

/// Max over components, multi-indices |mu| <= max_order, and random samples
/// of central finite-difference estimates of |D^mu phi_l|.  First-order
/// estimates use the small step directly; orders 2..4 use `step` with one
/// Richardson refinement.
double smoothness_probe(const DfsTransform& t, int max_order, int samples,
                        double step = 1e-2, std::uint64_t seed = kDefaultSeed);

/// Max over random x and all subsets I of ||phi(s^I(x)) - phi(x)||.
double symmetry_probe(const DfsTransform& t, int samples,
                      std::uint64_t seed = kDefaultSeed);

struct EvenCoverReport {
  bool pass = true;
  int checked = 0;
  int failures = 0;
  std::string detail;
};

/// Samples x in the interior of D_1 and checks that the images s^I(x) are
/// pairwise distinct and leave the interior for I != {}.
EvenCoverReport even_cover_probe(const DfsTransform& t, int samples,
                                 std::uint64_t seed = kDefaultSeed);

/// Central finite-difference Jacobian, row-major d' x d.  Requires x in the
/// interior of D_1 at margin > step; throws std::domain_error otherwise.
std::vector<double> numeric_jacobian(const DfsTransform& t, const TorusPoint& x,
                                     double step = 1e-5);

/// |det(J^T J)|^{1/2} for a row-major d' x d matrix.
double gram_weight(const std::vector<double>& jac, int dprime, int d);
double min_singular_value(const std::vector<double>& jac, int dprime, int d);

/// Cross-validation route for the weighted inner product: quadrature over
/// D_1 with the weight 2^{p-d} pi^{-d} / g evaluated through inverse() and
/// the surface element from the numeric Jacobian.  Gauss-Legendre nodes on
/// bounded coordinates, equispaced nodes on full-circle coordinates.
std::complex<double> weighted_inner_product_direct(const DfsTransform& t,
                                                   const ManifoldFunction& f1,
                                                   const ManifoldFunction& f2,
                                                   int nodes_per_dim = 64);

/// Nodes and weights of the n-point Gauss-Legendre rule on (-1, 1).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace dfs

#endif  // DFS_ANALYSIS_HPP
