// SPDX-License-Identifier: MIT
#include "dfs/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dfs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNoiseFloor = 1e-13;

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double theoretical_rate(int d, int k, double alpha) {
  if (k < 0 || alpha <= 0.0 || alpha > 1.0)
    throw std::invalid_argument("theoretical_rate: need k >= 0 and 0 < alpha <= 1");
  if (2.0 * (k + alpha) <= d)
    throw std::invalid_argument("theoretical_rate: hypothesis 2(k+alpha) > d fails");
  return 0.5 * d - k - alpha;
}

double error_constant(int d, int dprime, int k, double alpha, SumShape shape) {
  if (d < 1 || dprime < 1 || k < 0 || alpha <= 0.0 || alpha > 1.0)
    throw std::invalid_argument("error_constant: parameter out of domain");
  if (2.0 * (k + alpha) <= d)
    throw std::invalid_argument("error_constant: hypothesis 2(k+alpha) > d fails");
  const double denom = 1.0 - std::pow(2.0, 0.5 * d - k - alpha);
  if (k + dprime == 1) {
    // d = d' = 1, k = 0; the Remark's improvement is the identity for d = 1.
    return std::pow(2.0, 0.5 + std::floor(alpha)) * std::pow(kPi, alpha) / denom;
  }
  const double dim_factor =
      shape == SumShape::kCircular ? std::pow(static_cast<double>(d), k + 2)
                                   : static_cast<double>(d);
  return std::pow(2.0, 0.5 * d + k + 1 - std::floor(alpha)) * dim_factor *
         std::pow(kPi, alpha) * factorial(k + dprime) /
         (denom * factorial(dprime - 1));
}

RateFit fit_loglog(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_loglog: need at least 3 points");
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double det = n * sxx - sx * sx;
  if (std::fabs(det) < 1e-30)
    throw std::invalid_argument("fit_loglog: degenerate abscissae");
  RateFit fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.slope * x + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  return fit;
}

RateFit fit_rate(const ConvergenceRecord& record) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : record.rows)
    if (row.sup_error > kNoiseFloor)
      pts.emplace_back(std::log(static_cast<double>(row.h)), std::log(row.sup_error));
  if (pts.size() < 3)
    throw std::invalid_argument("fit_rate: fewer than 3 rows above the noise floor");
  return fit_loglog(pts);
}

std::vector<AmbientPoint> evaluation_points(const DfsTransform& t,
                                            const EvalPointOptions& opts) {
  std::vector<AmbientPoint> pts;
  Rng rng(opts.seed);
  for (int i = 0; i < opts.random_count; ++i)
    pts.push_back(t.phi(random_d1_point(t.domain(), rng)));
  if (opts.include_d2)
    for (const auto& rep : t.domain().d2_representatives()) pts.push_back(t.phi(rep));
  if (opts.fine_scan && t.dim() <= 2) {
    const int m = opts.scan_per_dim;
    std::vector<double> x(static_cast<std::size_t>(t.dim()));
    std::vector<int> k(static_cast<std::size_t>(t.dim()), 0);
    for (;;) {
      for (int j = 0; j < t.dim(); ++j) {
        const auto& iv = t.domain().d1[static_cast<std::size_t>(j)];
        const double lo = iv.full ? -kPi : iv.lo;
        const double hi = iv.full ? kPi : iv.hi;
        x[static_cast<std::size_t>(j)] =
            lo + (hi - lo) * (k[static_cast<std::size_t>(j)] + 0.5) / m;
      }
      pts.push_back(t.phi(TorusPoint(x)));
      int j = t.dim() - 1;
      while (j >= 0 && ++k[static_cast<std::size_t>(j)] == m) {
        k[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
    }
  }
  return pts;
}

ConvergenceRecord convergence_study(const DfsTransform& t,
                                    const ManifoldFunction& f,
                                    const std::vector<int>& degrees,
                                    const StudyOptions& opts) {
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] <= degrees[i - 1])
      throw std::invalid_argument("convergence_study: degrees must increase");

  ConvergenceRecord record;
  record.manifold = t.name();
  record.cls = opts.cls;
  record.norm_upper_bound = opts.norm_upper_bound;

  const std::vector<AmbientPoint> pts = evaluation_points(t, opts.eval);
  std::vector<std::complex<double>> f_vals(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) f_vals[i] = f(pts[i]);

  std::optional<double> constant;
  double rate_exp = 0;
  if (opts.cls && opts.norm_upper_bound &&
      2.0 * (opts.cls->k + opts.cls->alpha) > t.dim()) {
    constant = error_constant(t.dim(), t.ambient_dim(), opts.cls->k,
                              opts.cls->alpha, opts.shape) *
               *opts.norm_upper_bound;
    rate_exp = theoretical_rate(t.dim(), opts.cls->k, opts.cls->alpha);
  }

  record.rows.resize(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t di) {
    const int h = degrees[di];
    const GridSpec grid = GridSpec::for_degree(t.dim(), h);
    const SampleTensor samples = sample_dfs(t, f, grid);
    const CoefficientTable table = coefficients(samples);
    const IndexSet omega = opts.shape == SumShape::kCircular
                               ? circular_index_set(t, h)
                               : rectangular_index_set(t, h);
    const DfsPartialSum sum(t, table, omega);
    double worst = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      worst = std::max(worst, std::abs(sum(pts[i]) - f_vals[i]));
    ConvergencePoint row;
    row.h = h;
    row.sup_error = worst;
    if (constant) row.bound = *constant * std::pow(static_cast<double>(h), rate_exp);
    record.rows[di] = row;
  });
  return record;
}

std::vector<std::pair<int, double>> dyadic_block_sums(const CoefficientTable& c,
                                                      BlockNorm norm) {
  int min_window = c.window()[0];
  for (int w : c.window()) min_window = std::min(min_window, w);
  // Shell [2^l, 2^{l+1}) is complete when 2^{l+1}-1 indices fit per coordinate.
  int max_l = -1;
  while ((2 << (max_l + 1)) - 1 <= min_window) ++max_l;
  if (max_l < 0) return {};
  std::vector<std::pair<int, double>> blocks;
  for (int l = 0; l <= max_l; ++l) blocks.emplace_back(l, 0.0);
  c.for_each([&](const MultiIndex& n, std::complex<double> cn) {
    const int size = norm == BlockNorm::kOneNorm ? one_norm(n) : sup_norm(n);
    if (size < 1) return;
    int l = 0;
    while ((2 << l) <= size) ++l;
    if (l <= max_l) blocks[static_cast<std::size_t>(l)].second += std::abs(cn);
  });
  return blocks;
}

double dyadic_log2_slope(const std::vector<std::pair<int, double>>& blocks) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [l, sum] : blocks)
    if (sum > kNoiseFloor) pts.emplace_back(l, std::log2(sum));
  if (pts.size() < 3)
    throw std::invalid_argument("dyadic_log2_slope: fewer than 3 usable blocks");
  return fit_loglog(pts).slope;
}

namespace {

// Iterated central difference of one component of phi along a multi-index.
double central_difference(const DfsTransform& t, int component,
                          std::vector<double>& x, const std::vector<int>& mu,
                          int axis_from, double step, std::vector<double>& buf) {
  int axis = -1;
  for (int j = axis_from; j < static_cast<int>(mu.size()); ++j)
    if (mu[static_cast<std::size_t>(j)] > 0) {
      axis = j;
      break;
    }
  if (axis < 0) {
    t.phi_raw(x.data(), buf.data());
    return buf[static_cast<std::size_t>(component)];
  }
  std::vector<int> rest = mu;
  --rest[static_cast<std::size_t>(axis)];
  const int next_axis = rest[static_cast<std::size_t>(axis)] > 0 ? axis : axis + 1;
  x[static_cast<std::size_t>(axis)] += step;
  const double fp = central_difference(t, component, x, rest, next_axis, step, buf);
  x[static_cast<std::size_t>(axis)] -= 2 * step;
  const double fm = central_difference(t, component, x, rest, next_axis, step, buf);
  x[static_cast<std::size_t>(axis)] += step;
  return (fp - fm) / (2 * step);
}

double derivative_estimate(const DfsTransform& t, int component,
                           const TorusPoint& p, const std::vector<int>& mu,
                           int order, double step, std::vector<double>& buf) {
  std::vector<double> x = p.coords();
  if (order == 0) {
    t.phi_raw(x.data(), buf.data());
    return buf[static_cast<std::size_t>(component)];
  }
  if (order == 1) {
    return central_difference(t, component, x, mu, 0, 1e-5, buf);
  }
  const double coarse = central_difference(t, component, x, mu, 0, step, buf);
  const double fine = central_difference(t, component, x, mu, 0, step / 2, buf);
  return (4.0 * fine - coarse) / 3.0;  // one Richardson refinement
}

void for_each_multi_order(int d, int max_order,
                          const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> mu(static_cast<std::size_t>(d), 0);
  const std::function<void(int, int)> rec = [&](int j, int remaining) {
    if (j == d - 1) {
      mu[static_cast<std::size_t>(j)] = remaining;
      int order = 0;
      for (int v : mu) order += v;
      fn(mu, order);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      mu[static_cast<std::size_t>(j)] = v;
      rec(j + 1, remaining - v);
    }
  };
  for (int order = 0; order <= max_order; ++order) rec(0, order);
}

}  // namespace

double smoothness_probe(const DfsTransform& t, int max_order, int samples,
                        double step, std::uint64_t seed) {
  if (max_order < 0 || max_order > 4)
    throw std::invalid_argument("smoothness_probe: max_order must be in [0,4]");
  std::vector<std::vector<int>> mus;
  std::vector<int> orders;
  for_each_multi_order(t.dim(), max_order, [&](const std::vector<int>& mu, int order) {
    mus.push_back(mu);
    orders.push_back(order);
  });

  std::vector<double> per_sample(static_cast<std::size_t>(samples), 0.0);
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t s) {
    Rng rng(seed + 0x9E3779B97F4A7C15ull * (s + 1));
    const TorusPoint p = random_torus_point(rng, t.dim());
    std::vector<double> buf(static_cast<std::size_t>(t.ambient_dim()));
    double worst = 0;
    for (std::size_t i = 0; i < mus.size(); ++i) {
      for (int l = 0; l < t.ambient_dim(); ++l) {
        const double est =
            derivative_estimate(t, l, p, mus[i], orders[i], step, buf);
        worst = std::max(worst, std::fabs(est));
      }
    }
    per_sample[s] = worst;
  });
  double worst = 0;
  for (double v : per_sample) worst = std::max(worst, v);
  return worst;
}

double symmetry_probe(const DfsTransform& t, int samples, std::uint64_t seed) {
  Rng rng(seed);
  const unsigned count = t.group().subset_count();
  double worst = 0;
  AmbientPoint base(static_cast<std::size_t>(t.ambient_dim()));
  AmbientPoint mapped(static_cast<std::size_t>(t.ambient_dim()));
  for (int s = 0; s < samples; ++s) {
    const TorusPoint x = random_torus_point(rng, t.dim());
    t.phi_raw(x.coords().data(), base.data());
    for (unsigned mask = 1; mask < count; ++mask) {
      const auto y = t.group().apply(mask, x.coords());
      t.phi_raw(y.data(), mapped.data());
      double diff = 0;
      for (std::size_t j = 0; j < base.size(); ++j)
        diff += (mapped[j] - base[j]) * (mapped[j] - base[j]);
      worst = std::max(worst, std::sqrt(diff));
    }
  }
  return worst;
}

EvenCoverReport even_cover_probe(const DfsTransform& t, int samples,
                                 std::uint64_t seed) {
  EvenCoverReport report;
  Rng rng(seed);
  const unsigned count = t.group().subset_count();
  for (int s = 0; s < samples; ++s) {
    TorusPoint x = random_d1_point(t.domain(), rng);
    if (!t.domain().in_d1_interior(x)) continue;
    ++report.checked;
    std::vector<TorusPoint> images;
    images.reserve(count);
    for (unsigned mask = 0; mask < count; ++mask)
      images.push_back(t.symmetry_image(mask, x));
    bool ok = true;
    for (unsigned a = 0; a < count && ok; ++a)
      for (unsigned b = a + 1; b < count && ok; ++b)
        if (torus_distance(images[a], images[b]) <= 1e-9) ok = false;
    for (unsigned mask = 1; mask < count && ok; ++mask)
      if (t.domain().in_d1_interior(images[mask])) ok = false;
    if (!ok) {
      ++report.failures;
      if (report.detail.empty()) {
        std::ostringstream os;
        os << "even-cover violation at sample " << s;
        report.detail = os.str();
      }
    }
  }
  report.pass = report.failures == 0 && report.checked > 0;
  return report;
}

std::vector<double> numeric_jacobian(const DfsTransform& t, const TorusPoint& x,
                                     double step) {
  if (x.dim() != t.dim())
    throw std::invalid_argument("numeric_jacobian: dimension mismatch");
  if (!t.domain().in_d1_interior(x) || t.domain().d1_margin(x) <= step)
    throw std::domain_error("numeric_jacobian: point too close to the boundary of D1");
  const int d = t.dim(), dp = t.ambient_dim();
  std::vector<double> jac(static_cast<std::size_t>(d * dp));
  std::vector<double> xp = x.coords();
  std::vector<double> fp(static_cast<std::size_t>(dp)), fm(static_cast<std::size_t>(dp));
  for (int j = 0; j < d; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    xp[ju] += step;
    t.phi_raw(xp.data(), fp.data());
    xp[ju] -= 2 * step;
    t.phi_raw(xp.data(), fm.data());
    xp[ju] += step;
    for (int l = 0; l < dp; ++l)
      jac[static_cast<std::size_t>(l * d + j)] =
          (fp[static_cast<std::size_t>(l)] - fm[static_cast<std::size_t>(l)]) / (2 * step);
  }
  return jac;
}

namespace {

Eigen::MatrixXd to_matrix(const std::vector<double>& jac, int dprime, int d) {
  Eigen::MatrixXd m(dprime, d);
  for (int r = 0; r < dprime; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = jac[static_cast<std::size_t>(r * d + c)];
  return m;
}

}  // namespace

double gram_weight(const std::vector<double>& jac, int dprime, int d) {
  const Eigen::MatrixXd m = to_matrix(jac, dprime, d);
  return std::sqrt(std::fabs((m.transpose() * m).determinant()));
}

double min_singular_value(const std::vector<double>& jac, int dprime, int d) {
  const Eigen::MatrixXd m = to_matrix(jac, dprime, d);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().minCoeff();
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  std::vector<double> nodes(static_cast<std::size_t>(n)), weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return {nodes, weights};
}

std::complex<double> weighted_inner_product_direct(const DfsTransform& t,
                                                   const ManifoldFunction& f1,
                                                   const ManifoldFunction& f2,
                                                   int nodes_per_dim) {
  const int d = t.dim();
  const auto [gl_nodes, gl_weights] = gauss_legendre(nodes_per_dim);

  std::vector<std::vector<double>> nodes(static_cast<std::size_t>(d));
  std::vector<std::vector<double>> weights(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const auto& iv = t.domain().d1[static_cast<std::size_t>(j)];
    auto& ns = nodes[static_cast<std::size_t>(j)];
    auto& ws = weights[static_cast<std::size_t>(j)];
    if (iv.full) {
      for (int k = 0; k < nodes_per_dim; ++k) {
        ns.push_back(-kPi + kTwoPi * (k + 0.5) / nodes_per_dim);
        ws.push_back(kTwoPi / nodes_per_dim);
      }
    } else {
      const double mid = 0.5 * (iv.lo + iv.hi), half = 0.5 * (iv.hi - iv.lo);
      for (int k = 0; k < nodes_per_dim; ++k) {
        ns.push_back(mid + half * gl_nodes[static_cast<std::size_t>(k)]);
        ws.push_back(half * gl_weights[static_cast<std::size_t>(k)]);
      }
    }
  }

  const double prefactor =
      std::pow(2.0, t.group().size() - d) * std::pow(kPi, -d);
  std::complex<double> sum = 0;
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (;;) {
    double w = 1;
    for (int j = 0; j < d; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      x[ju] = nodes[ju][static_cast<std::size_t>(k[ju])];
      w *= weights[ju][static_cast<std::size_t>(k[ju])];
    }
    const TorusPoint p(x);
    const AmbientPoint xi = t.phi(p);
    const double g_closed = t.jacobian_weight(t.inverse(xi));
    const double g_num = gram_weight(numeric_jacobian(t, p), t.ambient_dim(), d);
    sum += f1(xi) * std::conj(f2(xi)) * (prefactor / g_closed * g_num * w);
    int j = d - 1;
    while (j >= 0 &&
           ++k[static_cast<std::size_t>(j)] == static_cast<int>(nodes[static_cast<std::size_t>(j)].size())) {
      k[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return sum;
}

}  // namespace dfs
