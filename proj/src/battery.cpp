// SPDX-License-Identifier: MIT
#include "dfs/battery.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <sstream>

#include "dfs/analysis.hpp"
#include "dfs/catalog.hpp"
#include "dfs/fourier.hpp"
#include "dfs/grid.hpp"
#include "dfs/symmetry.hpp"

namespace dfs {

namespace {

PropertyResult upper_bound_check(const std::string& name, double residual,
                                 double tolerance) {
  return PropertyResult{name, residual, tolerance, residual <= tolerance, ""};
}

TorusPoint interior_point_with_margin(const DfsTransform& t, Rng& rng,
                                      double margin) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    TorusPoint x = random_d1_point(t.domain(), rng);
    if (t.domain().in_d1_interior(x) && t.domain().d1_margin(x) > margin)
      return x;
  }
  throw std::runtime_error("battery: could not sample an interior point");
}

PropertyResult roundtrip_check(const DfsTransform& t, const BatteryOptions& opts) {
  Rng rng(opts.seed + 1);
  double worst = 0;
  for (int s = 0; s < opts.roundtrip_samples; ++s) {
    const TorusPoint x = random_d1_point(t.domain(), rng);
    const AmbientPoint xi = t.phi(x);
    const TorusPoint y = t.inverse(xi);
    worst = std::max(worst, torus_distance(x, y));
    const AmbientPoint xi2 = t.phi(y);
    double diff = 0;
    for (std::size_t j = 0; j < xi.size(); ++j)
      diff = std::max(diff, std::fabs(xi2[j] - xi[j]));
    worst = std::max(worst, diff);
  }
  return upper_bound_check("roundtrip_inverse", worst, 1e-10);
}

PropertyResult rank_check(const DfsTransform& t, const BatteryOptions& opts) {
  Rng rng(opts.seed + 2);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < opts.jacobian_samples; ++s) {
    const TorusPoint x = interior_point_with_margin(t, rng, 1e-3);
    const auto jac = numeric_jacobian(t, x);
    worst = std::min(worst, min_singular_value(jac, t.ambient_dim(), t.dim()));
  }
  PropertyResult r{"jacobian_full_rank", worst, 1e-8, worst > 1e-8,
                   "min singular value over samples"};
  return r;
}

PropertyResult weight_check(const DfsTransform& t, const BatteryOptions& opts) {
  Rng rng(opts.seed + 3);
  double worst = 0;
  for (int s = 0; s < opts.jacobian_samples; ++s) {
    const TorusPoint x = interior_point_with_margin(t, rng, 1e-3);
    const auto jac = numeric_jacobian(t, x);
    const double g_num = gram_weight(jac, t.ambient_dim(), t.dim());
    worst = std::max(worst, std::fabs(g_num - t.jacobian_weight(x)));
  }
  return upper_bound_check("weight_matches_gram", worst, 1e-6);
}

std::pair<PropertyResult, PropertyResult> residual_checks(const TransformPtr& t) {
  const TestFunction f = catalog_function(t, "exp1");
  const SampleTensor samples = sample_dfs(*t, f.fn, GridSpec::uniform(t->dim(), 32));
  const double bmc = bmc_residual(t->group(), samples);
  const double coeff = coefficient_symmetry_residual(t->group(), coefficients(samples));
  return {upper_bound_check("bmc_residual", bmc, 1e-12),
          upper_bound_check("coefficient_symmetry", coeff, 1e-10)};
}

IndexSet enumerate_omega_box(const DfsTransform& t, int bound) {
  IndexSet set;
  set.dim = t.dim();
  set.shape = IndexSet::Shape::kExplicit;
  set.degree = bound;
  MultiIndex n(static_cast<std::size_t>(t.dim()), -bound);
  for (;;) {
    if (t.omega_contains(n)) set.indices.push_back(n);
    int j = t.dim() - 1;
    while (j >= 0 && n[static_cast<std::size_t>(j)] == bound) {
      n[static_cast<std::size_t>(j)] = -bound;
      --j;
    }
    if (j < 0) break;
    ++n[static_cast<std::size_t>(j)];
  }
  return set;
}

std::pair<PropertyResult, PropertyResult> omega_checks(const DfsTransform& t,
                                                       const BatteryOptions& opts) {
  const int bound = opts.omega_box;
  const IndexSet closed = enumerate_omega_box(t, bound);
  const auto closed_report = validate_index_set(t.group(), closed, bound);
  PropertyResult valid{"omega_closed_form_valid",
                       static_cast<double>(closed_report.orbit_collisions.size() +
                                           closed_report.uncovered.size() +
                                           closed_report.degenerate.size()),
                       0, closed_report.valid(), closed_report.summary()};

  const IndexSet generic = build_generic_index_set(t.group(), bound);
  const auto generic_report = validate_index_set(t.group(), generic, bound);
  // Orbit unions must agree on the box member by member.
  std::size_t mismatches = 0;
  std::map<MultiIndex, int> closed_keys, generic_keys;
  for (const auto& n : closed.indices) closed_keys[orbit_key(t.group(), n)] = 1;
  for (const auto& n : generic.indices) generic_keys[orbit_key(t.group(), n)] = 1;
  MultiIndex m(static_cast<std::size_t>(t.dim()), -bound);
  for (;;) {
    const MultiIndex key = orbit_key(t.group(), m);
    if (closed_keys.count(key) != generic_keys.count(key)) ++mismatches;
    int j = t.dim() - 1;
    while (j >= 0 && m[static_cast<std::size_t>(j)] == bound) {
      m[static_cast<std::size_t>(j)] = -bound;
      --j;
    }
    if (j < 0) break;
    ++m[static_cast<std::size_t>(j)];
  }
  PropertyResult match{"omega_generic_matches",
                       static_cast<double>(mismatches),
                       0,
                       generic_report.valid() && mismatches == 0,
                       generic_report.summary()};
  return {valid, match};
}

PropertyResult orthogonality_check(const DfsTransform& t, const BatteryOptions& opts) {
  const GridSpec grid = GridSpec::uniform(t.dim(), opts.orthogonality_grid);
  IndexSet omega = circular_index_set(t, opts.orthogonality_degree);

  struct SparseCoeffs {
    std::vector<std::pair<MultiIndex, std::complex<double>>> entries;
  };
  std::vector<SparseCoeffs> tables(omega.size());
  std::vector<double> norms(omega.size());
  std::vector<Orbit> orbits(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i)
    orbits[i] = orbit(t.group(), omega.indices[i]);

  parallel_for(omega.size(), [&](std::size_t i) {
    const SampleTensor tensor = sample_torus(
        [&](const TorusPoint& x) { return e_n_eval(orbits[i], x); }, grid);
    double norm2 = 0;
    for (const auto& v : tensor.values) norm2 += std::norm(v);
    norms[i] = norm2 / static_cast<double>(grid.total());
    const CoefficientTable c = coefficients(tensor);
    c.for_each([&](const MultiIndex& n, std::complex<double> v) {
      if (std::abs(v) > 1e-13) tables[i].entries.emplace_back(n, v);
    });
  });

  double worst = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    worst = std::max(worst,
                     std::fabs(norms[i] - static_cast<double>(orbits[i].members.size())));
    std::map<MultiIndex, std::complex<double>> lhs(tables[i].entries.begin(),
                                                   tables[i].entries.end());
    for (std::size_t j = i + 1; j < omega.size(); ++j) {
      std::complex<double> dot = 0;  // Parseval on the sparse supports
      for (const auto& [n, v] : tables[j].entries) {
        auto it = lhs.find(n);
        if (it != lhs.end()) dot += it->second * std::conj(v);
      }
      worst = std::max(worst, std::abs(dot));
    }
  }
  PropertyResult r = upper_bound_check("basis_orthogonality", worst, 1e-10);
  std::ostringstream os;
  os << omega.size() << " indices, |n| <= " << opts.orthogonality_degree;
  r.note = os.str();
  return r;
}

PropertyResult reconstruction_check(const TransformPtr& t, const BatteryOptions& opts) {
  const int h = 4;
  const IndexSet omega = circular_index_set(*t, h);
  std::vector<MultiIndex> picks;
  for (const auto& n : omega.indices) {
    if (one_norm(n) <= 2) picks.push_back(n);
    if (picks.size() >= 4) break;
  }
  const GridSpec grid = GridSpec::for_degree(t->dim(), h);
  Rng rng(opts.seed + 4);
  std::vector<AmbientPoint> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(t->phi(random_d1_point(t->domain(), rng)));

  double worst = 0;
  for (const auto& n : picks) {
    const TestFunction f = catalog_function(t, "basis:" + [&n] {
      std::string s;
      for (std::size_t j = 0; j < n.size(); ++j)
        s += (j ? "," : "") + std::to_string(n[j]);
      return s;
    }());
    const CoefficientTable c = coefficients(sample_dfs(*t, f.fn, grid));
    const DfsPartialSum sum(*t, c, omega);
    for (const auto& xi : pts)
      worst = std::max(worst, std::abs(sum(xi) - f.fn(xi)));
  }
  return upper_bound_check("basis_reconstruction", worst, 1e-9);
}

}  // namespace

std::vector<PropertyResult> run_battery(const TransformPtr& t,
                                        const BatteryOptions& opts) {
  std::vector<PropertyResult> out;
  out.push_back(upper_bound_check(
      "symmetry_invariance", symmetry_probe(*t, opts.symmetry_samples, opts.seed),
      1e-12));

  const EvenCoverReport cover = even_cover_probe(*t, opts.cover_samples, opts.seed);
  out.push_back(PropertyResult{"even_cover", static_cast<double>(cover.failures), 0,
                               cover.pass, cover.detail});

  out.push_back(upper_bound_check(
      "smoothness_bound",
      smoothness_probe(*t, opts.smoothness_order, opts.smoothness_samples, 1e-2,
                       opts.seed),
      1.0 + 1e-4));

  out.push_back(roundtrip_check(*t, opts));
  out.push_back(rank_check(*t, opts));
  out.push_back(weight_check(*t, opts));

  const auto [bmc, coeff] = residual_checks(t);
  out.push_back(bmc);
  out.push_back(coeff);

  const auto [valid, match] = omega_checks(*t, opts);
  out.push_back(valid);
  out.push_back(match);

  if (opts.run_orthogonality && t->dim() <= 3)
    out.push_back(orthogonality_check(*t, opts));
  if (opts.run_reconstruction) out.push_back(reconstruction_check(t, opts));
  return out;
}

bool all_pass(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.pass; });
}

}  // namespace dfs
