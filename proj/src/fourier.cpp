// SPDX-License-Identifier: MIT
#include "dfs/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "dfs/random.hpp"

namespace dfs {

namespace {

std::complex<double> cis(double t) { return {std::cos(t), std::sin(t)}; }

std::complex<double> mode_eval(const MultiIndex& m, const TorusPoint& x) {
  double dot = 0;
  for (int j = 0; j < x.dim(); ++j) dot += m[static_cast<std::size_t>(j)] * x[j];
  return cis(dot);
}

std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

CoefficientTable::CoefficientTable(std::vector<int> grid_sizes)
    : grid_sizes_(std::move(grid_sizes)) {
  window_.reserve(grid_sizes_.size());
  std::size_t total = 1;
  for (int n : grid_sizes_) {
    if (n < 2) throw std::invalid_argument("CoefficientTable: grid sizes must be >= 2");
    window_.push_back((n - 1) / 2);
    total *= static_cast<std::size_t>(2 * ((n - 1) / 2) + 1);
  }
  data_.assign(total, {0.0, 0.0});
}

bool CoefficientTable::in_window(const MultiIndex& n) const {
  if (static_cast<int>(n.size()) != dim()) return false;
  for (int j = 0; j < dim(); ++j)
    if (std::abs(n[static_cast<std::size_t>(j)]) > window_[static_cast<std::size_t>(j)])
      return false;
  return true;
}

std::size_t CoefficientTable::offset(const MultiIndex& n) const {
  if (!in_window(n))
    throw std::invalid_argument("CoefficientTable: index outside the degree window");
  std::size_t idx = 0;
  for (int j = 0; j < dim(); ++j) {
    const auto ju = static_cast<std::size_t>(j);
    idx = idx * static_cast<std::size_t>(2 * window_[ju] + 1) +
          static_cast<std::size_t>(n[ju] + window_[ju]);
  }
  return idx;
}

std::complex<double> CoefficientTable::at(const MultiIndex& n) const {
  return data_[offset(n)];
}

void CoefficientTable::set(const MultiIndex& n, std::complex<double> v) {
  data_[offset(n)] = v;
}

std::vector<MultiIndex> CoefficientTable::window_indices() const {
  std::vector<MultiIndex> out;
  out.reserve(window_size());
  MultiIndex n(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j)
    n[static_cast<std::size_t>(j)] = -window_[static_cast<std::size_t>(j)];
  for (;;) {
    out.push_back(n);
    int j = dim() - 1;
    while (j >= 0 && n[static_cast<std::size_t>(j)] == window_[static_cast<std::size_t>(j)]) {
      n[static_cast<std::size_t>(j)] = -window_[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
    ++n[static_cast<std::size_t>(j)];
  }
  return out;
}

void CoefficientTable::for_each(
    const std::function<void(const MultiIndex&, std::complex<double>)>& fn) const {
  MultiIndex n(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j)
    n[static_cast<std::size_t>(j)] = -window_[static_cast<std::size_t>(j)];
  for (std::size_t flat = 0;; ++flat) {
    fn(n, data_[flat]);
    int j = dim() - 1;
    while (j >= 0 && n[static_cast<std::size_t>(j)] == window_[static_cast<std::size_t>(j)]) {
      n[static_cast<std::size_t>(j)] = -window_[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
    ++n[static_cast<std::size_t>(j)];
  }
}

CoefficientTable coefficients(const SampleTensor& samples) {
  const GridSpec& grid = samples.grid;
  grid.validate();
  const int d = grid.dim();
  const std::size_t total = grid.total();
  if (samples.values.size() != total)
    throw std::invalid_argument("coefficients: tensor shape mismatch");

  std::vector<std::complex<double>> buf = samples.values;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_plan plan = fftw_plan_dft(
        d, grid.sizes.data(), reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    if (plan == nullptr) throw std::runtime_error("coefficients: FFTW planning failed");
    // fftw plan creation/destruction is not thread-safe.
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }

  CoefficientTable table(grid.sizes);
  const double scale = 1.0 / static_cast<double>(total);

  // Walk the window box; bin b_j = n_j mod N_j, phase exp(-i n_j x0_j).
  MultiIndex n(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    n[static_cast<std::size_t>(j)] = -table.window()[static_cast<std::size_t>(j)];
  for (;;) {
    std::size_t bin = 0;
    double phase = 0;
    for (int j = 0; j < d; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      const int N = grid.sizes[ju];
      const int b = ((n[ju] % N) + N) % N;
      bin = bin * static_cast<std::size_t>(N) + static_cast<std::size_t>(b);
      phase -= n[ju] * grid.origin(j);
    }
    table.set(n, buf[bin] * scale * cis(phase));
    int j = d - 1;
    while (j >= 0 && n[static_cast<std::size_t>(j)] == table.window()[static_cast<std::size_t>(j)]) {
      n[static_cast<std::size_t>(j)] = -table.window()[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
    ++n[static_cast<std::size_t>(j)];
  }
  return table;
}

std::complex<double> e_n_eval(const Orbit& orb, const TorusPoint& x) {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < orb.members.size(); ++i)
    sum += static_cast<double>(orb.coefficients[i]) * mode_eval(orb.members[i], x);
  return sum;
}

std::complex<double> e_n_eval(const SymmetryGroup& g, const MultiIndex& n,
                              const TorusPoint& x) {
  if (x.dim() != g.dim())
    throw std::invalid_argument("e_n_eval: point dimension mismatch");
  return e_n_eval(orbit(g, n), x);
}

std::complex<double> b_n_eval(const DfsTransform& t, const MultiIndex& n,
                              const AmbientPoint& xi) {
  if (!t.omega_contains(n))
    throw std::invalid_argument("b_n_eval: index outside Omega");
  return e_n_eval(t.group(), n, t.inverse(xi));
}

std::complex<double> partial_sum_torus(const CoefficientTable& c,
                                       const IndexSet& set, const TorusPoint& x) {
  std::complex<double> sum = 0;
  for (const auto& n : set.indices) sum += c.at(n) * mode_eval(n, x);
  return sum;
}

DfsPartialSum::DfsPartialSum(const DfsTransform& t, const CoefficientTable& c,
                             const IndexSet& omega)
    : t_(t) {
  if (omega.dim != t.dim())
    throw std::invalid_argument("DfsPartialSum: index set dimension mismatch");
  for (const auto& n : omega.indices) {
    if (!t.omega_contains(n))
      throw std::invalid_argument("DfsPartialSum: index set leaves Omega");
    const std::complex<double> cn = c.at(n);
    const Orbit orb = orbit(t.group(), n);
    for (std::size_t i = 0; i < orb.members.size(); ++i) {
      modes_.push_back(orb.members[i]);
      weights_.push_back(cn * static_cast<double>(orb.coefficients[i]));
    }
  }
}

std::complex<double> DfsPartialSum::at_torus(const TorusPoint& y) const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < modes_.size(); ++i)
    sum += weights_[i] * mode_eval(modes_[i], y);
  return sum;
}

std::complex<double> DfsPartialSum::operator()(const AmbientPoint& xi) const {
  return at_torus(t_.inverse(xi));
}

std::complex<double> dfs_partial_sum(const DfsTransform& t,
                                     const CoefficientTable& c,
                                     const IndexSet& omega,
                                     const AmbientPoint& xi) {
  return DfsPartialSum(t, c, omega)(xi);
}

namespace {

IndexSet filtered_index_set(const DfsTransform& t, int h, bool circular) {
  if (h < 0) throw std::invalid_argument("index set: degree must be >= 0");
  IndexSet set;
  set.dim = t.dim();
  set.shape = circular ? IndexSet::Shape::kCircular : IndexSet::Shape::kRectangular;
  set.degree = h;
  const int box = circular ? h : std::max(h - 1, 0);
  MultiIndex n(static_cast<std::size_t>(t.dim()), -box);
  for (;;) {
    const bool in_norm = circular ? one_norm(n) <= h : sup_norm(n) < h;
    if (in_norm && t.omega_contains(n)) set.indices.push_back(n);
    int j = t.dim() - 1;
    while (j >= 0 && n[static_cast<std::size_t>(j)] == box) {
      n[static_cast<std::size_t>(j)] = -box;
      --j;
    }
    if (j < 0) break;
    ++n[static_cast<std::size_t>(j)];
  }
  return set;
}

}  // namespace

IndexSet circular_index_set(const DfsTransform& t, int h) {
  return filtered_index_set(t, h, true);
}

IndexSet rectangular_index_set(const DfsTransform& t, int h) {
  return filtered_index_set(t, h, false);
}

std::complex<double> weighted_inner_product(const DfsTransform& t,
                                            const ManifoldFunction& f1,
                                            const ManifoldFunction& f2,
                                            const GridSpec& grid) {
  const SampleTensor s1 = sample_dfs(t, f1, grid);
  const SampleTensor s2 = sample_dfs(t, f2, grid);
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < s1.values.size(); ++i)
    sum += s1.values[i] * std::conj(s2.values[i]);
  return sum / static_cast<double>(grid.total());
}

namespace {

// Node index image under one symmetry generator on a cell-centered grid:
// x -> S_j + sign_j x maps node k to one of k, N-1-k, k+N/2, N/2-k-1 (mod N).
int node_image(int k, int n, bool half_turn, int sign) {
  int k2 = sign > 0 ? k : n - 1 - k;
  if (half_turn) k2 = (k2 + n / 2) % n;
  return k2;
}

}  // namespace

double bmc_residual(const SymmetryGroup& g, const SampleTensor& samples) {
  const GridSpec& grid = samples.grid;
  if (grid.dim() != g.dim())
    throw std::invalid_argument("bmc_residual: dimension mismatch");
  for (int n : grid.sizes)
    if (n % 2 != 0)
      throw std::invalid_argument("bmc_residual: tensor input needs even grid sizes");

  const int d = g.dim();
  double worst = 0;
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  std::vector<int> k2(static_cast<std::size_t>(d), 0);
  for (std::size_t flat = 0; flat < samples.values.size(); ++flat) {
    for (int i = 0; i < g.size(); ++i) {
      const auto& gen = g.generators()[static_cast<std::size_t>(i)];
      std::size_t flat2 = 0;
      for (int j = 0; j < d; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const int img = node_image(k[ju], grid.sizes[ju], gen.half_turn[ju], gen.signs[ju]);
        flat2 = flat2 * static_cast<std::size_t>(grid.sizes[ju]) + static_cast<std::size_t>(img);
        k2[ju] = img;
      }
      worst = std::max(worst, std::abs(samples.values[flat2] - samples.values[flat]));
    }
    for (int j = d - 1; j >= 0; --j) {
      auto ju = static_cast<std::size_t>(j);
      if (++k[ju] < grid.sizes[ju]) break;
      k[ju] = 0;
    }
  }
  return worst;
}

double bmc_residual(const SymmetryGroup& g, const TorusFunction& fn,
                    int samples, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    const TorusPoint x = random_torus_point(rng, g.dim());
    const std::complex<double> base = fn(x);
    for (int i = 0; i < g.size(); ++i) {
      const TorusPoint y = TorusPoint(g.apply(1u << i, x.coords()));
      worst = std::max(worst, std::abs(fn(y) - base));
    }
  }
  return worst;
}

double coefficient_symmetry_residual(const SymmetryGroup& g,
                                     const CoefficientTable& c) {
  if (g.dim() != c.dim())
    throw std::invalid_argument("coefficient_symmetry_residual: dimension mismatch");
  double worst = 0;
  c.for_each([&](const MultiIndex& n, std::complex<double> cn) {
    for (unsigned mask = 1; mask < g.subset_count(); ++mask) {
      const MultiIndex m = g.reflect(mask, n);
      const double sign = (g.shift_parity(mask, n) & 1) ? -1.0 : 1.0;
      worst = std::max(worst, std::abs(cn - sign * c.at(m)));
    }
  });
  return worst;
}

}  // namespace dfs
