// SPDX-License-Identifier: MIT
#include "dfs/grid.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dfs {

GridSpec GridSpec::uniform(int d, int n) {
  GridSpec g;
  g.sizes.assign(static_cast<std::size_t>(d), n);
  g.validate();
  return g;
}

GridSpec GridSpec::for_degree(int d, int h) {
  if (h < 0) throw std::invalid_argument("GridSpec: degree must be >= 0");
  return uniform(d, 2 * (h + 1) + 2);
}

void GridSpec::validate() const {
  if (sizes.empty()) throw std::invalid_argument("GridSpec: empty grid");
  for (int n : sizes)
    if (n < 2) throw std::invalid_argument("GridSpec: sizes must be >= 2");
}

std::size_t SampleTensor::flat_index(const std::vector<int>& k) const {
  std::size_t idx = 0;
  for (int j = 0; j < grid.dim(); ++j)
    idx = idx * static_cast<std::size_t>(grid.sizes[static_cast<std::size_t>(j)]) +
          static_cast<std::size_t>(k[static_cast<std::size_t>(j)]);
  return idx;
}

std::complex<double>& SampleTensor::at(const std::vector<int>& k) {
  return values[flat_index(k)];
}

namespace {

template <typename PointFn>
SampleTensor sample_impl(const GridSpec& grid, PointFn&& fn) {
  grid.validate();
  SampleTensor out;
  out.grid = grid;
  out.values.resize(grid.total());
  const int d = grid.dim();
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (std::size_t flat = 0; flat < out.values.size(); ++flat) {
    for (int j = 0; j < d; ++j)
      x[static_cast<std::size_t>(j)] = grid.node(j, k[static_cast<std::size_t>(j)]);
    out.values[flat] = fn(x, k);
    for (int j = d - 1; j >= 0; --j) {
      auto ju = static_cast<std::size_t>(j);
      if (++k[ju] < grid.sizes[ju]) break;
      k[ju] = 0;
    }
  }
  return out;
}

std::string point_context(const std::vector<int>& k) {
  std::ostringstream os;
  os << " at grid point (";
  for (std::size_t j = 0; j < k.size(); ++j) os << (j ? "," : "") << k[j];
  os << ")";
  return os.str();
}

}  // namespace

SampleTensor sample_dfs(const DfsTransform& t, const ManifoldFunction& f,
                        const GridSpec& grid) {
  if (grid.dim() != t.dim())
    throw std::invalid_argument("sample_dfs: grid dimension mismatch");
  AmbientPoint xi(static_cast<std::size_t>(t.ambient_dim()));
  return sample_impl(grid, [&](const std::vector<double>& x, const std::vector<int>& k) {
    t.phi_raw(x.data(), xi.data());
    try {
      return f(xi);
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string(e.what()) + point_context(k));
    }
  });
}

SampleTensor sample_torus(const TorusFunction& g, const GridSpec& grid) {
  return sample_impl(grid, [&](const std::vector<double>& x, const std::vector<int>&) {
    return g(TorusPoint(x));
  });
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("DFS_NUM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) threads = static_cast<unsigned>(v);
  }
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dfs
