// SPDX-License-Identifier: MIT
#include "dfs/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dfs {

int one_norm(const MultiIndex& n) {
  int s = 0;
  for (int v : n) s += std::abs(v);
  return s;
}

int sup_norm(const MultiIndex& n) {
  int s = 0;
  for (int v : n) s = std::max(s, std::abs(v));
  return s;
}

SymmetryGroup::SymmetryGroup(int dim, std::vector<SymmetryGenerator> generators)
    : d_(dim), gens_(std::move(generators)) {
  if (d_ <= 0) throw std::invalid_argument("SymmetryGroup: dimension must be positive");
  for (const auto& g : gens_) {
    if (g.dim() != d_ || static_cast<int>(g.half_turn.size()) != d_)
      throw std::invalid_argument("SymmetryGroup: generator dimension mismatch");
    for (auto s : g.signs)
      if (s != 1 && s != -1)
        throw std::invalid_argument("SymmetryGroup: reflection signs must be +-1");
  }
}

const SymmetryGenerator& SymmetryGroup::generator(int i) const {
  if (i < 0 || i >= size())
    throw std::invalid_argument("SymmetryGroup: generator id out of range");
  return gens_[static_cast<std::size_t>(i)];
}

unsigned SymmetryGroup::subset_mask(const std::vector<int>& subset) const {
  unsigned mask = 0;
  for (int i : subset) {
    if (i < 0 || i >= size())
      throw std::invalid_argument("SymmetryGroup: generator id out of range");
    mask |= 1u << i;
  }
  return mask;
}

void SymmetryGroup::check_dim(const MultiIndex& n) const {
  if (static_cast<int>(n.size()) != d_)
    throw std::invalid_argument("SymmetryGroup: multi-index dimension mismatch");
}

MultiIndex SymmetryGroup::reflect(unsigned mask, const MultiIndex& n) const {
  check_dim(n);
  MultiIndex out = n;
  for (int i = 0; i < size(); ++i) {
    if (!(mask & (1u << i))) continue;
    const auto& g = gens_[static_cast<std::size_t>(i)];
    for (int j = 0; j < d_; ++j)
      if (g.signs[static_cast<std::size_t>(j)] < 0) out[static_cast<std::size_t>(j)] = -out[static_cast<std::size_t>(j)];
  }
  return out;
}

MultiIndex SymmetryGroup::reflect(const std::vector<int>& subset,
                                  const MultiIndex& n) const {
  return reflect(subset_mask(subset), n);
}

long long SymmetryGroup::shift_parity(unsigned mask, const MultiIndex& n) const {
  check_dim(n);
  long long total = 0;
  for (int i = 0; i < size(); ++i) {
    if (!(mask & (1u << i))) continue;
    const auto& g = gens_[static_cast<std::size_t>(i)];
    for (int j = 0; j < d_; ++j)
      if (g.half_turn[static_cast<std::size_t>(j)]) total += n[static_cast<std::size_t>(j)];
  }
  return total;
}

long long SymmetryGroup::shift_parity(const std::vector<int>& subset,
                                      const MultiIndex& n) const {
  return shift_parity(subset_mask(subset), n);
}

std::vector<double> SymmetryGroup::apply(unsigned mask,
                                         const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != d_)
    throw std::invalid_argument("SymmetryGroup: point dimension mismatch");
  std::vector<double> out = x;
  for (int i = 0; i < size(); ++i) {
    if (!(mask & (1u << i))) continue;
    const auto& g = gens_[static_cast<std::size_t>(i)];
    for (int j = 0; j < d_; ++j) {
      auto ju = static_cast<std::size_t>(j);
      out[ju] = (g.half_turn[ju] ? std::numbers::pi : 0.0) +
                static_cast<double>(g.signs[ju]) * out[ju];
    }
  }
  return out;
}

int stabilizer_count(const SymmetryGroup& g, const MultiIndex& n) {
  g.check_dim(n);
  int count = 0;
  for (unsigned mask = 0; mask < g.subset_count(); ++mask)
    if (g.reflect(mask, n) == n) ++count;
  return count;
}

int r_diag(const SymmetryGroup& g, const MultiIndex& n) {
  g.check_dim(n);
  for (unsigned mask = 0; mask < g.subset_count(); ++mask)
    if (g.reflect(mask, n) == n && (g.shift_parity(mask, n) & 1)) return 0;
  return 1;
}

bool Orbit::contains(const MultiIndex& m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

int Orbit::coefficient(const MultiIndex& m) const {
  auto it = std::lower_bound(members.begin(), members.end(), m);
  if (it == members.end() || *it != m)
    throw std::invalid_argument("Orbit: index is not a member");
  return coefficients[static_cast<std::size_t>(it - members.begin())];
}

Orbit orbit(const SymmetryGroup& g, const MultiIndex& n) {
  g.check_dim(n);
  std::set<MultiIndex> members;
  for (unsigned mask = 0; mask < g.subset_count(); ++mask)
    members.insert(g.reflect(mask, n));
  Orbit orb;
  orb.base = n;
  orb.members.assign(members.begin(), members.end());
  orb.coefficients.reserve(orb.members.size());
  for (const auto& m : orb.members) orb.coefficients.push_back(r_pair(g, n, m));
  return orb;
}

int r_pair(const SymmetryGroup& g, const MultiIndex& n, const MultiIndex& m) {
  g.check_dim(n);
  g.check_dim(m);
  const int rd = r_diag(g, n);
  bool found = false;
  int sign = 0;
  for (unsigned mask = 0; mask < g.subset_count(); ++mask) {
    if (g.reflect(mask, n) != m) continue;
    const int s = (g.shift_parity(mask, n) & 1) ? -1 : 1;
    if (!found) {
      found = true;
      sign = s;
    } else if (rd != 0 && s != sign) {
      throw std::logic_error("r_pair: inconsistent signs across subsets");
    }
  }
  if (!found) throw std::invalid_argument("r_pair: m is not in the orbit of n");
  return rd == 0 ? 0 : sign * rd;
}

MultiIndex orbit_key(const SymmetryGroup& g, const MultiIndex& n) {
  MultiIndex best = n;
  for (unsigned mask = 1; mask < g.subset_count(); ++mask) {
    MultiIndex m = g.reflect(mask, n);
    if (m > best) best = m;
  }
  return best;
}

namespace {

// Enumerates {-bound..bound}^d, calling fn on each index.
template <typename Fn>
void for_each_in_box(int d, int bound, Fn&& fn) {
  MultiIndex n(static_cast<std::size_t>(d), -bound);
  if (bound < 0) return;
  while (true) {
    fn(n);
    int j = d - 1;
    while (j >= 0 && n[static_cast<std::size_t>(j)] == bound) {
      n[static_cast<std::size_t>(j)] = -bound;
      --j;
    }
    if (j < 0) break;
    ++n[static_cast<std::size_t>(j)];
  }
}

}  // namespace

IndexSet build_generic_index_set(const SymmetryGroup& g, int bound) {
  if (bound < 0) throw std::invalid_argument("build_generic_index_set: bound must be >= 0");
  const int d = g.dim();

  // Representatives of the orbit classes on {-2..2}^d, lex-greatest member.
  std::set<MultiIndex> reps;
  for_each_in_box(d, 2, [&](const MultiIndex& n) { reps.insert(orbit_key(g, n)); });

  std::set<MultiIndex> result;
  std::vector<std::vector<int>> translates(static_cast<std::size_t>(d));
  for (const auto& rep : reps) {
    if (r_diag(g, rep) == 0) continue;
    // Per-coordinate translate sets n_j + 2 sgn(n_j) N_0, clipped to the box.
    bool feasible = true;
    for (int j = 0; j < d && feasible; ++j) {
      auto& vs = translates[static_cast<std::size_t>(j)];
      vs.clear();
      const int base = rep[static_cast<std::size_t>(j)];
      if (base == 0) {
        vs.push_back(0);
      } else {
        const int step = base > 0 ? 2 : -2;
        for (int v = base; std::abs(v) <= bound; v += step) vs.push_back(v);
      }
      feasible = !vs.empty();
    }
    if (!feasible) continue;
    MultiIndex cur(static_cast<std::size_t>(d), 0);
    std::vector<std::size_t> pos(static_cast<std::size_t>(d), 0);
    while (true) {
      for (int j = 0; j < d; ++j)
        cur[static_cast<std::size_t>(j)] =
            translates[static_cast<std::size_t>(j)][pos[static_cast<std::size_t>(j)]];
      result.insert(cur);
      int j = d - 1;
      while (j >= 0 && pos[static_cast<std::size_t>(j)] + 1 ==
                           translates[static_cast<std::size_t>(j)].size()) {
        pos[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
      ++pos[static_cast<std::size_t>(j)];
    }
  }

  IndexSet set;
  set.dim = d;
  set.shape = IndexSet::Shape::kExplicit;
  set.degree = bound;
  set.indices.assign(result.begin(), result.end());
  return set;
}

IndexSetValidation validate_index_set(const SymmetryGroup& g,
                                      const IndexSet& set, int bound) {
  IndexSetValidation report;
  std::map<MultiIndex, MultiIndex> seen;  // orbit key -> first set member
  for (const auto& n : set.indices) {
    if (r_diag(g, n) == 0) report.degenerate.push_back(n);
    MultiIndex key = orbit_key(g, n);
    auto [it, inserted] = seen.emplace(std::move(key), n);
    if (!inserted) report.orbit_collisions.emplace_back(it->second, n);
  }
  for_each_in_box(g.dim(), bound, [&](const MultiIndex& m) {
    if (r_diag(g, m) == 0) return;
    if (seen.find(orbit_key(g, m)) == seen.end()) report.uncovered.push_back(m);
  });
  return report;
}

std::string IndexSetValidation::summary() const {
  std::ostringstream os;
  os << "collisions=" << orbit_collisions.size() << " uncovered=" << uncovered.size()
     << " degenerate=" << degenerate.size();
  return os.str();
}

}  // namespace dfs
