// SPDX-License-Identifier: MIT
#ifndef DFS_SYMMETRY_HPP
#define DFS_SYMMETRY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dfs {

/// A point n in Z^d indexing torus Fourier modes.
using MultiIndex = std::vector<int>;

int one_norm(const MultiIndex& n);
int sup_norm(const MultiIndex& n);

/// One shift-and-reflection symmetry s(x) = S + M x of the torus, with
/// S in {0, pi}^d and M = diag(signs), signs in {-1, +1}.  Self-inverse.
struct SymmetryGenerator {
  std::vector<bool> half_turn;  ///< true where the shift component is pi
  std::vector<std::int8_t> signs;

  int dim() const { return static_cast<int>(signs.size()); }
};

/// The commuting generators s^1, ..., s^p of a transform's symmetries.
/// All index-level operations enumerate subsets of [p] as bitmasks.
class SymmetryGroup {
 public:
  SymmetryGroup() : d_(0) {}
  SymmetryGroup(int dim, std::vector<SymmetryGenerator> generators);

  int dim() const { return d_; }
  /// Symmetry number p; may be 0 (trivial group).
  int size() const { return static_cast<int>(gens_.size()); }
  const std::vector<SymmetryGenerator>& generators() const { return gens_; }
  const SymmetryGenerator& generator(int i) const;

  /// Number of subsets of [p], i.e. 2^p.
  unsigned subset_count() const { return 1u << size(); }

  /// Converts a list of 0-based generator ids to a subset bitmask.
  /// Throws std::invalid_argument on out-of-range ids.
  unsigned subset_mask(const std::vector<int>& subset) const;

  /// M^I(n): negates entry j once per generator in the mask with sign_j < 0.
  MultiIndex reflect(unsigned mask, const MultiIndex& n) const;
  MultiIndex reflect(const std::vector<int>& subset, const MultiIndex& n) const;

  /// N^I(n): sum of entries of n over coordinates shifted by pi, summed over
  /// the generators in the mask.  Additive over disjoint masks.
  long long shift_parity(unsigned mask, const MultiIndex& n) const;
  long long shift_parity(const std::vector<int>& subset,
                         const MultiIndex& n) const;

  /// s^I(x) on a raw torus representative (no canonicalization).
  std::vector<double> apply(unsigned mask, const std::vector<double>& x) const;

  void check_dim(const MultiIndex& n) const;

 private:
  int d_;
  std::vector<SymmetryGenerator> gens_;
};

/// #{I subset of [p] : M^I(n) = n}; always >= 1.
int stabilizer_count(const SymmetryGroup& g, const MultiIndex& n);

/// r_{n,n}: 1 if N^I(n) is even for every stabilizing subset I, else 0.
int r_diag(const SymmetryGroup& g, const MultiIndex& n);

/// The reflection orbit of an index together with its signed coefficients.
struct Orbit {
  MultiIndex base;
  std::vector<MultiIndex> members;        ///< sorted lexicographically
  std::vector<int> coefficients;          ///< r_{base, members[i]}

  bool contains(const MultiIndex& m) const;
  /// r_{base,m}; throws if m is not a member.
  int coefficient(const MultiIndex& m) const;
};

Orbit orbit(const SymmetryGroup& g, const MultiIndex& n);

/// r_{n,m} for m in the orbit of n; throws std::invalid_argument otherwise.
/// All subsets J with M^J(n) = m are checked to yield the same sign.
int r_pair(const SymmetryGroup& g, const MultiIndex& n, const MultiIndex& m);

/// A finite ordered set of multi-indices, optionally tagged with the
/// truncation rule that produced it.
struct IndexSet {
  enum class Shape { kCircular, kRectangular, kExplicit };

  int dim = 0;
  Shape shape = Shape::kExplicit;
  int degree = 0;                 ///< h for circular/rectangular tags
  std::vector<MultiIndex> indices;  ///< duplicate-free, sorted for built sets

  std::size_t size() const { return indices.size(); }
};

/// Canonical index set construction: one representative per reflection-orbit
/// class on {-2,...,2}^d (lexicographically greatest member), those with
/// r_{n,n} != 0 kept and extended by even-integer translates per coordinate,
/// intersected with the box ||n||_inf <= bound.
IndexSet build_generic_index_set(const SymmetryGroup& g, int bound);

/// Validation of a candidate subset of Omega against the box ||n||_inf <= bound.
struct IndexSetValidation {
  std::vector<std::pair<MultiIndex, MultiIndex>> orbit_collisions;
  std::vector<MultiIndex> uncovered;   ///< r != 0 in the box, no covering orbit
  std::vector<MultiIndex> degenerate;  ///< set members with r_{n,n} = 0

  bool valid() const {
    return orbit_collisions.empty() && uncovered.empty() && degenerate.empty();
  }
  std::string summary() const;
};

IndexSetValidation validate_index_set(const SymmetryGroup& g,
                                      const IndexSet& set, int bound);

/// Lexicographically greatest member of the orbit of n (canonical orbit key).
MultiIndex orbit_key(const SymmetryGroup& g, const MultiIndex& n);

}  // namespace dfs

#endif  // DFS_SYMMETRY_HPP
