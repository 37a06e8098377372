// SPDX-License-Identifier: MIT
#ifndef DFS_MANIFOLD_HPP
#define DFS_MANIFOLD_HPP

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dfs/domain.hpp"
#include "dfs/symmetry.hpp"
#include "dfs/torus.hpp"

namespace dfs {

/// A point of the ambient space R^{d'}.  SO(3) elements are stored
/// column-major as 9-vectors.
using AmbientPoint = std::vector<double>;

double euclidean_norm(const AmbientPoint& v);

/// Chebyshev polynomial of the first kind, three-term recurrence.
double chebyshev_t(int n, double x);

/// A manifold descriptor: the torus-to-manifold map phi, its inverse on
/// D_1 u D_2, the fundamental-domain data, the symmetry group, the Jacobian
/// weight, membership in the canonical index set Omega, and the closed-form
/// basis functions.  Immutable after construction; all operations are pure.
class DfsTransform {
 public:
  virtual ~DfsTransform() = default;

  const std::string& name() const { return name_; }
  int dim() const { return d_; }
  int ambient_dim() const { return dprime_; }
  const SymmetryGroup& group() const { return group_; }
  const DomainSpec& domain() const { return domain_; }

  /// phi(x); the result satisfies the manifold constraints to ~1e-12.
  AmbientPoint phi(const TorusPoint& x) const;
  /// phi on a raw coordinate vector (any representatives; formulas are
  /// 2pi-periodic).  Hot path for probes and finite differences.
  void phi_raw(const double* x, double* out) const { eval_phi(x, out); }

  /// The unique preimage in D_1 u D_2.  Throws std::domain_error when xi
  /// violates the manifold constraints beyond kOnManifoldTol.
  virtual TorusPoint inverse(const AmbientPoint& xi) const = 0;

  /// g(x) = |det(grad phi^T grad phi)|^{1/2} by the closed form.
  virtual double jacobian_weight(const TorusPoint& x) const = 0;

  /// Membership in the closed-form canonical index set Omega.
  bool omega_contains(const MultiIndex& n) const;

  /// Human-readable statement of the Omega membership rule.
  virtual std::string omega_description() const = 0;

  /// The closed-form basis function b_n evaluated at xi.  Throws
  /// std::invalid_argument when n is outside Omega.
  std::complex<double> closed_form_basis(const MultiIndex& n,
                                         const AmbientPoint& xi) const;

  DomainClass classify(const TorusPoint& x) const {
    return domain_.classify(x, kD2SnapTol);
  }

  /// s^I(x) as a canonical torus point.
  TorusPoint symmetry_image(unsigned mask, const TorusPoint& x) const;

  void require_on_manifold(const AmbientPoint& xi,
                           double tol = kOnManifoldTol) const {
    check_constraints(xi, tol);
  }

  static constexpr double kOnManifoldTol = 1e-9;
  static constexpr double kD2SnapTol = 1e-12;

 protected:
  DfsTransform(std::string name, int d, int dprime, SymmetryGroup group,
               DomainSpec domain);

  virtual void eval_phi(const double* x, double* out) const = 0;
  virtual bool omega_contains_impl(const MultiIndex& n) const = 0;
  virtual std::complex<double> basis_impl(const MultiIndex& n,
                                          const AmbientPoint& xi) const = 0;
  virtual void check_constraints(const AmbientPoint& xi, double tol) const = 0;

  void check_index_dim(const MultiIndex& n) const;
  void check_ambient_dim(const AmbientPoint& xi) const;

 private:
  std::string name_;
  int d_;
  int dprime_;
  SymmetryGroup group_;
  DomainSpec domain_;
};

using TransformPtr = std::shared_ptr<const DfsTransform>;

/// DFS transform of a product manifold: concatenated coordinates, generators,
/// fundamental domains; Omega and the basis factorize.
TransformPtr make_product(TransformPtr a, TransformPtr b, std::string name = "");

/// Builds a registered manifold by name: "circle", "interval", "disk",
/// "ball:d" (d >= 2), "ball3", "sphere:d" (d >= 1), "cylinder", "so3",
/// "product:<a>,<b>".  Dimension may also be passed in the parameter map as
/// d=<int>.  Throws std::invalid_argument for unknown names.
TransformPtr make_manifold(const std::string& name,
                           const std::map<std::string, std::string>& params = {});

/// The manifolds covered by `--manifold all` and the acceptance battery.
const std::vector<std::string>& registered_manifold_names();

/// Negative-control fixture: a disk whose first generator wrongly negates
/// both coordinates, so phi is not invariant under it.
TransformPtr make_corrupt_disk();

}  // namespace dfs

#endif  // DFS_MANIFOLD_HPP
