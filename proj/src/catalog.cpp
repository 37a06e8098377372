// SPDX-License-Identifier: MIT
#include "dfs/catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dfs/fourier.hpp"

namespace dfs {

namespace {

MultiIndex parse_index(const std::string& text, int d) {
  MultiIndex n;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    n.push_back(std::stoi(item));
  if (static_cast<int>(n.size()) != d)
    throw std::invalid_argument("basis function index has wrong dimension");
  return n;
}

}  // namespace

TestFunction catalog_function(const TransformPtr& t, const std::string& id) {
  TestFunction f;
  f.id = id;
  if (id == "one") {
    f.fn = [](const AmbientPoint&) { return std::complex<double>(1.0, 0.0); };
    f.bandlimit = 0;
    f.description = "constant 1";
    return f;
  }
  if (id == "coord1") {
    f.fn = [](const AmbientPoint& xi) { return std::complex<double>(xi[0], 0.0); };
    f.bandlimit = 1;
    f.description = "first ambient coordinate";
    return f;
  }
  if (id == "exp1") {
    f.fn = [](const AmbientPoint& xi) {
      return std::complex<double>(std::exp(xi[0]), 0.0);
    };
    f.description = "exp of the first ambient coordinate";
    return f;
  }
  if (id == "abs1") {
    f.fn = [](const AmbientPoint& xi) {
      return std::complex<double>(std::fabs(xi[0]), 0.0);
    };
    f.cls = SmoothnessClass{0, 1.0};
    // Extension |x_1|: sup 1 on the manifold plus Lipschitz seminorm 1.
    f.norm_upper_bound = 2.0;
    f.description = "absolute value of the first ambient coordinate";
    return f;
  }
  if (id == "coordabs1") {
    f.fn = [](const AmbientPoint& xi) {
      return std::complex<double>(xi[0] * std::fabs(xi[0]), 0.0);
    };
    f.cls = SmoothnessClass{1, 1.0};
    // Extension x_1 |x_1|: C^1 part 2, gradient Lipschitz seminorm 2.
    f.norm_upper_bound = 4.0;
    f.description = "signed square of the first ambient coordinate";
    return f;
  }
  if (id.rfind("basis:", 0) == 0) {
    const MultiIndex n = parse_index(id.substr(6), t->dim());
    if (!t->omega_contains(n))
      throw std::invalid_argument("basis function index outside Omega");
    TransformPtr held = t;
    f.fn = [held, n](const AmbientPoint& xi) { return b_n_eval(*held, n, xi); };
    f.bandlimit = sup_norm(n);
    f.description = "DFS basis function";
    return f;
  }
  throw std::invalid_argument("unknown function id '" + id + "'");
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {"one", "coord1", "exp1", "abs1",
                                               "coordabs1", "basis:<n...>"};
  return ids;
}

}  // namespace dfs
