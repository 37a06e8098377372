// SPDX-License-Identifier: MIT
#ifndef DFS_IO_HPP
#define DFS_IO_HPP

#include <stdexcept>
#include <string>

#include "dfs/analysis.hpp"
#include "dfs/fourier.hpp"
#include "dfs/grid.hpp"
#include "dfs/manifold.hpp"

namespace dfs {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes the file via a temporary in the same directory plus an atomic
/// rename, so failures leave no partial file.  Throws IoError.
void write_text_atomic(const std::string& path, const std::string& content);

/// Coefficient file: {"manifold", "d", "dprime", "grid", "indices", "values"}
/// with indices sorted lexicographically and values as [re, im] pairs.
/// Doubles survive a write/read round trip bit-exactly.
std::string coefficient_file_text(const DfsTransform& t, const GridSpec& grid,
                                  const CoefficientTable& table);

struct CoefficientFile {
  std::string manifold;
  int d = 0;
  int dprime = 0;
  GridSpec grid;
  CoefficientTable table;
};

CoefficientFile read_coefficient_file(const std::string& path);
CoefficientFile parse_coefficient_file(const std::string& text);

/// Convergence CSV: header `h,sup_error,bound,slope_to_date`, LF endings;
/// the bound column is empty when no smoothness class was supplied.
std::string convergence_csv(const ConvergenceRecord& record);

/// Pointwise evaluation CSV for approx runs: the point coordinates, f,
/// the partial sum, and the absolute error.
std::string evaluation_csv(const std::vector<AmbientPoint>& points,
                           const std::vector<std::complex<double>>& f_values,
                           const std::vector<std::complex<double>>& s_values);

/// Full-precision decimal formatting (round-trip exact).
std::string format_double(double v);

}  // namespace dfs

#endif  // DFS_IO_HPP
