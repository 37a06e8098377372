// SPDX-License-Identifier: MIT
#include "dfs/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dfs {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  fs::path dir = target.parent_path();
  if (dir.empty()) dir = ".";
  std::error_code ec;
  if (!fs::exists(dir, ec) || !fs::is_directory(dir, ec))
    throw IoError("output directory does not exist: " + dir.string());
  fs::path tmp = dir / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open temporary file " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("rename failed for " + path);
  }
}

std::string coefficient_file_text(const DfsTransform& t, const GridSpec& grid,
                                  const CoefficientTable& table) {
  json doc;
  doc["manifold"] = t.name();
  doc["d"] = t.dim();
  doc["dprime"] = t.ambient_dim();
  doc["grid"] = grid.sizes;
  json indices = json::array();
  json values = json::array();
  table.for_each([&](const MultiIndex& n, std::complex<double> v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("coefficient_file_text: non-finite coefficient");
    indices.push_back(n);
    values.push_back(json::array({v.real(), v.imag()}));
  });
  doc["indices"] = std::move(indices);
  doc["values"] = std::move(values);
  return doc.dump() + "\n";
}

CoefficientFile parse_coefficient_file(const std::string& text) {
  const json doc = json::parse(text);
  CoefficientFile file;
  file.manifold = doc.at("manifold").get<std::string>();
  file.d = doc.at("d").get<int>();
  file.dprime = doc.at("dprime").get<int>();
  file.grid.sizes = doc.at("grid").get<std::vector<int>>();
  file.grid.validate();
  file.table = CoefficientTable(file.grid.sizes);
  const auto& indices = doc.at("indices");
  const auto& values = doc.at("values");
  if (indices.size() != values.size())
    throw IoError("coefficient file: indices/values length mismatch");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const MultiIndex n = indices[i].get<MultiIndex>();
    file.table.set(n, {values[i][0].get<double>(), values[i][1].get<double>()});
  }
  return file;
}

CoefficientFile read_coefficient_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coefficient_file(ss.str());
}

std::string convergence_csv(const ConvergenceRecord& record) {
  std::ostringstream os;
  os << "h,sup_error,bound,slope_to_date\n";
  for (std::size_t i = 0; i < record.rows.size(); ++i) {
    const auto& row = record.rows[i];
    os << row.h << "," << format_double(row.sup_error) << ",";
    if (row.bound) os << format_double(*row.bound);
    os << ",";
    ConvergenceRecord head = record;
    head.rows.assign(record.rows.begin(), record.rows.begin() + static_cast<long>(i) + 1);
    try {
      os << format_double(fit_rate(head).slope);
    } catch (const std::invalid_argument&) {
      // fewer than 3 usable rows so far
    }
    os << "\n";
  }
  return os.str();
}

std::string evaluation_csv(const std::vector<AmbientPoint>& points,
                           const std::vector<std::complex<double>>& f_values,
                           const std::vector<std::complex<double>>& s_values) {
  if (points.size() != f_values.size() || points.size() != s_values.size())
    throw std::invalid_argument("evaluation_csv: length mismatch");
  std::ostringstream os;
  const std::size_t dprime = points.empty() ? 0 : points.front().size();
  for (std::size_t j = 0; j < dprime; ++j) os << "xi" << (j + 1) << ",";
  os << "f_re,f_im,s_re,s_im,abs_error\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < dprime; ++j) os << format_double(points[i][j]) << ",";
    const auto f = f_values[i], s = s_values[i];
    os << format_double(f.real()) << "," << format_double(f.imag()) << ","
       << format_double(s.real()) << "," << format_double(s.imag()) << ","
       << format_double(std::abs(s - f)) << "\n";
  }
  return os.str();
}

}  // namespace dfs
