#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "specgini/distortion.hpp"
#include "specgini/dominance.hpp"
#include "specgini/endowment.hpp"
#include "specgini/mre.hpp"
#include "specgini/sample.hpp"
#include "specgini/stochastic_dominance.hpp"

namespace specgini {
namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline bool parse_number(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  char* end = nullptr;
  out = std::strtod(cell.c_str(), &end);
  return end == cell.c_str() + cell.size();
}

inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw std::runtime_error("'" + path + "' contains no data");
  return rows;
}

inline bool all_numeric(const std::vector<std::string>& cells) {
  double tmp;
  for (const auto& c : cells)
    if (!parse_number(c, tmp)) return false;
  return !cells.empty();
}

}  // namespace detail

// Dataset CSV: optional header row; a non-numeric first column is treated as
// row labels, the remaining columns as numeric attributes.
inline EndowmentMatrix load_matrix_csv(const std::string& path) {
  auto rows = detail::read_csv(path);
  std::vector<std::string> header;
  std::size_t first_data = 0;
  if (!detail::all_numeric(rows[0]) &&
      !(rows[0].size() > 1 && detail::all_numeric({rows[0].begin() + 1, rows[0].end()}))) {
    header = rows[0];
    first_data = 1;
    if (first_data >= rows.size()) throw std::runtime_error("'" + path + "' has a header but no data");
  }
  double tmp;
  const bool labeled = !detail::parse_number(rows[first_data][0], tmp);
  const std::size_t arity = rows[first_data].size();
  if (arity <= (labeled ? 1u : 0u))
    throw std::runtime_error("'" + path + "' has no numeric attribute columns");
  const std::size_t d = arity - (labeled ? 1 : 0);

  std::vector<double> data;
  std::vector<std::string> labels;
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != arity)
      throw std::runtime_error("'" + path + "' row " + std::to_string(r + 1) +
                               " has inconsistent arity");
    std::size_t j0 = 0;
    if (labeled) {
      labels.push_back(cells[0]);
      j0 = 1;
    }
    for (std::size_t j = j0; j < cells.size(); ++j) {
      double value;
      if (!detail::parse_number(cells[j], value))
        throw std::runtime_error("'" + path + "' row " + std::to_string(r + 1) +
                                 " has a non-numeric cell '" + cells[j] + "'");
      data.push_back(value);
    }
  }
  std::vector<std::string> column_names;
  if (!header.empty() && header.size() == arity)
    column_names.assign(header.begin() + (labeled ? 1 : 0), header.end());
  return EndowmentMatrix(data.size() / d, d, std::move(data), std::move(labels),
                         std::move(column_names));
}

// Single-column sample CSV with an optional header line.
inline Sample1D load_sample_csv(const std::string& path) {
  auto rows = detail::read_csv(path);
  std::vector<double> values;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != 1)
      throw std::runtime_error("'" + path + "' must have exactly one column");
    double value;
    if (!detail::parse_number(rows[r][0], value)) {
      if (r == 0) continue;  // header
      throw std::runtime_error("'" + path + "' has a non-numeric cell '" + rows[r][0] + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw std::runtime_error("'" + path + "' contains no numeric values");
  return Sample1D(std::move(values));
}

// Two-column (t, v) breakpoint CSV for custom piecewise-linear distortions.
inline DistortionSpec load_breakpoints_csv(const std::string& path) {
  auto rows = detail::read_csv(path);
  std::vector<std::pair<double, double>> pts;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != 2)
      throw std::runtime_error("breakpoint file '" + path + "' must have two columns");
    double t, v;
    if (!detail::parse_number(rows[r][0], t) || !detail::parse_number(rows[r][1], v)) {
      if (r == 0) continue;  // header
      throw std::runtime_error("breakpoint file '" + path + "' has non-numeric cells");
    }
    pts.emplace_back(t, v);
  }
  return DistortionSpec::piecewise_linear(std::move(pts));
}

// Distortion from CLI syntax, falling back to a breakpoint CSV path.
inline DistortionSpec load_distortion(const std::string& text) {
  try {
    return parse_distortion(text);
  } catch (const std::invalid_argument&) {
    std::ifstream probe(text);
    if (!probe) throw;
    return load_breakpoints_csv(text);
  }
}

// One direction per CSV row (optional header).
inline std::vector<Direction> load_directions_csv(const std::string& path) {
  auto rows = detail::read_csv(path);
  std::vector<Direction> dirs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<double> coords;
    bool numeric = true;
    for (const auto& cell : rows[r]) {
      double value;
      if (!detail::parse_number(cell, value)) {
        numeric = false;
        break;
      }
      coords.push_back(value);
    }
    if (!numeric) {
      if (r == 0) continue;  // header
      throw std::runtime_error("direction file '" + path + "' has non-numeric cells");
    }
    dirs.emplace_back(std::move(coords));
  }
  if (dirs.empty()) throw std::runtime_error("direction file '" + path + "' contains no directions");
  return dirs;
}

// ---- JSON serialization ----

inline nlohmann::json polyline_to_json(const MREPolyline& m) {
  nlohmann::json j;
  j["distortion"] = m.distortion.to_string();
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& z : m.vertices) verts.push_back({z[0], z[1]});
  j["rays"] = {{"left_vertical", true}, {"right_horizontal", true}};
  return j;
}

inline MREPolyline polyline_from_json(const nlohmann::json& j) {
  MREPolyline m;
  m.distortion = parse_distortion(j.at("distortion").get<std::string>());
  for (const auto& z : j.at("vertices"))
    m.vertices.push_back({z.at(0).get<double>(), z.at(1).get<double>()});
  return m;
}

inline void write_polyline_csv(const MREPolyline& m, std::ostream& out) {
  out << "x,y\n";
  char buf[64];
  for (const auto& z : m.vertices) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", z[0], z[1]);
    out << buf;
  }
}

inline nlohmann::json verdict_to_json(const DominanceVerdict& v) {
  nlohmann::json j;
  j["holds"] = v.holds;
  j["exact"] = v.exact;
  j["worst_margin"] = v.worst_margin;
  j["witness"] = v.witness;
  j["tolerance"] = v.tolerance;
  if (!v.restricted_to.empty()) j["restricted_to"] = v.restricted_to;
  return j;
}

inline nlohmann::json sd_verdict_to_json(const SDVerdict& v) {
  nlohmann::json j;
  j["relation"] = to_string(v.relation);
  j["holds"] = v.holds;
  j["worst_margin"] = v.worst_margin;
  j["witness"] = v.witness;
  j["tolerance"] = v.tolerance;
  return j;
}

inline nlohmann::json support_sample_to_json(const SupportSample& s) {
  nlohmann::json j;
  j["directions"] = s.directions;
  j["values"] = s.values;
  j["resolution"] = s.resolution;
  return j;
}

}  // namespace specgini
