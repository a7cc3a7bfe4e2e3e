#include "gaussric/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaussric {

std::size_t GridSpec::size() const {
  if (resolution.empty()) return 0;
  std::size_t n = 1;
  for (int r : resolution) n *= static_cast<std::size_t>(std::max(r, 0));
  return n;
}

std::vector<int> GridSpec::index_of(std::size_t flat) const {
  std::vector<int> index(resolution.size());
  for (std::size_t axis = resolution.size(); axis-- > 0;) {
    const auto r = static_cast<std::size_t>(resolution[axis]);
    index[axis] = static_cast<int>(flat % r);
    flat /= r;
  }
  return index;
}

Vector GridSpec::point(const std::vector<int>& index) const {
  Vector u(static_cast<Eigen::Index>(index.size()));
  for (std::size_t axis = 0; axis < index.size(); ++axis) {
    const Interval& range = box.ranges[axis];
    const int r = resolution[axis];
    const double t = r > 1 ? static_cast<double>(index[axis]) / (r - 1) : 0.0;
    // Endpoints are hit exactly.
    u(static_cast<Eigen::Index>(axis)) =
        index[axis] == r - 1 && r > 1 ? range.hi : range.lo + t * (range.hi - range.lo);
  }
  return u;
}

void GridSpec::validate() const {
  if (box.ranges.empty() || box.ranges.size() != resolution.size()) {
    throw std::invalid_argument("grid box and resolution must have the same positive dimension");
  }
  for (std::size_t axis = 0; axis < resolution.size(); ++axis) {
    if (resolution[axis] < 1) throw std::invalid_argument("grid resolution must be positive");
    const Interval& range = box.ranges[axis];
    if (!range.bounded() || range.lo > range.hi) {
      throw std::invalid_argument("grid box must be finite with lo <= hi");
    }
  }
}

std::optional<double> ReportRow::value(const std::string& name) const {
  for (const auto& [key, v] : values) {
    if (key == name) return v;
  }
  return std::nullopt;
}

std::size_t VerificationReport::check_index(const std::string& name) const {
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].name == name) return i;
  }
  throw std::out_of_range("no check named " + name);
}

bool VerificationReport::row_passes(const ReportRow& row) const {
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i].accepts(row.residuals.at(i))) return false;
  }
  return true;
}

void VerificationReport::finalize() {
  summary.max_residual.assign(checks.size(), 0.0);
  summary.ricci_min.reset();
  summary.ricci_max.reset();
  summary.rows = rows.size();
  summary.edge_rows = 0;
  summary.failed_rows = 0;
  bool first = true;
  for (const ReportRow& row : rows) {
    if (row.edge) {
      ++summary.edge_rows;
      continue;
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const double r = row.residuals.at(i);
      summary.max_residual[i] = first ? r : std::max(summary.max_residual[i], r);
    }
    first = false;
    if (!row_passes(row)) ++summary.failed_rows;
    if (auto lo = row.value("ricci_eig_min")) {
      summary.ricci_min = summary.ricci_min ? std::min(*summary.ricci_min, *lo) : *lo;
    }
    if (auto hi = row.value("ricci_eig_max")) {
      summary.ricci_max = summary.ricci_max ? std::max(*summary.ricci_max, *hi) : *hi;
    }
  }
  summary.pass = summary.failed_rows == 0;
}

namespace {

nlohmann::json grid_json(const GridSpec& grid) {
  nlohmann::json box = nlohmann::json::array();
  for (const Interval& r : grid.box.ranges) box.push_back({r.lo, r.hi});
  return {{"box", box}, {"resolution", grid.resolution}};
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json tolerances = nlohmann::json::object();
  for (const Check& c : checks) {
    tolerances[c.name] = {{"tolerance", c.tolerance}, {"strict", c.strict}};
  }

  nlohmann::json json_rows = nlohmann::json::array();
  for (const ReportRow& row : rows) {
    nlohmann::json residuals = nlohmann::json::object();
    nlohmann::json pass = row.edge ? nlohmann::json(nullptr) : nlohmann::json::object();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      residuals[checks[i].name] = row.residuals.at(i);
      if (!row.edge) pass[checks[i].name] = checks[i].accepts(row.residuals.at(i));
    }
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [key, v] : row.values) values[key] = v;
    json_rows.push_back({{"index", row.index},
                         {"point", row.point},
                         {"edge", row.edge},
                         {"residuals", residuals},
                         {"pass", pass},
                         {"values", values}});
  }

  nlohmann::json max_residual = nlohmann::json::object();
  for (std::size_t i = 0; i < checks.size() && i < summary.max_residual.size(); ++i) {
    max_residual[checks[i].name] = summary.max_residual[i];
  }
  nlohmann::json json_summary = {{"max_residual", max_residual},
                                 {"rows", summary.rows},
                                 {"edge_rows", summary.edge_rows},
                                 {"failed_rows", summary.failed_rows},
                                 {"pass", summary.pass}};
  json_summary["ricci_eig_min"] =
      summary.ricci_min ? nlohmann::json(*summary.ricci_min) : nlohmann::json(nullptr);
  json_summary["ricci_eig_max"] =
      summary.ricci_max ? nlohmann::json(*summary.ricci_max) : nlohmann::json(nullptr);
  if (summary.gauss_image_dc_diameter) {
    json_summary["gauss_image_dc_diameter"] = {
        {"value", *summary.gauss_image_dc_diameter},
        {"kind", "evidence: max pairwise canonical distance over sampled Gauss-image points"}};
  } else {
    json_summary["gauss_image_dc_diameter"] = nullptr;
  }

  nlohmann::json out = {{"schema", kReportSchema},
                        {"suite", suite},
                        {"entry", entry},
                        {"parameters", parameters},
                        {"tolerances", tolerances},
                        {"rows", json_rows},
                        {"summary", json_summary},
                        {"notes", notes}};
  out["grid"] = grid ? grid_json(*grid) : nlohmann::json(nullptr);
  return out;
}

std::string VerificationReport::to_csv() const {
  std::vector<std::string> value_names;
  for (const ReportRow& row : rows) {
    for (const auto& [key, v] : row.values) {
      if (std::find(value_names.begin(), value_names.end(), key) == value_names.end()) {
        value_names.push_back(key);
      }
    }
  }
  const std::size_t dims = rows.empty() ? 0 : rows.front().index.size();
  const std::size_t point_dims = rows.empty() ? 0 : rows.front().point.size();

  std::ostringstream os;
  std::vector<std::string> header;
  for (std::size_t i = 0; i < dims; ++i) header.push_back("index_" + std::to_string(i));
  for (std::size_t i = 0; i < point_dims; ++i) header.push_back("point_" + std::to_string(i));
  header.emplace_back("edge");
  for (const Check& c : checks) header.push_back(c.name);
  header.insert(header.end(), value_names.begin(), value_names.end());
  header.emplace_back("pass");
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';

  for (const ReportRow& row : rows) {
    std::vector<std::string> cells;
    for (int i : row.index) cells.push_back(std::to_string(i));
    for (double x : row.point) cells.push_back(format_double(x));
    cells.emplace_back(row.edge ? "1" : "0");
    for (double r : row.residuals) cells.push_back(format_double(r));
    for (const std::string& name : value_names) {
      auto v = row.value(name);
      cells.push_back(v ? format_double(*v) : "");
    }
    cells.emplace_back(row.edge ? "edge" : (row_passes(row) ? "1" : "0"));
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  }
  return os.str();
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

}  // namespace gaussric
