#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gaussric/catalog.hpp"
#include "gaussric/errors.hpp"
#include "gaussric/grassmann.hpp"
#include "gaussric/spherical.hpp"
#include "gaussric/suites.hpp"

namespace gaussric::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string out_dir = "reports";
  std::string format = "both";
};

struct GridOverrides {
  std::string grid;
  std::string box;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) parts.push_back(item);
  return parts;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("not a number: '" + text + "'");
  return value;
}

int parse_count(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value < 1) {
    throw UsageError("not a positive integer: '" + text + "'");
  }
  return value;
}

GridSpec apply_overrides(GridSpec grid, const GridOverrides& o) {
  const std::size_t dim = grid.resolution.size();
  if (!o.grid.empty()) {
    const std::vector<std::string> parts = split(o.grid, 'x');
    if (parts.empty() || parts.size() > dim) {
      throw UsageError("--grid expects N or NxM matching the chart dimension");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      grid.resolution[i] = parse_count(parts[std::min(i, parts.size() - 1)]);
    }
  }
  if (!o.box.empty()) {
    const std::vector<std::string> parts = split(o.box, ',');
    if (parts.size() != 2 * dim) {
      throw UsageError("--box expects " + std::to_string(2 * dim) + " comma-separated bounds");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      grid.box.ranges[i] = Interval{parse_number(parts[2 * i]), parse_number(parts[2 * i + 1])};
    }
  }
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return grid;
}

std::string file_stem(const std::string& suite, const std::string& entry) {
  std::string stem = suite + "-" + entry;
  for (char& c : stem) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) c = '_';
  }
  return stem;
}

void write_report(const VerificationReport& report, const OutputOptions& opts, std::ostream& out) {
  fs::create_directories(opts.out_dir);
  const fs::path stem = fs::path(opts.out_dir) / file_stem(report.suite, report.entry);
  if (opts.format == "json" || opts.format == "both") {
    std::ofstream(stem.string() + ".json") << report.to_json().dump(2) << '\n';
    out << "  wrote " << stem.string() << ".json\n";
  }
  if (opts.format == "csv" || opts.format == "both") {
    std::ofstream(stem.string() + ".csv") << report.to_csv();
    out << "  wrote " << stem.string() << ".csv\n";
  }
}

void print_summary(const VerificationReport& report, std::ostream& out) {
  out << report.suite << ' ' << report.entry << ": " << (report.summary.pass ? "PASS" : "FAIL")
      << " (" << report.summary.rows << " rows, " << report.summary.edge_rows << " edge, "
      << report.summary.failed_rows << " failed)\n";
  out << std::setprecision(3) << std::scientific;
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const Check& c = report.checks[i];
    const double r = i < report.summary.max_residual.size() ? report.summary.max_residual[i] : 0.0;
    out << "  " << std::left << std::setw(28) << c.name << " max " << r << (c.strict ? " < " : " <= ")
        << c.tolerance << (c.accepts(r) ? "" : "  FAIL") << '\n';
  }
  if (report.summary.ricci_min && report.summary.ricci_max) {
    out << "  frame Ricci eigenvalues in [" << *report.summary.ricci_min << ", "
        << *report.summary.ricci_max << "]\n";
  }
  if (report.summary.gauss_image_dc_diameter) {
    out << "  sampled Gauss-image d_c diameter (evidence) " << *report.summary.gauss_image_dc_diameter
        << '\n';
  }
  for (const std::string& note : report.notes) out << "  " << note << '\n';
  out << std::defaultfloat << std::right;
}

CatalogEntry lookup(const std::string& name) {
  try {
    return Catalog::instance().get(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_verify(const std::vector<std::string>& entries, const std::string& suite,
               const GridOverrides& grid_opts, const Tolerances& tol, const OutputOptions& opts,
               std::ostream& out) {
  std::vector<CatalogEntry> resolved;
  for (const std::string& name : entries) resolved.push_back(lookup(name));
  bool all_pass = true;
  for (const CatalogEntry& entry : resolved) {
    const GridSpec grid = apply_overrides(entry.default_grid, grid_opts);
    VerificationReport report;
    try {
      if (suite == "euclid") {
        report = verify_corollary_minimal(entry.immersion, grid, tol);
      } else if (suite == "sphere") {
        if (!entry.nested) {
          throw UsageError("entry '" + entry.name + "' does not lie in a unit sphere");
        }
        report = verify_corollary_sphere(*entry.nested, grid, tol);
      } else {
        report = verify_gauss_image(entry.immersion, grid);
      }
    } catch (const GeometryError& e) {
      throw UsageError(e.what());
    }
    report.entry = entry.name;
    print_summary(report, out);
    write_report(report, opts, out);
    all_pass = all_pass && report.summary.pass;
  }
  return all_pass ? kExitPass : kExitFailure;
}

Matrix parse_plane_spec(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '[' && spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot read plane file '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed plane JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("basis")) j = j["basis"];
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
    throw UsageError("a plane is a non-empty JSON array of basis vectors");
  }
  const auto m = static_cast<Eigen::Index>(j.size());
  const auto k = static_cast<Eigen::Index>(j.front().size());
  Matrix basis(k, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    const nlohmann::json& v = j[static_cast<std::size_t>(c)];
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != k) {
      throw UsageError("basis vectors must all have the same length");
    }
    for (Eigen::Index r = 0; r < k; ++r) {
      const nlohmann::json& x = v[static_cast<std::size_t>(r)];
      if (!x.is_number()) throw UsageError("basis coordinates must be numbers");
      basis(r, c) = x.get<double>();
    }
  }
  return basis;
}

int cmd_distance(const std::string& p_spec, const std::string& q_spec, const std::string& format,
                 std::ostream& out) {
  OrientedPlane p(Matrix::Identity(1, 1));
  OrientedPlane q(Matrix::Identity(1, 1));
  try {
    p = OrientedPlane::from_spanning(parse_plane_spec(p_spec));
    q = OrientedPlane::from_spanning(parse_plane_spec(q_spec));
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
  if (p.plane_dim() != q.plane_dim() || p.ambient_dim() != q.ambient_dim()) {
    throw UsageError("incompatible planes: dimensions differ");
  }
  const PrincipalCosines cosines = principal_cosines(p, q);
  const double dc = canonical_distance(p, q);
  const double ds = spherical_distance(p, q);
  const double embedded = sphere_distance_embedded(pluecker_embed(p), pluecker_embed(q));
  if (format == "json") {
    nlohmann::json j = {{"schema", kReportSchema},
                        {"m", p.plane_dim()},
                        {"k", p.ambient_dim()},
                        {"principal_cosines", cosines.values},
                        {"canonical_distance", dc},
                        {"spherical_distance", ds},
                        {"embedded_sphere_distance", embedded}};
    out << j.dump(2) << '\n';
  } else {
    out << "principal_cosines=";
    for (std::size_t i = 0; i < cosines.values.size(); ++i) {
      out << (i ? "," : "") << format_double(cosines.values[i]);
    }
    out << "\ncanonical_distance=" << format_double(dc)
        << "\nspherical_distance=" << format_double(ds)
        << "\nembedded_sphere_distance=" << format_double(embedded) << '\n';
  }
  return kExitPass;
}

int cmd_scan(const std::string& name, const std::vector<double>& extents,
             const GridOverrides& grid_opts, const OutputOptions& opts, std::ostream& out) {
  const CatalogEntry entry = lookup(name);
  if (entry.minimal_in != MinimalIn::euclidean) {
    throw UsageError("scan-ric needs an entry minimal in euclidean space; '" + entry.name +
                     "' is minimal_in " + to_string(entry.minimal_in));
  }
  GridOverrides overrides = grid_opts;
  overrides.box.clear();
  GridSpec base = apply_overrides(entry.default_grid, overrides);
  VerificationReport report;
  try {
    report = scan_ricci(entry.immersion, base, extents, entry.closed_forms.ricci);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
  report.entry = entry.name;
  print_summary(report, out);
  out << std::setprecision(6);
  for (const ReportRow& row : report.rows) {
    out << "  V=" << row.point[0] << " max_eig=" << row.value("ricci_eig_max").value_or(0.0)
        << " min_eig=" << row.value("ricci_eig_min").value_or(0.0)
        << " dc_diameter=" << row.value("gauss_image_dc_diameter").value_or(0.0);
    if (auto closed = row.value("closed_form_max")) out << " closed_form_max=" << *closed;
    out << '\n';
  }
  out << std::defaultfloat;
  write_report(report, opts, out);
  return report.summary.pass ? kExitPass : kExitFailure;
}

std::vector<PlaneDims> parse_dims(const std::vector<std::string>& items) {
  std::vector<PlaneDims> dims;
  for (const std::string& item : items) {
    const std::vector<std::string> parts = split(item, 'x');
    if (parts.size() != 2) throw UsageError("--dims entries look like 2x4 (m x k)");
    const PlaneDims d{parse_count(parts[0]), parse_count(parts[1])};
    if (d.m > d.k) throw UsageError("--dims needs m <= k");
    dims.push_back(d);
  }
  return dims;
}

int cmd_fuzz(std::size_t count, const std::vector<std::string>& dims_text, std::uint64_t seed,
             const OutputOptions& opts, std::ostream& out) {
  const VerificationReport report = grassmann_fuzz(count, parse_dims(dims_text), seed);
  print_summary(report, out);
  write_report(report, opts, out);
  return report.summary.pass ? kExitPass : kExitFailure;
}

int cmd_list(std::ostream& out) {
  for (const EntryInfo& e : Catalog::instance().list_entries()) {
    out << e.name << (e.parameter.empty() ? "" : "(" + e.parameter + ")") << "  m=" << e.domain_dim
        << " k=" << e.ambient_dim << " minimal_in=" << to_string(e.minimal_in)
        << (e.in_sphere ? " sphere-nested" : "") << "  " << e.description << '\n';
  }
  return kExitPass;
}

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_dir, "Directory for report files")->capture_default_str();
  cmd->add_option("--format", opts.format, "Report files to write")
      ->check(CLI::IsMember({"json", "csv", "both"}))
      ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, GridOverrides& grid) {
  cmd->add_option("--grid", grid.grid, "Grid resolution, N or NxM");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss-map pullback and Grassmannian distance verification"};
  app.require_subcommand(1);

  OutputOptions verify_out;
  GridOverrides verify_grid;
  Tolerances tol;
  std::string suite = "euclid";
  std::vector<std::string> entries;
  auto* verify = app.add_subcommand("verify", "Run a verification suite on catalog entries");
  verify->add_option("entries", entries, "Catalog entry names")->required();
  verify->add_option("--suite", suite, "euclid | sphere | grassmann")
      ->check(CLI::IsMember({"euclid", "sphere", "grassmann"}))
      ->capture_default_str();
  add_grid_options(verify, verify_grid);
  verify->add_option("--box", verify_grid.box, "Parameter box a,b[,c,d]");
  verify->add_option("--tol-id", tol.identity, "Identity tolerance");
  auto* tol_min = verify->add_option("--tol-min", tol.minimality, "Minimality tolerance");
  add_output_options(verify, verify_out);

  std::string p_spec;
  std::string q_spec;
  std::string distance_format = "text";
  auto* distance = app.add_subcommand("distance", "Distances between two oriented planes");
  distance->add_option("P", p_spec, "Inline JSON list of basis vectors, or a file")->required();
  distance->add_option("Q", q_spec, "Inline JSON list of basis vectors, or a file")->required();
  distance->add_option("--format", distance_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  OutputOptions scan_out;
  GridOverrides scan_grid;
  std::string scan_entry;
  std::vector<double> extents = {1, 2, 3, 5};
  auto* scan = app.add_subcommand("scan-ric", "Ricci sign/sup scan on expanding domains");
  scan->add_option("entry", scan_entry, "Catalog entry")->required();
  scan->add_option("-V,--extents", extents, "Half-widths V of the scanned axis")
      ->delimiter(',')
      ->capture_default_str();
  add_grid_options(scan, scan_grid);
  add_output_options(scan, scan_out);

  OutputOptions fuzz_out;
  std::size_t count = 1000;
  std::vector<std::string> dims = {"1x3", "2x4", "2x5", "3x6"};
  std::uint64_t seed = 0;
  auto* fuzz = app.add_subcommand("fuzz", "Random plane-pair distance identities");
  fuzz->add_option("--count", count, "Pairs per dims entry")->capture_default_str();
  fuzz->add_option("--dims", dims, "List of m x k, e.g. 2x4,1x3")
      ->delimiter(',')
      ->capture_default_str();
  fuzz->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_output_options(fuzz, fuzz_out);

  auto* list = app.add_subcommand("list", "List catalog entries");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!tol_min->empty()) tol.minimality_fd = tol.minimality;

  try {
    if (verify->parsed()) return cmd_verify(entries, suite, verify_grid, tol, verify_out, out);
    if (distance->parsed()) return cmd_distance(p_spec, q_spec, distance_format, out);
    if (scan->parsed()) return cmd_scan(scan_entry, extents, scan_grid, scan_out, out);
    if (fuzz->parsed()) return cmd_fuzz(count, dims, seed, fuzz_out, out);
    if (list->parsed()) return cmd_list(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "cannot write reports: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gaussric::cli
