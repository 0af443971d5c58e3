// Command-line front end: index sets, dimension tables, combination
// coefficients, node layouts, basis construction/export, bulk
// evaluation and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "serendipity/basis.hpp"
#include "serendipity/coefficients.hpp"
#include "serendipity/grid.hpp"
#include "serendipity/io.hpp"
#include "serendipity/lower_set.hpp"
#include "serendipity/tabulate.hpp"

namespace {

using nlohmann::json;
using namespace serendipity;

struct RunConfig {
  int n = 2;
  int r = 2;
  std::string scheme = "uniform";
  std::string format = "text";
  std::string out;
  std::string points;
  std::string basis_file;
  std::string kernel = "auto";
  int max_n = 4;
  int max_r = 8;
  int grid = 0;
  Limits limits;
};

// writes to --out when given, stdout otherwise
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

GridScheme load_scheme(const RunConfig& config) {
  const std::string& name = config.scheme;
  if (name.rfind("custom:", 0) == 0) {
    const std::string path = name.substr(7);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open custom scheme file '" + path + "'");
    json j;
    in >> j;
    return GridScheme::custom(io::custom_interior_from_json(j));
  }
  return GridScheme::parse(name);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string expected;
  for (const char* a : allowed) expected += std::string(expected.empty() ? "" : ", ") + a;
  throw std::invalid_argument("format '" + format + "' not supported here (expected: " + expected + ")");
}

int cmd_dims(const RunConfig& config) {
  check_format(config.format, {"text", "json", "csv"});
  if (config.max_n < 1 || config.max_r < 1)
    throw std::invalid_argument("dims: --max-n and --max-r must be >= 1");
  if (config.max_n > config.limits.max_n || config.max_r > config.limits.max_r)
    throw std::invalid_argument("dims: bounds exceed the configured limits");
  Output out(config.out);
  auto& os = out.stream();

  struct Cell { std::int64_t formula; std::int64_t enumerated; };
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(config.max_n));
  bool mismatch = false;
  for (int n = 1; n <= config.max_n; ++n)
    for (int r = 1; r <= config.max_r; ++r) {
      const std::int64_t formula = serendipity_dimension(n, r);
      const std::int64_t enumerated =
          static_cast<std::int64_t>(serendipity_set(n, r, config.limits).size());
      cells[static_cast<std::size_t>(n - 1)].push_back({formula, enumerated});
      if (formula != enumerated) mismatch = true;
    }

  if (config.format == "json") {
    json rows = json::array();
    for (int n = 1; n <= config.max_n; ++n)
      for (int r = 1; r <= config.max_r; ++r) {
        const auto& c = cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r - 1)];
        rows.push_back(json{{"n", n},
                            {"r", r},
                            {"dimension", c.formula},
                            {"enumerated", c.enumerated},
                            {"match", c.formula == c.enumerated}});
      }
    os << rows.dump(2) << "\n";
  } else if (config.format == "csv") {
    os << "n,r,dimension,enumerated,match\n";
    for (int n = 1; n <= config.max_n; ++n)
      for (int r = 1; r <= config.max_r; ++r) {
        const auto& c = cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r - 1)];
        os << n << "," << r << "," << c.formula << "," << c.enumerated << ","
           << (c.formula == c.enumerated ? "yes" : "MISMATCH") << "\n";
      }
  } else {
    os << std::setw(5) << "n\\r";
    for (int r = 1; r <= config.max_r; ++r) os << std::setw(8) << r;
    os << "\n";
    for (int n = 1; n <= config.max_n; ++n) {
      os << std::setw(5) << n;
      for (int r = 1; r <= config.max_r; ++r) {
        const auto& c = cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r - 1)];
        std::string cell = std::to_string(c.formula);
        if (c.formula != c.enumerated) cell += "!=" + std::to_string(c.enumerated);
        os << std::setw(8) << cell;
      }
      os << "\n";
    }
  }
  if (mismatch) {
    std::cerr << "dims: formula/enumeration mismatch detected\n";
    return 1;
  }
  return 0;
}

int cmd_index_set(const RunConfig& config) {
  check_format(config.format, {"text", "json", "csv"});
  Output out(config.out);
  auto& os = out.stream();
  const LowerSet sr = serendipity_set(config.n, config.r, config.limits);
  if (config.format == "json") {
    json rows = json::array();
    for (const auto& alpha : sr.members()) rows.push_back(alpha.entries());
    os << rows.dump(2) << "\n";
  } else if (config.format == "csv") {
    for (int j = 1; j <= config.n; ++j) os << "alpha_" << j << (j < config.n ? "," : "\n");
    for (const auto& alpha : sr.members())
      for (int j = 0; j < config.n; ++j) os << alpha[j] << (j < config.n - 1 ? "," : "\n");
  } else {
    for (const auto& alpha : sr.members()) os << alpha.to_string() << "\n";
  }
  return 0;
}

int cmd_coeffs(const RunConfig& config) {
  check_format(config.format, {"text", "json", "csv"});
  Output out(config.out);
  auto& os = out.stream();
  const CoefficientTable table = coefficient_table(config.n, config.r, config.limits);
  if (config.format == "json") {
    json j = io::coefficient_table_to_json(table);
    for (auto& e : j["entries"]) {
      const MultiIndex alpha(e["alpha"].get<std::vector<int>>());
      e["m1"] = alpha.multiplicity(1);
      e["k"] = config.r - alpha.superlinear_degree();
    }
    os << j.dump(2) << "\n";
  } else if (config.format == "csv") {
    for (int j = 1; j <= config.n; ++j) os << "alpha_" << j << ",";
    os << "c,m1,k\n";
    for (const auto& [alpha, c] : table.entries()) {
      for (int j = 0; j < config.n; ++j) os << alpha[j] << ",";
      os << c << "," << alpha.multiplicity(1) << "," << config.r - alpha.superlinear_degree()
         << "\n";
    }
  } else {
    os << "# nonzero combination coefficients, n=" << config.n << " r=" << config.r << "\n";
    os << std::setw(16) << "alpha" << std::setw(6) << "c" << std::setw(6) << "m1" << std::setw(6)
       << "k" << "\n";
    for (const auto& [alpha, c] : table.entries())
      os << std::setw(16) << alpha.to_string() << std::setw(6) << c << std::setw(6)
         << alpha.multiplicity(1) << std::setw(6) << config.r - alpha.superlinear_degree() << "\n";
  }
  return 0;
}

int cmd_cmk(const RunConfig& config) {
  check_format(config.format, {"text", "json"});
  Output out(config.out);
  auto& os = out.stream();
  if (config.format == "json") {
    const auto table = cmk_table(config.n);
    json rows = json::array();
    for (int m = 0; m < config.n; ++m)
      rows.push_back(json{{"m", m}, {"values", table[static_cast<std::size_t>(m)]}});
    os << json{{"n", config.n}, {"rows", rows}}.dump(2) << "\n";
  } else {
    const std::string text = io::cmk_text(config.n);
    os << "# c_{m,k} for n=" << config.n << " (rows m, columns k)\n" << text;
  }
  return 0;
}

int cmd_nodes(const RunConfig& config) {
  check_format(config.format, {"csv", "json", "text"});  // text == csv here
  Output out(config.out);
  auto& os = out.stream();
  const GridCoordinates coords =
      build_coordinates(load_scheme(config), config.n, config.r, config.limits);
  const LowerSet sr = serendipity_set(config.n, config.r, config.limits);
  if (config.format == "json")
    os << io::nodes_to_json(coords, sr).dump(2) << "\n";
  else
    io::write_nodes_csv(os, coords, sr);
  return 0;
}

int cmd_basis(const RunConfig& config) {
  Output out(config.out);
  const SerendipityBasis basis =
      build_basis(config.n, config.r, load_scheme(config), config.limits);
  out.stream() << io::basis_to_json(basis).dump(2) << "\n";
  return 0;
}

int cmd_eval(const RunConfig& config) {
  if (config.basis_file.empty()) throw std::invalid_argument("eval: --basis is required");
  std::ifstream in(config.basis_file);
  if (!in) throw std::runtime_error("cannot open basis file '" + config.basis_file + "'");
  json j;
  in >> j;
  const io::LoadedBasis basis = io::basis_from_json(j);

  std::vector<double> points_flat;
  if (!config.points.empty()) {
    std::ifstream pts(config.points);
    if (!pts) throw std::runtime_error("cannot open points file '" + config.points + "'");
    points_flat = io::read_points_csv(pts, basis.n);
  } else if (config.grid > 1) {
    // uniform sampling grid over [-1,1]^n for plot data
    std::vector<int> idx(static_cast<std::size_t>(basis.n), 0);
    while (true) {
      for (int j2 = 0; j2 < basis.n; ++j2)
        points_flat.push_back(-1.0 + 2.0 * idx[static_cast<std::size_t>(j2)] / (config.grid - 1));
      int ax = basis.n - 1;
      while (ax >= 0 && ++idx[static_cast<std::size_t>(ax)] == config.grid)
        idx[static_cast<std::size_t>(ax--)] = 0;
      if (ax < 0) break;
    }
  } else {
    throw std::invalid_argument("eval: provide --points FILE or --grid K (K >= 2)");
  }

  std::vector<tabulate::CompiledPolynomial> compiled;
  std::vector<MultiIndex> indices;
  compiled.reserve(basis.functions.size());
  for (const auto& f : basis.functions) {
    compiled.push_back(tabulate::compile(f.function));
    indices.push_back(f.index);
  }
  const auto values =
      tabulate::evaluate_batch(compiled, points_flat, tabulate::parse_kernel(config.kernel));

  Output out(config.out);
  io::write_eval_csv(out.stream(), basis.n, indices, points_flat, values);
  return 0;
}

int cmd_verify(const RunConfig& config) {
  check_format(config.format, {"text", "json"});
  Output out(config.out);
  auto& os = out.stream();
  const SerendipityBasis basis =
      build_basis(config.n, config.r, load_scheme(config), config.limits);
  const VerifyReport report = verify(basis);
  if (config.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back(json{{"name", c.name},
                            {"passed", c.passed},
                            {"detail", c.detail},
                            {"worst_residual", to_string(c.worst_residual)}});
    os << json{{"n", config.n},
               {"r", config.r},
               {"scheme", basis.scheme_name()},
               {"passed", report.all_passed()},
               {"checks", checks}}
              .dump(2)
       << "\n";
  } else {
    os << "basis n=" << config.n << " r=" << config.r << " scheme=" << basis.scheme_name()
       << " (" << basis.size() << " functions)\n";
    for (const auto& c : report.checks) {
      os << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name;
      if (!c.passed) os << "  " << c.detail << " (residual " << to_string(c.worst_residual) << ")";
      os << "\n";
    }
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nodal and Hermite bases for serendipity elements on [-1,1]^n"};
  app.require_subcommand(1);

  RunConfig config;

  auto add_common = [&](CLI::App* cmd, bool with_scheme) {
    cmd->add_option("--n", config.n, "space dimension");
    cmd->add_option("--r", config.r, "order");
    if (with_scheme)
      cmd->add_option("--scheme", config.scheme,
                      "grid scheme: uniform | symmetric | hermite | custom:<file>");
    cmd->add_option("--format", config.format, "output format");
    cmd->add_option("--out", config.out, "output file (default: stdout)");
    cmd->add_option("--max-n", config.limits.max_n, "override the dimension guard rail");
    cmd->add_option("--max-r", config.limits.max_r, "override the order guard rail");
  };

  CLI::App* dims = app.add_subcommand("dims", "dimension table, formula vs enumeration");
  dims->add_option("--max-n", config.max_n, "largest dimension");
  dims->add_option("--max-r", config.max_r, "largest order");
  dims->add_option("--format", config.format, "text | json | csv");
  dims->add_option("--out", config.out, "output file (default: stdout)");

  CLI::App* index_set = app.add_subcommand("index-set", "members of the index set S_r");
  add_common(index_set, false);

  CLI::App* coeffs = app.add_subcommand("coeffs", "nonzero combination coefficients for S_r");
  add_common(coeffs, false);

  CLI::App* cmk = app.add_subcommand("cmk", "the c_{m,k} coefficient table");
  cmk->add_option("--n", config.n, "space dimension");
  cmk->add_option("--format", config.format, "text | json");
  cmk->add_option("--out", config.out, "output file (default: stdout)");

  CLI::App* nodes = app.add_subcommand("nodes", "node layout (index, point, derivative order)");
  add_common(nodes, true);

  CLI::App* basis = app.add_subcommand("basis", "build a basis and export it as JSON");
  add_common(basis, true);

  CLI::App* eval = app.add_subcommand("eval", "evaluate an exported basis at points");
  eval->add_option("--basis", config.basis_file, "basis JSON file (from `basis`)")->required();
  eval->add_option("--points", config.points, "CSV file of evaluation points");
  eval->add_option("--grid", config.grid, "uniform grid resolution per axis (plot data)");
  eval->add_option("--kernel", config.kernel, "evaluation kernel: auto | scalar | avx2 | neon");
  eval->add_option("--out", config.out, "output file (default: stdout)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suite on a basis");
  add_common(verify_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dims->parsed()) return cmd_dims(config);
    if (index_set->parsed()) return cmd_index_set(config);
    if (coeffs->parsed()) return cmd_coeffs(config);
    if (cmk->parsed()) return cmd_cmk(config);
    if (nodes->parsed()) return cmd_nodes(config);
    if (basis->parsed()) return cmd_basis(config);
    if (eval->parsed()) return cmd_eval(config);
    if (verify_cmd->parsed()) return cmd_verify(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
