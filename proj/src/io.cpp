#include "serendipity/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace serendipity::io {

namespace {

json multi_index_to_json(const MultiIndex& alpha) { return json(alpha.entries()); }

MultiIndex multi_index_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a multi-index array");
  return MultiIndex(j.get<std::vector<int>>());
}

json rational_to_json(const Rational& q) { return json(to_string(q)); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return rational(j.get<long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_float())
    throw std::invalid_argument("floating-point values are rejected; use \"p/q\" strings");
  throw std::invalid_argument("expected an exact rational (\"p/q\" string or integer)");
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [exp, coeff] : p.terms()) {
    terms.push_back(json{{"exponents", multi_index_to_json(exp)},
                         {"numerator", coeff.get_num().get_str()},
                         {"denominator", coeff.get_den().get_str()}});
  }
  return terms;
}

Polynomial polynomial_from_json(const json& j, int dimension) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of terms");
  Polynomial p(dimension);
  for (const auto& term : j) {
    std::vector<int> exp = term.at("exponents").get<std::vector<int>>();
    const Rational denominator = rational_from_json(term.at("denominator"));
    if (denominator == 0) throw std::invalid_argument("polynomial: zero denominator");
    const Rational coeff = rational_from_json(term.at("numerator")) / denominator;
    if (static_cast<int>(exp.size()) != dimension)
      throw std::invalid_argument("polynomial: exponent dimension mismatch");
    p += Polynomial::monomial(MultiIndex(exp), coeff);
  }
  return p;
}

json coefficient_table_to_json(const CoefficientTable& table) {
  json entries = json::array();
  for (const auto& [alpha, c] : table.entries())
    entries.push_back(json{{"alpha", multi_index_to_json(alpha)}, {"c", c}});
  return json{{"n", table.dimension()}, {"r", table.order()}, {"entries", entries}};
}

CoefficientTable coefficient_table_from_json(const json& j) {
  std::map<MultiIndex, std::int64_t> entries;
  for (const auto& e : j.at("entries"))
    entries.emplace(multi_index_from_json(e.at("alpha")), e.at("c").get<std::int64_t>());
  return CoefficientTable(j.at("n").get<int>(), j.at("r").get<int>(), std::move(entries));
}

json basis_to_json(const SerendipityBasis& basis) {
  json functions = json::array();
  for (const auto& lambda : basis.functionals()) {
    json point = json::array();
    for (const auto& x : lambda.point) point.push_back(rational_to_json(x));
    functions.push_back(json{
        {"index", multi_index_to_json(lambda.source_index)},
        {"face", json(face_of(lambda.source_index).entries())},
        {"derivative", multi_index_to_json(lambda.derivative_order)},
        {"point", point},
        {"polynomial", polynomial_to_json(basis.function(lambda.source_index))},
    });
  }
  return json{{"n", basis.dimension()},
              {"r", basis.order()},
              {"scheme", basis.scheme_name()},
              {"coefficient_table", coefficient_table_to_json(basis.coefficients())},
              {"functions", functions}};
}

LoadedBasis basis_from_json(const json& j) {
  LoadedBasis basis;
  basis.n = j.at("n").get<int>();
  basis.r = j.at("r").get<int>();
  basis.scheme = j.at("scheme").get<std::string>();
  for (const auto& f : j.at("functions")) {
    LoadedBasisFunction fn{
        multi_index_from_json(f.at("index")),
        FaceIndex(f.at("face").get<std::vector<int>>()),
        multi_index_from_json(f.at("derivative")),
        {},
        polynomial_from_json(f.at("polynomial"), basis.n),
    };
    for (const auto& x : f.at("point")) fn.point.push_back(rational_from_json(x));
    basis.functions.push_back(std::move(fn));
  }
  std::sort(basis.functions.begin(), basis.functions.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return basis;
}

std::vector<std::vector<Rational>> custom_interior_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("custom scheme: expected an array of per-axis arrays");
  std::vector<std::vector<Rational>> axes;
  for (const auto& axis : j) {
    if (!axis.is_array())
      throw std::invalid_argument("custom scheme: expected an array of per-axis arrays");
    std::vector<Rational> coords;
    for (const auto& v : axis) coords.push_back(rational_from_json(v));
    axes.push_back(std::move(coords));
  }
  return axes;
}

namespace {

void write_double(std::ostream& os, double v) {
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
}

}  // namespace

void write_nodes_csv(std::ostream& os, const GridCoordinates& coords, const LowerSet& L) {
  const int n = coords.dimension();
  for (int j = 1; j <= n; ++j) os << "alpha_" << j << ",";
  for (int j = 1; j <= n; ++j) os << "x_" << j << ",";
  for (int j = 1; j <= n; ++j) os << "rho_" << j << (j < n ? "," : "\n");
  for (const auto& lambda : functionals_for(coords, L)) {
    for (int j = 0; j < n; ++j) os << lambda.source_index[j] << ",";
    for (int j = 0; j < n; ++j) {
      write_double(os, to_double(lambda.point[static_cast<std::size_t>(j)]));
      os << ",";
    }
    for (int j = 0; j < n; ++j) os << lambda.derivative_order[j] << (j < n - 1 ? "," : "\n");
  }
}

json nodes_to_json(const GridCoordinates& coords, const LowerSet& L) {
  json rows = json::array();
  for (const auto& lambda : functionals_for(coords, L)) {
    json point = json::array();
    for (const auto& x : lambda.point) point.push_back(rational_to_json(x));
    rows.push_back(json{{"index", multi_index_to_json(lambda.source_index)},
                        {"point", point},
                        {"derivative", multi_index_to_json(lambda.derivative_order)}});
  }
  return rows;
}

std::vector<double> read_points_csv(std::istream& is, int dimension) {
  std::vector<double> flat;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw std::invalid_argument("points file: non-numeric row: '" + line + "'");
    }
    if (static_cast<int>(row.size()) != dimension)
      throw std::invalid_argument("points file: expected " + std::to_string(dimension) +
                                  " coordinates per row");
    flat.insert(flat.end(), row.begin(), row.end());
    first = false;
  }
  return flat;
}

void write_eval_csv(std::ostream& os, int dimension,
                    const std::vector<MultiIndex>& function_indices,
                    const std::vector<double>& points_flat, const std::vector<double>& values) {
  const std::size_t n = static_cast<std::size_t>(dimension);
  const std::size_t point_count = points_flat.size() / n;
  for (int j = 1; j <= dimension; ++j) os << "x_" << j << ",";
  for (int j = 1; j <= dimension; ++j) os << "alpha_" << j << ",";
  os << "value\n";
  for (std::size_t f = 0; f < function_indices.size(); ++f) {
    for (std::size_t pt = 0; pt < point_count; ++pt) {
      for (std::size_t j = 0; j < n; ++j) {
        write_double(os, points_flat[pt * n + j]);
        os << ",";
      }
      for (int j = 0; j < dimension; ++j) os << function_indices[f][j] << ",";
      write_double(os, values[f * point_count + pt]);
      os << "\n";
    }
  }
}

std::string cmk_text(int n) {
  const auto table = cmk_table(n);
  std::ostringstream os;
  for (int m = 0; m < n; ++m) {
    os << std::setw(2) << (m == 0 ? std::to_string(n) : std::string()) << " " << std::setw(2) << m;
    for (const auto v : table[static_cast<std::size_t>(m)]) os << " " << std::setw(4) << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace serendipity::io
