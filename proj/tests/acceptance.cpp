// Acceptance suite: one line per criterion, nonzero exit on any
// failure. Every check is exact (rational/integer arithmetic); the
// stated runtime budgets are enforced.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "serendipity/combinatorics.hpp"

#include "serendipity/basis.hpp"
#include "serendipity/cardinal.hpp"
#include "serendipity/coefficients.hpp"
#include "serendipity/grid.hpp"
#include "serendipity/io.hpp"
#include "serendipity/lower_set.hpp"

using namespace serendipity;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

const char* kSchemes[] = {"uniform", "symmetric", "hermite"};

bool check(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// ---- 1. Table 1 reproduction (exact) --------------------------------

// the printed table: rows (n, m) -> values for k = 0..n+m-1
const std::map<std::pair<int, int>, std::vector<std::int64_t>> kPrintedTable{
    {{1, 0}, {1}},
    {{2, 0}, {1, -1}},
    {{2, 1}, {1, 0, -1}},
    {{3, 0}, {1, -2, 1}},
    {{3, 1}, {1, -1, -1, 1}},
    {{3, 2}, {1, 0, -2, 0, 1}},
    {{4, 0}, {1, -3, 3, -1}},
    {{4, 1}, {1, -2, 0, 2, -1}},
    {{4, 2}, {1, -1, -2, 2, 1, -1}},
    {{4, 3}, {1, 0, -3, 0, 3, 0, -1}},
};

bool criterion_table1(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    const auto table = cmk_table(n);
    ok &= check(static_cast<int>(table.size()) == n, detail, "row count for n=" + std::to_string(n));
    for (int m = 0; m < n; ++m) {
      const auto& expected = kPrintedTable.at({n, m});
      ok &= check(table[static_cast<std::size_t>(m)] == expected, detail,
                  "row n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  return ok;
}

// ---- 2. closed form vs oracle, exhaustive ----------------------------

bool criterion_closed_form_vs_oracle(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4 && ok; ++n)
    for (int r = 1; r <= 9 && ok; ++r) {
      const LowerSet L = serendipity_set(n, r);
      for (const auto& alpha : L.members()) {
        if (coeff_closed_form(n, r, alpha) != coeff_oracle(L, alpha)) {
          ok = check(false, detail,
                     "mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r) + " alpha=" +
                         alpha.to_string());
          break;
        }
      }
    }
  return ok;
}

// ---- 3. dimension identity -------------------------------------------

bool criterion_dimension(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 10; ++r)
      ok &= check(static_cast<std::int64_t>(serendipity_set(n, r).size()) ==
                      serendipity_dimension(n, r),
                  detail, "cardinality vs formula at n=" + std::to_string(n) + " r=" + std::to_string(r));
  ok &= check(serendipity_dimension(2, 2) == 8, detail, "dim(2,2)");
  ok &= check(serendipity_dimension(2, 4) == 17, detail, "dim(2,4)");
  ok &= check(serendipity_dimension(3, 2) == 20, detail, "dim(3,2)");
  return ok;
}

// ---- 4 and 10. biorthogonality and partition of unity -----------------

std::vector<std::pair<int, int>> biorthogonality_cases() {
  std::vector<std::pair<int, int>> cases;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 6; ++r)
      if (serendipity_dimension(n, r) <= 2000) cases.emplace_back(n, r);
  return cases;
}

bool criterion_biorthogonality(std::string& detail) {
  bool ok = true;
  for (const auto& [n, r] : biorthogonality_cases()) {
    for (const auto* scheme : kSchemes) {
      const SerendipityBasis basis = build_basis(n, r, GridScheme::parse(scheme));
      for (const auto& [alpha, phi] : basis.functions())
        for (const auto& lambda : basis.functionals()) {
          const Rational expected = lambda.source_index == alpha ? 1 : 0;
          if (apply_functional(lambda, phi) != expected) {
            ok = check(false, detail,
                       std::string(scheme) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                           " lambda_" + lambda.source_index.to_string() + " phi_" + alpha.to_string());
            if (!ok) return ok;
          }
        }
    }
  }
  return ok;
}

bool criterion_partition_of_unity(std::string& detail) {
  bool ok = true;
  for (const auto& [n, r] : biorthogonality_cases()) {
    for (const auto* scheme : kSchemes) {
      const SerendipityBasis basis = build_basis(n, r, GridScheme::parse(scheme));
      const Polynomial one = Polynomial::constant(n, rational(1));
      const auto data = sample_functionals(basis.coordinates(), basis.index_set(), one);
      Polynomial sum(n);
      for (const auto& [alpha, phi] : basis.functions()) sum += phi * data.at(alpha);
      ok &= check(sum == one, detail,
                  std::string(scheme) + " n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return ok;
}

// ---- 5. polynomial reproduction + negative control --------------------

bool criterion_reproduction(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 5; ++r)
      for (const auto* scheme : kSchemes) {
        const SerendipityBasis basis = build_basis(n, r, GridScheme::parse(scheme));
        for (const auto& gamma : basis.index_set().members()) {
          const Polynomial u = Polynomial::monomial(gamma, rational(1));
          const auto data = sample_functionals(basis.coordinates(), basis.index_set(), u);
          if (interpolate(basis, data) != u) {
            ok = check(false, detail,
                       std::string(scheme) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                           " gamma=" + gamma.to_string());
          }
        }
      }
  // negative control: gamma = (2,2), r = 3, n = 2 lies outside S_3
  for (const auto* scheme : kSchemes) {
    const SerendipityBasis basis = build_basis(2, 3, GridScheme::parse(scheme));
    const Polynomial u = Polynomial::monomial(MultiIndex({2, 2}), rational(1));
    const auto data = sample_functionals(basis.coordinates(), basis.index_set(), u);
    ok &= check(interpolate(basis, data) != u, detail,
                std::string("negative control reproduced under ") + scheme);
  }
  return ok;
}

// ---- 6. printed 2-D and 3-D combination formulas ----------------------

using Support = std::map<MultiIndex, std::int64_t>;

Support symmetrize3(std::initializer_list<std::pair<std::vector<int>, std::int64_t>> seeds) {
  Support support;
  for (const auto& [entries, c] : seeds) {
    std::vector<int> e(entries);
    std::sort(e.begin(), e.end());
    do {
      support[MultiIndex(e)] = c;
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return support;
}

bool criterion_printed_formulas(std::string& detail) {
  // 2-D: p_1 .. p_5 with the p_5 typo resolved to p_31 + p_13
  const std::map<int, Support> two_d{
      {1, {{MultiIndex({1, 1}), 1}}},
      {2, {{MultiIndex({2, 1}), 1}, {MultiIndex({1, 2}), 1}, {MultiIndex({1, 1}), -1}}},
      {3, {{MultiIndex({3, 1}), 1}, {MultiIndex({1, 3}), 1}, {MultiIndex({1, 1}), -1}}},
      {4,
       {{MultiIndex({4, 1}), 1},
        {MultiIndex({1, 4}), 1},
        {MultiIndex({2, 2}), 1},
        {MultiIndex({2, 1}), -1},
        {MultiIndex({1, 2}), -1}}},
      {5,
       {{MultiIndex({5, 1}), 1},
        {MultiIndex({1, 5}), 1},
        {MultiIndex({3, 2}), 1},
        {MultiIndex({2, 3}), 1},
        {MultiIndex({3, 1}), -1},
        {MultiIndex({1, 3}), -1},
        {MultiIndex({2, 2}), -1}}},
  };
  // 3-D: p_1 .. p_5 in the q-notation, the q_123 typo resolved by
  // permutation symmetry
  const std::map<int, Support> three_d{
      {1, symmetrize3({{{1, 1, 1}, 1}})},
      {2, symmetrize3({{{1, 1, 2}, 1}, {{1, 1, 1}, -2}})},
      {3, symmetrize3({{{1, 1, 3}, 1}, {{1, 1, 1}, -2}})},
      {4, symmetrize3({{{1, 2, 2}, 1}, {{1, 1, 4}, 1}, {{1, 1, 2}, -2}, {{1, 1, 1}, 1}})},
      {5,
       symmetrize3(
           {{{1, 2, 3}, 1}, {{1, 2, 2}, -1}, {{1, 1, 5}, 1}, {{1, 1, 3}, -2}, {{1, 1, 1}, 1}})},
  };

  bool ok = true;
  for (const auto& [r, expected] : two_d) {
    const CoefficientTable table = coefficient_table(2, r);
    ok &= check(table.entries() == expected, detail, "2-D combination at r=" + std::to_string(r));
  }
  for (const auto& [r, expected] : three_d) {
    const CoefficientTable table = coefficient_table(3, r);
    ok &= check(table.entries() == expected, detail, "3-D combination at r=" + std::to_string(r));
  }
  return ok;
}

// ---- 7. the all-ones special case --------------------------------------

bool criterion_all_ones(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r < 2 * n; ++r) {
      const std::int64_t sign = (r / 2) % 2 == 0 ? 1 : -1;
      const std::int64_t expected = sign * binomial(n - 1, r / 2);
      const LowerSet L = serendipity_set(n, r);
      ok &= check(coeff_oracle(L, MultiIndex::ones(n)) == expected, detail,
                  "oracle vs formula at n=" + std::to_string(n) + " r=" + std::to_string(r));
      ok &= check(coeff_closed_form(n, r, MultiIndex::ones(n)) == expected, detail,
                  "closed form at n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  return ok;
}

// ---- 8. dimensional nesting --------------------------------------------

bool criterion_nesting(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 5; ++r)
      for (const auto* scheme : kSchemes) {
        const SerendipityBasis basis = build_basis(n, r, GridScheme::parse(scheme));
        // sub-bases per face dimension; the axes share one scheme, so
        // any d-face of the same d reuses the same basis
        std::map<int, SerendipityBasis> by_dim;
        for (const auto& beta : all_faces(n)) {
          const int d = beta.face_dim();
          if (d == n) continue;
          if (d == 0) {
            for (const auto& [alpha, phi] : basis.functions()) {
              const Rational value = std::get<Rational>(restrict_to_face(phi, beta));
              const Rational expected = face_of(alpha) == beta ? 1 : 0;
              ok &= check(value == expected, detail,
                          std::string(scheme) + " n=" + std::to_string(n) + " r=" +
                              std::to_string(r) + " vertex " + beta.to_string());
            }
            continue;
          }
          if (!by_dim.count(d))
            by_dim.emplace(d, build_basis(face_coordinates(basis.coordinates(), beta)));
          const SerendipityBasis& sub = by_dim.at(d);
          for (const auto& [alpha, phi] : basis.functions()) {
            const Polynomial restricted = std::get<Polynomial>(restrict_to_face(phi, beta));
            bool compatible = true;
            std::vector<int> sub_entries;
            for (int j = 0; j < n; ++j) {
              if (beta[j] == 2) sub_entries.push_back(alpha[j]);
              else if (alpha[j] != beta[j]) compatible = false;
            }
            const Polynomial expected =
                compatible ? sub.function(MultiIndex(sub_entries)) : Polynomial(d);
            ok &= check(restricted == expected, detail,
                        std::string(scheme) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                            " face " + beta.to_string() + " phi_" + alpha.to_string());
          }
        }
      }
  return ok;
}

// ---- 9. hermite condition counts and re-indexing ------------------------

bool criterion_hermite_counts(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 8; ++r) {
      std::int64_t total = 0;
      for (const auto& cond : hermite_conditions(n, r))
        total += static_cast<std::int64_t>(cond.orders.size());
      ok &= check(total == serendipity_dimension(n, r), detail,
                  "count at n=" + std::to_string(n) + " r=" + std::to_string(r));

      // the (beta, rho) <-> alpha bijection, exhaustively
      const GridCoordinates coords = build_coordinates(GridScheme::hermite(), n, r);
      std::set<std::pair<FaceIndex, MultiIndex>> expected;
      for (const auto& cond : hermite_conditions(n, r))
        for (const auto& rho : cond.orders) expected.emplace(cond.face, rho);
      std::set<std::pair<FaceIndex, MultiIndex>> seen;
      const LowerSet sr = serendipity_set(n, r);
      for (const auto& alpha : sr.members()) {
        const auto key = std::make_pair(face_of(alpha), coords.left_multiplicity(alpha));
        ok &= check(expected.count(key) == 1, detail,
                    "pair outside the condition sets at " + alpha.to_string());
        ok &= check(seen.insert(key).second, detail, "duplicate pair at " + alpha.to_string());
      }
      ok &= check(seen.size() == expected.size(), detail,
                  "re-indexing misses conditions at n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1. Table 1 reproduction (exact, n=1..4)", 1.0, criterion_table1},
      {"2. closed form vs oracle (exhaustive, n<=4, r<=9)", 30.0, criterion_closed_form_vs_oracle},
      {"3. dimension identity (n<=4, r<=10)", 10.0, criterion_dimension},
      {"4. biorthogonality, exact delta matrices (3 schemes)", 300.0, criterion_biorthogonality},
      {"5. polynomial reproduction + negative control", 300.0, criterion_reproduction},
      {"6. printed 2-D/3-D combination formulas (typos resolved)", 30.0, criterion_printed_formulas},
      {"7. all-ones coefficient, r < 2n, n <= 5", 30.0, criterion_all_ones},
      {"8. dimensional nesting on every face", 300.0, criterion_nesting},
      {"9. hermite condition counts and re-indexing bijection", 60.0, criterion_hermite_counts},
      {"10. partition of unity on all criterion-4 configurations", 300.0,
       criterion_partition_of_unity},
  };

  bool all_passed = true;
  for (auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = false;
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= criterion.budget_seconds;
    const bool ok = passed && in_budget;
    all_passed &= ok;
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << criterion.name << "  (" << std::fixed
         << std::setprecision(2) << seconds << "s / " << criterion.budget_seconds << "s)";
    if (!passed && !detail.empty()) line << "  -- " << detail;
    if (passed && !in_budget) line << "  -- over budget";
    std::cout << line.str() << std::endl;
  }
  return all_passed ? 0 : 1;
}
