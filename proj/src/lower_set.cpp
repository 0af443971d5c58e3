#include "serendipity/lower_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "serendipity/combinatorics.hpp"

namespace serendipity {

namespace {

void check_bounds(int n, int r, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  if (r < 1) throw std::invalid_argument("order r must be >= 1");
  if (n > limits.max_n)
    throw std::invalid_argument("dimension n exceeds the configured limit of " +
                                std::to_string(limits.max_n));
  if (r > limits.max_r)
    throw std::invalid_argument("order r exceeds the configured limit of " +
                                std::to_string(limits.max_r));
}

// Enumerates S_r axis by axis: each axis takes 0, 1 (free) or a value
// 2..budget, where budget is the remaining superlinear degree.
// Increasing per-axis values yield lexicographic order directly.
void enumerate_serendipity(int n, int axis, int budget, std::vector<int>& current,
                           std::vector<MultiIndex>& out) {
  if (axis == n) {
    out.emplace_back(current);
    return;
  }
  const int cap = std::max(1, budget);
  for (int v = 0; v <= cap; ++v) {
    current[static_cast<std::size_t>(axis)] = v;
    enumerate_serendipity(n, axis + 1, v >= 2 ? budget - v : budget, current, out);
  }
}

}  // namespace

LowerSet::LowerSet(int dimension, std::vector<MultiIndex> members)
    : dimension_(dimension), members_(std::move(members)) {
  if (dimension_ < 1) throw std::invalid_argument("LowerSet: dimension must be >= 1");
  for (const auto& m : members_)
    if (m.dimension() != dimension_)
      throw std::invalid_argument("LowerSet: member dimension mismatch");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!is_downward_closed(dimension_, members_))
    throw std::invalid_argument("LowerSet: set is not downward closed");
}

LowerSet::LowerSet(Trusted, int dimension, std::vector<MultiIndex> members)
    : dimension_(dimension), members_(std::move(members)) {}

bool LowerSet::contains(const MultiIndex& alpha) const {
  if (alpha.dimension() != dimension_) return false;
  return std::binary_search(members_.begin(), members_.end(), alpha);
}

bool LowerSet::is_downward_closed(int dimension, const std::vector<MultiIndex>& members) {
  std::vector<MultiIndex> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  for (const auto& alpha : sorted) {
    for (int j = 0; j < dimension; ++j) {
      if (alpha[j] == 0) continue;
      std::vector<int> mu(alpha.entries());
      --mu[static_cast<std::size_t>(j)];
      if (!std::binary_search(sorted.begin(), sorted.end(), MultiIndex(mu))) return false;
    }
  }
  return true;
}

LowerSet serendipity_set(int n, int r, const Limits& limits) {
  check_bounds(n, r, limits);
  std::vector<MultiIndex> members;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  enumerate_serendipity(n, 0, r, current, members);
  return LowerSet(LowerSet::Trusted{}, n, std::move(members));
}

std::vector<MultiIndex> boundary_points(const LowerSet& L) {
  const MultiIndex one = MultiIndex::ones(L.dimension());
  std::vector<MultiIndex> out;
  for (const auto& alpha : L.members())
    if (!L.contains(alpha + one)) out.push_back(alpha);
  return out;
}

std::int64_t face_count(int n, int d) {
  if (n < 1) throw std::invalid_argument("face_count: n must be >= 1");
  if (d < 0 || d > n) throw std::invalid_argument("face_count: d must satisfy 0 <= d <= n");
  return checked_mul(pow2(n - d), binomial(n, d));
}

std::int64_t serendipity_dimension(int n, int r) {
  if (n < 1 || r < 1)
    throw std::invalid_argument("serendipity_dimension: n and r must be >= 1");
  std::int64_t dim = 0;
  const int dmax = std::min(n, r / 2);
  for (int d = 0; d <= dmax; ++d)
    dim = checked_add(dim, checked_mul(face_count(n, d), binomial(r - d, d)));
  return dim;
}

std::map<FaceIndex, std::vector<MultiIndex>> face_partition(int n, int r, const Limits& limits) {
  const LowerSet sr = serendipity_set(n, r, limits);
  std::map<FaceIndex, std::vector<MultiIndex>> cells;
  for (const auto& alpha : sr.members()) cells[face_of(alpha)].push_back(alpha);
  return cells;
}

}  // namespace serendipity
