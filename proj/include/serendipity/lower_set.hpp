#ifndef SERENDIPITY_LOWER_SET_HPP
#define SERENDIPITY_LOWER_SET_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "serendipity/multi_index.hpp"

namespace serendipity {

/// Guard rails against combinatorial blow-up; |S_r| grows like r^n / n!.
/// Raise them explicitly when larger instances are genuinely wanted.
struct Limits {
  int max_n = 8;
  int max_r = 16;
};

/// A finite downward-closed set of multi-indices: alpha in L and
/// mu <= alpha (componentwise) imply mu in L.
class LowerSet {
 public:
  /// Validates downward closure; throws if the set is not closed.
  LowerSet(int dimension, std::vector<MultiIndex> members);

  int dimension() const { return dimension_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const MultiIndex& alpha) const;
  /// Members in lexicographic order.
  const std::vector<MultiIndex>& members() const { return members_; }

  /// Exhaustive single-step closure scan (alpha - e_j in L for every
  /// alpha and every axis with alpha_j > 0); equivalent to full
  /// downward closure.
  static bool is_downward_closed(int dimension, const std::vector<MultiIndex>& members);

 private:
  struct Trusted {};
  LowerSet(Trusted, int dimension, std::vector<MultiIndex> members);

  friend LowerSet serendipity_set(int n, int r, const Limits& limits);

  int dimension_ = 0;
  std::vector<MultiIndex> members_;  // sorted lexicographically
};

/// The serendipity index set S_r = { alpha : |alpha|' <= r } in n
/// variables. Entries are bounded by max(1, r), so the set is finite.
LowerSet serendipity_set(int n, int r, const Limits& limits = {});

/// Boundary points of L: alpha in L with alpha + (1,...,1) not in L.
/// Only these can carry nonzero combination coefficients.
std::vector<MultiIndex> boundary_points(const LowerSet& L);

/// Number of faces of the n-cube of dimension d: 2^(n-d) * C(n, d).
std::int64_t face_count(int n, int d);

/// dim S_r = sum_{d=0}^{min(n, floor(r/2))} 2^(n-d) C(n,d) C(r-d,d).
std::int64_t serendipity_dimension(int n, int r);

/// Partition of S_r into the cells S_{r,beta} = { alpha in S_r :
/// min(alpha_j, 2) = beta_j }, one cell per face with a nonempty cell.
std::map<FaceIndex, std::vector<MultiIndex>> face_partition(int n, int r, const Limits& limits = {});

}  // namespace serendipity

#endif
