#ifndef SERENDIPITY_MULTI_INDEX_HPP
#define SERENDIPITY_MULTI_INDEX_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace serendipity {

/// A multi-index alpha = (alpha_1, ..., alpha_n) of n non-negative
/// integers. Indexes monomials, grid points and derivative orders.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zeros(int n);
  static MultiIndex ones(int n);
  /// Unit index e_axis (1 in position axis, 0 elsewhere).
  static MultiIndex unit(int n, int axis);

  int dimension() const { return static_cast<int>(entries_.size()); }
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const { return entries_; }

  /// |alpha| = sum of all entries.
  int total_degree() const;
  /// |alpha|' = sum of the entries that are >= 2; entries 0 and 1 do
  /// not contribute.
  int superlinear_degree() const;
  /// m_i(alpha): the number of entries equal to value.
  int multiplicity(int value) const;

  MultiIndex operator+(const MultiIndex& other) const;

  bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }
  /// Lexicographic order; used for deterministic enumeration and export.
  bool operator<(const MultiIndex& other) const;

  std::string to_string() const;  // "(2,1,3)"

 private:
  std::vector<int> entries_;
};

/// Componentwise partial order: a_j <= b_j for every j.
bool componentwise_leq(const MultiIndex& a, const MultiIndex& b);

/// Identifies one of the 3^n faces of the cube [-1,1]^n: each axis is
/// pinned at -1 (0), pinned at +1 (1) or free (2).
class FaceIndex {
 public:
  FaceIndex() = default;
  explicit FaceIndex(std::vector<int> entries);
  FaceIndex(std::initializer_list<int> entries);

  int dimension() const { return static_cast<int>(entries_.size()); }
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const { return entries_; }

  /// dim f_beta = number of free axes.
  int face_dim() const;

  bool operator==(const FaceIndex& other) const { return entries_ == other.entries_; }
  bool operator!=(const FaceIndex& other) const { return !(*this == other); }
  bool operator<(const FaceIndex& other) const { return entries_ < other.entries_; }

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// The face containing the grid point of alpha: beta_j = min(alpha_j, 2).
FaceIndex face_of(const MultiIndex& alpha);

/// All 3^n faces in lexicographic order.
std::vector<FaceIndex> all_faces(int n);

/// The rectangular block B_alpha = { mu : mu <= alpha }.
class Block {
 public:
  explicit Block(MultiIndex corner);

  const MultiIndex& corner() const { return corner_; }
  /// |B_alpha| = prod (alpha_j + 1).
  std::int64_t size() const;
  /// Members in lexicographic order.
  std::vector<MultiIndex> members() const;

 private:
  MultiIndex corner_;
};

}  // namespace serendipity

#endif
