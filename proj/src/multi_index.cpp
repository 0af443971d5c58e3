#include "serendipity/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "serendipity/combinatorics.hpp"

namespace serendipity {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("MultiIndex: entries must be non-negative");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zeros(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

MultiIndex MultiIndex::ones(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 1)); }

MultiIndex MultiIndex::unit(int n, int axis) {
  if (axis < 0 || axis >= n) throw std::out_of_range("MultiIndex::unit: axis out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(axis)] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::total_degree() const {
  int sum = 0;
  for (int e : entries_) sum += e;
  return sum;
}

int MultiIndex::superlinear_degree() const {
  int sum = 0;
  for (int e : entries_)
    if (e >= 2) sum += e;
  return sum;
}

int MultiIndex::multiplicity(int value) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), value));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dimension() != other.dimension())
    throw std::invalid_argument("MultiIndex: dimension mismatch in addition");
  std::vector<int> e(entries_);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += other.entries_[j];
  return MultiIndex(std::move(e));
}

bool MultiIndex::operator<(const MultiIndex& other) const {
  if (dimension() != other.dimension()) return dimension() < other.dimension();
  return entries_ < other.entries_;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(entries_[j]);
  }
  return s + ")";
}

bool componentwise_leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("componentwise_leq: dimension mismatch");
  for (int j = 0; j < a.dimension(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

FaceIndex::FaceIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("FaceIndex: dimension must be >= 1");
  for (int e : entries_)
    if (e < 0 || e > 2) throw std::invalid_argument("FaceIndex: entries must be in {0,1,2}");
}

FaceIndex::FaceIndex(std::initializer_list<int> entries)
    : FaceIndex(std::vector<int>(entries)) {}

int FaceIndex::face_dim() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), 2));
}

std::string FaceIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(entries_[j]);
  }
  return s + ")";
}

FaceIndex face_of(const MultiIndex& alpha) {
  std::vector<int> beta(static_cast<std::size_t>(alpha.dimension()));
  for (int j = 0; j < alpha.dimension(); ++j)
    beta[static_cast<std::size_t>(j)] = std::min(alpha[j], 2);
  return FaceIndex(std::move(beta));
}

std::vector<FaceIndex> all_faces(int n) {
  if (n < 1) throw std::invalid_argument("all_faces: n must be >= 1");
  std::vector<FaceIndex> faces;
  std::vector<int> beta(static_cast<std::size_t>(n), 0);
  while (true) {
    faces.emplace_back(beta);
    int j = n - 1;
    while (j >= 0 && beta[static_cast<std::size_t>(j)] == 2) beta[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++beta[static_cast<std::size_t>(j)];
  }
  return faces;
}

Block::Block(MultiIndex corner) : corner_(std::move(corner)) {}

std::int64_t Block::size() const {
  std::int64_t s = 1;
  for (int j = 0; j < corner_.dimension(); ++j) s = checked_mul(s, corner_[j] + 1);
  return s;
}

std::vector<MultiIndex> Block::members() const {
  const int n = corner_.dimension();
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::vector<int> mu(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(mu);
    int j = n - 1;
    while (j >= 0 && mu[static_cast<std::size_t>(j)] == corner_[j]) mu[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++mu[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace serendipity
