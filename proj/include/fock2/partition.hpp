#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fock2 {

// A partition: weakly decreasing sequence of positive integers. The empty
// sequence is the empty partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int rows() const { return static_cast<int>(parts_.size()); }
  int cols() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // 1-based row length; rows beyond the last are 0.
  int part(int i) const { return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0; }

  bool is_rectangle() const { return !parts_.empty() && parts_.front() == parts_.back(); }

  // Multiplicity of the largest part (0 for the empty partition).
  int top_multiplicity() const {
    int m = 0;
    while (m < rows() && parts_[m] == parts_[0]) ++m;
    return m;
  }

  Partition transposed() const {
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(cols()));
    for (int c = 1; c <= cols(); ++c) {
      int h = 0;
      while (h < rows() && parts_[h] >= c) ++h;
      t.push_back(h);
    }
    return Partition(std::move(t));
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Bipartition {
  Partition comp1;
  Partition comp2;

  int size() const { return comp1.size() + comp2.size(); }
  bool empty() const { return comp1.empty() && comp2.empty(); }
  const Partition& component(int j) const { return j == 1 ? comp1 : comp2; }
  Bipartition transposed() const { return {comp1.transposed(), comp2.transposed()}; }
  Bipartition swapped() const { return {comp2, comp1}; }

  auto operator<=>(const Bipartition&) const = default;
};

// A box of a bipartition, or a slot where a box could be added. Rows and
// columns are 1-based; the content is col - row.
struct Box {
  int component;  // 1 or 2
  int row;
  int col;

  int content() const { return col - row; }

  auto operator<=>(const Box&) const = default;
};

// Boxes whose removal leaves a partition, top to bottom.
inline std::vector<Box> removable_boxes(const Partition& p, int component) {
  std::vector<Box> out;
  for (int i = 1; i <= p.rows(); ++i)
    if (p.part(i) > p.part(i + 1)) out.push_back({component, i, p.part(i)});
  return out;
}

// Slots whose filling leaves a partition, top to bottom.
inline std::vector<Box> addable_boxes(const Partition& p, int component) {
  std::vector<Box> out;
  out.push_back({component, 1, p.cols() + 1});
  for (int i = 2; i <= p.rows(); ++i)
    if (p.part(i) < p.part(i - 1)) out.push_back({component, i, p.part(i) + 1});
  if (!p.empty()) out.push_back({component, p.rows() + 1, 1});
  return out;
}

inline std::vector<Box> removable_boxes(const Bipartition& bp) {
  auto out = removable_boxes(bp.comp1, 1);
  auto c2 = removable_boxes(bp.comp2, 2);
  out.insert(out.end(), c2.begin(), c2.end());
  return out;
}

inline std::vector<Box> addable_boxes(const Bipartition& bp) {
  auto out = addable_boxes(bp.comp1, 1);
  auto c2 = addable_boxes(bp.comp2, 2);
  out.insert(out.end(), c2.begin(), c2.end());
  return out;
}

inline Bipartition remove_box(const Bipartition& bp, const Box& b) {
  const Partition& p = bp.component(b.component);
  if (b.row < 1 || b.row > p.rows() || p.part(b.row) != b.col)
    throw std::invalid_argument("remove_box: not the last box of its row");
  std::vector<int> parts = p.parts();
  parts[b.row - 1] -= 1;
  Partition q(std::move(parts));  // throws if b was not removable
  return b.component == 1 ? Bipartition{q, bp.comp2} : Bipartition{bp.comp1, q};
}

inline Bipartition add_box(const Bipartition& bp, const Box& b) {
  const Partition& p = bp.component(b.component);
  if (b.row < 1 || b.row > p.rows() + 1 || p.part(b.row) + 1 != b.col)
    throw std::invalid_argument("add_box: not the next box of its row");
  std::vector<int> parts = p.parts();
  if (b.row == p.rows() + 1)
    parts.push_back(1);
  else
    parts[b.row - 1] += 1;
  Partition q(std::move(parts));  // throws if b was not addable
  return b.component == 1 ? Bipartition{q, bp.comp2} : Bipartition{bp.comp1, q};
}

}  // namespace fock2
