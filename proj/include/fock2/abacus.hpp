#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fock2/errors.hpp"
#include "fock2/fock.hpp"

namespace fock2 {

// One abacus row: every position <= tail is a bead, plus finitely many
// sporadic beads above the tail, stored strictly decreasing. Canonical form
// keeps the tail maximal (position tail+1 is never a bead).
class AbacusRow {
 public:
  AbacusRow(int tail, std::vector<int> sporadic) : tail_(tail), sporadic_(std::move(sporadic)) {
    for (std::size_t i = 0; i < sporadic_.size(); ++i) {
      if (sporadic_[i] <= tail_) throw std::invalid_argument("sporadic bead at or below tail");
      if (i + 1 < sporadic_.size() && sporadic_[i] <= sporadic_[i + 1])
        throw std::invalid_argument("sporadic beads must be strictly decreasing");
    }
    canonicalize();
  }

  int tail() const { return tail_; }
  const std::vector<int>& sporadic() const { return sporadic_; }
  bool is_ray() const { return sporadic_.empty(); }
  int max_bead() const { return sporadic_.empty() ? tail_ : sporadic_.front(); }

  // Number of beads minus the beads of the empty configuration at charge 0;
  // a canonical row is the beta-number set of some partition at this charge.
  int charge() const { return tail_ + static_cast<int>(sporadic_.size()); }

  bool has_bead(int pos) const {
    if (pos <= tail_) return true;
    return std::find(sporadic_.begin(), sporadic_.end(), pos) != sporadic_.end();
  }

  void remove_bead(int pos) {
    if (pos > tail_) {
      auto it = std::find(sporadic_.begin(), sporadic_.end(), pos);
      if (it == sporadic_.end()) throw std::invalid_argument("remove_bead: no bead here");
      sporadic_.erase(it);
    } else {
      for (int q = tail_; q > pos; --q) sporadic_.push_back(q);
      tail_ = pos - 1;
    }
  }

  void add_bead(int pos) {
    if (has_bead(pos)) throw std::invalid_argument("add_bead: position occupied");
    auto it = std::find_if(sporadic_.begin(), sporadic_.end(), [pos](int q) { return q < pos; });
    sporadic_.insert(it, pos);
    canonicalize();
  }

  auto operator<=>(const AbacusRow&) const = default;

 private:
  void canonicalize() {
    while (!sporadic_.empty() && sporadic_.back() == tail_ + 1) {
      ++tail_;
      sporadic_.pop_back();
    }
  }

  int tail_;
  std::vector<int> sporadic_;
};

// Two-row abacus of a charged bipartition: the bottom row (1) carries the
// first component, the top row (2) the second.
class Abacus {
 public:
  Abacus(AbacusRow bottom, AbacusRow top, FockParam param)
      : bottom_(std::move(bottom)), top_(std::move(top)), param_(param) {}

  const AbacusRow& row(int j) const { return j == 1 ? bottom_ : top_; }
  AbacusRow& row(int j) { return j == 1 ? bottom_ : top_; }
  const FockParam& param() const { return param_; }
  int max_bead() const { return std::max(bottom_.max_bead(), top_.max_bead()); }
  bool is_rays() const { return bottom_.is_ray() && top_.is_ray(); }

  auto operator<=>(const Abacus&) const = default;

 private:
  AbacusRow bottom_;
  AbacusRow top_;
  FockParam param_;
};

// Beta-numbers nu_i + charge - i + 1; positions beyond the parts form the
// ray (-inf, charge - rows].
inline AbacusRow abacus_row(const Partition& nu_j, int charge) {
  std::vector<int> sporadic;
  sporadic.reserve(static_cast<std::size_t>(nu_j.rows()));
  for (int i = 1; i <= nu_j.rows(); ++i) sporadic.push_back(nu_j.part(i) + charge - i + 1);
  return AbacusRow(charge - nu_j.rows(), std::move(sporadic));
}

inline Abacus abacus_from(const ChargedBipartition& cb) {
  return Abacus(abacus_row(cb.nu.comp1, cb.param.charge(1)),
                abacus_row(cb.nu.comp2, cb.param.charge(2)), cb.param);
}

// Inverse of abacus_from. Rejects an abacus whose rows do not carry the
// charges of its own parameter (such bead configurations arise while
// stripping periods but are not charged bipartitions).
inline ChargedBipartition bipartition_from(const Abacus& a) {
  Bipartition nu;
  for (int j : {1, 2}) {
    const AbacusRow& row = a.row(j);
    int charge = a.param().charge(j);
    if (row.charge() != charge)
      throw std::invalid_argument("bipartition_from: row charge mismatch");
    std::vector<int> parts;
    parts.reserve(row.sporadic().size());
    for (std::size_t i = 0; i < row.sporadic().size(); ++i)
      parts.push_back(row.sporadic()[i] - charge + static_cast<int>(i));
    (j == 1 ? nu.comp1 : nu.comp2) = Partition(std::move(parts));
  }
  return {nu, a.param()};
}

// An e-period: e beads at consecutive positions, top row first, each top-row
// bead over an empty bottom space, starting in the rightmost occupied column.
struct EPeriod {
  int index;                                  // which period (Per^k)
  std::vector<std::pair<int, int>> beads;     // (row, position), positions decreasing
};

namespace detail {

inline std::optional<std::vector<std::pair<int, int>>> first_period(const AbacusRow& bottom,
                                                                    const AbacusRow& top, int e) {
  int start = std::max(bottom.max_bead(), top.max_bead());
  std::vector<std::pair<int, int>> beads;
  beads.reserve(static_cast<std::size_t>(e));
  bool bottom_only = false;
  for (int pos = start; pos > start - e; --pos) {
    bool b1 = bottom.has_bead(pos);
    if (!bottom_only && top.has_bead(pos) && !b1) {
      beads.emplace_back(2, pos);
    } else if (b1) {
      beads.emplace_back(1, pos);
      bottom_only = true;
    } else {
      return std::nullopt;
    }
  }
  return beads;
}

inline void delete_beads(AbacusRow& bottom, AbacusRow& top,
                         const std::vector<std::pair<int, int>>& beads) {
  for (auto [row, pos] : beads) (row == 1 ? bottom : top).remove_bead(pos);
}

}  // namespace detail

// Per^k: the e-period found after greedily removing Per^1..Per^{k-1}; absent
// as soon as any of those fails to exist. Bead coordinates refer to the
// original abacus.
inline std::optional<EPeriod> kth_e_period(const Abacus& a, int k) {
  if (k < 1) throw std::invalid_argument("kth_e_period: k must be >= 1");
  AbacusRow bottom = a.row(1);
  AbacusRow top = a.row(2);
  for (int j = 1;; ++j) {
    auto beads = detail::first_period(bottom, top, a.param().e());
    if (!beads) return std::nullopt;
    if (j == k) return EPeriod{k, *beads};
    detail::delete_beads(bottom, top, *beads);
  }
}

// Number of periods that must be deleted before both rows are plain rays
// (the abacus of an empty bipartition at some charge); absent when a period
// is missing first, i.e. when the abacus is not totally e-periodic.
inline std::optional<int> period_count_to_rays(const Abacus& a) {
  AbacusRow bottom = a.row(1);
  AbacusRow top = a.row(2);
  // Each deletion removes the current rightmost bead, so the span below can
  // shrink only so many times.
  int guard = 4 * (a.max_bead() - std::min(bottom.tail(), top.tail())) + 4 * a.param().e() + 16;
  for (int count = 0; count <= guard; ++count) {
    if (bottom.is_ray() && top.is_ray()) return count;
    auto beads = detail::first_period(bottom, top, a.param().e());
    if (!beads) return std::nullopt;
    detail::delete_beads(bottom, top, *beads);
  }
  throw InternalConsistencyError("period deletion did not terminate");
}

inline bool is_totally_e_periodic(const Abacus& a) { return period_count_to_rays(a).has_value(); }

// Two bead rows over a position ruler, matching the usual abacus pictures
// (top row = second component).
inline std::string render(const Abacus& a) {
  int lo = std::min(a.row(1).tail(), a.row(2).tail()) - 1;
  int hi = a.max_bead() + 1;
  std::vector<std::string> labels;
  std::size_t width = 0;
  for (int pos = lo; pos <= hi; ++pos) {
    labels.push_back(std::to_string(pos));
    width = std::max(width, labels.back().size());
  }
  std::string out;
  for (int j : {2, 1}) {
    out += j == 2 ? "2:" : "1:";
    for (int pos = lo; pos <= hi; ++pos) {
      out += std::string(width, ' ');
      out += a.row(j).has_bead(pos) ? "•" : "·";  // one display column each
    }
    out += '\n';
  }
  out += "  ";
  for (auto& s : labels) out += std::string(width + 1 - s.size(), ' ') + s;
  out += '\n';
  return out;
}

}  // namespace fock2
