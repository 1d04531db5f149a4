#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <stdexcept>

#include "fock2/partition.hpp"

namespace fock2 {

using Rational = boost::rational<long long>;

// Level-2 Fock space parameter (e, (s1,s2)). Only the difference s = s2 - s1
// matters, so the charge is stored normalized to (0, s). The attached
// Cherednik algebra parameters are c = 1/e and d = -1/2 + s/e.
class FockParam {
 public:
  FockParam(int e, int s) : e_(e), s_(s) {
    if (e < 2) throw std::invalid_argument("FockParam: e must be >= 2");
  }
  static FockParam from_charges(int e, int s1, int s2) { return FockParam(e, s2 - s1); }

  int e() const { return e_; }
  int s() const { return s_; }
  int s1() const { return 0; }
  int s2() const { return s_; }
  int charge(int component) const { return component == 1 ? 0 : s_; }

  Rational c() const { return Rational(1, e_); }
  Rational d() const { return Rational(-1, 2) + Rational(s_, e_); }

  // Residue in {0, ..., e-1}.
  int residue(long long charged_content) const {
    long long r = charged_content % e_;
    return static_cast<int>(r < 0 ? r + e_ : r);
  }

  auto operator<=>(const FockParam&) const = default;

 private:
  int e_;
  int s_;
};

// A bipartition in Fock coordinates (the componentwise transpose of the
// representation label) together with its charge. This is the vertex type of
// both crystals.
struct ChargedBipartition {
  Bipartition nu;
  FockParam param;

  int size() const { return nu.size(); }
  Bipartition label() const { return nu.transposed(); }

  auto operator<=>(const ChargedBipartition&) const = default;
};

inline ChargedBipartition charged_from_label(const Bipartition& lam, const FockParam& param) {
  return {lam.transposed(), param};
}

inline int charged_content(const Box& b, const FockParam& param) {
  return param.charge(b.component) + b.col - b.row;
}

// Sum of contents col - row over all boxes of one partition.
inline long long content_sum(const Partition& p) {
  long long total = 0;
  for (int i = 1; i <= p.rows(); ++i) {
    long long len = p.part(i);
    total += len * (len + 1) / 2 - len * i;  // sum_{c=1..len} (c - i)
  }
  return total;
}

// Lowest-weight scalar c_lambda = |l1| + (s/e)(|l2|-|l1|) - (2/e) sum ct(b),
// for lam in label coordinates. Exact rational arithmetic.
inline Rational c_function(const Bipartition& lam, const FockParam& param) {
  long long n1 = lam.comp1.size();
  long long n2 = lam.comp2.size();
  long long ct = content_sum(lam.comp1) + content_sum(lam.comp2);
  return Rational(n1) + Rational(param.s(), param.e()) * Rational(n2 - n1) -
         Rational(2, param.e()) * Rational(ct);
}

// Boxes marked in a (label-coordinate) bipartition for the unitarity case
// analysis.
//
// One nonempty component: b1 = box of largest content, b2 = removable box of
// largest content, b4 = removable box of second-largest content, b3 = top of
// the longest removable vertical strip ending at b4, b5 = box of smallest
// content. A rectangle has a single removable box; there b2 = b4 = b5.
//
// Both components nonempty: per component, largest content / removable of
// largest content / box of smallest content (b4 and b5 coincide there).
struct MarkedBoxes {
  std::optional<Box> b1, b2, b3, b4, b5;    // component 1
  std::optional<Box> b1p, b2p, b4p, b5p;    // component 2
};

namespace detail {

inline Box largest_content_box(const Partition& p, int component) {
  return {component, 1, p.cols()};
}

inline Box smallest_content_box(const Partition& p, int component) {
  return {component, p.rows(), 1};
}

inline Box top_removable_box(const Partition& p, int component) {
  return {component, p.top_multiplicity(), p.cols()};
}

}  // namespace detail

inline MarkedBoxes marked_boxes(const Bipartition& lam) {
  MarkedBoxes mb;
  const bool one = lam.comp2.empty() && !lam.comp1.empty();
  const bool other = lam.comp1.empty() && !lam.comp2.empty();
  if (one) {
    const Partition& p = lam.comp1;
    auto rems = removable_boxes(p, 1);
    mb.b1 = detail::largest_content_box(p, 1);
    mb.b2 = rems.front();
    if (p.is_rectangle()) {
      mb.b4 = mb.b2;
      mb.b5 = mb.b2;
    } else {
      mb.b4 = rems[1];
      mb.b5 = detail::smallest_content_box(p, 1);
    }
    // topmost row whose length equals b4's column; the strip b3..b4 is then
    // a removable vertical strip
    int col = mb.b4->col;
    int top = mb.b4->row;
    while (top > 1 && p.part(top - 1) == col) --top;
    mb.b3 = Box{1, top, col};
  } else if (other) {
    const Partition& p = lam.comp2;
    mb.b1p = detail::largest_content_box(p, 2);
    mb.b2p = detail::top_removable_box(p, 2);
    mb.b4p = detail::smallest_content_box(p, 2);
    mb.b5p = mb.b4p;
  } else if (!lam.comp1.empty()) {
    mb.b1 = detail::largest_content_box(lam.comp1, 1);
    mb.b2 = detail::top_removable_box(lam.comp1, 1);
    mb.b4 = detail::smallest_content_box(lam.comp1, 1);
    mb.b5 = mb.b4;
    mb.b1p = detail::largest_content_box(lam.comp2, 2);
    mb.b2p = detail::top_removable_box(lam.comp2, 2);
    mb.b4p = detail::smallest_content_box(lam.comp2, 2);
    mb.b5p = mb.b4p;
  }
  return mb;
}

}  // namespace fock2
