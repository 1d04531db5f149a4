#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fock2/crystal.hpp"
#include "fock2/errors.hpp"
#include "fock2/fock.hpp"

namespace fock2 {

// Case labels for the unitarity classification. The 8.5c/d/e tests are
// derived from 8.5b by the component-swap (d -> -d) and transpose (c -> -c)
// symmetries; 8.5g never holds over a Fock space parameter.
enum class UnitaryCase {
  col_1n,
  c84a,
  c84b,
  c84c,
  c84d,
  c84e,
  c85a,
  c85b,
  c85f,
  c85c_swap,
  c85d_transpose,
  c85e_transpose_swap,
};

constexpr std::array<UnitaryCase, 12> kAllUnitaryCases = {
    UnitaryCase::col_1n, UnitaryCase::c84a,      UnitaryCase::c84b,
    UnitaryCase::c84c,   UnitaryCase::c84d,      UnitaryCase::c84e,
    UnitaryCase::c85a,   UnitaryCase::c85b,      UnitaryCase::c85f,
    UnitaryCase::c85c_swap, UnitaryCase::c85d_transpose, UnitaryCase::c85e_transpose_swap,
};

inline const char* case_label(UnitaryCase c) {
  switch (c) {
    case UnitaryCase::col_1n: return "col(1^n)";
    case UnitaryCase::c84a: return "8.4a";
    case UnitaryCase::c84b: return "8.4b";
    case UnitaryCase::c84c: return "8.4c";
    case UnitaryCase::c84d: return "8.4d";
    case UnitaryCase::c84e: return "8.4e";
    case UnitaryCase::c85a: return "8.5a";
    case UnitaryCase::c85b: return "8.5b";
    case UnitaryCase::c85f: return "8.5f";
    case UnitaryCase::c85c_swap: return "8.5c~swap";
    case UnitaryCase::c85d_transpose: return "8.5d~transpose";
    case UnitaryCase::c85e_transpose_swap: return "8.5e~transpose-swap";
  }
  return "?";
}

struct UnitarityVerdict {
  bool unitary = false;
  std::set<UnitaryCase> cases;
  std::vector<std::string> reduction_trace;
};

// Type A condition at parameter 1/e: the bottom border of tau has at most e
// boxes, i.e. ct(largest removable) - ct(smallest box) + 1 <= e.
inline bool is_type_a_unitary(const Partition& tau, int e) {
  if (e < 2) throw std::invalid_argument("is_type_a_unitary: e must be >= 2");
  if (tau.empty()) return true;
  int top_removable = tau.cols() - tau.top_multiplicity();
  int smallest = 1 - tau.rows();
  return top_removable - smallest + 1 <= e;
}

namespace detail {

// Marked-box contents for a single nonempty component in label coordinates.
// b5 here is always the box of smallest content, also for rectangles, which
// is what the case inequalities consume.
struct OneCompContents {
  int b1;           // largest content = cols - 1
  int b2;           // largest removable content
  int b4;           // second-largest removable content; = b2 for a rectangle
  int b5;           // smallest content = 1 - rows
  bool rectangle;
  bool b4_is_b5;    // the b4 box and the smallest-content box coincide
};

inline OneCompContents one_comp_contents(const Partition& lam) {
  OneCompContents c{};
  auto rems = removable_boxes(lam, 1);
  c.b1 = lam.cols() - 1;
  c.b2 = rems.front().content();
  c.b5 = 1 - lam.rows();
  c.rectangle = lam.is_rectangle();
  if (c.rectangle) {
    c.b4 = c.b2;
    c.b4_is_b5 = rems.front() == Box{1, lam.rows(), 1};
  } else {
    c.b4 = rems[1].content();
    c.b4_is_b5 = rems[1] == Box{1, lam.rows(), 1};
  }
  return c;
}

inline void case_i_labels(const Partition& lam, int e, int s, std::set<UnitaryCase>& out) {
  if (lam.cols() == 1) {
    int n = lam.rows();
    if (s <= e || (e + 1 <= s && s <= n - 1 + e)) out.insert(UnitaryCase::col_1n);
  }
  auto b = one_comp_contents(lam);
  if (b.b1 - b.b5 + 1 <= e && b.b1 <= e - s) out.insert(UnitaryCase::c84a);
  if (b.b2 - b.b5 + 1 <= e && b.b1 <= e - s) out.insert(UnitaryCase::c84b);
  if (b.b2 < e - s && e - s <= b.b1 && -b.b5 <= s) out.insert(UnitaryCase::c84c);
  if (b.b2 == e - s && (b.rectangle || b.b4_is_b5 || b.b4 - b.b5 + 1 <= e))
    out.insert(UnitaryCase::c84d);
  if (b.b2 + 1 <= e - s && e - s <= b.b1 - 1 && b.b2 - b.b5 + 1 <= e && e <= e - s - b.b5)
    out.insert(UnitaryCase::c84e);
}

// Per-component contents used by the two-component cases: box of largest
// content, removable box of largest content, box of smallest content.
struct CompContents {
  int b1;
  int b2;
  int b4;
};

inline CompContents comp_contents(const Partition& p) {
  return {p.cols() - 1, p.cols() - p.top_multiplicity(), 1 - p.rows()};
}

inline bool case85a(const Partition& l1, const Partition& l2, int e, int s) {
  if (l1.empty() || l2.empty()) return false;
  auto a = comp_contents(l1), b = comp_contents(l2);
  int d1 = a.b1 - b.b4 + 1;
  int d2 = b.b1 - a.b4 + 1;
  return -s <= d1 && d1 <= e - s && s - e <= d2 && d2 <= s;
}

inline bool case85b(const Partition& l1, const Partition& l2, int e, int s) {
  if (l1.empty() || l2.empty()) return false;
  auto a = comp_contents(l1), b = comp_contents(l2);
  return a.b2 - b.b4 + 1 <= e - s && e - s <= a.b1 - b.b4 + 1 && b.b1 - a.b4 + 1 <= s;
}

inline bool case85f(const Partition& l1, const Partition& l2, int e, int s) {
  if (l1.empty() || l2.empty()) return false;
  auto a = comp_contents(l1), b = comp_contents(l2);
  return a.b2 - b.b4 + 1 <= e - s && e - s <= a.b1 - b.b4 + 1 && b.b2 - a.b4 + 1 <= s &&
         s <= b.b1 - a.b4 + 1;
}

// Cases d and e are cases b and c with c replaced by -c, which leaves the
// parameter chart c = 1/e > 0; like case g they cannot hold over a Fock
// space parameter. Every nonvacuous reading of the reduction produces
// vertices whose cuspidal source falls outside the allowed shapes, so the
// labels are kept but never fire.
inline bool case85d(const Partition&, const Partition&, int, int) { return false; }

}  // namespace detail

// Union of the translated case conditions; `cases` lists every satisfied
// label, `reduction_trace` the symmetry reductions that produced a hit.
inline UnitarityVerdict is_unitary(const Bipartition& lam, const FockParam& param) {
  UnitarityVerdict v;
  const int e = param.e();
  const int s = param.s();
  if (lam.empty()) {
    // n = 0 labels the trivial representation of the trivial group
    v.unitary = true;
    v.cases.insert(UnitaryCase::col_1n);
    return v;
  }
  if (lam.comp1.empty()) {
    // component swap corresponds to d -> -d, i.e. s -> e - s
    v = is_unitary(lam.swapped(), FockParam(e, e - s));
    v.reduction_trace.insert(v.reduction_trace.begin(), "component-swap: s -> e-s");
    return v;
  }
  if (lam.comp2.empty()) {
    detail::case_i_labels(lam.comp1, e, s, v.cases);
  } else {
    if (detail::case85a(lam.comp1, lam.comp2, e, s)) v.cases.insert(UnitaryCase::c85a);
    if (detail::case85b(lam.comp1, lam.comp2, e, s)) v.cases.insert(UnitaryCase::c85b);
    if (detail::case85f(lam.comp1, lam.comp2, e, s)) v.cases.insert(UnitaryCase::c85f);
    if (detail::case85b(lam.comp2, lam.comp1, e, e - s)) {
      v.cases.insert(UnitaryCase::c85c_swap);
      v.reduction_trace.push_back("8.5c: case b after swapping components, s -> e-s");
    }
    if (detail::case85d(lam.comp1, lam.comp2, e, s)) {
      v.cases.insert(UnitaryCase::c85d_transpose);
      v.reduction_trace.push_back("8.5d: case b under the transpose flip c -> -c");
    }
    if (detail::case85d(lam.comp2, lam.comp1, e, e - s)) {
      v.cases.insert(UnitaryCase::c85e_transpose_swap);
      v.reduction_trace.push_back("8.5e: case d after swapping components, s -> e-s");
    }
    // 8.5g cannot hold over a Fock space parameter either
  }
  v.unitary = !v.cases.empty();
  return v;
}

// Both-crystal source test: totally e-periodic and no period can legally
// shift left.
inline bool is_finite_dimensional(const Bipartition& lam, const FockParam& param) {
  Abacus a = abacus_from(charged_from_label(lam, param));
  auto depth = period_count_to_rays(a);
  if (!depth) return false;
  for (int k = 1; k <= *depth; ++k)
    if (shift_period(a, k, ShiftDirection::left)) return false;
  return true;
}

// Closed form for unitary + finite-dimensional: a rectangle in one component
// with r - q = s - e (first) or r - q = -s (second), or the empty bipartition.
inline bool classify_unitary_fd(const Bipartition& lam, const FockParam& param) {
  if (lam.empty()) return true;
  if (lam.comp2.empty()) {
    const Partition& rho = lam.comp1;
    return rho.is_rectangle() && rho.rows() - rho.cols() == param.s() - param.e();
  }
  if (lam.comp1.empty()) {
    const Partition& rho = lam.comp2;
    return rho.is_rectangle() && rho.rows() - rho.cols() == -param.s();
  }
  return false;
}

// Support datum: W' = B_{n'} x S_e^m x S_1^p with n = n' + em + p, m and p
// the crystal depths. position_case classifies the double source per the six
// allowed descriptions (0 when the source is outside them); when both depths
// are zero the vertex satisfies position_case and position_case + 1.
struct SupportDescriptor {
  int n_cuspidal = 0;
  int m = 0;
  int p = 0;
  ChargedBipartition source_fock;
  int position_case = 0;
  bool depth_zero_pair = false;
};

inline SupportDescriptor support(const Bipartition& lam, const FockParam& param) {
  CrystalPosition pos = crystal_position(charged_from_label(lam, param));
  SupportDescriptor d{pos.source.size(), pos.sigma.size(), pos.sle_depth, pos.source, 0, false};
  const Bipartition& src = pos.source.nu;
  int base = 0;
  if (src.empty()) {
    base = 1;
  } else if (src.comp2.empty() && src.comp1.is_rectangle() &&
             src.comp1.cols() - src.comp1.rows() == param.s() - param.e()) {
    base = 3;
  } else if (src.comp1.empty() && src.comp2.is_rectangle() &&
             src.comp2.cols() - src.comp2.rows() == -param.s()) {
    base = 5;
  }
  if (base != 0) {
    if (d.p > 0 && d.m == 0) {
      d.position_case = base;
    } else if (d.m > 0 && d.p == 0) {
      d.position_case = base + 1;
    } else if (d.p == 0 && d.m == 0) {
      d.position_case = base;
      d.depth_zero_pair = true;
    }
  }
  if (is_unitary(lam, param).unitary) {
    if (d.position_case == 0)
      throw InternalConsistencyError("support: unitary vertex outside the six positions");
    if (pos.sigma.rows() > 1)
      throw InternalConsistencyError("support: unitary vertex with sl_infinity position not a row");
  }
  return d;
}

// All removable boxes carry distinct charged contents mod e (restriction is
// then semisimple or zero).
inline bool removable_residues_distinct(const ChargedBipartition& nu) {
  std::set<int> seen;
  for (const Box& b : removable_boxes(nu.nu))
    if (!seen.insert(nu.param.residue(charged_content(b, nu.param))).second) return false;
  return true;
}

}  // namespace fock2
