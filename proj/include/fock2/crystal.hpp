#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fock2/abacus.hpp"
#include "fock2/enumerate.hpp"
#include "fock2/errors.hpp"
#include "fock2/fock.hpp"

namespace fock2 {

namespace detail {

struct IBoxEntry {
  int ctilde;
  int component;
  bool removable;
  Box box;
};

// Removable and addable i-boxes in increasing charged content, a component-1
// box counting as bigger than a component-2 box of equal charged content.
inline std::vector<IBoxEntry> ordered_iboxes(const ChargedBipartition& nu, int i) {
  std::vector<IBoxEntry> entries;
  for (const Box& b : removable_boxes(nu.nu)) {
    int ct = charged_content(b, nu.param);
    if (nu.param.residue(ct) == i) entries.push_back({ct, b.component, true, b});
  }
  for (const Box& b : addable_boxes(nu.nu)) {
    int ct = charged_content(b, nu.param);
    if (nu.param.residue(ct) == i) entries.push_back({ct, b.component, false, b});
  }
  std::sort(entries.begin(), entries.end(), [](const IBoxEntry& a, const IBoxEntry& b) {
    if (a.ctilde != b.ctilde) return a.ctilde < b.ctilde;
    return a.component > b.component;  // component 2 below component 1
  });
  return entries;
}

// Recursively cancel removable-immediately-followed-by-addable pairs; the
// survivors are all addables first, then all removables.
inline std::vector<IBoxEntry> cancel_iboxes(std::vector<IBoxEntry> entries) {
  std::vector<IBoxEntry> stack;
  for (const IBoxEntry& entry : entries) {
    if (!entry.removable && !stack.empty() && stack.back().removable)
      stack.pop_back();
    else
      stack.push_back(entry);
  }
  return stack;
}

}  // namespace detail

// Smallest removable i-box surviving the cancellation, if any.
inline std::optional<Box> good_removable_ibox(const ChargedBipartition& nu, int i) {
  auto survivors = detail::cancel_iboxes(detail::ordered_iboxes(nu, i));
  for (const auto& entry : survivors)
    if (entry.removable) return entry.box;
  return std::nullopt;
}

// Largest addable i-box surviving the cancellation, if any.
inline std::optional<Box> good_addable_ibox(const ChargedBipartition& nu, int i) {
  auto survivors = detail::cancel_iboxes(detail::ordered_iboxes(nu, i));
  for (auto it = survivors.rbegin(); it != survivors.rend(); ++it)
    if (!it->removable) return it->box;
  return std::nullopt;
}

// Crystal operators on Fock-coordinate vertices; absent = the crystal zero.
inline std::optional<ChargedBipartition> e_tilde(const ChargedBipartition& nu, int i) {
  auto box = good_removable_ibox(nu, i);
  if (!box) return std::nullopt;
  return ChargedBipartition{remove_box(nu.nu, *box), nu.param};
}

inline std::optional<ChargedBipartition> f_tilde(const ChargedBipartition& nu, int i) {
  auto box = good_addable_ibox(nu, i);
  if (!box) return std::nullopt;
  return ChargedBipartition{add_box(nu.nu, *box), nu.param};
}

inline bool is_sle_source(const ChargedBipartition& nu) {
  for (int i = 0; i < nu.param.e(); ++i)
    if (good_removable_ibox(nu, i)) return false;
  return true;
}

enum class ShiftDirection { left, right };

// Move every bead of Per^k one position over. The move is an edge of the
// sl_infinity crystal only if the shifted beads are again the k'th e-period
// of the new abacus; physically blocked or invalid shifts yield absent.
inline std::optional<Abacus> shift_period(const Abacus& a, int k, ShiftDirection dir) {
  auto period = kth_e_period(a, k);
  if (!period) return std::nullopt;
  int delta = dir == ShiftDirection::right ? 1 : -1;
  Abacus moved = a;
  for (auto [row, pos] : period->beads) moved.row(row).remove_bead(pos);
  for (auto [row, pos] : period->beads) {
    if (moved.row(row).has_bead(pos + delta)) return std::nullopt;
    moved.row(row).add_bead(pos + delta);
  }
  auto shifted = period->beads;
  for (auto& [row, pos] : shifted) pos += delta;
  auto check = kth_e_period(moved, k);
  if (!check || check->beads != shifted) return std::nullopt;
  return moved;
}

// Reduce to the sl_e-source along the canonical path: at each step remove
// the good i-box for the smallest i that has one. Returns the source and the
// residues in the order they were applied.
inline std::pair<ChargedBipartition, std::vector<int>> sle_source_path(
    const ChargedBipartition& nu) {
  ChargedBipartition cur = nu;
  std::vector<int> path;
  for (;;) {
    bool stepped = false;
    for (int i = 0; i < cur.param.e(); ++i) {
      if (auto next = e_tilde(cur, i)) {
        cur = *next;
        path.push_back(i);
        stepped = true;
        break;
      }
    }
    if (!stepped) return {cur, path};
  }
}

// Upsilon_k. On a totally e-periodic abacus this is the period shift; on any
// other vertex the operator is computed at the sl_e-source and transported
// back along the canonical path (the two crystals commute).
inline std::optional<ChargedBipartition> upsilon(const ChargedBipartition& nu, int k,
                                                 ShiftDirection dir) {
  Abacus a = abacus_from(nu);
  if (is_totally_e_periodic(a)) {
    auto moved = shift_period(a, k, dir);
    if (!moved) return std::nullopt;
    return bipartition_from(*moved);
  }
  auto [source, path] = sle_source_path(nu);
  auto moved = shift_period(abacus_from(source), k, dir);
  if (!moved) return std::nullopt;
  ChargedBipartition cur = bipartition_from(*moved);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto next = f_tilde(cur, *it);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

// a_sigma = (Y+_r)^{sigma_r} ... (Y+_1)^{sigma_1}; every intermediate shift
// must be a crystal edge.
inline ChargedBipartition a_sigma(const Partition& sigma, const ChargedBipartition& source) {
  ChargedBipartition cur = source;
  for (int k = 1; k <= sigma.rows(); ++k) {
    for (int rep = 0; rep < sigma.part(k); ++rep) {
      auto next = upsilon(cur, k, ShiftDirection::right);
      if (!next)
        throw NotInCrystalImage("a_sigma: shift of period " + std::to_string(k) +
                                " is not in the crystal image");
      cur = *next;
    }
  }
  return cur;
}

// Position of a vertex in both crystals: sle_path is the canonical reduction
// to the sl_e-source, sigma the sl_infinity position over the double source.
struct CrystalPosition {
  int sle_depth;
  std::vector<int> sle_path;  // residues in the order the e~ operators fired
  Partition sigma;
  ChargedBipartition source;
};

inline CrystalPosition crystal_position(const ChargedBipartition& nu) {
  auto [cur, path] = sle_source_path(nu);
  std::vector<int> counts;
  for (;;) {
    Abacus a = abacus_from(cur);
    auto depth = period_count_to_rays(a);
    if (!depth) throw InternalConsistencyError("sl_e-source abacus is not totally periodic");
    bool fired = false;
    for (int k = *depth; k >= 1 && !fired; --k) {
      if (auto moved = shift_period(a, k, ShiftDirection::left)) {
        cur = bipartition_from(*moved);
        if (static_cast<int>(counts.size()) < k) counts.resize(static_cast<std::size_t>(k), 0);
        counts[static_cast<std::size_t>(k) - 1] += 1;
        fired = true;
      }
    }
    if (!fired) break;
  }
  Partition sigma;
  try {
    sigma = Partition(counts);
  } catch (const std::invalid_argument&) {
    throw InternalConsistencyError("sl_infinity position is not a partition");
  }
  // Self-check: the recorded position must rebuild the vertex.
  ChargedBipartition rebuilt = [&] {
    try {
      return a_sigma(sigma, cur);
    } catch (const NotInCrystalImage&) {
      throw InternalConsistencyError("crystal_position: a_sigma reconstruction invalid");
    }
  }();
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto next = f_tilde(rebuilt, *it);
    if (!next) throw InternalConsistencyError("crystal_position: f~ path reconstruction broke");
    rebuilt = *next;
  }
  if (!(rebuilt == nu)) throw InternalConsistencyError("crystal_position: reconstruction mismatch");
  return {static_cast<int>(path.size()), path, sigma, cur};
}

constexpr int kMaxGraphSize = 16;

enum class CrystalKind { sle, slinf };

struct CrystalEdge {
  int from;
  int to;
  int label;  // residue i for sle edges, period index k for slinf edges

  auto operator<=>(const CrystalEdge&) const = default;
};

// Crystal graph on all vertices of size <= n_max. Edges point from the
// operator image to the vertex: mu -> nu with label i when e~_i(nu) = mu,
// and with label k when Y-_k(nu) = mu.
struct CrystalGraph {
  FockParam param;
  CrystalKind kind;
  int n_max;
  std::vector<Bipartition> vertices;  // Fock coordinates, size then lex order
  std::vector<CrystalEdge> edges;
};

inline CrystalGraph crystal_graph(const FockParam& param, int n_max, CrystalKind kind) {
  if (n_max < 0 || n_max > kMaxGraphSize)
    throw std::invalid_argument("crystal_graph: n_max exceeds the cap of " +
                                std::to_string(kMaxGraphSize));
  CrystalGraph g{param, kind, n_max, bipartitions_up_to(n_max), {}};
  std::map<Bipartition, int> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    index[g.vertices[v]] = static_cast<int>(v);
  auto vertex_id = [&](const Bipartition& b) {
    auto it = index.find(b);
    if (it == index.end()) throw InternalConsistencyError("crystal_graph: image not enumerated");
    return it->second;
  };
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    ChargedBipartition nu{g.vertices[v], param};
    if (kind == CrystalKind::sle) {
      for (int i = 0; i < param.e(); ++i)
        if (auto image = e_tilde(nu, i))
          g.edges.push_back({vertex_id(image->nu), static_cast<int>(v), i});
    } else {
      auto [source, path] = sle_source_path(nu);
      auto depth = period_count_to_rays(abacus_from(source));
      if (!depth) throw InternalConsistencyError("crystal_graph: source not totally periodic");
      for (int k = 1; k <= *depth; ++k)
        if (auto image = upsilon(nu, k, ShiftDirection::left))
          g.edges.push_back({vertex_id(image->nu), static_cast<int>(v), k});
    }
  }
  return g;
}

}  // namespace fock2
