#pragma once

#include <vector>

#include "fock2/partition.hpp"

namespace fock2 {

namespace detail {

inline void gen_partitions(int n, int cap, std::vector<int>& stack,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(Partition(stack));  // parts are built largest-first
    return;
  }
  for (int first = 1; first <= std::min(n, cap); ++first) {
    stack.push_back(first);
    gen_partitions(n - first, first, stack, out);
    stack.pop_back();
  }
}

}  // namespace detail

// Partitions of n in lexicographic order of their part sequences,
// (1,1,...,1) first, (n) last.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> stack;
  detail::gen_partitions(n, n, stack, out);
  return out;
}

// All partitions of size <= n, lexicographic on part sequences.
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bipartitions of n, ordered lexicographically on (comp1 parts, comp2 parts).
inline std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (const Partition& p1 : partitions_up_to(n))
    for (const Partition& p2 : partitions_of(n - p1.size())) out.push_back({p1, p2});
  return out;
}

// Bipartitions of size <= n_max, by total size then lexicographically.
inline std::vector<Bipartition> bipartitions_up_to(int n_max) {
  std::vector<Bipartition> out;
  for (int n = 0; n <= n_max; ++n) {
    auto bn = bipartitions_of(n);
    out.insert(out.end(), bn.begin(), bn.end());
  }
  return out;
}

}  // namespace fock2
