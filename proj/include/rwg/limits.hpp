#pragma once

#include <cstddef>

namespace rwg {

// Resource bounds shared by every module. Exceeding one raises ResourceError.
struct Limits {
  int max_degree = 12;                      // permutation degree
  std::size_t max_vertices = 200000;        // |R(w)|, i.e. word-graph order
  std::size_t max_iso_vertices = 28;        // isomorphism backtracking
  std::size_t max_cycle_rank = 24;          // deletion-contraction
  std::size_t max_identity_parts = 20;      // subset-sum search
  std::size_t max_graver_states = 5000000;  // candidate pairs examined
  std::size_t max_basis = 5000;             // Groebner basis size
  std::size_t max_derivations = 2000000;    // Groebner certificate log
  std::size_t max_hilbert_vars = 16;
  std::size_t max_hilbert_gens = 64;
  std::size_t max_hilbert_nodes = 2000000;  // pivot recursion nodes
};

}  // namespace rwg
