#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/graph.hpp"
#include "rwg/limits.hpp"
#include "rwg/perm.hpp"

namespace rwg {

enum class MoveType { kBraid, kCommutation };

const char* to_string(MoveType t);

// The single local move turning `a` into `b`, if there is one:
//   braid        xyx <-> yxy at positions p..p+2 with |x-y| = 1
//   commutation  xy  <-> yx  at positions p..p+1 with |x-y| > 1
// Symmetric in its arguments.
std::optional<MoveType> detect_move(const ReducedWord& a, const ReducedWord& b);

struct TypedEdge {
  std::size_t u;  // u < v
  std::size_t v;
  MoveType type;

  friend bool operator==(const TypedEdge&, const TypedEdge&) = default;
};

// Graph of reduced words: vertices in lexicographic order, edges tagged by
// the move relating their endpoints.
class RWGraph {
 public:
  static RWGraph build(const Permutation& w, const Limits& limits = {});
  // Validates the edge list against the move detector.
  static RWGraph from_parts(std::vector<ReducedWord> vertices,
                            std::vector<TypedEdge> edges);

  const std::vector<ReducedWord>& vertices() const { return vertices_; }
  const std::vector<TypedEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  SimpleGraph underlying() const;

 private:
  std::vector<ReducedWord> vertices_;
  std::vector<TypedEdge> edges_;
};

std::size_t count_four_cycles(const RWGraph& g);
std::size_t braid_edge_count(const RWGraph& g);
// v + c - e with c the number of four-cycles.
long long euler_like_invariant(const RWGraph& g);

struct StructureStat {
  std::string name;
  long long observed = 0;
  long long claimed = 0;
  bool match() const { return observed == claimed; }
};

// Observed statistics of the word graph of z_permutation(ell + 1) next to the
// values printed for it: C(ell+1,2) vertices, ell(ell+1) edges, ell-1 braid
// edges, C(ell-1,2) four-cycles. Compares, never asserts.
struct StructureReport {
  int ell = 0;
  std::string permutation;
  std::vector<StructureStat> stats;
  long long euler_like = 0;
  // Whether every four-cycle uses commutation edges only (false once a braid
  // move commutes with a disjoint commutation move).
  bool four_cycles_commutation_only = true;

  const StructureStat& stat(const std::string& name) const;
};

StructureReport structure_report(int ell, const Limits& limits = {});

std::string export_dot(const RWGraph& g, const std::string& name = "G");
nlohmann::json to_json(const RWGraph& g);
nlohmann::json to_json(const StructureReport& r);

}  // namespace rwg
