#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rwg/graph.hpp"
#include "rwg/partition.hpp"
#include "rwg/polynomial.hpp"
#include "rwg/rwgraph.hpp"
#include "rwg/series.hpp"

namespace rwg {

// Position of a vertex: layer is 1-based (V_1..V_ell), index counts cells of
// the layer by increasing column.
struct LayerPosition {
  int layer = 0;
  int index = 0;
  friend auto operator<=>(const LayerPosition&, const LayerPosition&) = default;
};

// Staircase cells grouped by diagonal into layers V_1..V_ell, with edges
// between side-sharing cells. V_1 is the longest diagonal (ell cells) and
// V_ell the corner cell. Vertices are numbered layer by layer.
class LayeredGraph {
 public:
  static LayeredGraph build(const Partition& staircase_partition);

  int ell() const { return ell_; }
  std::size_t layer_count() const { return layers_.size(); }
  const std::vector<FerrersCell>& layer(int i) const { return layers_.at(i - 1); }
  std::vector<std::size_t> layer_sizes() const;
  std::size_t vertex_count() const { return cells_.size(); }
  std::size_t edge_count() const { return graph_.edge_count(); }

  const FerrersCell& cell(std::size_t v) const { return cells_[v]; }
  const LayerPosition& position(std::size_t v) const { return positions_[v]; }
  std::size_t vertex_of(const FerrersCell& c) const;
  const SimpleGraph& underlying() const { return graph_; }

  std::string vertex_name(std::size_t v) const;

 private:
  int ell_ = 0;
  std::vector<std::vector<FerrersCell>> layers_;
  std::vector<FerrersCell> cells_;
  std::vector<LayerPosition> positions_;
  SimpleGraph graph_;
};

// Isomorphism of the underlying simple graphs, capped at `max_vertices`.
bool iso_check(const RWGraph& g, const LayeredGraph& b,
               std::size_t max_vertices = 28);

// sum_{k=1..ell} (ell + 1 - k) e^(ell - k)
IntPolynomial edge_missing_polynomial(int ell);

// Coefficients z^i e^j (i <= nz, j <= ne) of z/((1-e)(1-ez)^2) against
// sum_{ell>=2} P_ell(e) z^ell.
GfReport family_gf_check(int nz, int ne);

// Proper shape inclusion, confirmed by embedding cells and edges: every
// layer V_i of the smaller graph lands inside V_{i + l2 - l1}.
bool is_subgraph_order(const Partition& smaller, const Partition& larger);

struct ParityReport {
  int ell1 = 0;
  int ell2 = 0;
  bool same_vertex_parity = false;
  bool first_length_odd = false;
  bool same_hook_count = false;
  bool all_agree() const {
    return same_vertex_parity == first_length_odd &&
           first_length_odd == same_hook_count;
  }
};

// Requires ell(second) == ell(first) + 1.
ParityReport is_parity_pair(const Partition& first, const Partition& second);

enum class ParityClass { kEvenVertices, kOddVertices };
const char* to_string(ParityClass c);

struct VertexParityReport {
  int ell = 0;
  ParityClass claimed = ParityClass::kEvenVertices;
  ParityClass observed = ParityClass::kEvenVertices;
  bool match() const { return claimed == observed; }
};

// Claimed class (even vertex count iff ell = 1 mod 4) next to the observed
// parity of |staircase(ell)|. Requires odd ell.
VertexParityReport vertex_parity_mod4(const Partition& first);

// [[k^2, k^2+k], [k^2-k, k^2]]
struct ParityMatrix {
  BigInt k;
  BigInt a11, a12, a21, a22;

  BigInt determinant() const { return a11 * a22 - a12 * a21; }
  std::pair<BigInt, BigInt> column_sums() const { return {a11 + a21, a12 + a22}; }
};

ParityMatrix parity_matrix(int k);

nlohmann::json to_json(const LayeredGraph& g);
std::string export_dot(const LayeredGraph& g, const std::string& name = "B");
nlohmann::json to_json(const ParityReport& r);
nlohmann::json to_json(const VertexParityReport& r);
nlohmann::json to_json(const ParityMatrix& m);

}  // namespace rwg
