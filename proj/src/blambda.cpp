#include "rwg/blambda.hpp"

#include <algorithm>
#include <sstream>

#include "rwg/error.hpp"

namespace rwg {

namespace {

int require_staircase(const Partition& p, const char* what) {
  auto ell = p.staircase_length();
  if (!ell) throw DomainError(std::string(what) + ": " + p.to_string() +
                              " is not a staircase partition");
  return *ell;
}

}  // namespace

LayeredGraph LayeredGraph::build(const Partition& staircase_partition) {
  LayeredGraph g;
  g.ell_ = require_staircase(staircase_partition, "build_blambda");
  g.layers_.resize(g.ell_);
  for (const auto& c : staircase_partition.cells())
    g.layers_[g.ell_ - 1 - c.diagonal()].push_back(c);
  for (int i = 0; i < g.ell_; ++i) {
    auto& layer = g.layers_[i];
    std::sort(layer.begin(), layer.end(),
              [](const FerrersCell& a, const FerrersCell& b) { return a.col < b.col; });
    if (static_cast<int>(layer.size()) != g.ell_ - i)
      throw InternalError("layer size mismatch");
    for (std::size_t k = 0; k < layer.size(); ++k) {
      g.cells_.push_back(layer[k]);
      g.positions_.push_back({i + 1, static_cast<int>(k)});
    }
  }
  g.graph_ = SimpleGraph(g.cells_.size());
  for (std::size_t v = 0; v < g.cells_.size(); ++v) {
    const FerrersCell c = g.cells_[v];
    for (FerrersCell n : {FerrersCell{c.row + 1, c.col}, FerrersCell{c.row, c.col + 1}}) {
      if (staircase_partition.contains(n)) g.graph_.add_edge(v, g.vertex_of(n));
    }
  }
  return g;
}

std::vector<std::size_t> LayeredGraph::layer_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers_) out.push_back(l.size());
  return out;
}

std::size_t LayeredGraph::vertex_of(const FerrersCell& c) const {
  // Layer i (0-based) holds diagonal ell-1-i and starts after layers of
  // sizes ell, ell-1, ..., ell-i+1.
  if (c.row < 0 || c.col < 0 || c.diagonal() >= ell_)
    throw DomainError("vertex_of: cell outside the staircase");
  const std::size_t i = static_cast<std::size_t>(ell_ - 1 - c.diagonal());
  const std::size_t offset = i * ell_ - i * (i - 1) / 2;
  return offset + c.col;
}

std::string LayeredGraph::vertex_name(std::size_t v) const {
  return "v" + std::to_string(positions_[v].layer) + "_" +
         std::to_string(positions_[v].index);
}

bool iso_check(const RWGraph& g, const LayeredGraph& b, std::size_t max_vertices) {
  return are_isomorphic(g.underlying(), b.underlying(), max_vertices);
}

IntPolynomial edge_missing_polynomial(int ell) {
  if (ell < 1) throw DomainError("edge_missing_polynomial: ell must be >= 1");
  std::vector<BigInt> c(ell);
  for (int k = 1; k <= ell; ++k) c[ell - k] = ell + 1 - k;
  return IntPolynomial(std::move(c));
}

GfReport family_gf_check(int nz, int ne) {
  if (nz < 0 || ne < 0) throw DomainError("family_gf_check: orders must be >= 0");
  const std::size_t NZ = nz, NE = ne;
  BivariateSeries one_minus_e(NZ, NE), one_minus_ez(NZ, NE), z(NZ, NE);
  one_minus_e.at(0, 0) = 1;
  if (NE >= 1) one_minus_e.at(0, 1) = -1;
  one_minus_ez.at(0, 0) = 1;
  if (NZ >= 1 && NE >= 1) one_minus_ez.at(1, 1) = -1;
  if (NZ >= 1) z.at(1, 0) = 1;
  const auto inv_ez = one_minus_ez.inverse();
  const auto closed = z * one_minus_e.inverse() * inv_ez * inv_ez;

  GfReport report;
  report.title = "z/((1-e)(1-ez)^2) vs sum_{ell>=2} P_ell(e) z^ell";
  report.index_names = {"z", "e"};
  for (int i = 0; i <= nz; ++i) {
    const IntPolynomial family = i >= 2 ? edge_missing_polynomial(i) : IntPolynomial();
    for (int j = 0; j <= ne; ++j) {
      GfRow row;
      row.index = {i, j};
      row.closed_form = closed.at(i, j);
      row.reference = family.coefficient(j);
      row.degenerate = i < 2;
      report.rows.push_back(std::move(row));
    }
  }
  report.notes.push_back("rows with z-degree < 2 are degenerate: the family sum starts at ell = 2");
  report.notes.push_back("truncation: z-degree <= " + std::to_string(nz) +
                         ", e-degree <= " + std::to_string(ne));
  return report;
}

bool is_subgraph_order(const Partition& smaller, const Partition& larger) {
  const int l1 = require_staircase(smaller, "is_subgraph_order");
  const int l2 = require_staircase(larger, "is_subgraph_order");
  if (l1 >= l2) return false;
  const LayeredGraph a = LayeredGraph::build(smaller);
  const LayeredGraph b = LayeredGraph::build(larger);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    if (!larger.contains(a.cell(v))) return false;
    // Layers are counted from the long diagonal, so each one shifts by l2 - l1.
    if (a.position(v).layer + (l2 - l1) != b.position(b.vertex_of(a.cell(v))).layer)
      return false;
  }
  for (auto [u, v] : a.underlying().edges()) {
    if (!b.underlying().has_edge(b.vertex_of(a.cell(u)), b.vertex_of(a.cell(v))))
      return false;
  }
  return true;
}

ParityReport is_parity_pair(const Partition& first, const Partition& second) {
  const int l1 = require_staircase(first, "is_parity_pair");
  const int l2 = require_staircase(second, "is_parity_pair");
  if (l2 != l1 + 1)
    throw DomainError("is_parity_pair: staircases of lengths " + std::to_string(l1) +
                      " and " + std::to_string(l2) + " are not consecutive");
  ParityReport r;
  r.ell1 = l1;
  r.ell2 = l2;
  r.same_vertex_parity = first.size() % 2 == second.size() % 2;
  r.first_length_odd = l1 % 2 == 1;
  r.same_hook_count =
      distinct_odd_parts(first).length() == distinct_odd_parts(second).length();
  return r;
}

const char* to_string(ParityClass c) {
  return c == ParityClass::kEvenVertices ? "even" : "odd";
}

VertexParityReport vertex_parity_mod4(const Partition& first) {
  const int ell = require_staircase(first, "vertex_parity_mod4");
  if (ell % 2 == 0) throw DomainError("vertex_parity_mod4: length must be odd");
  VertexParityReport r;
  r.ell = ell;
  r.claimed = ell % 4 == 1 ? ParityClass::kEvenVertices : ParityClass::kOddVertices;
  r.observed = first.size() % 2 == 0 ? ParityClass::kEvenVertices : ParityClass::kOddVertices;
  return r;
}

ParityMatrix parity_matrix(int k) {
  if (k < 1) throw DomainError("parity_matrix: k must be >= 1");
  const BigInt kk = k;
  return {kk, kk * kk, kk * kk + kk, kk * kk - kk, kk * kk};
}

nlohmann::json to_json(const LayeredGraph& g) {
  nlohmann::json j;
  nlohmann::json layers = nlohmann::json::array();
  std::size_t v = 0;
  for (std::size_t size : g.layer_sizes()) {
    nlohmann::json layer = nlohmann::json::array();
    for (std::size_t k = 0; k < size; ++k, ++v) layer.push_back(g.vertex_name(v));
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.underlying().edges())
    edges.push_back(nlohmann::json::array({g.vertex_name(a), g.vertex_name(b)}));
  j["edges"] = std::move(edges);
  return j;
}

std::string export_dot(const LayeredGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 1; i <= g.layer_count(); ++i) {
    os << "  subgraph layer_" << i << " {\n    rank=same;\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.position(v).layer != static_cast<int>(i)) continue;
      const auto& c = g.cell(v);
      os << "    " << g.vertex_name(v) << " [label=\"(" << c.row << "," << c.col
         << ")\", color=" << (c.diagonal() % 2 == 0 ? "black" : "red") << "];\n";
    }
    os << "  }\n";
  }
  for (auto [a, b] : g.underlying().edges())
    os << "  " << g.vertex_name(a) << " -- " << g.vertex_name(b) << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const ParityReport& r) {
  return {{"ell1", r.ell1},
          {"ell2", r.ell2},
          {"same_vertex_parity", r.same_vertex_parity},
          {"first_length_odd", r.first_length_odd},
          {"same_hook_count", r.same_hook_count},
          {"all_agree", r.all_agree()}};
}

nlohmann::json to_json(const VertexParityReport& r) {
  return {{"ell", r.ell},
          {"claimed", to_string(r.claimed)},
          {"observed", to_string(r.observed)},
          {"match", r.match()}};
}

nlohmann::json to_json(const ParityMatrix& m) {
  const auto [c1, c2] = m.column_sums();
  return {{"k", big_to_json(m.k)},
          {"entries", {{big_to_json(m.a11), big_to_json(m.a12)},
                       {big_to_json(m.a21), big_to_json(m.a22)}}},
          {"determinant", big_to_json(m.determinant())},
          {"column_sums", {big_to_json(c1), big_to_json(c2)}}};
}

}  // namespace rwg
