#include "rwg/rwgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "rwg/error.hpp"

namespace rwg {

const char* to_string(MoveType t) {
  return t == MoveType::kBraid ? "braid" : "commutation";
}

std::optional<MoveType> detect_move(const ReducedWord& a, const ReducedWord& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::size_t first = a.size(), last = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.letters[i] != b.letters[i]) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first == a.size()) return std::nullopt;
  const auto& x = a.letters;
  const auto& y = b.letters;
  const std::size_t p = first;
  if (last - first == 1) {
    if (x[p] == y[p + 1] && x[p + 1] == y[p] && std::abs(x[p] - x[p + 1]) > 1)
      return MoveType::kCommutation;
  } else if (last - first == 2) {
    if (std::abs(x[p] - x[p + 1]) == 1 && x[p + 2] == x[p] &&
        y[p] == x[p + 1] && y[p + 1] == x[p] && y[p + 2] == x[p + 1])
      return MoveType::kBraid;
  }
  return std::nullopt;
}

RWGraph RWGraph::build(const Permutation& w, const Limits& limits) {
  RWGraph g;
  g.vertices_ = enumerate_reduced_words(w, limits);
  const std::size_t n = g.vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (auto m = detect_move(g.vertices_[i], g.vertices_[j]))
        g.edges_.push_back({i, j, *m});
    }
  }
  return g;
}

RWGraph RWGraph::from_parts(std::vector<ReducedWord> vertices,
                            std::vector<TypedEdge> edges) {
  RWGraph g;
  g.vertices_ = std::move(vertices);
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v || e.v >= g.vertices_.size())
      throw MalformedError("word graph: invalid edge endpoints");
    auto move = detect_move(g.vertices_[e.u], g.vertices_[e.v]);
    if (!move || *move != e.type)
      throw MalformedError("word graph: edge " + g.vertices_[e.u].to_string() +
                           " - " + g.vertices_[e.v].to_string() +
                           " is not a " + to_string(e.type) + " move");
  }
  std::sort(edges.begin(), edges.end(), [](const TypedEdge& a, const TypedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  if (std::adjacent_find(edges.begin(), edges.end(),
                         [](const TypedEdge& a, const TypedEdge& b) {
                           return a.u == b.u && a.v == b.v;
                         }) != edges.end())
    throw MalformedError("word graph: parallel edges");
  g.edges_ = std::move(edges);
  return g;
}

SimpleGraph RWGraph::underlying() const {
  SimpleGraph g(vertices_.size());
  for (const auto& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

std::size_t count_four_cycles(const RWGraph& g) {
  return count_four_cycles(g.underlying());
}

std::size_t braid_edge_count(const RWGraph& g) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(),
                    [](const TypedEdge& e) { return e.type == MoveType::kBraid; }));
}

long long euler_like_invariant(const RWGraph& g) {
  return static_cast<long long>(g.vertex_count()) +
         static_cast<long long>(count_four_cycles(g)) -
         static_cast<long long>(g.edge_count());
}

const StructureStat& StructureReport::stat(const std::string& name) const {
  for (const auto& s : stats)
    if (s.name == name) return s;
  throw DomainError("structure report: no statistic named " + name);
}

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

// Checks that each four-cycle's edges are all commutation moves.
bool cycles_are_commutation_only(const RWGraph& g) {
  const SimpleGraph s = g.underlying();
  auto edge_type = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& e : g.edges())
      if (e.u == a && e.v == b) return e.type;
    throw InternalError("missing edge");
  };
  const std::size_t n = s.vertex_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      std::vector<std::size_t> common;
      std::set_intersection(s.neighbours(a).begin(), s.neighbours(a).end(),
                            s.neighbours(c).begin(), s.neighbours(c).end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          for (std::size_t m : {common[i], common[j]})
            if (edge_type(a, m) != MoveType::kCommutation ||
                edge_type(c, m) != MoveType::kCommutation)
              return false;
    }
  }
  return true;
}

}  // namespace

StructureReport structure_report(int ell, const Limits& limits) {
  if (ell < 3) throw DomainError("structure report: ell must be >= 3");
  const Permutation sigma = z_permutation(ell + 1);
  const RWGraph g = RWGraph::build(sigma, limits);
  StructureReport r;
  r.ell = ell;
  r.permutation = sigma.to_string();
  const long long l = ell;
  r.stats = {
      {"vertices", static_cast<long long>(g.vertex_count()), choose2(l + 1)},
      {"edges", static_cast<long long>(g.edge_count()), l * (l + 1)},
      {"braid_edges", static_cast<long long>(braid_edge_count(g)), l - 1},
      {"four_cycles", static_cast<long long>(count_four_cycles(g)), choose2(l - 1)},
  };
  r.euler_like = euler_like_invariant(g);
  r.four_cycles_commutation_only = cycles_are_commutation_only(g);
  return r;
}

std::string export_dot(const RWGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    os << "  n" << i << " [label=\"" << g.vertices()[i].to_string() << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  n" << e.u << " -- n" << e.v;
    if (e.type == MoveType::kBraid) {
      os << " [style=bold, color=red, label=\"braid\"]";
    } else {
      os << " [style=dashed, label=\"comm\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const RWGraph& g) {
  nlohmann::json j;
  j["vertices"] = words_to_json(g.vertices());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back(nlohmann::json::array({e.u, e.v, to_string(e.type)}));
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json j;
  j["ell"] = r.ell;
  j["permutation"] = r.permutation;
  for (const auto& s : r.stats) {
    j["stats"][s.name] = {{"observed", s.observed},
                          {"claimed", s.claimed},
                          {"match", s.match()}};
  }
  j["euler_like"] = r.euler_like;
  j["four_cycles_commutation_only"] = r.four_cycles_commutation_only;
  return j;
}

}  // namespace rwg
