#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rwg/error.hpp"
#include "rwg/graph.hpp"
#include "rwg/rwgraph.hpp"

using rwg::MoveType;
using rwg::RWGraph;

namespace {

RWGraph graph_of(std::vector<int> w) { return RWGraph::build(rwg::Permutation::from_word(w)); }

oracle::EdgeList edge_list(const RWGraph& g) {
  oracle::EdgeList out;
  out.n = static_cast<int>(g.vertex_count());
  for (const auto& e : g.edges()) out.edges.push_back({int(e.u), int(e.v)});
  return out;
}

// Edges found by trying every move on every vertex.
std::set<std::pair<oracle::Word, oracle::Word>> edges_by_moves(const RWGraph& g) {
  std::set<std::pair<oracle::Word, oracle::Word>> out;
  for (const auto& v : g.vertices())
    for (auto& n : oracle::move_neighbours(v.letters))
      out.insert(std::minmax(v.letters, n));
  return out;
}

}  // namespace

TEST(DetectMove, BraidAndCommutation) {
  using W = rwg::ReducedWord;
  EXPECT_EQ(rwg::detect_move(W{{1, 2, 1}}, W{{2, 1, 2}}), MoveType::kBraid);
  EXPECT_EQ(rwg::detect_move(W{{1, 3}}, W{{3, 1}}), MoveType::kCommutation);
  EXPECT_EQ(rwg::detect_move(W{{3, 1}}, W{{1, 3}}), MoveType::kCommutation);
  EXPECT_FALSE(rwg::detect_move(W{{1, 2}}, W{{2, 1}}));
  EXPECT_FALSE(rwg::detect_move(W{{1, 3, 5}}, W{{3, 5, 1}}));
  EXPECT_FALSE(rwg::detect_move(W{{1, 2, 1}}, W{{1, 2, 1}}));
}

TEST(RWGraph, Examples) {
  const RWGraph a = graph_of({3, 5, 1, 2, 4});
  EXPECT_EQ(a.vertex_count(), 5u);
  EXPECT_EQ(a.edge_count(), 5u);
  const RWGraph b = graph_of({4, 2, 3, 1});
  EXPECT_EQ(b.vertex_count(), 6u);
  EXPECT_EQ(b.edge_count(), 6u);
  EXPECT_EQ(rwg::braid_edge_count(b), 2u);
  EXPECT_EQ(rwg::count_four_cycles(b), 1u);
  EXPECT_EQ(rwg::euler_like_invariant(b), 1);
  const RWGraph id = RWGraph::build(rwg::Permutation::identity(4));
  EXPECT_EQ(id.vertex_count(), 1u);
  EXPECT_EQ(id.edge_count(), 0u);
  EXPECT_EQ(rwg::euler_like_invariant(id), 1);
}

TEST(RWGraph, EdgesAreExactlyTheMoves) {
  for (int r = 4; r <= 8; ++r) {
    const RWGraph g = RWGraph::build(rwg::z_permutation(r));
    std::set<std::pair<oracle::Word, oracle::Word>> got;
    for (const auto& e : g.edges()) {
      got.insert(std::minmax(g.vertices()[e.u].letters, g.vertices()[e.v].letters));
      EXPECT_EQ(rwg::detect_move(g.vertices()[e.u], g.vertices()[e.v]), e.type);
    }
    EXPECT_EQ(got, edges_by_moves(g)) << r;
  }
}

TEST(RWGraph, FourCyclesMatchQuadrupleScan) {
  for (int r = 4; r <= 8; ++r) {
    const RWGraph g = RWGraph::build(rwg::z_permutation(r));
    EXPECT_EQ(rwg::count_four_cycles(g), oracle::four_cycles_by_quadruples(edge_list(g))) << r;
  }
  EXPECT_EQ(rwg::count_four_cycles(graph_of({2, 5, 3, 4, 1})), 3u);
  std::vector<int> w{1, 2, 3, 4, 5};
  do {
    const RWGraph g = graph_of(w);
    EXPECT_EQ(rwg::count_four_cycles(g), oracle::four_cycles_by_quadruples(edge_list(g)));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST(RWGraph, StatisticsOfZFamily) {
  for (int ell = 3; ell <= 7; ++ell) {
    const RWGraph g = RWGraph::build(rwg::z_permutation(ell + 1));
    EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>((ell + 1) * ell / 2));
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(ell * (ell - 1)));
    EXPECT_EQ(rwg::braid_edge_count(g), static_cast<std::size_t>(ell - 1));
    EXPECT_EQ(rwg::count_four_cycles(g), static_cast<std::size_t>((ell - 1) * (ell - 2) / 2));
    EXPECT_EQ(rwg::euler_like_invariant(g), 1);
  }
  EXPECT_EQ(rwg::braid_edge_count(graph_of({2, 3, 6, 4, 5, 1})), 4u);
}

TEST(StructureReport, FlagsPrintedEdgeCount) {
  const auto sr = rwg::structure_report(3);
  EXPECT_EQ(sr.permutation, "4231");
  EXPECT_EQ(sr.stat("vertices").observed, 6);
  EXPECT_TRUE(sr.stat("vertices").match());
  EXPECT_EQ(sr.stat("edges").observed, 6);
  EXPECT_EQ(sr.stat("edges").claimed, 12);
  EXPECT_FALSE(sr.stat("edges").match());
  EXPECT_TRUE(sr.stat("braid_edges").match());
  EXPECT_TRUE(sr.stat("four_cycles").match());
  EXPECT_EQ(sr.euler_like, 1);
  EXPECT_EQ(rwg::structure_report(5).stat("four_cycles").observed, 6);
}

TEST(RWGraph, FromPartsValidatesEdges) {
  using W = rwg::ReducedWord;
  EXPECT_NO_THROW(RWGraph::from_parts({W{{1, 3}}, W{{3, 1}}}, {{0, 1, MoveType::kCommutation}}));
  EXPECT_THROW(RWGraph::from_parts({W{{1, 3}}, W{{3, 1}}}, {{0, 1, MoveType::kBraid}}),
               rwg::MalformedError);
  EXPECT_THROW(RWGraph::from_parts({W{{1, 3}}}, {{0, 1, MoveType::kCommutation}}),
               rwg::MalformedError);
  const RWGraph single = RWGraph::from_parts({W{{1, 2}}, W{{2, 1}}}, {});
  EXPECT_EQ(rwg::count_four_cycles(single), 0u);
  EXPECT_EQ(rwg::braid_edge_count(single), 0u);
}

TEST(RWGraph, DotExport) {
  const std::string dot = rwg::export_dot(graph_of({3, 5, 1, 2, 4}));
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 2 + 5 + 5);
  EXPECT_NE(rwg::export_dot(graph_of({4, 2, 3, 1})).find("\"32123\""), std::string::npos);
  const std::string empty = rwg::export_dot(RWGraph::from_parts({}, {}));
  EXPECT_EQ(empty, "graph G {\n}\n");
  EXPECT_EQ(rwg::export_dot(graph_of({4, 2, 3, 1})), rwg::export_dot(graph_of({4, 2, 3, 1})));
}

TEST(SimpleGraph, Basics) {
  rwg::SimpleGraph g(4);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_THROW(g.add_edge(2, 2), rwg::Error);
  EXPECT_THROW(g.add_edge(0, 9), rwg::Error);
  EXPECT_EQ(g.component_count(), 3u);
  EXPECT_EQ(rwg::cycle_graph(5).cycle_rank(), 1u);
  EXPECT_FALSE(rwg::is_bipartite(rwg::cycle_graph(5)));
  EXPECT_TRUE(rwg::is_bipartite(rwg::cycle_graph(6)));
  EXPECT_EQ(rwg::count_four_cycles(rwg::complete_graph(4)), 1u);
  EXPECT_EQ(rwg::count_four_cycles(rwg::complete_graph(5)), 5u);
}

TEST(Isomorphism, SmallCases) {
  EXPECT_TRUE(rwg::are_isomorphic(rwg::cycle_graph(6), rwg::cycle_graph(6), 28));
  EXPECT_FALSE(rwg::are_isomorphic(rwg::cycle_graph(6), rwg::path_graph(6), 28));
  EXPECT_FALSE(rwg::are_isomorphic(rwg::SimpleGraph(1), rwg::SimpleGraph(2), 28));
  // Two 3-regular graphs on 6 vertices: K_{3,3} and the prism.
  rwg::SimpleGraph k33(6), prism(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  for (int i = 0; i < 3; ++i) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(3 + i, 3 + (i + 1) % 3);
    prism.add_edge(i, 3 + i);
  }
  EXPECT_FALSE(rwg::are_isomorphic(k33, prism, 28));
  // Relabelled copy.
  rwg::SimpleGraph relabelled(6);
  const int perm[6] = {4, 0, 5, 2, 1, 3};
  for (auto [u, v] : prism.edges()) relabelled.add_edge(perm[u], perm[v]);
  EXPECT_TRUE(rwg::are_isomorphic(prism, relabelled, 28));
  EXPECT_THROW(rwg::are_isomorphic(rwg::cycle_graph(30), rwg::cycle_graph(30), 28),
               rwg::ResourceError);
}
