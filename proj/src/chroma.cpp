#include "rwg/chroma.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "rwg/blambda.hpp"
#include "rwg/error.hpp"

namespace rwg {

namespace {

using Edge = std::pair<int, int>;

// Graph on labels 0..n-1 with a sorted, duplicate-free edge list; the form
// used as memo key inside the recursion.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;
  friend bool operator<(const Multigraph& a, const Multigraph& b) {
    return std::tie(a.n, a.edges) < std::tie(b.n, b.edges);
  }
};

IntPolynomial k_minus(long long c) { return IntPolynomial::linear(c); }

class DeletionContraction {
 public:
  IntPolynomial solve(Multigraph g) {
    IntPolynomial factor = IntPolynomial::constant(1);
    peel(g, factor);
    if (g.edges.empty()) return factor * IntPolynomial::monomial(1, g.n);

    // Split into connected components.
    std::vector<int> comp = components(g);
    const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    if (ncomp > 1) {
      IntPolynomial prod = factor;
      for (int c = 0; c < ncomp; ++c) prod *= solve(restrict(g, comp, c));
      return prod;
    }

    if (auto it = memo_.find(g); it != memo_.end()) return factor * it->second;

    // Branch on an edge at a minimum-degree vertex.
    std::vector<int> deg(g.n, 0);
    for (auto [a, b] : g.edges) ++deg[a], ++deg[b];
    Edge pick = g.edges.front();
    for (const auto& e : g.edges)
      if (std::min(deg[e.first], deg[e.second]) < std::min(deg[pick.first], deg[pick.second]))
        pick = e;

    Multigraph deleted = g;
    deleted.edges.erase(std::find(deleted.edges.begin(), deleted.edges.end(), pick));
    const IntPolynomial result = solve(deleted) - solve(contract(g, pick));
    memo_.emplace(g, result);
    return factor * result;
  }

 private:
  // Removes isolated (factor k) and pendant (factor k-1) vertices until none
  // remain, then relabels.
  static void peel(Multigraph& g, IntPolynomial& factor) {
    std::vector<bool> alive(g.n, true);
    std::vector<std::set<int>> adj(g.n);
    for (auto [a, b] : g.edges) adj[a].insert(b), adj[b].insert(a);
    bool changed = true;
    int removed_isolated = 0, removed_pendant = 0;
    while (changed) {
      changed = false;
      for (int v = 0; v < g.n; ++v) {
        if (!alive[v] || adj[v].size() > 1) continue;
        // Keep one isolated vertex when it is all that is left; handled below.
        if (adj[v].empty()) {
          ++removed_isolated;
        } else {
          const int u = *adj[v].begin();
          adj[u].erase(v);
          adj[v].clear();
          ++removed_pendant;
        }
        alive[v] = false;
        changed = true;
      }
    }
    if (removed_isolated) factor *= IntPolynomial::monomial(1, removed_isolated);
    if (removed_pendant) factor *= k_minus(1).pow(removed_pendant);
    relabel(g, alive, adj);
  }

  static void relabel(Multigraph& g, const std::vector<bool>& alive,
                      const std::vector<std::set<int>>& adj) {
    std::vector<int> id(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
      if (alive[v]) id[v] = next++;
    std::vector<Edge> edges;
    for (int v = 0; v < g.n; ++v)
      if (alive[v])
        for (int u : adj[v])
          if (v < u && alive[u]) edges.emplace_back(id[v], id[u]);
    std::sort(edges.begin(), edges.end());
    g.n = next;
    g.edges = std::move(edges);
  }

  static std::vector<int> components(const Multigraph& g) {
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : g.edges) parent[find(a)] = find(b);
    std::map<int, int> ids;
    std::vector<int> comp(g.n);
    for (int v = 0; v < g.n; ++v) {
      auto [it, inserted] = ids.emplace(find(v), static_cast<int>(ids.size()));
      comp[v] = it->second;
    }
    return comp;
  }

  static Multigraph restrict(const Multigraph& g, const std::vector<int>& comp, int c) {
    std::vector<bool> alive(g.n);
    std::vector<std::set<int>> adj(g.n);
    for (int v = 0; v < g.n; ++v) alive[v] = comp[v] == c;
    for (auto [a, b] : g.edges)
      if (comp[a] == c) adj[a].insert(b), adj[b].insert(a);
    Multigraph out = g;
    relabel(out, alive, adj);
    return out;
  }

  // Merges the endpoints of `e`; parallel edges collapse.
  static Multigraph contract(const Multigraph& g, Edge e) {
    const auto [keep, gone] = e;
    std::vector<bool> alive(g.n, true);
    alive[gone] = false;
    std::vector<std::set<int>> adj(g.n);
    for (auto [a, b] : g.edges) {
      if (std::make_pair(a, b) == e) continue;
      const int x = a == gone ? keep : a;
      const int y = b == gone ? keep : b;
      if (x != y) adj[x].insert(y), adj[y].insert(x);
    }
    Multigraph out = g;
    relabel(out, alive, adj);
    return out;
  }

  std::map<Multigraph, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial chromatic_polynomial(const SimpleGraph& g, std::size_t max_cycle_rank) {
  if (g.cycle_rank() > max_cycle_rank) {
    throw ResourceError("deletion-contraction: cycle rank " +
                        std::to_string(g.cycle_rank()) + " exceeds cap " +
                        std::to_string(max_cycle_rank));
  }
  Multigraph m;
  m.n = static_cast<int>(g.vertex_count());
  for (auto [u, v] : g.edges()) m.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  if (m.n == 0) return IntPolynomial::constant(1);
  return DeletionContraction{}.solve(std::move(m));
}

SimpleGraph c4_chain(int d) {
  if (d < 1) throw DomainError("c4_chain: d must be >= 1");
  // Bottom row 0..d, top row d+1..2d+1.
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  SimpleGraph g(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(i, n + i);
    if (i + 1 < n) {
      g.add_edge(i, i + 1);
      g.add_edge(n + i, n + i + 1);
    }
  }
  return g;
}

namespace {
const IntPolynomial& square_factor() {
  static const IntPolynomial q{3, -3, 1};  // k^2 - 3k + 3
  return q;
}
}  // namespace

IntPolynomial chi_c4_chain(int d) {
  if (d < 1) throw DomainError("chi_c4_chain: d must be >= 1");
  return IntPolynomial::variable() * k_minus(1) * square_factor().pow(d);
}

IntPolynomial chi_blambda_formula(int ell) {
  if (ell < 3) throw DomainError("chi_blambda_formula: ell must be >= 3");
  const unsigned m = static_cast<unsigned>((ell - 1) * (ell - 2) / 2);
  return IntPolynomial::variable() * k_minus(1).pow(3) * square_factor().pow(m);
}

FormulaComparison compare_blambda_formula(int ell, const Limits& limits) {
  const LayeredGraph b = LayeredGraph::build(staircase(ell));
  FormulaComparison c;
  c.ell = ell;
  c.vertex_count = b.vertex_count();
  c.formula = chi_blambda_formula(ell);
  c.computed = chromatic_polynomial(b.underlying(), limits.max_cycle_rank);
  return c;
}

ChromaticNumber chromatic_number(const SimpleGraph& g, std::size_t max_cycle_rank) {
  if (g.vertex_count() == 0) throw DomainError("chromatic_number: empty graph");
  const IntPolynomial chi = chromatic_polynomial(g, max_cycle_rank);
  ChromaticNumber r;
  for (int t = 1; t <= static_cast<int>(g.vertex_count()); ++t) {
    if (chi.evaluate(t) > 0) {
      r.value = t;
      break;
    }
  }
  r.bipartite = is_bipartite(g);
  r.consistent = (r.value <= 2) == r.bipartite && r.value >= 1;
  return r;
}

ColourSeparation colour_separation(const Partition& staircase_partition) {
  auto ell = staircase_partition.staircase_length();
  if (!ell) throw DomainError("colour_separation: not a staircase partition");
  ColourSeparation s;
  s.ell = *ell;
  // |V_i| = ell + 1 - i
  for (int i = 1; i <= *ell; ++i) (i % 2 == 1 ? s.mu : s.kappa) += *ell + 1 - i;
  return s;
}

bool BoundReport::all_within_bound() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.within_bound(); });
}

bool BoundReport::predicted_equalities_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) {
    return r.equality_predicted() == r.equality();
  });
}

BoundReport balance_bound_check(int ell_max) {
  if (ell_max < 1) throw DomainError("balance_bound_check: ell_max must be >= 1");
  BoundReport report;
  for (int ell = 1; ell <= ell_max; ++ell) {
    const ColourSeparation s = colour_separation(staircase(ell));
    report.rows.push_back({ell, s.balance(), (ell + 1) / 2});
  }
  return report;
}

bool shared_balance_check(int k) {
  if (k < 1) throw DomainError("shared_balance_check: k must be >= 1");
  return colour_separation(staircase(2 * k - 1)).balance() == k &&
         colour_separation(staircase(2 * k)).balance() == k;
}

nlohmann::json to_json(const ColourSeparation& s) {
  return {{"ell", s.ell}, {"mu", s.mu}, {"kappa", s.kappa}, {"balance", s.balance()}};
}

nlohmann::json to_json(const FormulaComparison& c) {
  return {{"ell", c.ell},
          {"vertices", c.vertex_count},
          {"computed", to_json(c.computed)},
          {"computed_degree", c.computed.degree()},
          {"formula", to_json(c.formula)},
          {"formula_degree", c.formula.degree()},
          {"degree_equals_vertices", c.degree_equals_vertices()},
          {"formula_matches", c.formula_matches()}};
}

}  // namespace rwg
