#include "rwg/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "rwg/error.hpp"

namespace rwg {

bool SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw DomainError("graph: edge endpoint out of range");
  }
  if (u == v) throw DomainError("graph: self-loop rejected");
  if (has_edge(u, v)) return false;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
  return true;
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (std::size_t v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t SimpleGraph::component_count() const {
  std::vector<bool> seen(adj_.size(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < adj_.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj_[u])
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
  }
  return count;
}

std::size_t SimpleGraph::cycle_rank() const {
  return edges_ + component_count() - adj_.size();
}

std::optional<std::vector<int>> two_colouring(const SimpleGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : g.neighbours(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const SimpleGraph& g) { return two_colouring(g).has_value(); }

std::size_t count_four_cycles(const SimpleGraph& g) {
  std::set<std::vector<std::size_t>> subsets;
  const std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      std::vector<std::size_t> common;
      std::set_intersection(g.neighbours(a).begin(), g.neighbours(a).end(),
                            g.neighbours(c).begin(), g.neighbours(c).end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          std::vector<std::size_t> s{a, c, common[i], common[j]};
          std::sort(s.begin(), s.end());
          subsets.insert(std::move(s));
        }
      }
    }
  }
  return subsets.size();
}

namespace {

// Colour refinement run on both graphs at once so that colour ids are
// comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colours(
    const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t na = a.vertex_count();
  std::vector<int> ca(na), cb(b.vertex_count());
  for (std::size_t v = 0; v < na; ++v) ca[v] = static_cast<int>(a.degree(v));
  for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = static_cast<int>(b.degree(v));

  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const SimpleGraph& g, const std::vector<int>& c,
                        std::size_t v) {
      std::vector<int> nb;
      for (std::size_t u : g.neighbours(v)) nb.push_back(c[u]);
      std::sort(nb.begin(), nb.end());
      return Signature{c[v], std::move(nb)};
    };
    std::map<Signature, int> ids;
    std::vector<Signature> sa, sb;
    for (std::size_t v = 0; v < na; ++v) sa.push_back(signature(a, ca, v));
    for (std::size_t v = 0; v < cb.size(); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < na; ++v) ca[v] = ids[sa[v]];
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = ids[sb[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& a, const SimpleGraph& b, std::vector<int> ca,
            std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.vertex_count(), kNone), used_(b.vertex_count(), false) {
    order_ = search_order();
  }

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // BFS order starting from the rarest colour, so each new vertex is
  // constrained by already-mapped neighbours.
  std::vector<std::size_t> search_order() const {
    const std::size_t n = a_.vertex_count();
    std::map<int, std::size_t> freq;
    for (int c : ca_) ++freq[c];
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    while (order.size() < n) {
      std::size_t start = kNone;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (start == kNone || freq[ca_[v]] < freq[ca_[start]] ||
            (freq[ca_[v]] == freq[ca_[start]] && a_.degree(v) > a_.degree(start)))
          start = v;
      }
      std::queue<std::size_t> q;
      q.push(start);
      placed[start] = true;
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        order.push_back(u);
        for (std::size_t w : a_.neighbours(u))
          if (!placed[w]) {
            placed[w] = true;
            q.push(w);
          }
      }
    }
    return order;
  }

  bool consistent(std::size_t u, std::size_t x) const {
    if (ca_[u] != cb_[x]) return false;
    for (std::size_t w : a_.neighbours(u)) {
      if (map_[w] != kNone && !b_.has_edge(x, map_[w])) return false;
    }
    // Non-edges must map to non-edges; counting mapped neighbours suffices.
    std::size_t mapped_nb_a = 0, mapped_nb_b = 0;
    for (std::size_t w : a_.neighbours(u))
      if (map_[w] != kNone) ++mapped_nb_a;
    for (std::size_t y : b_.neighbours(x))
      if (used_[y]) ++mapped_nb_b;
    return mapped_nb_a == mapped_nb_b;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (std::size_t x = 0; x < b_.vertex_count(); ++x) {
      if (used_[x] || !consistent(u, x)) continue;
      map_[u] = x;
      used_[x] = true;
      if (extend(depth + 1)) return true;
      map_[u] = kNone;
      used_[x] = false;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::vector<int> ca_, cb_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                    std::size_t max_vertices) {
  if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices) {
    throw ResourceError("isomorphism: graph order exceeds cap of " +
                        std::to_string(max_vertices) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  auto [ca, cb] = refine_colours(a, b);
  std::vector<int> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  return IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle_graph: n must be >= 3");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace rwg
