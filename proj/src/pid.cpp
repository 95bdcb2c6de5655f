#include "rwg/pid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rwg/chroma.hpp"

namespace rwg {

namespace {

long long total(const std::vector<int>& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

void sort_desc(std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

// Distinct nonempty sub-multisets grouped by sum.
std::map<long long, std::set<std::vector<int>>> submultisets_by_sum(const std::vector<int>& parts) {
  std::map<long long, std::set<std::vector<int>>> out;
  const std::size_t n = parts.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> pick;
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        pick.push_back(parts[i]);
        s += parts[i];
      }
    }
    out[s].insert(std::move(pick));  // parts are sorted, so picks are too
  }
  return out;
}

std::vector<bool> subset_sums(const std::vector<int>& parts, long long limit) {
  std::vector<bool> reach(limit + 1, false);
  reach[0] = true;
  for (int p : parts)
    for (long long s = limit; s >= p; --s)
      if (reach[s - p]) reach[s] = true;
  return reach;
}

void check_size(const PartitionIdentity& id, std::size_t max_parts) {
  if (id.part_count() > max_parts)
    throw ResourceError("partition identity has " + std::to_string(id.part_count()) +
                        " parts, cap is " + std::to_string(max_parts));
}

}  // namespace

PartitionIdentity PartitionIdentity::make(std::vector<int> lhs, std::vector<int> rhs, int bound) {
  if (lhs.empty() || rhs.empty()) throw DomainError("partition identity: empty side");
  for (const auto* side : {&lhs, &rhs})
    for (int p : *side)
      if (p < 1 || p > bound)
        throw DomainError("partition identity: part " + std::to_string(p) + " outside 1.." +
                          std::to_string(bound));
  if (total(lhs) != total(rhs))
    throw InvalidIdentityError("partition identity: sides sum to " + std::to_string(total(lhs)) +
                               " and " + std::to_string(total(rhs)));
  PartitionIdentity id;
  sort_desc(lhs);
  sort_desc(rhs);
  id.lhs_ = std::move(lhs);
  id.rhs_ = std::move(rhs);
  id.bound_ = bound;
  return id;
}

long long PartitionIdentity::sum() const { return total(lhs_); }

std::string PartitionIdentity::to_string() const {
  auto side = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "+" : "") << v[i];
    return out.str();
  };
  return side(lhs_) + " = " + side(rhs_);
}

bool is_primitive(const PartitionIdentity& id, std::size_t max_parts) {
  check_size(id, max_parts);
  // Sub-sums strictly below the total come only from proper sub-multisets.
  const long long s = id.sum();
  const auto a = subset_sums(id.lhs(), s), b = subset_sums(id.rhs(), s);
  for (long long t = 1; t < s; ++t)
    if (a[t] && b[t]) return false;
  return true;
}

std::vector<PartitionIdentity> primitive_subidentities(const PartitionIdentity& id,
                                                       std::size_t max_parts) {
  check_size(id, max_parts);
  const auto left = submultisets_by_sum(id.lhs());
  const auto right = submultisets_by_sum(id.rhs());
  std::vector<PartitionIdentity> out;
  for (const auto& [s, lsets] : left) {
    if (s >= id.sum()) continue;
    auto it = right.find(s);
    if (it == right.end()) continue;
    for (const auto& l : lsets) {
      for (const auto& r : it->second) {
        PartitionIdentity sub = PartitionIdentity::make(l, r, id.bound());
        if (is_primitive(sub, max_parts)) out.push_back(std::move(sub));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PartitionIdentity& a, const PartitionIdentity& b) {
    if (a.rhs() != b.rhs()) return a.rhs() > b.rhs();
    return a.lhs() > b.lhs();
  });
  return out;
}

Cspi cspi(const Partition& staircase_partition) {
  const auto ell = staircase_partition.staircase_length();
  if (!ell) throw DomainError("cspi: not a staircase partition");
  if (*ell < 5) throw DomainError("cspi: needs length >= 5, got " + std::to_string(*ell));
  const ColourSeparation sep = colour_separation(staircase_partition);
  std::vector<int> lhs(*ell);
  std::iota(lhs.begin(), lhs.end(), 1);
  Cspi c;
  c.ell = *ell;
  c.mu = sep.mu;
  c.kappa = sep.kappa;
  c.identity = PartitionIdentity::make(lhs, {static_cast<int>(sep.mu), static_cast<int>(sep.kappa)},
                                       static_cast<int>(sep.mu));
  std::vector<int> all = lhs;
  all.push_back(static_cast<int>(sep.mu));
  all.push_back(static_cast<int>(sep.kappa));
  std::sort(all.begin(), all.end());
  c.all_parts_distinct = std::adjacent_find(all.begin(), all.end()) == all.end();
  return c;
}

std::vector<PartitionIdentity> parity_splits(int ell) {
  if (ell < 2) throw DomainError("parity_splits: ell must be >= 2");
  std::vector<int> odd, even;
  for (int i = 1; i <= ell; ++i) (i % 2 ? odd : even).push_back(i);
  const int so = static_cast<int>(total(odd)), se = static_cast<int>(total(even));
  const int bound = std::max(so, se);
  return {PartitionIdentity::make(odd, {so}, bound), PartitionIdentity::make(even, {se}, bound)};
}

std::vector<std::string> GraverResult::variable_names() const {
  std::vector<std::string> names;
  for (long long w : weights) names.push_back("x" + std::to_string(w));
  return names;
}

GraverResult graver_1xn(const std::vector<long long>& weights, int degree_bound,
                        std::size_t max_states) {
  if (weights.empty()) throw DomainError("graver_1xn: empty weight vector");
  if (degree_bound < 1) throw DomainError("graver_1xn: degree bound must be >= 1");
  for (long long w : weights)
    if (w < 1) throw DomainError("graver_1xn: weights must be positive");
  {
    auto sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("graver_1xn: weights must be distinct");
  }
  const std::size_t n = weights.size();
  GraverResult result;
  result.weights = weights;
  result.degree_bound = degree_bound;

  auto bump = [&] {
    if (++result.states > max_states) {
      std::sort(result.elements.begin(), result.elements.end(),
                [](const Binomial& a, const Binomial& b) {
                  return std::tuple(a.degree(), a.u, a.v) < std::tuple(b.degree(), b.u, b.v);
                });
      result.complete = false;
      throw GraverCapExceeded("graver_1xn: state cap " + std::to_string(max_states) + " reached",
                              result);
    }
  };

  // Every nonzero exponent vector of degree <= bound, grouped by weight.
  std::map<long long, std::vector<Monomial>> by_weight;
  Monomial m(n, 0);
  auto walk = [&](auto&& self, std::size_t i, int left, long long w) -> void {
    if (i == n) {
      if (left < degree_bound) by_weight[w].push_back(m);
      bump();
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e, w + e * weights[i]);
    }
    m[i] = 0;
  };
  walk(walk, 0, degree_bound, 0);

  auto first_index = [](const Monomial& x) {
    return static_cast<std::size_t>(std::find_if(x.begin(), x.end(), [](int e) { return e > 0; }) -
                                    x.begin());
  };
  const int bound = static_cast<int>(*std::max_element(weights.begin(), weights.end()));
  for (const auto& [w, group] : by_weight) {
    for (const auto& u : group) {
      for (const auto& v : group) {
        bump();
        if (!coprime(u, v) || first_index(u) >= first_index(v)) continue;
        std::vector<int> lhs, rhs;
        for (std::size_t i = 0; i < n; ++i) {
          lhs.insert(lhs.end(), u[i], static_cast<int>(weights[i]));
          rhs.insert(rhs.end(), v[i], static_cast<int>(weights[i]));
        }
        if (is_primitive(PartitionIdentity::make(lhs, rhs, bound), 2 * degree_bound))
          result.elements.emplace_back(u, v);
      }
    }
  }
  std::sort(result.elements.begin(), result.elements.end(),
            [](const Binomial& a, const Binomial& b) {
              return std::tuple(a.degree(), a.u, a.v) < std::tuple(b.degree(), b.u, b.v);
            });
  return result;
}

nlohmann::json to_json(const PartitionIdentity& id) {
  auto asc = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return {{"lhs", asc(id.lhs())}, {"rhs", asc(id.rhs())}};
}

nlohmann::json to_json(const Cspi& c) {
  return {{"ell", c.ell},
          {"mu", c.mu},
          {"kappa", c.kappa},
          {"identity", to_json(c.identity)},
          {"text", c.identity.to_string()},
          {"all_parts_distinct", c.all_parts_distinct}};
}

nlohmann::json to_json(const GraverResult& g) {
  nlohmann::json elems = nlohmann::json::array();
  const auto names = g.variable_names();
  for (const auto& b : g.elements)
    elems.push_back({{"u", b.u}, {"v", b.v}, {"weights", g.weights}, {"text", b.to_string(names)}});
  return {{"weights", g.weights},
          {"degree_bound", g.degree_bound},
          {"complete", g.complete},
          {"elements", elems}};
}

}  // namespace rwg
