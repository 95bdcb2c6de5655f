#include "rwg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "rwg/error.hpp"

namespace rwg {

namespace {

// pos - neg equals the sum of `terms`.
struct Work {
  Monomial pos, neg;
  std::vector<DerivationTerm> terms;
};

// lead - trail = sign * log[entry].value
struct Element {
  Monomial lead, trail;
  std::size_t entry;
  int sign;
};

class Engine {
 public:
  Engine(std::size_t nvars, MonomialOrder order, const Limits& limits)
      : order_(order), limits_(limits) {
    result_.nvars = nvars;
    result_.order = order;
  }

  GroebnerResult run(const std::vector<Binomial>& gens) {
    result_.input_count = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i) log(gens[i], {});
    for (std::size_t i = 0; i < gens.size(); ++i)
      add(reduce({gens[i].u, gens[i].v, {{1, Monomial(result_.nvars, 0), i}}}, elements_));

    while (!queue_.empty()) {
      const auto [i, j] = std::get<2>(*queue_.begin());
      queue_.erase(queue_.begin());
      const Element& a = elements_[i];
      const Element& b = elements_[j];
      const Monomial l = lcm(a.lead, b.lead);
      const Monomial qa = quotient(l, a.lead), qb = quotient(l, b.lead);
      // qa*(a.lead - a.trail) - qb*(b.lead - b.trail)
      Work s{qb * b.trail, qa * a.trail,
             {{a.sign, qa, a.entry}, {-b.sign, qb, b.entry}}};
      ++result_.pairs_reduced;
      add(reduce(std::move(s), elements_));
    }
    finish();
    return std::move(result_);
  }

 private:
  // With `tail_only` the positive term is left alone.
  Work reduce(Work w, const std::vector<Element>& basis, bool tail_only = false) {
    bool changed = true;
    while (changed && w.pos != w.neg) {
      changed = false;
      for (const auto& g : basis) {
        if (!tail_only && divides(g.lead, w.pos)) {
          const Monomial q = quotient(w.pos, g.lead);
          w.pos = q * g.trail;
          w.terms.push_back({-g.sign, q, g.entry});
          changed = true;
        } else if (divides(g.lead, w.neg)) {
          const Monomial q = quotient(w.neg, g.lead);
          w.neg = q * g.trail;
          w.terms.push_back({g.sign, q, g.entry});
          changed = true;
        }
        if (changed) break;
      }
    }
    return w;
  }

  std::size_t log(const Binomial& value, std::vector<DerivationTerm> terms) {
    derivation_terms_ += terms.size();
    if (derivation_terms_ > limits_.max_derivations)
      throw ResourceError("buchberger: derivation log exceeded " +
                          std::to_string(limits_.max_derivations) + " terms");
    result_.log.push_back({value, std::move(terms)});
    return result_.log.size() - 1;
  }

  // Logs a nonzero reduced work item and returns it as an element.
  Element settle(Work w) {
    std::size_t entry;
    if (w.terms.size() == 1 && w.terms[0].sign == 1 && is_one(w.terms[0].multiplier)) {
      entry = w.terms[0].entry;  // unchanged input
    } else {
      entry = log(Binomial(w.pos, w.neg), std::move(w.terms));
    }
    if (compare(w.pos, w.neg, order_) > 0) return {w.pos, w.neg, entry, 1};
    return {w.neg, w.pos, entry, -1};
  }

  void add(Work w) {
    if (w.pos == w.neg) return;
    Element e = settle(std::move(w));
    if (elements_.size() >= limits_.max_basis)
      throw ResourceError("buchberger: basis exceeded " + std::to_string(limits_.max_basis) +
                          " elements");
    const std::size_t k = elements_.size();
    elements_.push_back(std::move(e));
    for (std::size_t i = 0; i < k; ++i) {
      if (coprime(elements_[i].lead, elements_[k].lead)) {
        ++result_.pairs_skipped;
        continue;
      }
      queue_.insert({lcm(elements_[i].lead, elements_[k].lead), next_pair_++, {i, k}});
    }
  }

  void finish() {
    // Minimal basis: drop elements whose lead is a multiple of another lead.
    std::vector<Element> minimal;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < elements_.size() && !redundant; ++j) {
        if (i == j || !divides(elements_[j].lead, elements_[i].lead)) continue;
        redundant = elements_[j].lead != elements_[i].lead || j < i;
      }
      if (!redundant) minimal.push_back(elements_[i]);
    }
    // Reduced basis: bring every trail to normal form.
    std::vector<Element> reduced;
    for (const auto& e : minimal) {
      Work w{e.lead, e.trail, {{e.sign, Monomial(result_.nvars, 0), e.entry}}};
      w = reduce(std::move(w), minimal, true);
      if (w.neg == e.trail) {
        reduced.push_back(e);
      } else {
        Element r = settle(std::move(w));
        if (r.lead != e.lead) throw InternalError("buchberger: tail reduction reordered terms");
        reduced.push_back(std::move(r));
      }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Element& a, const Element& b) {
      const int c = compare(a.lead, b.lead, order_);
      if (c != 0) return c < 0;
      return compare(a.trail, b.trail, order_) < 0;
    });
    for (const auto& e : reduced) {
      result_.basis.emplace_back(e.lead, e.trail);
      result_.certificates.push_back({e.entry, e.sign});
    }
  }

  struct PairOrder {
    MonomialOrder order;
    using Key = std::tuple<Monomial, std::size_t, std::pair<std::size_t, std::size_t>>;
    bool operator()(const Key& a, const Key& b) const {
      const int da = total_degree(std::get<0>(a)), db = total_degree(std::get<0>(b));
      if (da != db) return da < db;
      const int c = compare(std::get<0>(a), std::get<0>(b), order);
      if (c != 0) return c < 0;
      return std::get<1>(a) < std::get<1>(b);
    }
  };

  MonomialOrder order_;
  const Limits& limits_;
  GroebnerResult result_;
  std::vector<Element> elements_;
  std::set<PairOrder::Key, PairOrder> queue_{PairOrder{order_}};
  std::size_t next_pair_ = 0;
  std::size_t derivation_terms_ = 0;
};

using Sparse = std::map<Monomial, long long>;

void add_scaled(Sparse& acc, const Binomial& b, int sign, const Monomial& mult) {
  for (auto [m, c] : {std::pair{b.u * mult, 1}, std::pair{b.v * mult, -1}}) {
    long long& slot = acc[m];
    slot += static_cast<long long>(sign) * c;
    if (slot == 0) acc.erase(m);
  }
}

Sparse as_sparse(const Binomial& b) {
  Sparse s;
  add_scaled(s, b, 1, Monomial(b.nvars(), 0));
  return s;
}

}  // namespace

GroebnerResult buchberger_binomial(const std::vector<Binomial>& gens, MonomialOrder order,
                                   const Limits& limits) {
  if (gens.empty()) throw DomainError("buchberger: empty generator list");
  const std::size_t n = gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw DomainError("buchberger: generators have different lengths");
  return Engine(n, order, limits).run(gens);
}

bool verify_certificates(const GroebnerResult& result) {
  const auto& log = result.log;
  for (std::size_t k = 0; k < log.size(); ++k) {
    const auto& e = log[k];
    if (e.terms.empty()) {
      if (k >= result.input_count) return false;
      continue;
    }
    Sparse acc;
    for (const auto& t : e.terms) {
      if (t.entry >= k || (t.sign != 1 && t.sign != -1)) return false;
      add_scaled(acc, log[t.entry].value, t.sign, t.multiplier);
    }
    if (acc != as_sparse(e.value)) return false;
  }
  if (result.certificates.size() != result.basis.size()) return false;
  for (std::size_t i = 0; i < result.basis.size(); ++i) {
    const auto& c = result.certificates[i];
    if (c.entry >= log.size()) return false;
    const Binomial& v = log[c.entry].value;
    const Binomial expect = c.sign == 1 ? v : Binomial(v.v, v.u);
    if (!(expect == result.basis[i])) return false;
  }
  return true;
}

Monomial normal_form(const Monomial& m, const std::vector<Binomial>& basis, MonomialOrder order) {
  Monomial cur = m;
  for (;;) {
    bool changed = false;
    for (const auto& g : basis) {
      const Binomial o = g.oriented(order);
      if (divides(o.u, cur)) {
        cur = quotient(cur, o.u) * o.v;
        changed = true;
        break;
      }
    }
    if (!changed) return cur;
  }
}

std::optional<Binomial> normal_form(const Binomial& b, const std::vector<Binomial>& basis,
                                    MonomialOrder order) {
  Monomial u = normal_form(b.u, basis, order);
  Monomial v = normal_form(b.v, basis, order);
  if (u == v) return std::nullopt;
  return Binomial(std::move(u), std::move(v));
}

bool verify_groebner(const std::vector<Binomial>& basis, MonomialOrder order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Binomial a = basis[i].oriented(order), b = basis[j].oriented(order);
      const Monomial l = lcm(a.u, b.u);
      const Monomial p = quotient(l, b.u) * b.v;
      const Monomial q = quotient(l, a.u) * a.v;
      if (p == q) continue;
      if (normal_form(p, basis, order) != normal_form(q, basis, order)) return false;
    }
  }
  return true;
}

MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, MonomialOrder order,
                            std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.oriented(order).u);
  return MonomialIdeal(nvars, std::move(leads));
}

nlohmann::json to_json(const GroebnerResult& result, const std::vector<std::string>& names) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : result.basis) {
    nlohmann::json j = to_json(b);
    j["text"] = b.to_string(names);
    basis.push_back(j);
  }
  return {{"nvars", result.nvars},
          {"order", to_string(result.order)},
          {"basis", basis},
          {"log_entries", result.log.size()},
          {"pairs_reduced", result.pairs_reduced},
          {"pairs_skipped_coprime", result.pairs_skipped}};
}

}  // namespace rwg
