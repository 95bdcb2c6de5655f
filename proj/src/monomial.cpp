#include "rwg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rwg/error.hpp"

namespace rwg {

namespace {
void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DomainError("monomials have different variable counts");
}
}  // namespace

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw InternalError("monomial quotient: divisor does not divide");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

bool is_one(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::kGrevLex: return "grevlex";
    case MonomialOrder::kDegLex: return "deglex";
    case MonomialOrder::kLex: return "lex";
  }
  return "?";
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::kGrevLex;
  if (name == "deglex") return MonomialOrder::kDegLex;
  if (name == "lex") return MonomialOrder::kLex;
  throw MalformedError("unknown monomial order '" + name + "'");
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  require_same_size(a, b);
  if (order != MonomialOrder::kLex) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (order == MonomialOrder::kGrevLex) {
    // Smaller exponent in the last differing variable wins.
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  const auto& use = names.empty() ? default_variable_names(m.size()) : names;
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << use.at(i);
    if (m[i] > 1) out << '^' << m[i];
  }
  return first ? "1" : out.str();
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw DomainError("monomial ideal: generator has wrong length");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Low degree first, so anything dividing g has already been kept.
  for (const auto& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return divides(h, g); });
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return is_one(g); });
}

namespace {

class HilbertNumerator {
 public:
  explicit HilbertNumerator(const Limits& limits) : limits_(limits) {}

  IntPolynomial run(const std::vector<Monomial>& gens) {
    if (++nodes_ > limits_.max_hilbert_nodes)
      throw ResourceError("hilbert: pivot recursion exceeded " +
                          std::to_string(limits_.max_hilbert_nodes) + " nodes");
    if (gens.empty()) return IntPolynomial::constant(1);
    for (const auto& g : gens)
      if (is_one(g)) return IntPolynomial{};

    const std::size_t n = gens.front().size();
    // Pivot on the variable shared by the most generators.
    std::vector<int> uses(n, 0);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0) ++uses[i];
    const std::size_t pivot = static_cast<std::size_t>(
        std::max_element(uses.begin(), uses.end()) - uses.begin());

    if (uses[pivot] <= 1) {
      IntPolynomial prod = IntPolynomial::constant(1);
      for (const auto& g : gens)
        prod *= IntPolynomial::constant(1) - IntPolynomial::monomial(1, total_degree(g));
      return prod;
    }

    Monomial x(n, 0);
    x[pivot] = 1;
    std::vector<Monomial> plus = gens;
    plus.push_back(x);
    std::vector<Monomial> colon;
    for (auto g : gens) {
      if (g[pivot] > 0) --g[pivot];
      colon.push_back(std::move(g));
    }
    return run(MonomialIdeal(n, plus).generators()) +
           IntPolynomial::monomial(1, 1) * run(MonomialIdeal(n, colon).generators());
  }

 private:
  const Limits& limits_;
  std::size_t nodes_ = 0;
};

}  // namespace

HilbertData hilbert(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.nvars() > limits.max_hilbert_vars)
    throw ResourceError("hilbert: " + std::to_string(ideal.nvars()) + " variables exceed cap " +
                        std::to_string(limits.max_hilbert_vars));
  if (ideal.generators().size() > limits.max_hilbert_gens)
    throw ResourceError("hilbert: " + std::to_string(ideal.generators().size()) +
                        " generators exceed cap " + std::to_string(limits.max_hilbert_gens));
  HilbertData h;
  h.nvars = ideal.nvars();
  h.numerator = HilbertNumerator(limits).run(ideal.generators());
  if (h.numerator.is_zero()) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  // Strip factors of (1 - t) while the numerator vanishes at 1.
  IntPolynomial reduced = h.numerator;
  int removed = 0;
  while (reduced.evaluate(1) == 0) {
    auto [q, r] = reduced.divmod_monic(IntPolynomial::linear(1));
    if (!r.is_zero()) throw InternalError("hilbert: inexact division by (t-1)");
    reduced = -q;  // N = (1 - t) * (-q)
    ++removed;
  }
  h.reduced_numerator = reduced;
  h.dimension = static_cast<int>(h.nvars) - removed;
  h.degree = reduced.evaluate(1);
  return h;
}

std::vector<BigInt> HilbertData::hilbert_function(int max_degree) const {
  // numerator * (1-t)^{-n}; coefficient of t^d in (1-t)^{-n} is C(d+n-1, n-1).
  std::vector<BigInt> series(max_degree + 1, 0);
  std::vector<BigInt> denom(max_degree + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    BigInt c = 1;
    for (std::size_t j = 1; j < nvars; ++j) c = c * (d + j) / j;
    denom[d] = nvars == 0 ? BigInt(d == 0 ? 1 : 0) : c;
  }
  for (int i = 0; i <= numerator.degree() && i <= max_degree; ++i)
    for (int d = i; d <= max_degree; ++d) series[d] += numerator.coefficient(i) * denom[d - i];
  return series;
}

std::vector<BigInt> count_standard_monomials(const MonomialIdeal& ideal, int max_degree) {
  const std::size_t n = ideal.nvars();
  std::vector<BigInt> counts(max_degree + 1, 0);
  Monomial m(n, 0);
  // Walk every monomial of total degree <= max_degree.
  auto walk = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (!ideal.contains(m)) ++counts[max_degree - left];
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  if (n == 0) {
    counts[0] = ideal.is_unit() ? 0 : 1;
    return counts;
  }
  walk(walk, 0, max_degree);
  return counts;
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g);
  return {{"nvars", ideal.nvars()}, {"generators", gens}};
}

nlohmann::json to_json(const HilbertData& h) {
  return {{"nvars", h.nvars},
          {"numerator", to_json(h.numerator)},
          {"reduced_numerator", to_json(h.reduced_numerator)},
          {"dimension", h.dimension},
          {"degree", big_to_json(h.degree)}};
}

}  // namespace rwg
