#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/monomial.hpp"

namespace rwg {

// x^u - x^v with u != v.
struct Binomial {
  Monomial u;
  Monomial v;

  Binomial() = default;
  Binomial(Monomial plus, Monomial minus);  // DomainError on length mismatch or u == v

  std::size_t nvars() const { return u.size(); }
  bool has_disjoint_supports() const { return coprime(u, v); }
  // Lead term first under `order`, i.e. u > v.
  Binomial oriented(MonomialOrder order) const;
  int degree() const { return std::max(total_degree(u), total_degree(v)); }
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

// True when x^u - x^v vanishes under x_i -> t^{w_i}.
bool in_kernel(const Binomial& b, const std::vector<long long>& weights);

struct BinomialIdeal {
  std::size_t nvars = 0;
  std::optional<std::vector<long long>> weights;
  std::vector<std::string> names;  // empty means x0, x1, ...
  std::vector<Binomial> generators;

  // DomainError when a generator or the weights have the wrong length.
  void validate() const;
  std::vector<std::string> variable_names() const;
};

nlohmann::json to_json(const Binomial& b);
nlohmann::json to_json(const BinomialIdeal& ideal);

}  // namespace rwg
