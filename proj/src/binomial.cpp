#include "rwg/binomial.hpp"

#include <utility>

#include "rwg/error.hpp"

namespace rwg {

Binomial::Binomial(Monomial plus, Monomial minus) : u(std::move(plus)), v(std::move(minus)) {
  if (u.size() != v.size()) throw DomainError("binomial: exponent vectors differ in length");
  if (u == v) throw DomainError("binomial: x^u - x^u is zero");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] < 0 || v[i] < 0) throw DomainError("binomial: negative exponent");
}

Binomial Binomial::oriented(MonomialOrder order) const {
  return compare(u, v, order) > 0 ? *this : Binomial(v, u);
}

std::string Binomial::to_string(const std::vector<std::string>& names) const {
  return monomial_string(u, names) + " - " + monomial_string(v, names);
}

bool in_kernel(const Binomial& b, const std::vector<long long>& weights) {
  if (weights.size() != b.nvars())
    throw DomainError("in_kernel: " + std::to_string(weights.size()) + " weights for " +
                      std::to_string(b.nvars()) + " variables");
  long long lhs = 0, rhs = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    lhs += b.u[i] * weights[i];
    rhs += b.v[i] * weights[i];
  }
  return lhs == rhs;
}

void BinomialIdeal::validate() const {
  for (const auto& g : generators)
    if (g.nvars() != nvars) throw DomainError("binomial ideal: generator has wrong length");
  if (weights && weights->size() != nvars)
    throw DomainError("binomial ideal: weight vector has wrong length");
  if (!names.empty() && names.size() != nvars)
    throw DomainError("binomial ideal: wrong number of variable names");
}

std::vector<std::string> BinomialIdeal::variable_names() const {
  return names.empty() ? default_variable_names(nvars) : names;
}

nlohmann::json to_json(const Binomial& b) { return {{"u", b.u}, {"v", b.v}}; }

nlohmann::json to_json(const BinomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators) gens.push_back(to_json(g));
  nlohmann::json j = {{"nvars", ideal.nvars}};
  if (ideal.weights) j["weights"] = *ideal.weights;
  if (!ideal.names.empty()) j["names"] = ideal.names;
  j["generators"] = gens;
  return j;
}

}  // namespace rwg
