#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"
#include "rwg/binomial.hpp"
#include "rwg/limits.hpp"
#include "rwg/monomial.hpp"

namespace rwg {

// One summand sign * x^multiplier * (value of log entry `entry`).
struct DerivationTerm {
  int sign = 1;
  Monomial multiplier;
  std::size_t entry = 0;
};

// `value` (as u - v) equals the sum of `terms` exactly. Input generators
// have no terms.
struct DerivationEntry {
  Binomial value;
  std::vector<DerivationTerm> terms;
};

// basis element = sign * log[entry].value
struct Certificate {
  std::size_t entry = 0;
  int sign = 1;
};

struct GroebnerResult {
  std::size_t nvars = 0;
  MonomialOrder order = MonomialOrder::kGrevLex;
  std::vector<Binomial> basis;  // reduced, lead term first, sorted by lead
  std::vector<Certificate> certificates;
  std::vector<DerivationEntry> log;
  std::size_t input_count = 0;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;  // coprime leads
};

// Buchberger's algorithm in pure binomial arithmetic. S-polynomials and
// reductions of binomials are binomials, so coefficients stay +-1.
// DomainError for an empty or ragged input; ResourceError past the basis or
// derivation caps.
GroebnerResult buchberger_binomial(const std::vector<Binomial>& gens,
                                   MonomialOrder order = MonomialOrder::kGrevLex,
                                   const Limits& limits = {});

// Replays every log entry with general sparse polynomial arithmetic and
// checks that each basis element is the certified entry.
bool verify_certificates(const GroebnerResult& result);

// Every S-polynomial of every pair reduces to zero. No criteria are used.
bool verify_groebner(const std::vector<Binomial>& basis, MonomialOrder order);

// Normal form of a monomial modulo a binomial set (itself a monomial). The
// basis elements must be oriented lead first.
Monomial normal_form(const Monomial& m, const std::vector<Binomial>& basis, MonomialOrder order);
// nullopt when the binomial reduces to zero.
std::optional<Binomial> normal_form(const Binomial& b, const std::vector<Binomial>& basis,
                                    MonomialOrder order);

MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, MonomialOrder order,
                            std::size_t nvars);

nlohmann::json to_json(const GroebnerResult& result, const std::vector<std::string>& names = {});

}  // namespace rwg
