#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/limits.hpp"
#include "rwg/polynomial.hpp"

namespace rwg {

// Exponent vector. All monomials combined in one operation must have the
// same number of variables.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
bool coprime(const Monomial& a, const Monomial& b);
bool is_one(const Monomial& m);

// Variable i is ordered above variable i+1 in every order.
enum class MonomialOrder { kGrevLex, kDegLex, kLex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_order(const std::string& name);  // MalformedError

// Negative, zero or positive as a is smaller, equal or larger than b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

// "x0^2*x3"; "1" for the unit monomial. `names` defaults to x0, x1, ...
std::string monomial_string(const Monomial& m, const std::vector<std::string>& names = {});
std::vector<std::string> default_variable_names(std::size_t n);

// Monomial ideal kept as a minimal generating antichain, sorted ascending
// in lex on exponent vectors.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;
  bool is_unit() const;  // contains 1

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

// Hilbert series of S/I for S = k[x_0..x_{n-1}] with standard grading,
// written as numerator / (1-t)^n and in lowest terms as
// reduced / (1-t)^dimension.
struct HilbertData {
  std::size_t nvars = 0;
  IntPolynomial numerator;
  IntPolynomial reduced_numerator;
  int dimension = 0;  // -1 for the zero ring
  BigInt degree = 0;
  bool zero_ring() const { return numerator.is_zero(); }
  // Coefficients of the Hilbert series up to t^max_degree.
  std::vector<BigInt> hilbert_function(int max_degree) const;
};

// Pivot recursion: N(I) = N(I + <x_i>) + t N(I : x_i); pairwise coprime
// generators give prod (1 - t^deg g) directly.
HilbertData hilbert(const MonomialIdeal& ideal, const Limits& limits = {});

// Number of degree-d monomials outside the ideal, by direct enumeration.
std::vector<BigInt> count_standard_monomials(const MonomialIdeal& ideal, int max_degree);

nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const HilbertData& h);

}  // namespace rwg
