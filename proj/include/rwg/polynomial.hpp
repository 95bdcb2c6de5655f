#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace rwg {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial with exact integer coefficients; index is the
// degree. The coefficient vector never carries trailing zeros, so the zero
// polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  // The polynomial `x`.
  static IntPolynomial variable();
  // x - root
  static IntPolynomial linear(long long root);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t d) const;
  BigInt leading_coefficient() const;
  BigInt evaluate(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned exponent) const;

  // Division by a monic divisor; returns {quotient, remainder}.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(
      const IntPolynomial& divisor) const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) {
    return a *= b;
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Descending-degree text such as "k^4 - 4k^3 + 6k^2 - 3k".
  std::string to_string(std::string_view var = "k") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Coefficients as a JSON array, constant term first. Values that fit in 64
// bits are emitted as numbers, larger ones as decimal strings.
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json big_to_json(const BigInt& v);

}  // namespace rwg
