#include "rwg/polynomial.hpp"

#include <limits>
#include <sstream>

#include "rwg/error.hpp"

namespace rwg {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::variable() { return monomial(1, 1); }

IntPolynomial IntPolynomial::linear(long long root) {
  return IntPolynomial{-root, 1};
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : BigInt(0);
}

BigInt IntPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(
    const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.leading_coefficient() != 1) {
    throw DomainError("divmod_monic: divisor must be monic");
  }
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {IntPolynomial(), *this};
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const BigInt c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(big_to_json(c));
  return arr;
}

}  // namespace rwg
