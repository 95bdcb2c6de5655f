#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/polynomial.hpp"

namespace rwg {

// Power series in one variable truncated after degree `order`.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs);
  static TruncatedSeries from_polynomial(std::size_t order, const IntPolynomial& p);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  // Requires constant term +-1 so the inverse stays integral.
  TruncatedSeries inverse() const;

 private:
  std::vector<BigInt> coeffs_;
};

// Power series in (z, e) truncated to degree <= nz in z and <= ne in e.
class BivariateSeries {
 public:
  BivariateSeries(std::size_t nz, std::size_t ne);

  std::size_t z_order() const { return nz_; }
  std::size_t e_order() const { return ne_; }
  BigInt& at(std::size_t i, std::size_t j) { return c_[i * (ne_ + 1) + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return c_[i * (ne_ + 1) + j]; }

  BivariateSeries operator*(const BivariateSeries& rhs) const;
  BivariateSeries inverse() const;

 private:
  std::size_t nz_, ne_;
  std::vector<BigInt> c_;
};

// One coefficient of a closed form compared with a reference sequence.
struct GfRow {
  std::vector<int> index;  // exponent(s) of the coefficient
  BigInt closed_form;
  BigInt reference;
  bool degenerate = false;
  bool match() const { return closed_form == reference; }
};

struct GfReport {
  std::string title;
  std::vector<std::string> index_names;
  std::vector<GfRow> rows;
  std::vector<std::string> notes;

  bool all_match() const;
  std::size_t mismatch_count() const;
};

nlohmann::json to_json(const GfReport& r);

}  // namespace rwg
