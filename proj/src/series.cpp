#include "rwg/series.hpp"

#include "rwg/error.hpp"

namespace rwg {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_polynomial(std::size_t order,
                                                 const IntPolynomial& p) {
  std::vector<BigInt> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) c[i] = p.coefficient(i);
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  const std::size_t n = std::min(order(), rhs.order());
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return TruncatedSeries(n, std::move(out));
}

TruncatedSeries TruncatedSeries::inverse() const {
  const BigInt c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw DomainError("series inverse: constant term must be +-1");
  std::vector<BigInt> inv(coeffs_.size());
  inv[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * inv[n - k];
    inv[n] = -acc * c0;
  }
  return TruncatedSeries(order(), std::move(inv));
}

BivariateSeries::BivariateSeries(std::size_t nz, std::size_t ne)
    : nz_(nz), ne_(ne), c_((nz + 1) * (ne + 1)) {}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& rhs) const {
  BivariateSeries out(std::min(nz_, rhs.nz_), std::min(ne_, rhs.ne_));
  for (std::size_t i = 0; i <= out.nz_; ++i)
    for (std::size_t j = 0; j <= out.ne_; ++j) {
      if (at(i, j) == 0) continue;
      for (std::size_t a = 0; i + a <= out.nz_; ++a)
        for (std::size_t b = 0; j + b <= out.ne_; ++b)
          out.at(i + a, j + b) += at(i, j) * rhs.at(a, b);
    }
  return out;
}

BivariateSeries BivariateSeries::inverse() const {
  const BigInt c0 = at(0, 0);
  if (c0 != 1 && c0 != -1) throw DomainError("series inverse: constant term must be +-1");
  BivariateSeries inv(nz_, ne_);
  // Coefficients in graded order: every (a, b) < (i, j) is known first.
  for (std::size_t i = 0; i <= nz_; ++i) {
    for (std::size_t j = 0; j <= ne_; ++j) {
      if (i == 0 && j == 0) {
        inv.at(0, 0) = c0;
        continue;
      }
      BigInt acc = 0;
      for (std::size_t a = 0; a <= i; ++a)
        for (std::size_t b = 0; b <= j; ++b) {
          if (a == 0 && b == 0) continue;
          acc += at(a, b) * inv.at(i - a, j - b);
        }
      inv.at(i, j) = -acc * c0;
    }
  }
  return inv;
}

bool GfReport::all_match() const { return mismatch_count() == 0; }

std::size_t GfReport::mismatch_count() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (!r.match()) ++n;
  return n;
}

nlohmann::json to_json(const GfReport& r) {
  nlohmann::json j;
  j["title"] = r.title;
  j["index_names"] = r.index_names;
  j["all_match"] = r.all_match();
  j["mismatches"] = r.mismatch_count();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"index", row.index},
                    {"closed_form", big_to_json(row.closed_form)},
                    {"reference", big_to_json(row.reference)},
                    {"match", row.match()},
                    {"degenerate", row.degenerate}});
  }
  j["rows"] = std::move(rows);
  j["notes"] = r.notes;
  return j;
}

}  // namespace rwg
