#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/binomial.hpp"
#include "rwg/error.hpp"
#include "rwg/limits.hpp"
#include "rwg/partition.hpp"

namespace rwg {

// lhs = rhs as multisets of integers in 1..bound with equal sums. Both sides
// are stored sorted descending.
class PartitionIdentity {
 public:
  // InvalidIdentityError on a sum mismatch, DomainError on an empty side or
  // a part outside 1..bound.
  static PartitionIdentity make(std::vector<int> lhs, std::vector<int> rhs, int bound);

  const std::vector<int>& lhs() const { return lhs_; }
  const std::vector<int>& rhs() const { return rhs_; }
  int bound() const { return bound_; }
  long long sum() const;
  std::size_t part_count() const { return lhs_.size() + rhs_.size(); }
  // "1+3+5 = 9", parts ascending.
  std::string to_string() const;

  friend bool operator==(const PartitionIdentity& a, const PartitionIdentity& b) {
    return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
  }

 private:
  std::vector<int> lhs_, rhs_;
  int bound_ = 0;
};

// A proper subidentity takes a nonempty sub-multiset of each side with equal
// sums, other than the whole identity. Primitive means none exists.
// ResourceError above `max_parts` total parts.
bool is_primitive(const PartitionIdentity& id,
                  std::size_t max_parts = Limits{}.max_identity_parts);

// Every primitive proper subidentity, sorted by rhs then lhs, both
// descending.
std::vector<PartitionIdentity> primitive_subidentities(
    const PartitionIdentity& id, std::size_t max_parts = Limits{}.max_identity_parts);

struct Cspi {
  int ell = 0;
  long long mu = 0;
  long long kappa = 0;
  PartitionIdentity identity;  // 1 + ... + ell = mu + kappa
  bool all_parts_distinct = false;
};

// DomainError below length 5.
Cspi cspi(const Partition& staircase_partition);

// The odd parts of 1..ell summing to one colour class and the even parts to
// the other; ell >= 2.
std::vector<PartitionIdentity> parity_splits(int ell);

struct GraverResult {
  std::vector<long long> weights;
  int degree_bound = 0;
  std::vector<Binomial> elements;  // sorted by degree, then (u, v)
  std::size_t states = 0;
  bool complete = true;
  std::vector<std::string> variable_names() const;  // x<weight>
};

class GraverCapExceeded : public ResourceError {
 public:
  GraverCapExceeded(const std::string& what, GraverResult partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const GraverResult& partial() const { return partial_; }

 private:
  GraverResult partial_;
};

// Primitive x^u - x^v with disjoint supports, u.w = v.w and
// max(deg u, deg v) <= degree_bound, oriented so that u holds the
// lowest-index variable of the support. Exhaustive enumeration; throws
// GraverCapExceeded (carrying the elements found so far) past `max_states`.
GraverResult graver_1xn(const std::vector<long long>& weights, int degree_bound,
                        std::size_t max_states = Limits{}.max_graver_states);

nlohmann::json to_json(const PartitionIdentity& id);
nlohmann::json to_json(const Cspi& c);
nlohmann::json to_json(const GraverResult& g);

}  // namespace rwg
