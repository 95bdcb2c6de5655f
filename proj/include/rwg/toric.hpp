#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/binomial.hpp"
#include "rwg/groebner.hpp"
#include "rwg/limits.hpp"
#include "rwg/monomial.hpp"
#include "rwg/partition.hpp"

namespace rwg {

enum class Verdict { kMatch, kMismatch, kSkipped };
const char* to_string(Verdict v);

struct Finding {
  std::string item;
  std::string claimed;
  std::string computed;
  Verdict verdict = Verdict::kSkipped;
  std::string note;
};

// Claimed-versus-computed audit of a binomial ideal. Mismatches are
// recorded, never thrown.
struct IdealAudit {
  std::string title;
  int ell = 0;
  BinomialIdeal ideal;
  std::vector<Binomial> groebner_basis;
  MonomialIdeal initial;
  HilbertData hilbert;
  std::vector<Finding> findings;

  // Pipeline self-checks, independent of any claim.
  bool groebner_verified = false;      // every S-pair reduces to zero
  bool certificates_verified = false;  // derivation log replays exactly
  bool basis_in_kernel = false;        // every basis element passes in_kernel
  int brute_force_degree = 8;
  std::vector<BigInt> hilbert_function;  // from the Hilbert series
  std::vector<BigInt> standard_counts;   // direct enumeration
  bool hilbert_matches_count() const { return hilbert_function == standard_counts; }
  bool pipeline_ok() const {
    return groebner_verified && certificates_verified && basis_in_kernel &&
           hilbert_matches_count();
  }
  std::size_t mismatch_count() const;
};

extern const char* const kDimensionSemantics;

// Weights (1, ..., ell, mu, kappa) with the two parity-split generators
// x1*x3*... - x_mu and x2*x4*... - x_kappa (odd and even swap roles with
// the parity of ell). Variables are named by weight. Needs 5 <= ell <= 10.
BinomialIdeal colour_separation_ideal(int ell);
IdealAudit colour_separation_audit(int ell, int probe_degree = 2, const Limits& limits = {});

// <x_{j-1} x_{j+1} - x_j^2 : j = 1..ell-1> in x_0..x_ell with weight i on
// x_i. Needs ell >= 2.
BinomialIdeal cartoon_ideal(int ell);
// Needs 2 <= ell <= 8.
IdealAudit cartoon_ideal_audit(int ell, const Limits& limits = {});

// Two rows of weighted nodes: column j carries ell - j on top and
// ell - 1 - j below. Each column has a bottom-to-top edge (directed except
// in the last column) and consecutive top nodes are joined left to right.
struct CartoonNode {
  std::string id;
  int weight = 0;
  bool top = false;
  int column = 0;
};
struct CartoonEdge {
  std::size_t from = 0, to = 0;
  bool directed = true;
};
struct Cartoon {
  int ell = 0;
  std::vector<CartoonNode> nodes;
  std::vector<CartoonEdge> edges;
  std::vector<int> top_weights() const;
  std::vector<int> bottom_weights() const;
};

Cartoon cartoon_diagram(const Partition& staircase_partition);  // length >= 2
std::string export_dot(const Cartoon& c, const std::string& name = "cartoon");

nlohmann::json to_json(const Finding& f);
nlohmann::json to_json(const IdealAudit& a);
nlohmann::json to_json(const Cartoon& c);

}  // namespace rwg
