#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "rwg/graph.hpp"
#include "rwg/limits.hpp"
#include "rwg/partition.hpp"
#include "rwg/polynomial.hpp"

namespace rwg {

// Chromatic polynomial by deletion-contraction. Vertices of degree <= 1 are
// peeled off first (factors k and k-1), components are handled separately,
// and contraction merges parallel edges. Throws ResourceError when the cycle
// rank exceeds `max_cycle_rank`.
IntPolynomial chromatic_polynomial(const SimpleGraph& g,
                                   std::size_t max_cycle_rank = Limits{}.max_cycle_rank);

// Ladder of d squares glued along rungs: 2d+2 vertices.
SimpleGraph c4_chain(int d);
// k(k-1)(k^2-3k+3)^d
IntPolynomial chi_c4_chain(int d);
// k(k-1)^3(k^2-3k+3)^m with m = C(ell-1, 2); ell >= 3.
IntPolynomial chi_blambda_formula(int ell);

struct FormulaComparison {
  int ell = 0;
  std::size_t vertex_count = 0;
  IntPolynomial computed;
  IntPolynomial formula;
  bool degree_equals_vertices() const {
    return computed.degree() == static_cast<int>(vertex_count);
  }
  bool formula_matches() const { return computed == formula; }
};

// Deletion-contraction on the staircase graph next to the closed form.
FormulaComparison compare_blambda_formula(int ell, const Limits& limits = {});

struct ChromaticNumber {
  int value = 0;
  bool bipartite = false;
  // value <= 2 exactly when the graph is bipartite.
  bool consistent = false;
};

// Smallest t >= 1 with chi(t) > 0, cross-checked against a BFS 2-colouring.
ChromaticNumber chromatic_number(const SimpleGraph& g,
                                 std::size_t max_cycle_rank = Limits{}.max_cycle_rank);

// mu counts vertices on odd layers V_1, V_3, ..., kappa those on even
// layers; mu >= kappa. Layer colours swap names with the parity of ell, the
// counts do not.
struct ColourSeparation {
  int ell = 0;
  long long mu = 0;
  long long kappa = 0;
  long long balance() const { return mu - kappa; }
};

ColourSeparation colour_separation(const Partition& staircase_partition);

struct BoundRow {
  int ell = 0;
  long long balance = 0;
  long long bound = 0;  // ceil(ell/2)
  bool within_bound() const { return balance <= bound; }
  bool equality() const { return balance == bound; }
  // Balance given by the closed forms of the sharpness argument: at odd ell
  // mu = c^2 and kappa = f(f+1) with c = ceil(ell/2), f = floor(ell/2); at
  // even ell it states balance = c outright.
  long long predicted_balance() const {
    const long long c = (ell + 1) / 2, f = ell / 2;
    return ell % 2 == 1 ? c * c - f * (f + 1) : c;
  }
  bool equality_predicted() const { return predicted_balance() == bound; }
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool all_within_bound() const;
  // Equality holds exactly at the rows where it is predicted.
  bool predicted_equalities_hold() const;
};

BoundReport balance_bound_check(int ell_max);

// Staircases of lengths 2k-1 and 2k both have balance k.
bool shared_balance_check(int k);

nlohmann::json to_json(const ColourSeparation& s);
nlohmann::json to_json(const FormulaComparison& c);

}  // namespace rwg
