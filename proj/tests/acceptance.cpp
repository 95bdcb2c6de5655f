// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rwg/blambda.hpp"
#include "rwg/chroma.hpp"
#include "rwg/commands.hpp"
#include "rwg/partition.hpp"
#include "rwg/perm.hpp"
#include "rwg/pid.hpp"
#include "rwg/rwgraph.hpp"
#include "rwg/toric.hpp"

using namespace rwg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double max_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (max_seconds > 0 && secs > max_seconds) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << max_seconds << " s";
    out.require(false, os.str());
  }
  std::printf("%s %2d  %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

std::string s(long long v) { return std::to_string(v); }

IntPolynomial kpoly() { return IntPolynomial::variable(); }
IntPolynomial qpoly() {
  const IntPolynomial k = kpoly();
  return k * k - IntPolynomial::constant(3) * k + IntPolynomial::constant(3);
}

}  // namespace

int main() {
  criterion(1, "reduced-word counts of z_permutation(r), r = 4..8", 5.0, [](Outcome& o) {
    for (int r = 4; r <= 8; ++r) {
      const auto n = enumerate_reduced_words(z_permutation(r)).size();
      o.require(static_cast<long long>(n) == choose2(r),
                "r=" + s(r) + " gave " + s(n) + ", want " + s(choose2(r)));
    }
  });

  criterion(2, "R(35124) equals the worked example", 0, [](Outcome& o) {
    std::set<std::string> got;
    for (const auto& w : enumerate_reduced_words(Permutation::from_word(std::vector<int>{3, 5, 1, 2, 4})))
      got.insert(w.to_string());
    o.require(got == std::set<std::string>{"42312", "24312", "42132", "24132", "21432"},
              "word set differs");
  });

  criterion(3, "word-graph statistics, ell = 3..6, printed edge count flagged", 0, [](Outcome& o) {
    for (int ell = 3; ell <= 6; ++ell) {
      const RWGraph g = RWGraph::build(z_permutation(ell + 1));
      const std::string at = " at ell=" + s(ell);
      o.require(static_cast<long long>(g.vertex_count()) == choose2(ell + 1), "vertices" + at);
      o.require(static_cast<long long>(braid_edge_count(g)) == ell - 1, "braid edges" + at);
      o.require(static_cast<long long>(count_four_cycles(g)) == choose2(ell - 1), "four-cycles" + at);
      o.require(euler_like_invariant(g) == 1, "v + c - e" + at);
      // Oracle edge count: every braid or commutation move between words.
      std::set<std::pair<oracle::Word, oracle::Word>> moves;
      for (const auto& v : g.vertices())
        for (auto& n : oracle::move_neighbours(v.letters)) moves.insert(std::minmax(v.letters, n));
      o.require(moves.size() == g.edge_count() &&
                    static_cast<long long>(moves.size()) == ell * (ell - 1),
                "edges" + at);
    }
    const Report rep = graph_report(Range{3, 6}, RunConfig{});
    int flagged = 0;
    for (const auto& sec : rep.sections)
      for (const auto& c : sec.checks)
        if (c.name == "edges" && c.verdict == Verdict::kMismatch) ++flagged;
    o.require(flagged == 4, "edge MISMATCH flagged in " + s(flagged) + " of 4 sections");
  });

  criterion(4, "word graph isomorphic to B_staircase(ell), ell = 3..6", 30.0, [](Outcome& o) {
    for (int ell = 3; ell <= 6; ++ell)
      o.require(iso_check(RWGraph::build(z_permutation(ell + 1)), LayeredGraph::build(staircase(ell))),
                "not isomorphic at ell=" + s(ell));
  });

  criterion(5, "chromatic closed forms of ladders and B_(3,2,1)", 0, [](Outcome& o) {
    const IntPolynomial k = kpoly(), km1 = IntPolynomial::linear(1), q = qpoly();
    for (int d = 1; d <= 4; ++d)
      o.require(chromatic_polynomial(c4_chain(d)) == k * km1 * q.pow(d), "ladder d=" + s(d));
    o.require(chromatic_polynomial(LayeredGraph::build(staircase(3)).underlying()) ==
                  k * km1.pow(3) * q,
              "B_(3,2,1)");
  });

  criterion(6, "chromatic polynomial of B vs k(k-1)^3 Q^C(ell-1,2), ell = 4..6", 0, [](Outcome& o) {
    const Report rep = chroma_report(Range{4, 6}, RunConfig{});
    o.require(rep.invariant_failures() == 0, "report invariant failure");
    for (int ell = 4; ell <= 6; ++ell) {
      const FormulaComparison c = compare_blambda_formula(ell);
      o.require(c.computed.degree() == choose2(ell + 1), "degree != vertices at ell=" + s(ell));
      const std::string name = "chi equals k(k-1)^3(k^2-3k+3)^" + s(choose2(ell - 1));
      bool reported = false;
      for (const auto& sec : rep.sections)
        for (const auto& ch : sec.checks)
          if (ch.name == name)
            reported = ch.verdict == (c.formula_matches() ? Verdict::kMatch : Verdict::kMismatch);
      o.require(reported, "comparison missing from report at ell=" + s(ell));
    }
  });

  criterion(7, "chromatic number of B is 2, ell = 3..6", 0, [](Outcome& o) {
    for (int ell = 3; ell <= 6; ++ell) {
      const auto g = LayeredGraph::build(staircase(ell)).underlying();
      const ChromaticNumber c = chromatic_number(g);
      o.require(c.value == 2 && c.bipartite && c.consistent && is_bipartite(g),
                "ell=" + s(ell) + " gave " + s(c.value));
    }
  });

  criterion(8, "colour separations, balance bound and shared balance", 0, [](Outcome& o) {
    const ColourSeparation s5 = colour_separation(staircase(5)), s6 = colour_separation(staircase(6));
    o.require(s5.mu == 9 && s5.kappa == 6, "(mu, kappa) at ell=5");
    o.require(s6.mu == 12 && s6.kappa == 9, "(mu, kappa) at ell=6");
    const BoundReport b = balance_bound_check(50);
    o.require(b.all_within_bound(), "balance above ceil(ell/2)");
    o.require(b.predicted_equalities_hold(), "equality set differs from the predicted one");
    for (int k = 1; k <= 10; ++k) {
      const auto a = colour_separation(staircase(2 * k - 1)), c = colour_separation(staircase(2 * k));
      o.require(shared_balance_check(k) && a.balance() == k && c.balance() == k,
                "shared balance k=" + s(k));
    }
  });

  criterion(9, "parity matrix determinant and column sums, k = 1..100", 0, [](Outcome& o) {
    for (int k = 1; k <= 100; ++k) {
      const ParityMatrix m = parity_matrix(k);
      const BigInt K(k);
      const auto [c1, c2] = m.column_sums();
      o.require(m.determinant() == K * K, "det at k=" + s(k));
      o.require(c1 == 2 * K * K - K && c1 == staircase(2 * k - 1).size(), "first sum at k=" + s(k));
      o.require(c2 == 2 * K * K + K && c2 == staircase(2 * k).size(), "second sum at k=" + s(k));
    }
  });

  criterion(10, "cspi: distinct parts, not primitive, exactly two primitive subidentities",
            0, [](Outcome& o) {
    for (int ell = 5; ell <= 9; ++ell) {
      const Cspi c = cspi(staircase(ell));
      o.require(c.all_parts_distinct, "repeated part at ell=" + s(ell));
      o.require(!is_primitive(c.identity), "primitive at ell=" + s(ell));
      const auto subs = primitive_subidentities(c.identity);
      bool splits_found = true;
      for (const auto& split : parity_splits(ell))
        splits_found = splits_found && std::find(subs.begin(), subs.end(), split) != subs.end();
      o.require(splits_found, "parity splits missing at ell=" + s(ell));
      o.require(subs.size() == 2, "ell=" + s(ell) + " has " + s(subs.size()));
    }
  });

  for (int ell : {5, 6}) {
    const std::string title = "colour-separation ideal audit, ell = " + s(ell);
    criterion(11, title.c_str(), 60.0, [ell](Outcome& o) {
      const IdealAudit a = colour_separation_audit(ell);
      for (const auto& g : a.ideal.generators)
        o.require(in_kernel(g, *a.ideal.weights), "generator outside kernel");
      o.require(a.groebner_verified && a.certificates_verified && a.basis_in_kernel,
                "pipeline self-check failed");
      bool dim = false, deg = false, probe = false;
      for (const auto& f : a.findings) {
        dim = dim || (f.item == "dimension" && f.claimed == s(ell));
        deg = deg || (f.item == "degree" && f.claimed == s(((ell + 1) / 2) * (ell / 2)));
        probe = probe || (f.item.find("x1^2 - x2") != std::string::npos && !f.computed.empty());
      }
      o.require(dim && deg, "dimension/degree comparison missing");
      o.require(probe, "kernel probe normal form missing");
      const std::vector<oracle::Exps> gens(a.initial.generators().begin(), a.initial.generators().end());
      for (int d = 0; d <= 8; ++d)
        o.require(a.hilbert_function.size() > static_cast<std::size_t>(d) &&
                      a.hilbert_function[d] == oracle::standard_monomials(ell + 2, gens, d),
                  "Hilbert function differs from monomial count at degree " + s(d));
    });
  }

  criterion(12, "cartoon ideal audit, ell = 2..5", 60.0, [](Outcome& o) {
    for (int ell = 2; ell <= 5; ++ell) {
      const IdealAudit a = cartoon_ideal_audit(ell);
      o.require(static_cast<int>(a.ideal.generators.size()) == ell - 1, "generator count");
      std::vector<long long> w(ell + 1);
      for (int i = 0; i <= ell; ++i) w[i] = i;
      for (const auto& g : a.ideal.generators) o.require(in_kernel(g, w), "generator does not vanish");
      o.require(a.pipeline_ok(), "pipeline self-check at ell=" + s(ell));
      bool reported = false;
      for (const auto& f : a.findings)
        reported = reported || (f.item == "degree" && f.claimed == s(1LL << (ell - 1)));
      o.require(reported, "degree comparison missing at ell=" + s(ell));
      if (ell <= 3) {
        o.require(a.hilbert.degree == (ell == 2 ? 2 : 4), "degree at ell=" + s(ell));
        const std::vector<oracle::Exps> gens(a.initial.generators().begin(), a.initial.generators().end());
        for (int d = 0; d <= 8; ++d)
          o.require(a.hilbert_function[d] == oracle::standard_monomials(ell + 1, gens, d),
                    "monomial count at degree " + s(d));
      }
    }
  });

  criterion(13, "generating-function truncations, byte-identical reruns", 0, [](Outcome& o) {
    const GfReport tri = triangular_gf_check(10);
    for (const auto& row : tri.rows)
      o.require(row.closed_form == BigInt(row.index[0]) * (row.index[0] + 1) / 2,
                "triangular coefficient " + s(row.index[0]));
    const GfReport a = family_gf_check(8, 8), b = family_gf_check(8, 8);
    o.require(!a.rows.empty(), "family table empty");
    o.require(to_json(a).dump() == to_json(b).dump(), "family table differs between runs");
    RunConfig cfg;
    cfg.range = Range{1, 6};
    const auto first = run_command("blambda", cfg), second = run_command("blambda", cfg);
    o.require(first.output == second.output, "blambda report differs between runs");
    cfg.format = Format::kJson;
    o.require(run_command("blambda", cfg).output == run_command("blambda", cfg).output,
              "blambda JSON differs between runs");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
