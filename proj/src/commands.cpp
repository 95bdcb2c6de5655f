#include "rwg/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

#include "rwg/blambda.hpp"
#include "rwg/chroma.hpp"
#include "rwg/error.hpp"
#include "rwg/partition.hpp"
#include "rwg/perm.hpp"
#include "rwg/pid.hpp"
#include "rwg/rwgraph.hpp"
#include "rwg/toric.hpp"

namespace rwg {

Range parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw MalformedError("bad range '" + text + "': expected A..B or A");
    return std::stoi(s);
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw DomainError("empty range '" + text + "'");
  return r;
}

std::string to_string(const Range& r) {
  return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

Which parse_which(const std::string& name) {
  if (name == "c1") return Which::kC1;
  if (name == "c2") return Which::kC2;
  if (name == "both") return Which::kBoth;
  throw MalformedError("unknown conjecture selector '" + name + "' (c1, c2, both)");
}

RunConfig merge_config_json(const std::string& text, RunConfig cfg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw MalformedError("config: top level must be an object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "format") {
        cfg.format = parse_format(value.get<std::string>());
      } else if (key == "range") {
        cfg.range = parse_range(value.get<std::string>());
      } else if (key == "degree_bound") {
        cfg.degree_bound = value.get<int>();
      } else if (key == "strict") {
        cfg.strict = value.get<bool>();
      } else if (key == "which") {
        cfg.which = parse_which(value.get<std::string>());
      } else if (key == "kind") {
        cfg.kind = value.get<std::string>();
      } else if (key == "caps") {
        for (const auto& [cap, v] : value.items()) {
          const auto n = v.get<std::size_t>();
          if (cap == "vertices") cfg.limits.max_vertices = n;
          else if (cap == "cycle_rank") cfg.limits.max_cycle_rank = n;
          else if (cap == "iso_vertices") cfg.limits.max_iso_vertices = n;
          else if (cap == "identity_parts") cfg.limits.max_identity_parts = n;
          else if (cap == "graver_states") cfg.limits.max_graver_states = n;
          else if (cap == "basis") cfg.limits.max_basis = n;
          else if (cap == "derivations") cfg.limits.max_derivations = n;
          else if (cap == "hilbert_nodes") cfg.limits.max_hilbert_nodes = n;
          else throw MalformedError("config: unknown cap '" + cap + "'");
        }
      } else {
        throw MalformedError("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedError(std::string("config: ") + e.what());
  }
  return cfg;
}

namespace {

template <class T>
std::string str(T v) {
  if constexpr (std::is_same_v<T, bool>)
    return v ? "true" : "false";
  else
    return std::to_string(v);
}
long long choose2(long long n) { return n * (n - 1) / 2; }

void require(const Range& r, int lo, int hi, const std::string& what) {
  if (r.lo < lo || r.hi > hi)
    throw DomainError(what + " range " + to_string(r) + " outside " + std::to_string(lo) + ".." +
                      std::to_string(hi));
}

std::optional<Range> clamp(const Range& r, int lo, int hi) {
  Range c{std::max(r.lo, lo), std::min(r.hi, hi)};
  if (c.hi < c.lo) return std::nullopt;
  return c;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string pair_str(long long a, long long b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Runs `body`; a resource limit turns into a SKIPPED row instead.
void guarded(Report& rep, Section& s, const std::string& check_name,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const ResourceError& e) {
    s.checks.push_back(skipped(check_name, e.what()));
    rep.resource_limited = true;
  }
}

}  // namespace

Report words_report(const Range& range, const RunConfig& cfg) {
  require(range, 4, cfg.limits.max_degree, "r");
  Report rep;
  rep.command = "words";
  for (int r = range.lo; r <= range.hi; ++r) {
    Section s;
    s.title = "reduced words of z_permutation(" + str(r) + ")";
    const Permutation w = z_permutation(r);
    s.notes.push_back("w = " + w.to_string() + ", length " + str(w.length()));
    guarded(rep, s, "reduced word count", [&] {
      const auto words = enumerate_reduced_words(w, cfg.limits);
      s.checks.push_back(claim("reduced word count", str(choose2(r)), str(words.size())));
      s.checks.push_back(invariant("z_permutation(r) has length r+1", verify_z_length(r)));
      bool products = true, lengths = true;
      for (const auto& word : words) {
        products &= apply_word(word.letters, r) == w;
        lengths &= static_cast<int>(word.size()) == w.length();
      }
      s.checks.push_back(invariant("every word multiplies out to w", products));
      s.checks.push_back(invariant("every word has length equal to the inversion count", lengths));
      s.checks.push_back(invariant(
          "words are distinct", std::adjacent_find(words.begin(), words.end()) == words.end()));
      std::string line;
      for (std::size_t i = 0; i < words.size(); ++i) {
        line += (i % 10 ? " " : "") + words[i].to_string();
        if (i % 10 == 9 || i + 1 == words.size()) {
          s.body.push_back(line);
          line.clear();
        }
      }
      nlohmann::json split = nlohmann::json::object();
      for (const auto& [letter, count] : last_letter_split(words)) {
        s.body.push_back("ending in " + str(letter) + ": " + str(count));
        split[str(letter)] = count;
      }
      s.data = {{"r", r},
                {"permutation", w.to_string()},
                {"count", words.size()},
                {"words", words_to_json(words)},
                {"last_letter_split", split}};
    });
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

Report graph_report(const Range& range, const RunConfig& cfg) {
  require(range, 3, cfg.limits.max_degree - 1, "ell");
  Report rep;
  rep.command = "graph";
  for (int ell = range.lo; ell <= range.hi; ++ell) {
    Section s;
    s.title = "word graph of z_permutation(" + str(ell + 1) + "), ell = " + str(ell);
    guarded(rep, s, "word graph statistics", [&] {
      const StructureReport sr = structure_report(ell, cfg.limits);
      const RWGraph g = RWGraph::build(z_permutation(ell + 1), cfg.limits);
      s.notes.push_back("w = " + sr.permutation);
      for (const auto& st : sr.stats) {
        std::string note;
        if (st.name == "edges") note = "brute-force value ell(ell-1) = " + str(ell * (ell - 1));
        s.checks.push_back(claim(st.name, str(st.claimed), str(st.observed), note));
      }
      s.checks.push_back(claim("v + c - e", "1", str(sr.euler_like)));
      s.checks.push_back(invariant("edge count equals ell(ell-1)",
                                   g.edge_count() == static_cast<std::size_t>(ell * (ell - 1))));
      s.notes.push_back(std::string("four-cycles built from commutation edges only: ") +
                        str(sr.four_cycles_commutation_only));
      s.checks.push_back(
          invariant("graph is connected", g.underlying().component_count() == 1));
      s.data = to_json(sr);
      rep.dot.push_back(export_dot(g, "word_graph_" + str(ell)));
    });
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

Report blambda_report(const Range& range, const RunConfig& cfg) {
  require(range, 1, 30, "ell");
  Report rep;
  rep.command = "blambda";
  for (int ell = range.lo; ell <= range.hi; ++ell) {
    Section s;
    s.title = "staircase graph B for ell = " + str(ell);
    const Partition p = staircase(ell);
    const LayeredGraph b = LayeredGraph::build(p);
    const auto sizes = b.layer_sizes();
    std::vector<std::size_t> expected_sizes;
    for (int k = ell; k >= 1; --k) expected_sizes.push_back(k);
    s.notes.push_back("partition " + p.to_string());
    s.checks.push_back(claim("vertices", str(choose2(ell + 1)), str(b.vertex_count())));
    s.checks.push_back(claim("layer sizes", join(expected_sizes), join(sizes)));
    bool consecutive = true;
    for (auto [u, v] : b.underlying().edges())
      consecutive &= std::abs(b.position(u).layer - b.position(v).layer) == 1;
    s.checks.push_back(invariant("edges join consecutive layers only", consecutive));
    s.checks.push_back(invariant("edge count equals ell(ell-1)",
                                 b.edge_count() == static_cast<std::size_t>(ell * (ell - 1))));
    const IntPolynomial missing = edge_missing_polynomial(ell);
    s.checks.push_back(invariant("edge-missing polynomial at e = 1 counts the vertices",
                                 missing.evaluate(1) == BigInt(b.vertex_count())));

    const std::string iso_name = "isomorphic to the word graph of z_permutation(ell+1)";
    if (ell < 3) {
      s.checks.push_back(skipped(iso_name, "needs ell >= 3"));
    } else if (b.vertex_count() > cfg.limits.max_iso_vertices) {
      s.checks.push_back(skipped(iso_name, "above isomorphism cap of " +
                                               str(cfg.limits.max_iso_vertices) + " vertices"));
    } else {
      guarded(rep, s, iso_name, [&] {
        const RWGraph g = RWGraph::build(z_permutation(ell + 1), cfg.limits);
        s.checks.push_back(
            claim(iso_name, "true", str(iso_check(g, b, cfg.limits.max_iso_vertices))));
      });
    }
    if (ell >= 2)
      s.checks.push_back(claim("B(ell-1) embeds in B(ell) layer by layer", "true",
                               str(is_subgraph_order(staircase(ell - 1), p))));
    nlohmann::json parity = nullptr;
    if (ell % 2 == 1) {
      const ParityReport pr = is_parity_pair(p, staircase(ell + 1));
      const VertexParityReport vp = vertex_parity_mod4(p);
      s.checks.push_back(claim("parity-pair criteria agree for (ell, ell+1)", "true",
                               str(pr.all_agree())));
      s.checks.push_back(claim("vertex parity class", to_string(vp.claimed),
                               to_string(vp.observed), "claimed even iff ell = 1 mod 4"));
      parity = {{"pair", to_json(pr)}, {"vertex_parity", to_json(vp)}};
    }
    s.body.push_back("P(e) = " + missing.to_string("e"));
    s.data = {{"ell", ell},
              {"layer_sizes", sizes},
              {"vertices", b.vertex_count()},
              {"edges", b.edge_count()},
              {"edge_missing_polynomial", to_json(missing)},
              {"parity", parity}};
    rep.dot.push_back(export_dot(b, "blambda_" + str(ell)));
    rep.sections.push_back(std::move(s));
  }

  auto gf_section = [&](const GfReport& gf, const std::string& claim_name) {
    Section s;
    s.title = gf.title;
    s.notes = gf.notes;
    std::size_t degenerate = 0;
    for (const auto& row : gf.rows) degenerate += row.degenerate;
    s.checks.push_back(claim(claim_name, "0", str(gf.mismatch_count()),
                             str(static_cast<long long>(degenerate)) + " degenerate rows"));
    for (const auto& row : gf.rows) {
      if (row.match()) continue;
      std::string idx;
      for (std::size_t i = 0; i < row.index.size(); ++i)
        idx += (i ? " " : "") + gf.index_names[i] + "^" + str(row.index[i]);
      s.body.push_back(idx + ": closed form " + row.closed_form.str() + ", reference " +
                       row.reference.str() + (row.degenerate ? " (degenerate)" : ""));
    }
    s.data = to_json(gf);
    rep.sections.push_back(std::move(s));
  };
  gf_section(triangular_gf_check(std::max(10, range.hi)), "coefficients differing from r(r+1)/2");
  gf_section(family_gf_check(range.hi + 1, range.hi + 1),
             "coefficients differing from the family sum");
  return rep;
}

Report chroma_report(const Range& range, const RunConfig& cfg) {
  require(range, 3, 30, "ell");
  Report rep;
  rep.command = "chroma";
  {
    Section s;
    s.title = "ladders of d squares";
    for (int d = 1; d <= 4; ++d) {
      const IntPolynomial chi = chromatic_polynomial(c4_chain(d), cfg.limits.max_cycle_rank);
      s.checks.push_back(claim("chi of ladder, d = " + str(d), chi_c4_chain(d).to_string(),
                               chi.to_string()));
    }
    rep.sections.push_back(std::move(s));
  }
  for (int ell = range.lo; ell <= range.hi; ++ell) {
    Section s;
    s.title = "chromatic polynomial of B, ell = " + str(ell);
    const LayeredGraph b = LayeredGraph::build(staircase(ell));
    const SimpleGraph& g = b.underlying();
    const long long m = choose2(ell - 1);
    s.notes.push_back(str(b.vertex_count()) + " vertices, " + str(b.edge_count()) +
                      " edges, cycle rank " + str(g.cycle_rank()));
    guarded(rep, s, "chromatic polynomial", [&] {
      const IntPolynomial chi = chromatic_polynomial(g, cfg.limits.max_cycle_rank);
      const IntPolynomial formula = chi_blambda_formula(ell);
      s.checks.push_back(claim("chi equals k(k-1)^3(k^2-3k+3)^" + str(m), formula.to_string(),
                               chi.to_string(),
                               "formula degree " + str(formula.degree()) + ", computed degree " +
                                   str(chi.degree())));
      s.checks.push_back(invariant("degree of chi equals the vertex count",
                                   chi.degree() == static_cast<int>(b.vertex_count())));
      bool alternating = chi.leading_coefficient() == 1;
      for (int i = 0; i <= chi.degree(); ++i) {
        const BigInt c = chi.coefficient(i);
        const bool negative_slot = (chi.degree() - i) % 2 == 1;
        alternating &= negative_slot ? c <= 0 : c >= 0;
      }
      s.checks.push_back(invariant("chi is monic with alternating signs", alternating));
      int chromatic = 0;
      for (int t = 1; t <= static_cast<int>(b.vertex_count()) && !chromatic; ++t)
        if (chi.evaluate(t) > 0) chromatic = t;
      s.checks.push_back(claim("chromatic number", "2", str(chromatic)));
      s.checks.push_back(invariant("chromatic number agrees with BFS 2-colouring",
                                   (chromatic <= 2) == is_bipartite(g)));
      s.body.push_back("chi(k) = " + chi.to_string());
      s.data = {{"ell", ell},
                {"vertices", b.vertex_count()},
                {"cycle_rank", g.cycle_rank()},
                {"chromatic_polynomial", to_json(chi)},
                {"formula", to_json(formula)},
                {"chromatic_number", chromatic}};
    });
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

Report separation_report(const Range& range, const RunConfig& cfg) {
  (void)cfg;
  require(range, 1, 1000, "ell");
  Report rep;
  rep.command = "separation";
  for (int ell = range.lo; ell <= range.hi; ++ell) {
    Section s;
    s.title = "2-colour separation, ell = " + str(ell);
    const Partition p = staircase(ell);
    const ColourSeparation sep = colour_separation(p);
    const ColourCounts cc = colour_counts(p);
    const long long bound = (ell + 1) / 2;
    s.notes.push_back("mu = " + str(sep.mu) + ", kappa = " + str(sep.kappa) + ", balance = " +
                      str(sep.balance()));
    s.checks.push_back(claim("balance <= ceil(ell/2) = " + str(bound), "true",
                             str(sep.balance() <= bound)));
    const BoundRow row{ell, sep.balance(), bound};
    s.checks.push_back(claim("balance from the sharpness closed forms", str(row.predicted_balance()),
                             str(sep.balance())));
    s.checks.push_back(claim("balance equals ceil(ell/2)", str(row.equality_predicted()),
                             str(row.equality())));
    if (ell == 5) s.checks.push_back(claim("(mu, kappa)", "(9, 6)", pair_str(sep.mu, sep.kappa)));
    if (ell == 6) s.checks.push_back(claim("(mu, kappa)", "(12, 9)", pair_str(sep.mu, sep.kappa)));
    const std::set<long long> layer_classes{sep.mu, sep.kappa}, cell_classes{cc.black, cc.red};
    s.checks.push_back(invariant("checkerboard colour classes equal the layer sums",
                                 layer_classes == cell_classes && cc.black + cc.red == p.size()));
    s.checks.push_back(invariant("mu >= kappa", sep.mu >= sep.kappa));
    if (ell % 2 == 1) {
      const int k = (ell + 1) / 2;
      s.checks.push_back(claim("ell and ell+1 share balance " + str(k), "true",
                               str(shared_balance_check(k))));
    }
    if (ell <= 12)
      for (std::istringstream in(checkerboard_ascii(p)); !in.eof();) {
        std::string line;
        std::getline(in, line);
        if (!line.empty()) s.body.push_back(line);
      }
    s.data = to_json(sep);
    s.data["checkerboard"] = {{"black", cc.black}, {"red", cc.red}};
    rep.sections.push_back(std::move(s));
  }
  Section pm;
  pm.title = "parity matrices";
  for (int k = 1; k <= (range.hi + 1) / 2; ++k) {
    const ParityMatrix m = parity_matrix(k);
    const auto [c1, c2] = m.column_sums();
    pm.checks.push_back(claim("det parity_matrix(" + str(k) + ")", str(1LL * k * k),
                              m.determinant().str()));
    pm.checks.push_back(claim("column sums of parity_matrix(" + str(k) + ")",
                              pair_str(staircase(2 * k - 1).size(), staircase(2 * k).size()),
                              "(" + c1.str() + ", " + c2.str() + ")"));
  }
  rep.sections.push_back(std::move(pm));
  return rep;
}

Report identities_report(const Range& range, const RunConfig& cfg) {
  require(range, 5, 18, "ell");
  Report rep;
  rep.command = "identities";
  rep.header.push_back(
      "a proper subidentity takes a nonempty sub-multiset of each side with equal sums and is "
      "not the whole identity");
  for (int ell = range.lo; ell <= range.hi; ++ell) {
    Section s;
    s.title = "colour-separation partition identity, ell = " + str(ell);
    const Cspi c = cspi(staircase(ell));
    s.notes.push_back(c.identity.to_string());
    s.checks.push_back(claim("all parts distinct", "true", str(c.all_parts_distinct)));
    nlohmann::json subs_json = nlohmann::json::array();
    guarded(rep, s, "primitive subidentities", [&] {
      s.checks.push_back(claim("identity is primitive", "false",
                               str(is_primitive(c.identity, cfg.limits.max_identity_parts))));
      const auto subs = primitive_subidentities(c.identity, cfg.limits.max_identity_parts);
      s.checks.push_back(claim("primitive proper subidentities", "2", str(subs.size())));
      bool splits_found = true;
      for (const auto& split : parity_splits(ell))
        splits_found &= std::find(subs.begin(), subs.end(), split) != subs.end();
      s.checks.push_back(claim("parity splits are primitive subidentities", "true",
                               str(splits_found)));
      for (const auto& sub : subs) {
        s.body.push_back(sub.to_string());
        subs_json.push_back(to_json(sub));
      }
    });
    s.data = to_json(c);
    s.data["primitive_subidentities"] = subs_json;
    if (ell <= 10) {
      const int bound = std::max(cfg.degree_bound, (ell + 1) / 2);
      const BinomialIdeal colour = colour_separation_ideal(ell);
      try {
        const GraverResult gr = graver_1xn(*colour.weights, bound, cfg.limits.max_graver_states);
        bool present = true;
        for (const auto& g : colour.generators)
          present &= std::find(gr.elements.begin(), gr.elements.end(), g) != gr.elements.end();
        bool kernel = true;
        for (const auto& g : gr.elements) kernel &= in_kernel(g, gr.weights);
        s.notes.push_back("Graver elements of degree <= " + str(bound) + ": " +
                          str(gr.elements.size()));
        s.checks.push_back(claim("parity-split binomials are Graver elements", "true",
                                 str(present)));
        s.checks.push_back(invariant("every Graver element lies in the kernel", kernel));
        s.data["graver"] = {{"degree_bound", bound}, {"elements", gr.elements.size()}};
      } catch (const GraverCapExceeded& e) {
        s.checks.push_back(skipped("Graver basis", e.what()));
        rep.resource_limited = true;
      }
    }
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

namespace {

void audit_section(Report& rep, Section& s, const IdealAudit& a) {
  const auto names = a.ideal.variable_names();
  s.notes.push_back(std::string("semantics: ") + kDimensionSemantics);
  for (const auto& f : a.findings) s.checks.push_back(from_finding(f));
  s.checks.push_back(invariant("every S-pair of the basis reduces to zero", a.groebner_verified));
  s.checks.push_back(invariant("derivation log replays exactly", a.certificates_verified));
  s.checks.push_back(invariant("basis elements lie in the kernel", a.basis_in_kernel));
  s.checks.push_back(invariant("Hilbert series matches standard-monomial count through degree " +
                                   str(a.brute_force_degree),
                               a.hilbert_matches_count()));
  std::string gens, basis, initial, hf;
  for (const auto& g : a.ideal.generators) gens += (gens.empty() ? "" : ", ") + g.to_string(names);
  for (const auto& g : a.groebner_basis)
    basis += (basis.empty() ? "" : ", ") + g.to_string(names);
  for (const auto& m : a.initial.generators())
    initial += (initial.empty() ? "" : ", ") + monomial_string(m, names);
  for (const auto& x : a.hilbert_function) hf += (hf.empty() ? "" : " ") + x.str();
  s.body.push_back("generators: " + gens);
  s.body.push_back("groebner basis (grevlex): " + basis);
  s.body.push_back("initial ideal: <" + initial + ">");
  s.body.push_back("hilbert numerator: " + a.hilbert.numerator.to_string("t"));
  s.body.push_back("hilbert function 0.." + str(a.brute_force_degree) + ": " + hf);
  s.data = to_json(a);
  (void)rep;
}

std::string finding_value(const IdealAudit& a, const std::string& item) {
  for (const auto& f : a.findings)
    if (f.item == item) return f.computed;
  return "-";
}

}  // namespace

Report conjectures_report(const Range& range, const RunConfig& cfg) {
  require(range, 1, 1000, "ell");
  if (cfg.degree_bound < 1) throw DomainError("degree bound must be >= 1");
  Report rep;
  rep.command = "conjectures";
  rep.header.push_back(std::string("semantics: ") + kDimensionSemantics);
  if (cfg.which != Which::kC2) {
    Section summary;
    summary.title = "colour-separation ideal summary";
    summary.body.push_back("ell  in_kernel  dim(claimed)  degree(claimed)  x1^2-x2 normal form");
    for (int ell = range.lo; ell <= range.hi; ++ell) {
      Section s;
      s.title = "colour-separation ideal, ell = " + str(ell);
      if (ell < 5 || ell > 10) {
        s.checks.push_back(skipped("colour-separation ideal audit",
                                   ell < 5 ? "the conjecture requires ell >= 5"
                                           : "above cap ell <= 10"));
      } else {
        guarded(rep, s, "colour-separation ideal audit", [&] {
          const IdealAudit a = colour_separation_audit(ell, cfg.degree_bound, cfg.limits);
          audit_section(rep, s, a);
          const int hi = (ell + 1) / 2, lo = ell / 2;
          bool kernel = true;
          for (const auto& g : a.ideal.generators) kernel &= in_kernel(g, *a.ideal.weights);
          std::string probe;
          for (const auto& f : a.findings)
            if (f.item.rfind("kernel probe", 0) == 0) probe = f.computed;
          summary.body.push_back(str(ell) + "  " + str(kernel) + "  " +
                                 finding_value(a, "dimension") + "(" + str(ell) + ")  " +
                                 finding_value(a, "degree") + "(" + str(hi * lo) + ")  " + probe);
        });
      }
      rep.sections.push_back(std::move(s));
    }
    rep.sections.push_back(std::move(summary));
  }
  if (cfg.which != Which::kC1) {
    Section summary;
    summary.title = "cartoon ideal summary";
    summary.body.push_back("ell  quadrics  dim(claimed)  degree(claimed)");
    for (int ell = range.lo; ell <= range.hi; ++ell) {
      Section s;
      s.title = "cartoon ideal, ell = " + str(ell);
      if (ell < 2 || ell > 8) {
        s.checks.push_back(skipped("cartoon ideal audit",
                                   ell < 2 ? "needs ell >= 2" : "above cap ell <= 8"));
      } else {
        guarded(rep, s, "cartoon ideal audit", [&] {
          const IdealAudit a = cartoon_ideal_audit(ell, cfg.limits);
          audit_section(rep, s, a);
          summary.body.push_back(str(ell) + "  " + str(a.ideal.generators.size()) + "  " +
                                 finding_value(a, "dimension") + "(2)  " +
                                 finding_value(a, "degree") + "(" + str(1LL << (ell - 1)) + ")");
          rep.dot.push_back(
              export_dot(cartoon_diagram(staircase(ell)), "cartoon_" + str(ell)));
        });
      }
      rep.sections.push_back(std::move(s));
    }
    rep.sections.push_back(std::move(summary));
  }
  return rep;
}

Report verify_all_report(const Range& range, const RunConfig& cfg) {
  require(range, 1, cfg.limits.max_degree - 1, "ell");
  Report rep;
  rep.command = "verify-all";
  auto absorb = [&](const std::string& area, std::optional<Range> r,
                    const std::function<Report(const Range&)>& build, const std::string& why) {
    if (!r) {
      rep.header.push_back(area + ": skipped for ell " + to_string(range) + " (" + why + ")");
      return;
    }
    Report part = build(*r);
    rep.header.push_back(area + ": ell " + to_string(*r));
    rep.resource_limited |= part.resource_limited;
    for (auto& s : part.sections) {
      s.title = area + ": " + s.title;
      rep.sections.push_back(std::move(s));
    }
  };
  absorb("graph", clamp(range, 3, cfg.limits.max_degree - 1),
         [&](const Range& r) { return graph_report(r, cfg); }, "needs ell >= 3");
  absorb("blambda", range, [&](const Range& r) { return blambda_report(r, cfg); }, "");
  absorb("chroma", clamp(range, 3, 30), [&](const Range& r) { return chroma_report(r, cfg); },
         "needs ell >= 3");
  absorb("separation", range, [&](const Range& r) { return separation_report(r, cfg); }, "");
  absorb("identities", clamp(range, 5, 18),
         [&](const Range& r) { return identities_report(r, cfg); }, "needs ell >= 5");
  return rep;
}

Report export_report(const Range& range, const RunConfig& cfg) {
  Report rep;
  rep.command = "export";
  for (int ell = range.lo; ell <= range.hi; ++ell) {
    Section s;
    s.title = cfg.kind + ", ell = " + str(ell);
    if (cfg.kind == "word-graph") {
      require(range, 3, cfg.limits.max_degree - 1, "ell");
      guarded(rep, s, "word graph", [&] {
        const RWGraph g = RWGraph::build(z_permutation(ell + 1), cfg.limits);
        s.data = to_json(g);
        rep.dot.push_back(export_dot(g, "word_graph_" + str(ell)));
      });
    } else if (cfg.kind == "blambda") {
      require(range, 1, 30, "ell");
      const LayeredGraph b = LayeredGraph::build(staircase(ell));
      s.data = to_json(b);
      rep.dot.push_back(export_dot(b, "blambda_" + str(ell)));
    } else if (cfg.kind == "cartoon") {
      require(range, 2, 30, "ell");
      const Cartoon c = cartoon_diagram(staircase(ell));
      s.data = to_json(c);
      rep.dot.push_back(export_dot(c, "cartoon_" + str(ell)));
    } else {
      throw MalformedError("unknown export kind '" + cfg.kind +
                           "' (word-graph, blambda, cartoon)");
    }
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

CommandResult run_command(const std::string& command, const RunConfig& cfg) {
  using Builder = Report (*)(const Range&, const RunConfig&);
  static const std::map<std::string, std::pair<Builder, Range>> commands = {
      {"words", {words_report, {4, 8}}},
      {"graph", {graph_report, {3, 6}}},
      {"blambda", {blambda_report, {1, 6}}},
      {"chroma", {chroma_report, {3, 6}}},
      {"separation", {separation_report, {1, 12}}},
      {"identities", {identities_report, {5, 9}}},
      {"conjectures", {conjectures_report, {2, 6}}},
      {"verify-all", {verify_all_report, {3, 6}}},
      {"export", {export_report, {3, 3}}},
  };
  CommandResult result;
  const auto it = commands.find(command);
  if (it == commands.end()) {
    result.error = "rwg: unknown command '" + command + "'\n";
    result.exit_code = kExitUsage;
    return result;
  }
  try {
    const Report rep = it->second.first(cfg.range.value_or(it->second.second), cfg);
    Format format = cfg.format;
    if (command == "export" && format == Format::kText) format = Format::kDot;
    result.output = render(rep, format);
    if (rep.invariant_failures() > 0) {
      result.exit_code = kExitFailure;
      result.error = "rwg: " + std::to_string(rep.invariant_failures()) + " invariant failures\n";
    } else if (rep.resource_limited) {
      result.exit_code = kExitResource;
      result.error = "rwg: some values were skipped at a resource limit\n";
    } else if (cfg.strict && rep.mismatches() > 0) {
      result.exit_code = kExitFailure;
      result.error = "rwg: " + std::to_string(rep.mismatches()) + " claim mismatches (strict)\n";
    }
  } catch (const ResourceError& e) {
    result.error = std::string("rwg: resource limit: ") + e.what() + "\n";
    result.exit_code = kExitResource;
  } catch (const InternalError& e) {
    result.error = std::string("rwg: internal error: ") + e.what() + "\n";
    result.exit_code = kExitFailure;
  } catch (const Error& e) {
    result.error = std::string("rwg: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
  } catch (const std::exception& e) {
    result.error = std::string("rwg: internal error: ") + e.what() + "\n";
    result.exit_code = kExitFailure;
  }
  return result;
}

}  // namespace rwg
