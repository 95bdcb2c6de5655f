#include "rwg/toric.hpp"

#include <sstream>

#include "rwg/chroma.hpp"
#include "rwg/error.hpp"
#include "rwg/pid.hpp"

namespace rwg {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch: return "MATCH";
    case Verdict::kMismatch: return "MISMATCH";
    case Verdict::kSkipped: return "SKIPPED";
  }
  return "?";
}

const char* const kDimensionSemantics =
    "dimension is the Krull dimension of the affine quotient k[x]/I and degree is the "
    "reduced Hilbert numerator at t=1, both read from the grevlex initial ideal";

std::size_t IdealAudit::mismatch_count() const {
  std::size_t n = 0;
  for (const auto& f : findings) n += f.verdict == Verdict::kMismatch;
  return n;
}

namespace {

std::string big_str(const BigInt& b) { return b.str(); }

Finding compare_item(std::string item, const std::string& claimed, const std::string& computed,
                     std::string note = {}) {
  return {std::move(item), claimed, computed,
          claimed == computed ? Verdict::kMatch : Verdict::kMismatch, std::move(note)};
}

Binomial product_minus_variable(std::size_t nvars, const std::vector<int>& factor_vars,
                                std::size_t var) {
  Monomial u(nvars, 0), v(nvars, 0);
  for (int i : factor_vars) ++u[i];
  v[var] = 1;
  return Binomial(u, v);
}

// Groebner basis, initial ideal, Hilbert series and the self-checks.
void run_pipeline(IdealAudit& a, const Limits& limits) {
  const GroebnerResult gb =
      buchberger_binomial(a.ideal.generators, MonomialOrder::kGrevLex, limits);
  a.groebner_basis = gb.basis;
  a.groebner_verified = verify_groebner(gb.basis, MonomialOrder::kGrevLex);
  a.certificates_verified = verify_certificates(gb);
  a.basis_in_kernel = true;
  if (a.ideal.weights)
    for (const auto& b : gb.basis) a.basis_in_kernel &= in_kernel(b, *a.ideal.weights);
  a.initial = initial_ideal(gb.basis, MonomialOrder::kGrevLex, a.ideal.nvars);
  a.hilbert = hilbert(a.initial, limits);
  a.hilbert_function = a.hilbert.hilbert_function(a.brute_force_degree);
  a.standard_counts = count_standard_monomials(a.initial, a.brute_force_degree);
}

}  // namespace

BinomialIdeal colour_separation_ideal(int ell) {
  if (ell < 5 || ell > 10) throw DomainError("colour separation ideal: needs 5 <= ell <= 10");
  const ColourSeparation sep = colour_separation(staircase(ell));
  BinomialIdeal ideal;
  ideal.nvars = static_cast<std::size_t>(ell) + 2;
  std::vector<long long> w;
  for (int i = 1; i <= ell; ++i) w.push_back(i);
  w.push_back(sep.mu);
  w.push_back(sep.kappa);
  ideal.weights = w;
  for (long long x : w) ideal.names.push_back("x" + std::to_string(x));
  // Variable i-1 carries weight i.
  std::vector<int> odd, even;
  for (int i = 1; i <= ell; ++i) (i % 2 ? odd : even).push_back(i - 1);
  const std::size_t mu = ell, kappa = ell + 1;
  const auto& to_mu = ell % 2 ? odd : even;
  const auto& to_kappa = ell % 2 ? even : odd;
  ideal.generators = {product_minus_variable(ideal.nvars, to_mu, mu),
                      product_minus_variable(ideal.nvars, to_kappa, kappa)};
  return ideal;
}

IdealAudit colour_separation_audit(int ell, int probe_degree, const Limits& limits) {
  IdealAudit a;
  a.title = "colour-separation ideal";
  a.ell = ell;
  a.ideal = colour_separation_ideal(ell);
  const auto names = a.ideal.variable_names();
  const auto& w = *a.ideal.weights;
  for (std::size_t i = 0; i < a.ideal.generators.size(); ++i) {
    const Binomial& g = a.ideal.generators[i];
    a.findings.push_back(compare_item("generator " + g.to_string(names) + " in kernel", "true",
                                      in_kernel(g, w) ? "true" : "false"));
  }
  run_pipeline(a, limits);
  const int hi = (ell + 1) / 2, lo = ell / 2;
  a.findings.push_back(compare_item("dimension", std::to_string(ell),
                                    std::to_string(a.hilbert.dimension), kDimensionSemantics));
  a.findings.push_back(compare_item("degree", std::to_string(hi * lo), big_str(a.hilbert.degree),
                                    kDimensionSemantics));

  // x1^2 - x2 lies in the kernel of x_i -> t^{w_i}; if the two generators
  // generated the kernel it would reduce to zero.
  Monomial sq(a.ideal.nvars, 0), x2(a.ideal.nvars, 0);
  sq[0] = 2;
  x2[1] = 1;
  const Binomial probe(sq, x2);
  const auto nf = normal_form(probe, a.groebner_basis, MonomialOrder::kGrevLex);
  a.findings.push_back(compare_item(
      "kernel probe " + probe.to_string(names) + " normal form", "0",
      nf ? nf->to_string(names) : "0",
      std::string("probe in kernel: ") + (in_kernel(probe, w) ? "true" : "false")));

  // Every Graver element up to probe_degree against the ideal.
  GraverResult graver = graver_1xn(w, probe_degree, limits.max_graver_states);
  std::size_t in_ideal = 0;
  for (const auto& b : graver.elements)
    in_ideal += !normal_form(b, a.groebner_basis, MonomialOrder::kGrevLex).has_value();
  a.findings.push_back(compare_item(
      "Graver elements of degree <= " + std::to_string(probe_degree) + " in ideal",
      std::to_string(graver.elements.size()), std::to_string(in_ideal),
      "kernel generated by the two binomials would contain every Graver element"));
  return a;
}

BinomialIdeal cartoon_ideal(int ell) {
  if (ell < 2) throw DomainError("cartoon ideal: needs ell >= 2");
  BinomialIdeal ideal;
  ideal.nvars = static_cast<std::size_t>(ell) + 1;
  std::vector<long long> w;
  for (int i = 0; i <= ell; ++i) w.push_back(i);
  ideal.weights = w;
  for (int j = 1; j <= ell - 1; ++j) {
    Monomial u(ideal.nvars, 0), v(ideal.nvars, 0);
    ++u[j - 1];
    ++u[j + 1];
    v[j] = 2;
    ideal.generators.emplace_back(u, v);
  }
  return ideal;
}

IdealAudit cartoon_ideal_audit(int ell, const Limits& limits) {
  if (ell < 2 || ell > 8) throw DomainError("cartoon ideal audit: needs 2 <= ell <= 8");
  IdealAudit a;
  a.title = "cartoon ideal";
  a.ell = ell;
  a.ideal = cartoon_ideal(ell);
  a.findings.push_back(compare_item("quadric generators", std::to_string(ell - 1),
                                    std::to_string(a.ideal.generators.size())));
  bool all_in_kernel = true;
  for (const auto& g : a.ideal.generators) all_in_kernel &= in_kernel(g, *a.ideal.weights);
  a.findings.push_back(compare_item("generators vanish under x_i -> t^i", "true",
                                    all_in_kernel ? "true" : "false"));
  run_pipeline(a, limits);
  a.findings.push_back(compare_item("dimension", "2", std::to_string(a.hilbert.dimension),
                                    kDimensionSemantics));
  a.findings.push_back(compare_item("degree", big_str(BigInt(1) << (ell - 1)),
                                    big_str(a.hilbert.degree), kDimensionSemantics));
  return a;
}

std::vector<int> Cartoon::top_weights() const {
  std::vector<int> w;
  for (const auto& n : nodes)
    if (n.top) w.push_back(n.weight);
  return w;
}

std::vector<int> Cartoon::bottom_weights() const {
  std::vector<int> w;
  for (const auto& n : nodes)
    if (!n.top) w.push_back(n.weight);
  return w;
}

Cartoon cartoon_diagram(const Partition& staircase_partition) {
  const auto ell = staircase_partition.staircase_length();
  if (!ell) throw DomainError("cartoon_diagram: not a staircase partition");
  if (*ell < 2) throw DomainError("cartoon_diagram: needs length >= 2");
  Cartoon c;
  c.ell = *ell;
  // Node 2j is the top of column j, node 2j+1 its bottom.
  for (int j = 0; j < *ell; ++j) {
    c.nodes.push_back({"t" + std::to_string(j), *ell - j, true, j});
    c.nodes.push_back({"b" + std::to_string(j), *ell - 1 - j, false, j});
  }
  for (int j = 0; j < *ell; ++j) {
    const std::size_t top = 2 * j, bottom = 2 * j + 1;
    c.edges.push_back({bottom, top, j + 1 < *ell});
    if (j + 1 < *ell) c.edges.push_back({top, top + 2, true});
  }
  return c;
}

std::string export_dot(const Cartoon& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (const char* row : {"top", "bottom"}) {
    out << "  { rank=same;";
    for (const auto& n : c.nodes)
      if (n.top == (row[0] == 't')) out << ' ' << n.id << ';';
    out << " }\n";
  }
  for (const auto& n : c.nodes) out << "  " << n.id << " [label=\"" << n.weight << "\"];\n";
  for (const auto& e : c.edges) {
    out << "  " << c.nodes[e.from].id << " -> " << c.nodes[e.to].id;
    if (!e.directed) out << " [dir=none]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const Finding& f) {
  nlohmann::json j = {{"item", f.item},
                      {"claimed", f.claimed},
                      {"computed", f.computed},
                      {"verdict", to_string(f.verdict)}};
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

nlohmann::json to_json(const IdealAudit& a) {
  const auto names = a.ideal.variable_names();
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& f : a.findings) findings.push_back(to_json(f));
  nlohmann::json gens = nlohmann::json::array(), basis = nlohmann::json::array();
  for (const auto& g : a.ideal.generators) gens.push_back(g.to_string(names));
  for (const auto& g : a.groebner_basis) basis.push_back(g.to_string(names));
  nlohmann::json hf = nlohmann::json::array(), sc = nlohmann::json::array();
  for (const auto& x : a.hilbert_function) hf.push_back(big_to_json(x));
  for (const auto& x : a.standard_counts) sc.push_back(big_to_json(x));
  return {{"title", a.title},
          {"ell", a.ell},
          {"ideal", to_json(a.ideal)},
          {"generators", gens},
          {"groebner_basis", basis},
          {"initial_ideal", to_json(a.initial)},
          {"hilbert", to_json(a.hilbert)},
          {"findings", findings},
          {"semantics", kDimensionSemantics},
          {"checks",
           {{"groebner_verified", a.groebner_verified},
            {"certificates_verified", a.certificates_verified},
            {"basis_in_kernel", a.basis_in_kernel},
            {"hilbert_function", hf},
            {"standard_monomial_counts", sc},
            {"hilbert_matches_count", a.hilbert_matches_count()}}}};
}

nlohmann::json to_json(const Cartoon& c) {
  nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& n : c.nodes)
    nodes.push_back({{"id", n.id}, {"weight", n.weight}, {"row", n.top ? "top" : "bottom"},
                     {"column", n.column}});
  for (const auto& e : c.edges)
    edges.push_back({{"from", c.nodes[e.from].id}, {"to", c.nodes[e.to].id},
                     {"directed", e.directed}});
  return {{"ell", c.ell}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace rwg
