#include "rwg/rwg.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "rwg/blambda.hpp"
#include "rwg/chroma.hpp"
#include "rwg/commands.hpp"
#include "rwg/error.hpp"
#include "rwg/groebner.hpp"
#include "rwg/perm.hpp"
#include "rwg/pid.hpp"
#include "rwg/rwgraph.hpp"
#include "rwg/toric.hpp"

struct rwg_config {
  rwg::RunConfig cfg;
};
struct rwg_output {
  rwg::CommandResult result;
};
struct rwg_permutation {
  rwg::Permutation value;
};
struct rwg_word_graph {
  rwg::RWGraph value;
};
struct rwg_staircase_graph {
  rwg::LayeredGraph value;
};
struct rwg_polynomial {
  rwg::IntPolynomial value;
};
struct rwg_ideal {
  rwg::BinomialIdeal value;
};

namespace {

thread_local std::string last_error;

rwg_status status_of(rwg::ErrorCode code) {
  switch (code) {
    case rwg::ErrorCode::kDomain: return RWG_ERR_DOMAIN;
    case rwg::ErrorCode::kMalformed: return RWG_ERR_MALFORMED;
    case rwg::ErrorCode::kResource: return RWG_ERR_RESOURCE;
    case rwg::ErrorCode::kInvalidIdentity: return RWG_ERR_INVALID_IDENTITY;
    case rwg::ErrorCode::kInternal: return RWG_ERR_INTERNAL;
  }
  return RWG_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
rwg_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return RWG_OK;
  } catch (const rwg::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return RWG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return RWG_ERR_INTERNAL;
  }
}

rwg_status null_argument(const char* fn) {
  last_error = std::string(fn) + ": null argument";
  return RWG_ERR_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace


extern "C" {

const char* rwg_last_error(void) { return last_error.c_str(); }
const char* rwg_version(void) { return "0.1.0"; }
void rwg_string_free(char* s) { std::free(s); }

rwg_status rwg_config_create(rwg_config** out) {
  if (!out) return null_argument(__func__);
  return guard([&] { *out = new rwg_config{}; });
}

void rwg_config_destroy(rwg_config* cfg) { delete cfg; }

rwg_status rwg_config_set_format(rwg_config* cfg, rwg_format format) {
  if (!cfg) return null_argument(__func__);
  return guard([&] {
    switch (format) {
      case RWG_FORMAT_TEXT: cfg->cfg.format = rwg::Format::kText; return;
      case RWG_FORMAT_JSON: cfg->cfg.format = rwg::Format::kJson; return;
      case RWG_FORMAT_MARKDOWN: cfg->cfg.format = rwg::Format::kMarkdown; return;
      case RWG_FORMAT_DOT: cfg->cfg.format = rwg::Format::kDot; return;
    }
    throw rwg::MalformedError("unknown format code");
  });
}

rwg_status rwg_config_set_range(rwg_config* cfg, int lo, int hi) {
  if (!cfg) return null_argument(__func__);
  return guard([&] {
    if (hi < lo) throw rwg::DomainError("empty range");
    cfg->cfg.range = rwg::Range{lo, hi};
  });
}

rwg_status rwg_config_parse_range(rwg_config* cfg, const char* text) {
  if (!cfg || !text) return null_argument(__func__);
  return guard([&] { cfg->cfg.range = rwg::parse_range(text); });
}

rwg_status rwg_config_set_strict(rwg_config* cfg, int strict) {
  if (!cfg) return null_argument(__func__);
  cfg->cfg.strict = strict != 0;
  return RWG_OK;
}

rwg_status rwg_config_set_degree_bound(rwg_config* cfg, int bound) {
  if (!cfg) return null_argument(__func__);
  return guard([&] {
    if (bound < 1) throw rwg::DomainError("degree bound must be >= 1");
    cfg->cfg.degree_bound = bound;
  });
}

rwg_status rwg_config_set_which(rwg_config* cfg, const char* which) {
  if (!cfg || !which) return null_argument(__func__);
  return guard([&] { cfg->cfg.which = rwg::parse_which(which); });
}

rwg_status rwg_config_set_kind(rwg_config* cfg, const char* kind) {
  if (!cfg || !kind) return null_argument(__func__);
  return guard([&] { cfg->cfg.kind = kind; });
}

rwg_status rwg_config_set_cap(rwg_config* cfg, rwg_cap cap, uint64_t value) {
  if (!cfg) return null_argument(__func__);
  return guard([&] {
    auto& l = cfg->cfg.limits;
    const auto v = static_cast<std::size_t>(value);
    switch (cap) {
      case RWG_CAP_VERTICES: l.max_vertices = v; return;
      case RWG_CAP_CYCLE_RANK: l.max_cycle_rank = v; return;
      case RWG_CAP_ISO_VERTICES: l.max_iso_vertices = v; return;
      case RWG_CAP_IDENTITY_PARTS: l.max_identity_parts = v; return;
      case RWG_CAP_GRAVER_STATES: l.max_graver_states = v; return;
      case RWG_CAP_BASIS: l.max_basis = v; return;
      case RWG_CAP_DERIVATIONS: l.max_derivations = v; return;
      case RWG_CAP_HILBERT_NODES: l.max_hilbert_nodes = v; return;
    }
    throw rwg::MalformedError("unknown cap code");
  });
}

rwg_status rwg_config_merge_json(rwg_config* cfg, const char* json) {
  if (!cfg || !json) return null_argument(__func__);
  return guard([&] { cfg->cfg = rwg::merge_config_json(json, cfg->cfg); });
}

rwg_status rwg_config_load_file(rwg_config* cfg, const char* path) {
  if (!cfg || !path) return null_argument(__func__);
  return guard([&] {
    std::ifstream in(path);
    if (!in) throw rwg::MalformedError(std::string("cannot read config file ") + path);
    std::stringstream text;
    text << in.rdbuf();
    cfg->cfg = rwg::merge_config_json(text.str(), cfg->cfg);
  });
}

rwg_status rwg_run(const char* command, const rwg_config* cfg, rwg_output** out) {
  if (!command || !cfg || !out) return null_argument(__func__);
  return guard([&] { *out = new rwg_output{rwg::run_command(command, cfg->cfg)}; });
}

const char* rwg_output_text(const rwg_output* out) { return out ? out->result.output.c_str() : ""; }
const char* rwg_output_error(const rwg_output* out) { return out ? out->result.error.c_str() : ""; }
int rwg_output_exit_code(const rwg_output* out) { return out ? out->result.exit_code : 1; }
void rwg_output_destroy(rwg_output* out) { delete out; }

rwg_status rwg_permutation_from_word(const int* word, size_t n, rwg_permutation** out) {
  if (!word || !out) return null_argument(__func__);
  return guard([&] {
    *out = new rwg_permutation{rwg::Permutation::from_word(std::span<const int>(word, n))};
  });
}

rwg_status rwg_z_permutation(int r, rwg_permutation** out) {
  if (!out) return null_argument(__func__);
  return guard([&] { *out = new rwg_permutation{rwg::z_permutation(r)}; });
}

void rwg_permutation_destroy(rwg_permutation* p) { delete p; }

rwg_status rwg_permutation_length(const rwg_permutation* p, int* out) {
  if (!p || !out) return null_argument(__func__);
  return guard([&] { *out = p->value.length(); });
}

rwg_status rwg_permutation_string(const rwg_permutation* p, char** out) {
  if (!p || !out) return null_argument(__func__);
  return guard([&] { *out = dup(p->value.to_string()); });
}

rwg_status rwg_reduced_words(const rwg_permutation* p, size_t* count, char** json) {
  if (!p) return null_argument(__func__);
  return guard([&] {
    const auto words = rwg::enumerate_reduced_words(p->value);
    if (count) *count = words.size();
    if (json) *json = dup(rwg::words_to_json(words).dump());
  });
}

rwg_status rwg_word_graph_build(const rwg_permutation* p, rwg_word_graph** out) {
  if (!p || !out) return null_argument(__func__);
  return guard([&] { *out = new rwg_word_graph{rwg::RWGraph::build(p->value)}; });
}

void rwg_word_graph_destroy(rwg_word_graph* g) { delete g; }

rwg_status rwg_word_graph_counts(const rwg_word_graph* g, size_t* vertices, size_t* edges,
                                 size_t* braid_edges, size_t* four_cycles) {
  if (!g) return null_argument(__func__);
  return guard([&] {
    if (vertices) *vertices = g->value.vertex_count();
    if (edges) *edges = g->value.edge_count();
    if (braid_edges) *braid_edges = rwg::braid_edge_count(g->value);
    if (four_cycles) *four_cycles = rwg::count_four_cycles(g->value);
  });
}

rwg_status rwg_word_graph_dot(const rwg_word_graph* g, char** out) {
  if (!g || !out) return null_argument(__func__);
  return guard([&] { *out = dup(rwg::export_dot(g->value)); });
}

rwg_status rwg_staircase_graph_build(int ell, rwg_staircase_graph** out) {
  if (!out) return null_argument(__func__);
  return guard([&] {
    *out = new rwg_staircase_graph{rwg::LayeredGraph::build(rwg::staircase(ell))};
  });
}

void rwg_staircase_graph_destroy(rwg_staircase_graph* g) { delete g; }

rwg_status rwg_staircase_graph_counts(const rwg_staircase_graph* g, size_t* vertices,
                                      size_t* edges) {
  if (!g) return null_argument(__func__);
  if (vertices) *vertices = g->value.vertex_count();
  if (edges) *edges = g->value.edge_count();
  return RWG_OK;
}

rwg_status rwg_staircase_graph_dot(const rwg_staircase_graph* g, char** out) {
  if (!g || !out) return null_argument(__func__);
  return guard([&] { *out = dup(rwg::export_dot(g->value)); });
}

rwg_status rwg_graphs_isomorphic(const rwg_word_graph* a, const rwg_staircase_graph* b,
                                 int* out) {
  if (!a || !b || !out) return null_argument(__func__);
  return guard([&] { *out = rwg::iso_check(a->value, b->value) ? 1 : 0; });
}

rwg_status rwg_chromatic_polynomial(const rwg_staircase_graph* g, size_t max_cycle_rank,
                                    rwg_polynomial** out) {
  if (!g || !out) return null_argument(__func__);
  return guard([&] {
    *out = new rwg_polynomial{rwg::chromatic_polynomial(g->value.underlying(), max_cycle_rank)};
  });
}

void rwg_polynomial_destroy(rwg_polynomial* p) { delete p; }

rwg_status rwg_polynomial_degree(const rwg_polynomial* p, int* out) {
  if (!p || !out) return null_argument(__func__);
  *out = p->value.degree();
  return RWG_OK;
}

rwg_status rwg_polynomial_coefficient(const rwg_polynomial* p, int i, char** out) {
  if (!p || !out) return null_argument(__func__);
  return guard([&] {
    if (i < 0) throw rwg::DomainError("negative coefficient index");
    *out = dup(p->value.coefficient(i).str());
  });
}

rwg_status rwg_polynomial_evaluate(const rwg_polynomial* p, long long k, char** out) {
  if (!p || !out) return null_argument(__func__);
  return guard([&] { *out = dup(p->value.evaluate(k).str()); });
}

rwg_status rwg_polynomial_string(const rwg_polynomial* p, char** out) {
  if (!p || !out) return null_argument(__func__);
  return guard([&] { *out = dup(p->value.to_string()); });
}

rwg_status rwg_identity_is_primitive(const int* lhs, size_t nl, const int* rhs, size_t nr,
                                     int bound, int* out) {
  if (!lhs || !rhs || !out) return null_argument(__func__);
  return guard([&] {
    const auto id = rwg::PartitionIdentity::make(std::vector<int>(lhs, lhs + nl),
                                                 std::vector<int>(rhs, rhs + nr), bound);
    *out = rwg::is_primitive(id) ? 1 : 0;
  });
}

rwg_status rwg_cartoon_ideal(int ell, rwg_ideal** out) {
  if (!out) return null_argument(__func__);
  return guard([&] { *out = new rwg_ideal{rwg::cartoon_ideal(ell)}; });
}

rwg_status rwg_colour_separation_ideal(int ell, rwg_ideal** out) {
  if (!out) return null_argument(__func__);
  return guard([&] { *out = new rwg_ideal{rwg::colour_separation_ideal(ell)}; });
}

void rwg_ideal_destroy(rwg_ideal* ideal) { delete ideal; }

rwg_status rwg_ideal_json(const rwg_ideal* ideal, char** out) {
  if (!ideal || !out) return null_argument(__func__);
  return guard([&] { *out = dup(rwg::to_json(ideal->value).dump()); });
}

rwg_status rwg_ideal_groebner(const rwg_ideal* ideal, char** out) {
  if (!ideal || !out) return null_argument(__func__);
  return guard([&] {
    const auto gb = rwg::buchberger_binomial(ideal->value.generators);
    *out = dup(rwg::to_json(gb, ideal->value.variable_names()).dump());
  });
}

rwg_status rwg_ideal_dimension_degree(const rwg_ideal* ideal, int* dimension, char** degree) {
  if (!ideal || !dimension || !degree) return null_argument(__func__);
  return guard([&] {
    const auto gb = rwg::buchberger_binomial(ideal->value.generators);
    const auto in = rwg::initial_ideal(gb.basis, gb.order, ideal->value.nvars);
    const auto h = rwg::hilbert(in);
    *dimension = h.dimension;
    *degree = dup(h.degree.str());
  });
}

}  // extern "C"
