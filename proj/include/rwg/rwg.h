/* C interface to the rwg library. Every function returns an rwg_status;
 * on failure rwg_last_error() describes the most recent error on the
 * calling thread. Strings handed out as char** are owned by the caller and
 * released with rwg_string_free. */
#ifndef RWG_RWG_H
#define RWG_RWG_H

#include <stddef.h>
#include <stdint.h>

#if defined(RWG_BUILDING_LIBRARY)
#define RWG_API __attribute__((visibility("default")))
#else
#define RWG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rwg_status {
  RWG_OK = 0,
  RWG_ERR_DOMAIN = 1,
  RWG_ERR_MALFORMED = 2,
  RWG_ERR_RESOURCE = 3,
  RWG_ERR_INVALID_IDENTITY = 4,
  RWG_ERR_INTERNAL = 5,
  RWG_ERR_NULL_ARGUMENT = 6
} rwg_status;

typedef enum rwg_format {
  RWG_FORMAT_TEXT = 0,
  RWG_FORMAT_JSON = 1,
  RWG_FORMAT_MARKDOWN = 2,
  RWG_FORMAT_DOT = 3
} rwg_format;

typedef enum rwg_cap {
  RWG_CAP_VERTICES = 0,
  RWG_CAP_CYCLE_RANK = 1,
  RWG_CAP_ISO_VERTICES = 2,
  RWG_CAP_IDENTITY_PARTS = 3,
  RWG_CAP_GRAVER_STATES = 4,
  RWG_CAP_BASIS = 5,
  RWG_CAP_DERIVATIONS = 6,
  RWG_CAP_HILBERT_NODES = 7
} rwg_cap;

typedef struct rwg_config rwg_config;
typedef struct rwg_output rwg_output;
typedef struct rwg_permutation rwg_permutation;
typedef struct rwg_word_graph rwg_word_graph;
typedef struct rwg_staircase_graph rwg_staircase_graph;
typedef struct rwg_polynomial rwg_polynomial;
typedef struct rwg_ideal rwg_ideal;

RWG_API const char* rwg_last_error(void);
RWG_API const char* rwg_version(void);
RWG_API void rwg_string_free(char* s);

/* Run configuration for rwg_run. */
RWG_API rwg_status rwg_config_create(rwg_config** out);
RWG_API void rwg_config_destroy(rwg_config* cfg);
RWG_API rwg_status rwg_config_set_format(rwg_config* cfg, rwg_format format);
RWG_API rwg_status rwg_config_set_range(rwg_config* cfg, int lo, int hi);
/* "A..B" or "A" */
RWG_API rwg_status rwg_config_parse_range(rwg_config* cfg, const char* text);
RWG_API rwg_status rwg_config_set_strict(rwg_config* cfg, int strict);
RWG_API rwg_status rwg_config_set_degree_bound(rwg_config* cfg, int bound);
/* "c1", "c2" or "both" */
RWG_API rwg_status rwg_config_set_which(rwg_config* cfg, const char* which);
/* export target: "word-graph", "blambda" or "cartoon" */
RWG_API rwg_status rwg_config_set_kind(rwg_config* cfg, const char* kind);
RWG_API rwg_status rwg_config_set_cap(rwg_config* cfg, rwg_cap cap, uint64_t value);
/* JSON object; keys present override the current settings. */
RWG_API rwg_status rwg_config_merge_json(rwg_config* cfg, const char* json);
RWG_API rwg_status rwg_config_load_file(rwg_config* cfg, const char* path);

/* Runs a subcommand (words, graph, blambda, chroma, separation, identities,
 * conjectures, verify-all, export). Returns RWG_OK whenever an output was
 * produced, including failing runs; inspect rwg_output_exit_code. */
RWG_API rwg_status rwg_run(const char* command, const rwg_config* cfg, rwg_output** out);
RWG_API const char* rwg_output_text(const rwg_output* out);
RWG_API const char* rwg_output_error(const rwg_output* out);
RWG_API int rwg_output_exit_code(const rwg_output* out);
RWG_API void rwg_output_destroy(rwg_output* out);

/* Permutations in one-line notation, entries 1..n. */
RWG_API rwg_status rwg_permutation_from_word(const int* word, size_t n, rwg_permutation** out);
RWG_API rwg_status rwg_z_permutation(int r, rwg_permutation** out);
RWG_API void rwg_permutation_destroy(rwg_permutation* p);
RWG_API rwg_status rwg_permutation_length(const rwg_permutation* p, int* out);
RWG_API rwg_status rwg_permutation_string(const rwg_permutation* p, char** out);
/* JSON array of reduced words, lexicographic. */
RWG_API rwg_status rwg_reduced_words(const rwg_permutation* p, size_t* count, char** json);

RWG_API rwg_status rwg_word_graph_build(const rwg_permutation* p, rwg_word_graph** out);
RWG_API void rwg_word_graph_destroy(rwg_word_graph* g);
RWG_API rwg_status rwg_word_graph_counts(const rwg_word_graph* g, size_t* vertices, size_t* edges,
                                         size_t* braid_edges, size_t* four_cycles);
RWG_API rwg_status rwg_word_graph_dot(const rwg_word_graph* g, char** out);

RWG_API rwg_status rwg_staircase_graph_build(int ell, rwg_staircase_graph** out);
RWG_API void rwg_staircase_graph_destroy(rwg_staircase_graph* g);
RWG_API rwg_status rwg_staircase_graph_counts(const rwg_staircase_graph* g, size_t* vertices,
                                              size_t* edges);
RWG_API rwg_status rwg_staircase_graph_dot(const rwg_staircase_graph* g, char** out);
RWG_API rwg_status rwg_graphs_isomorphic(const rwg_word_graph* a, const rwg_staircase_graph* b,
                                         int* out);

/* Deletion-contraction; RWG_ERR_RESOURCE above the cycle-rank cap. */
RWG_API rwg_status rwg_chromatic_polynomial(const rwg_staircase_graph* g, size_t max_cycle_rank,
                                            rwg_polynomial** out);
RWG_API void rwg_polynomial_destroy(rwg_polynomial* p);
RWG_API rwg_status rwg_polynomial_degree(const rwg_polynomial* p, int* out);
/* Decimal string of the coefficient of k^i. */
RWG_API rwg_status rwg_polynomial_coefficient(const rwg_polynomial* p, int i, char** out);
RWG_API rwg_status rwg_polynomial_evaluate(const rwg_polynomial* p, long long k, char** out);
RWG_API rwg_status rwg_polynomial_string(const rwg_polynomial* p, char** out);

RWG_API rwg_status rwg_identity_is_primitive(const int* lhs, size_t nl, const int* rhs, size_t nr,
                                             int bound, int* out);

RWG_API rwg_status rwg_cartoon_ideal(int ell, rwg_ideal** out);
RWG_API rwg_status rwg_colour_separation_ideal(int ell, rwg_ideal** out);
RWG_API void rwg_ideal_destroy(rwg_ideal* ideal);
RWG_API rwg_status rwg_ideal_json(const rwg_ideal* ideal, char** out);
/* Grevlex Groebner basis as JSON. */
RWG_API rwg_status rwg_ideal_groebner(const rwg_ideal* ideal, char** out);
/* Dimension and degree (decimal) of the quotient ring. */
RWG_API rwg_status rwg_ideal_dimension_degree(const rwg_ideal* ideal, int* dimension,
                                              char** degree);

#ifdef __cplusplus
}
#endif

#endif
