#include <gtest/gtest.h>

#include <string>

#include "rwg/rwg.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rwg_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(rwg_version(), "0.1.0"); }

TEST(CApi, PermutationAndWords) {
  const int w[] = {3, 5, 1, 2, 4};
  rwg_permutation* p = nullptr;
  ASSERT_EQ(rwg_permutation_from_word(w, 5, &p), RWG_OK);
  int len = 0;
  EXPECT_EQ(rwg_permutation_length(p, &len), RWG_OK);
  EXPECT_EQ(len, 5);
  size_t count = 0;
  char* json = nullptr;
  ASSERT_EQ(rwg_reduced_words(p, &count, &json), RWG_OK);
  EXPECT_EQ(count, 5u);
  EXPECT_EQ(take(json), R"(["21432","24132","24312","42132","42312"])");
  rwg_permutation_destroy(p);

  const int bad[] = {2, 1, 1};
  EXPECT_EQ(rwg_permutation_from_word(bad, 3, &p), RWG_ERR_MALFORMED);
  EXPECT_NE(std::string(rwg_last_error()).size(), 0u);
  EXPECT_EQ(rwg_z_permutation(3, &p), RWG_ERR_DOMAIN);
  EXPECT_EQ(rwg_permutation_length(nullptr, &len), RWG_ERR_NULL_ARGUMENT);
}

TEST(CApi, GraphsAndIsomorphism) {
  rwg_permutation* z = nullptr;
  ASSERT_EQ(rwg_z_permutation(6, &z), RWG_OK);
  char* text = nullptr;
  ASSERT_EQ(rwg_permutation_string(z, &text), RWG_OK);
  EXPECT_EQ(take(text), "236451");
  rwg_word_graph* g = nullptr;
  ASSERT_EQ(rwg_word_graph_build(z, &g), RWG_OK);
  size_t v, e, braid, cycles;
  ASSERT_EQ(rwg_word_graph_counts(g, &v, &e, &braid, &cycles), RWG_OK);
  EXPECT_EQ(v, 15u);
  EXPECT_EQ(e, 20u);
  EXPECT_EQ(braid, 4u);
  EXPECT_EQ(cycles, 6u);
  rwg_staircase_graph* b = nullptr;
  ASSERT_EQ(rwg_staircase_graph_build(5, &b), RWG_OK);
  ASSERT_EQ(rwg_staircase_graph_counts(b, &v, &e), RWG_OK);
  EXPECT_EQ(v, 15u);
  EXPECT_EQ(e, 20u);
  int iso = 0;
  ASSERT_EQ(rwg_graphs_isomorphic(g, b, &iso), RWG_OK);
  EXPECT_EQ(iso, 1);
  ASSERT_EQ(rwg_word_graph_dot(g, &text), RWG_OK);
  EXPECT_EQ(take(text).rfind("graph", 0), 0u);
  ASSERT_EQ(rwg_staircase_graph_dot(b, &text), RWG_OK);
  EXPECT_NE(take(text).find("--"), std::string::npos);
  rwg_word_graph_destroy(g);
  rwg_staircase_graph_destroy(b);
  rwg_permutation_destroy(z);
}

TEST(CApi, ChromaticPolynomial) {
  rwg_staircase_graph* b = nullptr;
  ASSERT_EQ(rwg_staircase_graph_build(3, &b), RWG_OK);
  rwg_polynomial* chi = nullptr;
  ASSERT_EQ(rwg_chromatic_polynomial(b, 24, &chi), RWG_OK);
  int degree = 0;
  EXPECT_EQ(rwg_polynomial_degree(chi, &degree), RWG_OK);
  EXPECT_EQ(degree, 6);
  char* s = nullptr;
  ASSERT_EQ(rwg_polynomial_evaluate(chi, 2, &s), RWG_OK);
  EXPECT_EQ(take(s), "2");
  ASSERT_EQ(rwg_polynomial_coefficient(chi, 5, &s), RWG_OK);
  EXPECT_EQ(take(s), "-6");
  ASSERT_EQ(rwg_polynomial_string(chi, &s), RWG_OK);
  EXPECT_EQ(take(s).rfind("k^6 - 6k^5", 0), 0u);
  rwg_polynomial_destroy(chi);
  rwg_staircase_graph_destroy(b);

  ASSERT_EQ(rwg_staircase_graph_build(5, &b), RWG_OK);
  EXPECT_EQ(rwg_chromatic_polynomial(b, 2, &chi), RWG_ERR_RESOURCE);
  rwg_staircase_graph_destroy(b);
}

TEST(CApi, Identities) {
  const int lhs[] = {1, 3, 5}, rhs[] = {9};
  int primitive = 0;
  ASSERT_EQ(rwg_identity_is_primitive(lhs, 3, rhs, 1, 9, &primitive), RWG_OK);
  EXPECT_EQ(primitive, 1);
  const int bad_rhs[] = {8};
  EXPECT_EQ(rwg_identity_is_primitive(lhs, 3, bad_rhs, 1, 9, &primitive),
            RWG_ERR_INVALID_IDENTITY);
}

TEST(CApi, Ideals) {
  rwg_ideal* ideal = nullptr;
  ASSERT_EQ(rwg_cartoon_ideal(3, &ideal), RWG_OK);
  int dim = 0;
  char* degree = nullptr;
  ASSERT_EQ(rwg_ideal_dimension_degree(ideal, &dim, &degree), RWG_OK);
  EXPECT_EQ(dim, 2);
  EXPECT_EQ(take(degree), "4");
  char* json = nullptr;
  ASSERT_EQ(rwg_ideal_groebner(ideal, &json), RWG_OK);
  EXPECT_NE(take(json).find("basis"), std::string::npos);
  rwg_ideal_destroy(ideal);
  ASSERT_EQ(rwg_colour_separation_ideal(5, &ideal), RWG_OK);
  ASSERT_EQ(rwg_ideal_dimension_degree(ideal, &dim, &degree), RWG_OK);
  EXPECT_EQ(dim, 5);
  EXPECT_EQ(take(degree), "6");
  ASSERT_EQ(rwg_ideal_json(ideal, &json), RWG_OK);
  EXPECT_NE(take(json).find("x9"), std::string::npos);
  rwg_ideal_destroy(ideal);
  EXPECT_EQ(rwg_colour_separation_ideal(4, &ideal), RWG_ERR_DOMAIN);
}

TEST(CApi, RunWithConfig) {
  rwg_config* cfg = nullptr;
  ASSERT_EQ(rwg_config_create(&cfg), RWG_OK);
  ASSERT_EQ(rwg_config_parse_range(cfg, "3..5"), RWG_OK);
  ASSERT_EQ(rwg_config_set_format(cfg, RWG_FORMAT_JSON), RWG_OK);
  rwg_output* out = nullptr;
  ASSERT_EQ(rwg_run("verify-all", cfg, &out), RWG_OK);
  EXPECT_EQ(rwg_output_exit_code(out), 0);
  EXPECT_EQ(std::string(rwg_output_text(out)).front(), '{');
  rwg_output_destroy(out);

  ASSERT_EQ(rwg_config_set_strict(cfg, 1), RWG_OK);
  ASSERT_EQ(rwg_run("verify-all", cfg, &out), RWG_OK);
  EXPECT_EQ(rwg_output_exit_code(out), 1);
  rwg_output_destroy(out);

  EXPECT_EQ(rwg_config_parse_range(cfg, "x"), RWG_ERR_MALFORMED);
  EXPECT_EQ(rwg_config_merge_json(cfg, R"({"unknown": 1})"), RWG_ERR_MALFORMED);
  ASSERT_EQ(rwg_config_merge_json(cfg, R"({"range": "5", "strict": false})"), RWG_OK);
  ASSERT_EQ(rwg_config_set_cap(cfg, RWG_CAP_CYCLE_RANK, 4), RWG_OK);
  ASSERT_EQ(rwg_run("chroma", cfg, &out), RWG_OK);
  EXPECT_EQ(rwg_output_exit_code(out), 3);
  rwg_output_destroy(out);
  EXPECT_EQ(rwg_config_load_file(cfg, "/nonexistent/config.json"), RWG_ERR_MALFORMED);
  EXPECT_EQ(rwg_run("words", nullptr, &out), RWG_ERR_NULL_ARGUMENT);
  rwg_config_destroy(cfg);
}
