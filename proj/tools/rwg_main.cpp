// Command-line front end. Talks to the library only through rwg.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "rwg/rwg.h"

namespace {

struct Options {
  std::string range;
  std::string format;
  std::string out;
  std::string config;
  std::string which;
  std::string kind;
  int degree_bound = 0;
  bool strict = false;
  long long cap_vertices = -1;
  long long cap_cyclerank = -1;
};

// Applies flags over the config file; returns false after printing an error.
bool configure(rwg_config* cfg, const Options& o, CLI::App* sub) {
  auto fail = [](const char* what) {
    std::cerr << "rwg: " << what << ": " << rwg_last_error() << "\n";
    return false;
  };
  if (!o.config.empty() && rwg_config_load_file(cfg, o.config.c_str()) != RWG_OK)
    return fail("config");
  if (!o.range.empty() && rwg_config_parse_range(cfg, o.range.c_str()) != RWG_OK)
    return fail("range");
  if (!o.format.empty()) {
    static const std::map<std::string, rwg_format> formats = {
        {"text", RWG_FORMAT_TEXT}, {"json", RWG_FORMAT_JSON},
        {"markdown", RWG_FORMAT_MARKDOWN}, {"dot", RWG_FORMAT_DOT}};
    rwg_config_set_format(cfg, formats.at(o.format));
  }
  if (sub->count("--degree-bound") &&
      rwg_config_set_degree_bound(cfg, o.degree_bound) != RWG_OK)
    return fail("degree bound");
  if (o.strict) rwg_config_set_strict(cfg, 1);
  if (o.cap_vertices >= 0) {
    rwg_config_set_cap(cfg, RWG_CAP_VERTICES, static_cast<uint64_t>(o.cap_vertices));
    rwg_config_set_cap(cfg, RWG_CAP_ISO_VERTICES, static_cast<uint64_t>(o.cap_vertices));
  }
  if (o.cap_cyclerank >= 0)
    rwg_config_set_cap(cfg, RWG_CAP_CYCLE_RANK, static_cast<uint64_t>(o.cap_cyclerank));
  if (!o.which.empty() && rwg_config_set_which(cfg, o.which.c_str()) != RWG_OK)
    return fail("which");
  if (!o.kind.empty() && rwg_config_set_kind(cfg, o.kind.c_str()) != RWG_OK)
    return fail("kind");
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced-word graphs, staircase colourings and binomial ideal audits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rwg_version()));

  Options o;
  const std::map<std::string, std::string> commands = {
      {"words", "reduced words of z_permutation(r)"},
      {"graph", "word-graph statistics"},
      {"blambda", "layered staircase graphs"},
      {"chroma", "chromatic polynomials"},
      {"separation", "2-colour separations and balance"},
      {"identities", "colour-separation partition identities"},
      {"conjectures", "binomial ideal audits"},
      {"verify-all", "consolidated verification run"},
      {"export", "export a graph or cartoon"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "words")
      sub->add_option("--r", o.range, "r range, A..B or A");
    else
      sub->add_option("--ell", o.range, "ell range, A..B or A");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "markdown", "dot", "text"}));
    sub->add_option("--out", o.out, "write output to PATH");
    sub->add_option("--config", o.config, "JSON config file; flags override it");
    sub->add_option("--degree-bound", o.degree_bound, "Graver / probe degree bound");
    sub->add_flag("--strict", o.strict, "fail on any claim mismatch");
    sub->add_option("--cap-vertices", o.cap_vertices, "vertex cap")->check(CLI::NonNegativeNumber);
    sub->add_option("--cap-cyclerank", o.cap_cyclerank, "deletion-contraction cycle-rank cap")
        ->check(CLI::NonNegativeNumber);
    if (name == "conjectures")
      sub->add_option("--which", o.which, "c1, c2 or both")
          ->check(CLI::IsMember({"c1", "c2", "both"}));
    if (name == "export")
      sub->add_option("--kind", o.kind, "word-graph, blambda or cartoon");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  rwg_config* cfg = nullptr;
  if (rwg_config_create(&cfg) != RWG_OK) return 1;
  if (!configure(cfg, o, sub)) {
    rwg_config_destroy(cfg);
    return 2;
  }
  rwg_output* out = nullptr;
  if (rwg_run(sub->get_name().c_str(), cfg, &out) != RWG_OK) {
    std::cerr << "rwg: " << rwg_last_error() << "\n";
    rwg_config_destroy(cfg);
    return 1;
  }
  const int code = rwg_output_exit_code(out);
  const std::string text = rwg_output_text(out);
  std::cerr << rwg_output_error(out);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << text;
    if (!file) {
      std::cerr << "rwg: cannot write " << o.out << "\n";
      rwg_output_destroy(out);
      rwg_config_destroy(cfg);
      return 2;
    }
  }
  rwg_output_destroy(out);
  rwg_config_destroy(cfg);
  return code;
}
