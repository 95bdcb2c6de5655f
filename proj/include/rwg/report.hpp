#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/toric.hpp"

namespace rwg {

enum class Format { kJson, kMarkdown, kDot, kText };
Format parse_format(const std::string& name);  // MalformedError
const char* to_string(Format f);

// One row of a report. Claim rows compare a printed value with a computed
// one; invariant rows are self-checks whose failure means a bug.
struct Check {
  std::string name;
  std::string claimed;
  std::string computed;
  Verdict verdict = Verdict::kSkipped;
  bool invariant = false;
  std::string note;
};

Check claim(std::string name, const std::string& claimed, const std::string& computed,
            std::string note = {});
Check invariant(std::string name, bool holds, std::string note = {});
Check skipped(std::string name, std::string reason, bool invariant = false);
Check from_finding(const Finding& f);

struct Section {
  std::string title;
  std::vector<std::string> notes;
  std::vector<Check> checks;
  std::vector<std::string> body;  // free text, shown verbatim
  nlohmann::json data = nlohmann::json::object();
};

struct Report {
  std::string command;
  std::vector<std::string> header;
  std::vector<Section> sections;
  std::vector<std::string> dot;  // one Graphviz document per graph
  bool resource_limited = false;

  std::size_t check_count() const;
  std::size_t mismatches() const;          // claim rows only
  std::size_t invariant_failures() const;
  std::size_t skipped() const;
};

// kDot concatenates the DOT documents; MalformedError when there are none.
std::string render(const Report& report, Format format);

}  // namespace rwg
