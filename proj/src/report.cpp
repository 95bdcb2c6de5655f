#include "rwg/report.hpp"

#include <sstream>

#include "rwg/error.hpp"

namespace rwg {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "markdown" || name == "md") return Format::kMarkdown;
  if (name == "dot") return Format::kDot;
  if (name == "text") return Format::kText;
  throw MalformedError("unknown format '" + name + "'");
}

const char* to_string(Format f) {
  switch (f) {
    case Format::kJson: return "json";
    case Format::kMarkdown: return "markdown";
    case Format::kDot: return "dot";
    case Format::kText: return "text";
  }
  return "?";
}

Check claim(std::string name, const std::string& claimed, const std::string& computed,
            std::string note) {
  return {std::move(name), claimed, computed,
          claimed == computed ? Verdict::kMatch : Verdict::kMismatch, false, std::move(note)};
}

Check invariant(std::string name, bool holds, std::string note) {
  return {std::move(name), "true", holds ? "true" : "false",
          holds ? Verdict::kMatch : Verdict::kMismatch, true, std::move(note)};
}

Check skipped(std::string name, std::string reason, bool is_invariant) {
  return {std::move(name), "", "", Verdict::kSkipped, is_invariant, std::move(reason)};
}

Check from_finding(const Finding& f) {
  return {f.item, f.claimed, f.computed, f.verdict, false, f.note};
}

namespace {
template <class Pred>
std::size_t count_checks(const Report& r, Pred pred) {
  std::size_t n = 0;
  for (const auto& s : r.sections)
    for (const auto& c : s.checks) n += pred(c);
  return n;
}
}  // namespace

std::size_t Report::check_count() const {
  return count_checks(*this, [](const Check&) { return true; });
}
std::size_t Report::mismatches() const {
  return count_checks(*this, [](const Check& c) {
    return !c.invariant && c.verdict == Verdict::kMismatch;
  });
}
std::size_t Report::invariant_failures() const {
  return count_checks(*this, [](const Check& c) {
    return c.invariant && c.verdict == Verdict::kMismatch;
  });
}
std::size_t Report::skipped() const {
  return count_checks(*this, [](const Check& c) { return c.verdict == Verdict::kSkipped; });
}

namespace {

std::string summary_line(const Report& r) {
  std::ostringstream out;
  out << r.check_count() << " checks, " << r.mismatches() << " claim mismatches, "
      << r.invariant_failures() << " invariant failures, " << r.skipped() << " skipped";
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::json sections = nlohmann::json::array();
  for (const auto& s : r.sections) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : s.checks) {
      nlohmann::json j = {{"name", c.name},
                          {"kind", c.invariant ? "invariant" : "claim"},
                          {"verdict", to_string(c.verdict)}};
      if (c.verdict != Verdict::kSkipped) {
        j["claimed"] = c.claimed;
        j["computed"] = c.computed;
      }
      if (!c.note.empty()) j["note"] = c.note;
      checks.push_back(std::move(j));
    }
    sections.push_back(
        {{"title", s.title}, {"notes", s.notes}, {"checks", checks}, {"data", s.data}});
  }
  nlohmann::json j = {{"command", r.command},
                      {"header", r.header},
                      {"sections", sections},
                      {"summary",
                       {{"checks", r.check_count()},
                        {"claim_mismatches", r.mismatches()},
                        {"invariant_failures", r.invariant_failures()},
                        {"skipped", r.skipped()},
                        {"resource_limited", r.resource_limited}}}};
  return j.dump(2) + "\n";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string render_markdown(const Report& r) {
  std::ostringstream out;
  out << "# rwg " << r.command << "\n\n";
  for (const auto& h : r.header) out << "> " << h << "\n";
  if (!r.header.empty()) out << "\n";
  for (const auto& s : r.sections) {
    out << "## " << s.title << "\n\n";
    for (const auto& n : s.notes) out << n << "\n\n";
    if (!s.checks.empty()) {
      out << "| check | kind | claimed | computed | verdict | note |\n";
      out << "|---|---|---|---|---|---|\n";
      for (const auto& c : s.checks)
        out << "| " << md_cell(c.name) << " | " << (c.invariant ? "invariant" : "claim") << " | "
            << md_cell(c.claimed) << " | " << md_cell(c.computed) << " | " << to_string(c.verdict)
            << " | " << md_cell(c.note) << " |\n";
      out << "\n";
    }
    if (!s.body.empty()) {
      out << "```\n";
      for (const auto& line : s.body) out << line << "\n";
      out << "```\n\n";
    }
  }
  out << "**Summary:** " << summary_line(r) << "\n";
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "rwg " << r.command << "\n";
  for (const auto& h : r.header) out << "  " << h << "\n";
  for (const auto& s : r.sections) {
    out << "\n== " << s.title << " ==\n";
    for (const auto& n : s.notes) out << "  " << n << "\n";
    for (const auto& c : s.checks) {
      out << "  [" << to_string(c.verdict) << "] " << c.name;
      if (c.verdict != Verdict::kSkipped) {
        if (c.invariant)
          out << (c.verdict == Verdict::kMatch ? " holds" : " FAILS");
        else
          out << ": claimed " << c.claimed << ", computed " << c.computed;
      }
      if (!c.note.empty()) out << " (" << c.note << ")";
      out << "\n";
    }
    for (const auto& line : s.body) out << "    " << line << "\n";
  }
  out << "\nsummary: " << summary_line(r) << "\n";
  return out.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::kJson: return render_json(report);
    case Format::kMarkdown: return render_markdown(report);
    case Format::kText: return render_text(report);
    case Format::kDot: {
      if (report.dot.empty())
        throw MalformedError("command '" + report.command + "' has no DOT output");
      std::string out;
      for (const auto& d : report.dot) out += d;
      return out;
    }
  }
  throw InternalError("render: unknown format");
}

}  // namespace rwg
