#include "rwg/partition.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>

#include "rwg/error.hpp"

namespace rwg {

Partition Partition::from_parts(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw MalformedError("partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw MalformedError("partition: parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

long long Partition::size() const {
  long long s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(const FerrersCell& c) const {
  return c.row >= 0 && c.col >= 0 && c.row < length() && c.col < parts_[c.row];
}

std::vector<FerrersCell> Partition::cells() const {
  std::vector<FerrersCell> out;
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < parts_[r]; ++c) out.push_back({r, c});
  return out;
}

int Partition::hook_length(const FerrersCell& c) const {
  if (!contains(c)) throw DomainError("hook_length: cell outside the diagram");
  const int arm = parts_[c.row] - c.col - 1;
  int leg = 0;
  for (int r = c.row + 1; r < length() && parts_[r] > c.col; ++r) ++leg;
  return arm + leg + 1;
}

std::optional<int> Partition::staircase_length() const {
  if (parts_.empty()) return std::nullopt;
  const int ell = length();
  for (int i = 0; i < ell; ++i)
    if (parts_[i] != ell - i) return std::nullopt;
  return ell;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

Partition staircase(int ell) {
  if (ell < 1) throw DomainError("staircase: length must be >= 1");
  std::vector<int> parts;
  for (int p = ell; p >= 1; --p) parts.push_back(p);
  return Partition::from_parts(std::move(parts));
}

std::optional<std::uint64_t> is_triangular(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  // 8n + 1 must be an odd square (2l+1)^2.
  const boost::multiprecision::cpp_int disc =
      boost::multiprecision::cpp_int(n) * 8 + 1;
  const boost::multiprecision::cpp_int root = boost::multiprecision::sqrt(disc);
  if (root * root != disc) return std::nullopt;
  return static_cast<std::uint64_t>((root - 1) / 2);
}

Partition transpose(const Partition& p) {
  std::vector<int> parts;
  const int width = p.length() == 0 ? 0 : p[0];
  for (int i = 1; i <= width; ++i) {
    int count = 0;
    for (int part : p.parts())
      if (part >= i) ++count;
    parts.push_back(count);
  }
  return Partition::from_parts(std::move(parts));
}

Partition distinct_odd_parts(const Partition& staircase_partition) {
  if (!staircase_partition.is_staircase())
    throw DomainError("distinct_odd_parts: " + staircase_partition.to_string() +
                      " is not a staircase partition");
  std::vector<int> hooks;
  for (int i = 0; staircase_partition.contains({i, i}); ++i)
    hooks.push_back(staircase_partition.hook_length({i, i}));
  return Partition::from_parts(std::move(hooks));
}

const char* to_string(CellColour c) {
  return c == CellColour::kBlack ? "black" : "red";
}

std::map<FerrersCell, CellColour> checkerboard(const Partition& p) {
  std::map<FerrersCell, CellColour> out;
  for (const auto& c : p.cells())
    out.emplace(c, c.diagonal() % 2 == 0 ? CellColour::kBlack : CellColour::kRed);
  return out;
}

ColourCounts colour_counts(const Partition& p) {
  ColourCounts counts;
  for (const auto& [cell, colour] : checkerboard(p))
    (colour == CellColour::kBlack ? counts.black : counts.red) += 1;
  return counts;
}

std::string checkerboard_ascii(const Partition& p) {
  std::string out;
  for (int r = p.length() - 1; r >= 0; --r) {
    for (int c = 0; c < p[r]; ++c) out.push_back((r + c) % 2 == 0 ? 'B' : 'R');
    out.push_back('\n');
  }
  return out;
}

GfReport triangular_gf_check(int n) {
  if (n < 1) throw DomainError("triangular_gf_check: n must be >= 1");
  const std::size_t order = static_cast<std::size_t>(n);
  const auto one_minus_z = TruncatedSeries::from_polynomial(order, IntPolynomial{1, -1});
  const auto inv = one_minus_z.inverse();
  const auto z = TruncatedSeries::from_polynomial(order, IntPolynomial::variable());
  const auto series = z * inv * inv * inv;

  GfReport report;
  report.title = "z/(1-z)^3 vs triangular numbers";
  report.index_names = {"r"};
  for (int r = 0; r <= n; ++r) {
    GfRow row;
    row.index = {r};
    row.closed_form = series[r];
    row.reference = BigInt(r) * (r + 1) / 2;
    row.degenerate = r == 0;
    report.rows.push_back(std::move(row));
  }
  report.notes.push_back("index 0 is degenerate: no staircase partition has length 0");
  return report;
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

}  // namespace rwg
