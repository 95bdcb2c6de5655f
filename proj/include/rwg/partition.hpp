#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/series.hpp"

namespace rwg {

// Cell of a Ferrers diagram in diagonal coordinates: `row` indexes the parts
// (row 0 holds the largest part) and `col` the position inside the row.
// The cell lies on diagonal row + col.
struct FerrersCell {
  int row = 0;
  int col = 0;

  int diagonal() const { return row + col; }
  friend auto operator<=>(const FerrersCell&, const FerrersCell&) = default;
};

class Partition {
 public:
  Partition() = default;
  // Throws MalformedError unless parts are weakly decreasing and positive.
  static Partition from_parts(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  bool contains(const FerrersCell& c) const;
  // Cells ordered by (row, col).
  std::vector<FerrersCell> cells() const;
  int hook_length(const FerrersCell& c) const;

  // Length ell if the partition is (ell, ell-1, ..., 1).
  std::optional<int> staircase_length() const;
  bool is_staircase() const { return staircase_length().has_value(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {}
  std::vector<int> parts_;
};

Partition staircase(int ell);
// ell with ell(ell+1)/2 == n, if any.
std::optional<std::uint64_t> is_triangular(std::uint64_t n);
Partition transpose(const Partition& p);
// Diagonal hook lengths of a staircase; all odd and distinct.
Partition distinct_odd_parts(const Partition& staircase_partition);

enum class CellColour { kBlack, kRed };
const char* to_string(CellColour c);

// Black on even diagonals (the corner cell included), red on odd ones.
std::map<FerrersCell, CellColour> checkerboard(const Partition& p);

struct ColourCounts {
  long long black = 0;
  long long red = 0;
};
ColourCounts colour_counts(const Partition& p);

// B/R grid drawn with the longest row at the bottom.
std::string checkerboard_ascii(const Partition& p);

// Coefficients 0..n of the expansion of z/(1-z)^3 against the triangular
// numbers r(r+1)/2. Index 0 is flagged degenerate (no staircase of length 0).
GfReport triangular_gf_check(int n);

nlohmann::json to_json(const Partition& p);

}  // namespace rwg
