#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwg/limits.hpp"

namespace rwg {

// A permutation of {1..n} in one-line notation: word()[i-1] = w(i).
class Permutation {
 public:
  // Throws MalformedError unless `word` is a rearrangement of 1..n, and
  // DomainError if n exceeds `max_degree`.
  static Permutation from_word(std::span<const int> word,
                               int max_degree = Limits{}.max_degree);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  int operator()(int i) const { return word_[i - 1]; }

  // Inversion count.
  int length() const;
  // Positions i (1-based) with w(i) > w(i+1).
  std::vector<int> descents() const;
  // w * s_i: swaps the entries in positions i and i+1.
  Permutation times_simple(int i) const;
  bool is_identity() const;

  // "35124"; entries above 9 are separated by spaces.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

// Sequence a_1..a_r of simple-transposition indices (1-based).
struct ReducedWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  // Digit string such as "42312"; letters >= 10 are written "(10)".
  std::string to_string() const;

  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

// The permutation 2,3,...,r-3, r, r-2, r-1, 1 of degree r >= 4.
Permutation z_permutation(int r);
bool verify_z_length(int r);

// s_{a_1} s_{a_2} ... s_{a_r} applied to the identity of degree n.
Permutation apply_word(std::span<const int> letters, int n);

// All reduced words of `w`, lexicographically ordered. Recurses on the last
// letter: R(w) is the union over descents i of R(w s_i) with i appended.
std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w,
                                                 const Limits& limits = {});

// Number of words ending in each letter.
std::map<int, std::size_t> last_letter_split(
    const std::vector<ReducedWord>& words);

nlohmann::json words_to_json(const std::vector<ReducedWord>& words);

}  // namespace rwg
