#include "rwg/perm.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "rwg/error.hpp"

namespace rwg {

Permutation Permutation::from_word(std::span<const int> word, int max_degree) {
  if (word.empty()) throw MalformedError("permutation: empty word");
  const int n = static_cast<int>(word.size());
  if (n > max_degree) {
    throw DomainError("permutation: degree " + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_degree));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw MalformedError("permutation: value " + std::to_string(v) +
                           " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw MalformedError("permutation: duplicate value " + std::to_string(v));
    }
    seen[v] = true;
  }
  return Permutation(std::vector<int>(word.begin(), word.end()));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation: degree must be >= 1");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inversions;
  return inversions;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i)
    if (word_[i] > word_[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= degree()) {
    throw DomainError("simple transposition s_" + std::to_string(i) +
                      " out of range for degree " + std::to_string(degree()));
  }
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  const bool wide = degree() > 9;
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (wide && i > 0) os << ' ';
    os << word_[i];
  }
  return os.str();
}

std::string ReducedWord::to_string() const {
  std::string s;
  for (int a : letters) {
    if (a >= 0 && a <= 9) {
      s.push_back(static_cast<char>('0' + a));
    } else {
      s += "(" + std::to_string(a) + ")";
    }
  }
  return s;
}

Permutation z_permutation(int r) {
  if (r < 4) throw DomainError("z_permutation: r must be >= 4");
  std::vector<int> w;
  for (int v = 2; v <= r - 3; ++v) w.push_back(v);
  w.insert(w.end(), {r, r - 2, r - 1, 1});
  return Permutation::from_word(w, std::max(r, Limits{}.max_degree));
}

bool verify_z_length(int r) { return z_permutation(r).length() == r + 1; }

Permutation apply_word(std::span<const int> letters, int n) {
  Permutation w = Permutation::identity(n);
  for (int a : letters) w = w.times_simple(a);
  return w;
}

namespace {

struct WordHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

class Enumerator {
 public:
  explicit Enumerator(std::size_t cap) : cap_(cap) {}

  const std::vector<ReducedWord>& words(const Permutation& w) {
    std::vector<int> key(w.word().begin(), w.word().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<ReducedWord> out;
    if (w.is_identity()) {
      out.push_back(ReducedWord{});
    } else {
      for (int i : w.descents()) {
        for (const ReducedWord& u : words(w.times_simple(i))) {
          ReducedWord extended = u;
          extended.letters.push_back(i);
          out.push_back(std::move(extended));
        }
        if (out.size() > cap_) {
          throw ResourceError("reduced words: more than " +
                              std::to_string(cap_) + " words");
        }
      }
      // Distinct last letters already make the branches disjoint.
      std::sort(out.begin(), out.end());
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::size_t cap_;
  std::unordered_map<std::vector<int>, std::vector<ReducedWord>, WordHash> memo_;
};

}  // namespace

std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w,
                                                 const Limits& limits) {
  if (w.degree() > limits.max_degree) {
    throw DomainError("reduced words: degree " + std::to_string(w.degree()) +
                      " exceeds cap " + std::to_string(limits.max_degree));
  }
  Enumerator e(limits.max_vertices);
  return e.words(w);
}

std::map<int, std::size_t> last_letter_split(
    const std::vector<ReducedWord>& words) {
  std::map<int, std::size_t> split;
  for (const auto& w : words)
    if (!w.letters.empty()) ++split[w.letters.back()];
  return split;
}

nlohmann::json words_to_json(const std::vector<ReducedWord>& words) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : words) arr.push_back(w.to_string());
  return arr;
}

}  // namespace rwg
