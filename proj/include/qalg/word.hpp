// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qalg/coeff.hpp"

namespace qalg {

/// A word in the free semigroup: a sequence of generator indices into an
/// Alphabet. Position in the alphabet is the rank; a later position is a
/// greater generator. The empty word has degree 0.
using Word = std::vector<uint8_t>;

inline size_t degree(const Word& w) { return w.size(); }

/// Degree-lexicographic comparison: shorter words first, equal lengths
/// compared left-to-right by generator rank. Returns -1, 0 or 1.
inline int deglex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_compare(a, b) < 0; }
};

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Word concat(const Word& a, const Word& b, const Word& c) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

inline constexpr size_t npos = static_cast<size_t>(-1);

/// First position at which `sub` occurs in `w` as a factor, or npos.
inline size_t find_factor(const Word& w, const Word& sub) {
  if (sub.size() > w.size()) return npos;
  for (size_t i = 0; i + sub.size() <= w.size(); ++i) {
    bool hit = true;
    for (size_t j = 0; j < sub.size(); ++j)
      if (w[i + j] != sub[j]) { hit = false; break; }
    if (hit) return i;
  }
  return npos;
}

inline bool is_factor(const Word& sub, const Word& w) {
  if (sub.size() > w.size()) return false;
  for (size_t i = 0; i + sub.size() <= w.size(); ++i) {
    bool hit = true;
    for (size_t j = 0; j < sub.size(); ++j)
      if (w[i + j] != sub[j]) { hit = false; break; }
    if (hit) return true;
  }
  return false;
}

/// Ordered list of generator labels; position = rank, later = greater.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw ValidationError("alphabet must be nonempty");
    for (size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw ValidationError("empty generator label");
      if (!index_.emplace(names_[i], i).second)
        throw ValidationError("duplicate generator label: " + names_[i]);
    }
    if (names_.size() > 255) throw ValidationError("alphabet too large");
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<size_t> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void check_word(const Word& w) const {
    for (uint8_t c : w)
      if (c >= names_.size()) throw ValidationError("word index out of alphabet range");
  }

  Word parse_word(const std::vector<std::string>& labels) const {
    Word w;
    w.reserve(labels.size());
    for (const auto& s : labels) {
      auto i = index_of(s);
      if (!i) throw ValidationError("unknown generator label: " + s);
      w.push_back(static_cast<uint8_t>(*i));
    }
    return w;
  }

  std::string format_word(const Word& w) const {
    check_word(w);
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += '.';
      s += names_[w[i]];
    }
    return s;
  }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, size_t> index_;
};

enum class Ordering { Less, Equal, Greater };

/// compare_deglex with alphabet validation, as a user-facing entry point.
inline Ordering compare_deglex(const Word& a, const Word& b, const Alphabet& alpha) {
  alpha.check_word(a);
  alpha.check_word(b);
  int c = deglex_compare(a, b);
  return c < 0 ? Ordering::Less : (c == 0 ? Ordering::Equal : Ordering::Greater);
}

/// All words of fixed degree over g letters, in deglex (= lex within a
/// degree) order.
inline std::vector<Word> words_of_degree(size_t g, size_t d) {
  std::vector<Word> out;
  Word w(d, 0);
  while (true) {
    out.push_back(w);
    size_t i = d;
    while (i > 0 && w[i - 1] == g - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace qalg
