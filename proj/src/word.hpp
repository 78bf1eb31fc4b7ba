// Copyright (c) 2026 the siggb developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sgb {

// A letter is an index into the problem's variable table. The index order is
// also the variable precedence: letter 0 is the smallest variable.
using Letter = unsigned char;

// An element of the free monoid over the variable alphabet. The empty word is
// the identity. Words are immutable values; all operations return new words.
class Word {
public:
  using Letters = std::basic_string<Letter>;

  Word() = default;
  explicit Word(Letters letters) : ls_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : ls_(letters.begin(), letters.end()) {}

  // v repeated k times
  static Word power(Letter v, std::size_t k) { return Word(Letters(k, v)); }

  std::size_t length() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }
  Letter operator[](std::size_t i) const { return ls_[i]; }
  const Letters& letters() const { return ls_; }

  Word prefix(std::size_t k) const { return Word(ls_.substr(0, k)); }
  Word suffix(std::size_t k) const { return Word(ls_.substr(ls_.size() - k)); }
  Word subword(std::size_t pos, std::size_t len) const { return Word(ls_.substr(pos, len)); }

  bool is_prefix_of(const Word& w) const {
    return ls_.size() <= w.ls_.size() && w.ls_.compare(0, ls_.size(), ls_) == 0;
  }
  bool is_suffix_of(const Word& w) const {
    return ls_.size() <= w.ls_.size() &&
           w.ls_.compare(w.ls_.size() - ls_.size(), ls_.size(), ls_) == 0;
  }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.ls_ + b.ls_); }

  bool operator==(const Word&) const = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : ls_) {
      h ^= l;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  Letters ls_;
};

// Degree-lexicographic order: words are first compared by length, ties are
// broken letter by letter from the left using the variable precedence.
std::strong_ordering deglex_compare(const Word& a, const Word& b);

// deglex on the concatenations a1*b1 vs a2*b2, without materializing them.
std::strong_ordering deglex_compare_concat(const Word& a1, const Word& b1,
                                           const Word& a2, const Word& b2);

// Start positions p of u in w, ascending; u must be nonempty.
std::vector<std::size_t> occurrence_positions(const Word& w, const Word& u);

struct FactorSplit {
  Word left;
  Word right;
};

// All splits (a, b) with w = a*u*b, ordered by increasing |a|.
// Empty when u is not a factor of w.
std::vector<FactorSplit> factor_occurrences(const Word& w, const Word& u);

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

} // namespace sgb
