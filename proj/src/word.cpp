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

#include "word.hpp"

#include "error.hpp"

namespace sgb {

std::strong_ordering deglex_compare(const Word& a, const Word& b) {
  if (a.length() != b.length())
    return a.length() <=> b.length();
  int c = a.letters().compare(b.letters());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering deglex_compare_concat(const Word& a1, const Word& b1,
                                           const Word& a2, const Word& b2) {
  const std::size_t n1 = a1.length() + b1.length();
  const std::size_t n2 = a2.length() + b2.length();
  if (n1 != n2) return n1 <=> n2;
  for (std::size_t i = 0; i < n1; ++i) {
    Letter l1 = i < a1.length() ? a1[i] : b1[i - a1.length()];
    Letter l2 = i < a2.length() ? a2[i] : b2[i - a2.length()];
    if (l1 != l2) return l1 <=> l2;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> occurrence_positions(const Word& w, const Word& u) {
  std::vector<std::size_t> out;
  if (u.length() > w.length()) return out;
  if (u.empty()) {
    // w = a * 1 * b for every split
    for (std::size_t pos = 0; pos <= w.length(); ++pos) out.push_back(pos);
    return out;
  }
  std::size_t pos = 0;
  for (;;) {
    pos = w.letters().find(u.letters(), pos);
    if (pos == Word::Letters::npos) break;
    out.push_back(pos);
    ++pos;
  }
  return out;
}

std::vector<FactorSplit> factor_occurrences(const Word& w, const Word& u) {
  SGB_CHECK(!u.empty(), "factor_occurrences: factor must be nonempty");
  std::vector<FactorSplit> out;
  for (std::size_t pos : occurrence_positions(w, u))
    out.push_back({w.prefix(pos), w.suffix(w.length() - pos - u.length())});
  return out;
}

} // namespace sgb
