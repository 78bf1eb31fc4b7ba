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

#include "module.hpp"

namespace sgb {

std::strong_ordering top_compare(const ModMonomial& m1, const ModMonomial& m2) {
  auto c = deglex_compare_concat(m1.left, m1.right, m2.left, m2.right);
  if (c != std::strong_ordering::equal) return c;
  c = deglex_compare(m1.left, m2.left);
  if (c != std::strong_ordering::equal) return c;
  return m1.index <=> m2.index;
}

std::strong_ordering pot_compare(const ModMonomial& m1, const ModMonomial& m2) {
  if (m1.index != m2.index) return m1.index <=> m2.index;
  return top_compare(m1, m2);
}

std::optional<std::pair<Word, Word>> mm_divides(const ModMonomial& mu, const ModMonomial& sigma) {
  if (mu.index != sigma.index) return std::nullopt;
  if (!mu.left.is_suffix_of(sigma.left)) return std::nullopt;
  if (!mu.right.is_prefix_of(sigma.right)) return std::nullopt;
  return std::make_pair(sigma.left.prefix(sigma.left.length() - mu.left.length()),
                        sigma.right.suffix(sigma.right.length() - mu.right.length()));
}

ModElement mod_sandwich(const Word& a, const ModElement& alpha, const Word& b) {
  return ModElement(ModElement::Terms::from_sorted([&] {
    std::vector<ModElement::Term> ts;
    ts.reserve(alpha.term_count());
    for (const auto& [m, c] : alpha.terms()) ts.emplace_back(shift(a, m, b), c);
    return ts;
  }()));
}

ModElement mod_mul_poly(const ModElement& alpha, const Poly& f) {
  ModElement acc;
  for (const auto& [w, c] : f.terms()) acc = acc + mod_sandwich(Word(), alpha, w).scaled(c);
  return acc;
}

ModElement poly_mul_mod(const Poly& f, const ModElement& alpha) {
  ModElement acc;
  for (const auto& [w, c] : f.terms()) acc = acc + mod_sandwich(w, alpha, Word()).scaled(c);
  return acc;
}

Poly evaluate(const ModElement& alpha, std::span<const Poly> F) {
  Poly acc;
  for (const auto& [m, c] : alpha.terms()) {
    if (m.index >= F.size())
      throw domain_error("evaluate: generator index out of range");
    acc = acc + sandwich(m.left, F[m.index], m.right).scaled(c);
  }
  return acc;
}

} // namespace sgb
