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

#include "poly.hpp"

namespace sgb {

Poly sandwich(const Word& a, const Poly& f, const Word& b) {
  // Multiplication compatibility of the order makes the shift monotone, and
  // the free monoid is cancellative, so the term list stays canonical.
  std::vector<Poly::Term> ts;
  ts.reserve(f.term_count());
  for (const auto& [w, c] : f.terms()) ts.emplace_back(a * w * b, c);
  return Poly(Poly::Terms::from_sorted(std::move(ts)));
}

Poly operator*(const Poly& f, const Poly& g) {
  Poly acc;
  for (const auto& [w, c] : f.terms()) acc = acc + sandwich(w, g, Word()).scaled(c);
  return acc;
}

namespace {

struct StepSite {
  std::size_t term;     // index into f's term list
  std::size_t reducer;  // index into the basis
  std::size_t pos;      // occurrence position of lm(reducer) in the word
};

// First reducible site at or below term index `from`, scanning words from the
// largest down, reducers in basis order, occurrences left to right.
std::optional<StepSite> find_site(const Poly& f, std::span<const Poly> basis, std::size_t from) {
  for (std::size_t i = from; i < f.term_count(); ++i) {
    const Word& w = f.terms()[i].first;
    for (std::size_t g = 0; g < basis.size(); ++g) {
      const Word& lm = basis[g].leading_monomial();
      if (lm.length() > w.length()) continue;
      std::size_t pos = w.letters().find(lm.letters());
      if (pos != Word::Letters::npos) return StepSite{i, g, pos};
    }
  }
  return std::nullopt;
}

Poly apply_step(const Poly& f, const Poly& g, const Word& w, std::size_t pos,
                Rational* coeff_out, Word* a_out, Word* b_out) {
  Word a = w.prefix(pos);
  Word b = w.suffix(w.length() - pos - g.leading_monomial().length());
  Rational c = f.coeff(w) / g.leading_coeff();
  Poly out = f - sandwich(a, g, b).scaled(c);
  if (coeff_out) *coeff_out = std::move(c);
  if (a_out) *a_out = std::move(a);
  if (b_out) *b_out = std::move(b);
  return out;
}

} // namespace

std::optional<Poly> reduce_step(const Poly& f, const Poly& g) {
  SGB_CHECK(!g.is_zero(), "reduce_step: reducer must be nonzero");
  const Poly* basis = &g;
  auto site = find_site(f, {basis, 1}, 0);
  if (!site) return std::nullopt;
  const Word w = f.terms()[site->term].first;
  return apply_step(f, g, w, site->pos, nullptr, nullptr, nullptr);
}

Poly reduce_full(Poly f, std::span<const Poly> basis, const ReduceTrace& trace) {
  // After a step at word w, all larger words are untouched and were already
  // found irreducible, so the scan resumes at w's old index.
  std::size_t from = 0;
  for (;;) {
    auto site = find_site(f, basis, from);
    if (!site) return f;
    from = site->term;
    const Word w = f.terms()[site->term].first;
    Rational c;
    Word a, b;
    f = apply_step(f, basis[site->reducer], w, site->pos, &c, &a, &b);
    if (trace) trace(site->reducer, c, a, b);
  }
}

} // namespace sgb
