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

#include "labelled.hpp"

namespace sgb {

std::vector<Ambiguity> find_ambiguities(const Word& u, const Word& v, bool same_object) {
  std::vector<Ambiguity> out;

  auto overlaps = [&out](const Word& lm1, const Word& lm2, int i1, int i2) {
    // lm1 = AB, lm2 = BC with A, B, C nonempty; increasing |A| = decreasing |B|
    if (lm1.empty() || lm2.empty()) return;
    std::size_t kmax = std::min(lm1.length(), lm2.length()) - 1;
    for (std::size_t k = kmax; k >= 1; --k) {
      if (lm1.suffix(k) == lm2.prefix(k)) {
        Word A = lm1.prefix(lm1.length() - k);
        Word C = lm2.suffix(lm2.length() - k);
        out.push_back({Ambiguity::Kind::overlap, lm1 * C, std::move(A), std::move(C), i1, i2});
      }
    }
  };
  auto inclusions = [&out](const Word& big, const Word& small, int i1, int i2) {
    // big = A small C; A or C may be empty
    if (small.length() > big.length()) return;
    for (std::size_t pos : occurrence_positions(big, small)) {
      Word A = big.prefix(pos);
      Word C = big.suffix(big.length() - pos - small.length());
      out.push_back({Ambiguity::Kind::inclusion, big, std::move(A), std::move(C), i1, i2});
    }
  };

  overlaps(u, v, 0, 1);
  if (!same_object) {
    overlaps(v, u, 1, 0);
    inclusions(u, v, 0, 1);
    inclusions(v, u, 1, 0);
  }
  return out;
}

std::pair<ModMonomial, ModMonomial> shifted_signatures(const Ambiguity& a,
                                                       const ModMonomial& sig_first,
                                                       const ModMonomial& sig_second) {
  if (a.kind == Ambiguity::Kind::overlap)
    return {shift(Word(), sig_first, a.right), shift(a.left, sig_second, Word())};
  return {sig_first, shift(a.left, sig_second, a.right)};
}

bool ambiguity_is_regular(const Ambiguity& a, const ModMonomial& sig_first,
                          const ModMonomial& sig_second) {
  auto [s1, s2] = shifted_signatures(a, sig_first, sig_second);
  return s1 != s2;
}

ModMonomial spoly_signature(const Ambiguity& a, const ModMonomial& sig_first,
                            const ModMonomial& sig_second) {
  auto [s1, s2] = shifted_signatures(a, sig_first, sig_second);
  auto c = top_compare(s1, s2);
  SGB_CHECK(c != std::strong_ordering::equal, "spoly_signature: singular ambiguity");
  return c == std::strong_ordering::greater ? s1 : s2;
}

LabelledPoly spoly(const Ambiguity& a, const LabelledPoly& p, const LabelledPoly& q) {
  const LabelledPoly& f = a.first == 0 ? p : q;
  const LabelledPoly& g = a.second == 0 ? p : q;
  Rational cf = 1 / f.poly.leading_coeff();
  Rational cg = 1 / g.poly.leading_coeff();
  if (a.kind == Ambiguity::Kind::overlap)
    return {sandwich(Word(), f.poly, a.right).scaled(cf) -
                sandwich(a.left, g.poly, Word()).scaled(cg),
            mod_sandwich(Word(), f.label, a.right).scaled(cf) -
                mod_sandwich(a.left, g.label, Word()).scaled(cg)};
  return {f.poly.scaled(cf) - sandwich(a.left, g.poly, a.right).scaled(cg),
          f.label.scaled(cf) - mod_sandwich(a.left, g.label, a.right).scaled(cg)};
}

SigPoly spoly(const Ambiguity& a, const SigPoly& p, const SigPoly& q) {
  const SigPoly& f = a.first == 0 ? p : q;
  const SigPoly& g = a.second == 0 ? p : q;
  Rational cf = 1 / f.poly.leading_coeff();
  Rational cg = 1 / g.poly.leading_coeff();
  Poly poly = a.kind == Ambiguity::Kind::overlap
                  ? sandwich(Word(), f.poly, a.right).scaled(cf) -
                        sandwich(a.left, g.poly, Word()).scaled(cg)
                  : f.poly.scaled(cf) - sandwich(a.left, g.poly, a.right).scaled(cg);
  return {std::move(poly), spoly_signature(a, f.sig, g.sig)};
}

std::size_t spoly_degree_bound(const Ambiguity& a, const Poly& first, const Poly& second) {
  std::size_t d = 0;
  const bool overlap = a.kind == Ambiguity::Kind::overlap;
  if (first.term_count() > 1) {
    std::size_t tail = first.terms()[1].first.length();
    d = std::max(d, overlap ? tail + a.right.length() : tail);
  }
  if (second.term_count() > 1) {
    std::size_t tail = second.terms()[1].first.length();
    d = std::max(d, overlap ? a.left.length() + tail
                            : a.left.length() + tail + a.right.length());
  }
  return d;
}

std::optional<LabelledPoly> sreduce_step(const LabelledPoly& f, const LabelledPoly& g,
                                         SReduceFlags* flags) {
  SGB_CHECK(!f.label.is_zero(), "sreduce_step: reducee must have a nonzero label");
  SGB_CHECK(!g.poly.is_zero(), "sreduce_step: reducer must be nonzero");
  const ModMonomial& sig = f.label.signature();
  const Word& lm = g.poly.leading_monomial();
  for (std::size_t i = 0; i < f.poly.term_count(); ++i) {
    const Word& w = f.poly.terms()[i].first;
    if (lm.length() > w.length()) continue;
    for (std::size_t pos : occurrence_positions(w, lm)) {
      Word a = w.prefix(pos);
      Word b = w.suffix(w.length() - pos - lm.length());
      ModMonomial shifted = shift(a, g.label.signature(), b);
      auto c = top_compare(shifted, sig);
      if (c == std::strong_ordering::greater) continue;
      Rational k = f.poly.coeff(w) / g.poly.leading_coeff();
      if (flags) {
        flags->top = (i == 0);
        flags->regular = (c == std::strong_ordering::less);
      }
      return LabelledPoly{f.poly - sandwich(a, g.poly, b).scaled(k),
                          f.label - mod_sandwich(a, g.label, b).scaled(k)};
    }
  }
  return std::nullopt;
}

// Shared scan for both pipelines. Words are visited from the largest down;
// after a step at word w everything above w is untouched, so the scan
// resumes at w's index. on_step receives the step data so the labelled
// variant can update its module witness.
template <class Elem, class OnStep>
static Poly sreduce_scan(Poly f, const ModMonomial& sig, std::span<const Elem> basis,
                         bool top_only, OnStep&& on_step) {
  std::size_t i = 0;
  while (i < f.term_count()) {
    if (top_only && i > 0) break;
    const Word w = f.terms()[i].first;
    bool stepped = false;
    for (std::size_t g = 0; g < basis.size() && !stepped; ++g) {
      const Word& lm = basis[g].poly.leading_monomial();
      if (lm.length() > w.length()) continue;
      for (std::size_t pos : occurrence_positions(w, lm)) {
        Word a = w.prefix(pos);
        Word b = w.suffix(w.length() - pos - lm.length());
        ModMonomial shifted = shift(a, sig_of(basis[g]), b);
        if (top_compare(shifted, sig) != std::strong_ordering::less) continue;
        Rational k = f.coeff(w) / basis[g].poly.leading_coeff();
        f = f - sandwich(a, basis[g].poly, b).scaled(k);
        on_step(g, k, a, b);
        stepped = true;
        break;
      }
    }
    if (!stepped) ++i;
  }
  return f;
}

LabelledPoly regular_sreduce(LabelledPoly f, std::span<const LabelledPoly> basis, bool top_only) {
  if (f.label.is_zero()) return f;
  const ModMonomial sig = f.label.signature();
  ModElement label = std::move(f.label);
  Poly poly = sreduce_scan(std::move(f.poly), sig, basis, top_only,
                           [&](std::size_t g, const Rational& k, const Word& a, const Word& b) {
                             label = label - mod_sandwich(a, basis[g].label, b).scaled(k);
                           });
  return {std::move(poly), std::move(label)};
}

SigPoly regular_sreduce(SigPoly f, std::span<const SigPoly> basis, bool top_only) {
  Poly poly = sreduce_scan(std::move(f.poly), f.sig, basis, top_only,
                           [](std::size_t, const Rational&, const Word&, const Word&) {});
  return {std::move(poly), std::move(f.sig)};
}

namespace {

template <class Elem>
bool top_reducible_impl(const Poly& p, const ModMonomial& sig, std::span<const Elem> basis,
                        bool singular_only) {
  if (p.is_zero()) return false;
  const Word& lm = p.leading_monomial();
  for (const Elem& g : basis) {
    const Word& glm = g.poly.leading_monomial();
    if (glm.length() > lm.length()) continue;
    for (std::size_t pos : occurrence_positions(lm, glm)) {
      Word a = lm.prefix(pos);
      Word b = lm.suffix(lm.length() - pos - glm.length());
      auto c = top_compare(shift(a, sig_of(g), b), sig);
      if (singular_only ? c == std::strong_ordering::equal : c != std::strong_ordering::greater)
        return true;
    }
  }
  return false;
}

} // namespace

bool is_singular_top_reducible(const Poly& p, const ModMonomial& sig,
                               std::span<const SigPoly> basis) {
  return top_reducible_impl(p, sig, basis, true);
}
bool is_singular_top_reducible(const Poly& p, const ModMonomial& sig,
                               std::span<const LabelledPoly> basis) {
  return top_reducible_impl(p, sig, basis, true);
}
bool is_top_sreducible(const Poly& p, const ModMonomial& sig, std::span<const SigPoly> basis) {
  return top_reducible_impl(p, sig, basis, false);
}
bool is_top_sreducible(const Poly& p, const ModMonomial& sig, std::span<const LabelledPoly> basis) {
  return top_reducible_impl(p, sig, basis, false);
}

ModElement trivial_syzygy(const LabelledPoly& g, const LabelledPoly& h, const Word& m) {
  return mod_mul_poly(g.label, sandwich(m, h.poly, Word())) -
         poly_mul_mod(sandwich(Word(), g.poly, m), h.label);
}

} // namespace sgb
