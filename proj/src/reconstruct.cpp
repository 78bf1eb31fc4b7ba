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

#include "reconstruct.hpp"

#include <algorithm>
#include <unordered_set>

namespace sgb {

namespace {

// Picks (a, b, g) with a s(g) b = sigma and a lm(g) b minimal, searching the
// recovered elements first and the input generators last. The minimality is
// a cost heuristic; any admissible choice is correct.
struct Multiplier {
  Word a;
  Word b;
  const LabelledPoly* g = nullptr;
};

std::optional<Multiplier> choose_multiplier(const ModMonomial& sigma,
                                            std::span<const LabelledPoly> recovered,
                                            std::span<const LabelledPoly> generators) {
  std::optional<Multiplier> best;
  std::optional<Word> best_lm;
  auto consider = [&](const LabelledPoly& g) {
    if (g.poly.is_zero() || g.label.is_zero()) return;
    auto ab = mm_divides(g.label.signature(), sigma);
    if (!ab) return;
    Word lm = ab->first * g.poly.leading_monomial() * ab->second;
    if (!best || deglex_compare(lm, *best_lm) == std::strong_ordering::less) {
      best = Multiplier{ab->first, ab->second, &g};
      best_lm = std::move(lm);
    }
  };
  for (const LabelledPoly& g : recovered) consider(g);
  for (const LabelledPoly& g : generators) consider(g);
  return best;
}

std::vector<LabelledPoly> generator_elements(std::span<const Poly> generators) {
  std::vector<LabelledPoly> out;
  out.reserve(generators.size());
  for (std::uint32_t i = 0; i < generators.size(); ++i)
    out.push_back({generators[i], ModElement::generator(i)});
  return out;
}

} // namespace

std::vector<LabelledPoly> sig2labelled(std::span<const SigPoly> sig_basis,
                                       std::span<const Poly> generators) {
  std::vector<std::size_t> order(sig_basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return top_compare(sig_basis[x].sig, sig_basis[y].sig) == std::strong_ordering::less;
  });

  const std::vector<LabelledPoly> gens = generator_elements(generators);
  std::vector<LabelledPoly> recovered; // ascending signature order
  recovered.reserve(sig_basis.size());
  for (std::size_t idx : order) {
    const SigPoly& target = sig_basis[idx];
    auto mult = choose_multiplier(target.sig, recovered, gens);
    if (!mult)
      throw inconsistent_input("sig2labelled: no multiplier realizes the signature "
                               "(corrupted or non-minimal input basis)");
    LabelledPoly moved{sandwich(mult->a, mult->g->poly, mult->b),
                       mod_sandwich(mult->a, mult->g->label, mult->b)};
    LabelledPoly reduced = regular_sreduce(std::move(moved), recovered, /*top_only=*/true);
    if (reduced.poly.is_zero() ||
        reduced.poly.leading_monomial() != target.poly.leading_monomial())
      throw inconsistent_input("sig2labelled: reconstruction does not match the input "
                               "leading monomial (corrupted or non-minimal input basis)");
    Rational c = 1 / reduced.poly.leading_coeff();
    reduced.poly = reduced.poly.scaled(c);
    reduced.label = reduced.label.scaled(c);
    recovered.push_back(std::move(reduced));
  }
  // Hand the elements back in the caller's order.
  std::vector<LabelledPoly> out(sig_basis.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = std::move(recovered[k]);
  return out;
}

std::vector<ModElement> syzygy_recovery(std::span<const SigPoly> sig_basis,
                                        std::span<const ModMonomial> syzygy_sigs,
                                        std::span<const Poly> generators) {
  const std::vector<LabelledPoly> labelled = sig2labelled(sig_basis, generators);
  const std::vector<LabelledPoly> gens = generator_elements(generators);
  std::vector<ModElement> out;
  out.reserve(syzygy_sigs.size());
  for (const ModMonomial& sigma : syzygy_sigs) {
    auto mult = choose_multiplier(sigma, labelled, gens);
    if (!mult)
      throw inconsistent_input("syzygy_recovery: no multiplier realizes the signature");
    LabelledPoly moved{sandwich(mult->a, mult->g->poly, mult->b),
                       mod_sandwich(mult->a, mult->g->label, mult->b)};
    LabelledPoly reduced = regular_sreduce(std::move(moved), std::span<const LabelledPoly>(labelled));
    if (!reduced.poly.is_zero())
      throw inconsistent_input("syzygy_recovery: a recorded syzygy signature does not "
                               "reduce to zero (inconsistent inputs)");
    out.push_back(std::move(reduced.label));
  }
  return out;
}

std::optional<Certificate> certify(const Poly& target, std::span<const LabelledPoly> basis,
                                   std::span<const Poly> generators) {
  std::vector<Poly> polys;
  polys.reserve(basis.size());
  for (const LabelledPoly& g : basis) polys.push_back(g.poly);

  ModElement combination;
  Poly remainder = reduce_full(
      target, polys, [&](std::size_t g, const Rational& c, const Word& a, const Word& b) {
        combination = combination + mod_sandwich(a, basis[g].label, b).scaled(c);
      });
  if (!remainder.is_zero()) return std::nullopt;

  SGB_CHECK(evaluate(combination, generators) == target,
            "certify: accumulated combination fails re-evaluation");
  Certificate cert;
  cert.target = target;
  cert.rows.reserve(combination.term_count());
  for (const auto& [m, c] : combination.terms()) cert.rows.push_back({c, m.left, m.index, m.right});
  return cert;
}

std::size_t monomial_degree(const ModMonomial& m, std::span<const Poly> generators) {
  if (m.index >= generators.size())
    throw domain_error("monomial_degree: generator index out of range");
  return m.left.length() + generators[m.index].leading_monomial().length() + m.right.length();
}

std::vector<ModElement> enumerate_syzygy_basis(const SyzygyBasisDescription& desc,
                                               std::span<const Poly> generators,
                                               unsigned n_vars, int degree_bound) {
  std::vector<ModElement> out;
  std::unordered_set<ModMonomial, ModMonomialHash> seen;
  auto emit = [&](ModElement e) {
    if (e.is_zero()) return;
    if (monomial_degree(e.signature(), generators) > static_cast<std::size_t>(degree_bound))
      return;
    if (!seen.insert(e.signature()).second) return;
    out.push_back(std::move(e));
  };

  for (const ModElement& e : desc.explicit_part) emit(e);

  // Trivial syzygies g m h - g m h', middle words by ascending length then
  // lexicographic order. The signature degree grows with |m|, so the word
  // enumeration is cut off as soon as even the cheapest pair is out of range.
  std::size_t min_base = SIZE_MAX;
  for (const LabelledPoly& g : desc.trivial_part) {
    std::size_t base = monomial_degree(g.label.signature(), generators) +
                       g.poly.leading_monomial().length();
    min_base = std::min(min_base, base);
  }
  if (desc.trivial_part.empty() || min_base > static_cast<std::size_t>(degree_bound)) return out;
  const std::size_t max_m = static_cast<std::size_t>(degree_bound) - min_base;

  std::vector<Word> level{Word()};
  for (std::size_t len = 0; len <= max_m; ++len) {
    for (const Word& m : level)
      for (const LabelledPoly& g : desc.trivial_part)
        for (const LabelledPoly& h : desc.trivial_part) emit(trivial_syzygy(g, h, m));
    std::vector<Word> next;
    next.reserve(level.size() * n_vars);
    for (const Word& m : level)
      for (unsigned v = 0; v < n_vars; ++v) next.push_back(m * Word{static_cast<Letter>(v)});
    level = std::move(next);
  }
  return out;
}

} // namespace sgb
