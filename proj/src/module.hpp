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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "word.hpp"

namespace sgb {

// A monomial a e_i b of the free bimodule of rank r: two words around a
// basis vector. Indices are 0-based internally and 1-based in all I/O.
struct ModMonomial {
  Word left;
  std::uint32_t index = 0;
  Word right;

  bool operator==(const ModMonomial&) const = default;

  std::size_t hash() const {
    std::size_t h = left.hash();
    h = h * 1099511628211ull ^ (index + 0x9e3779b9u);
    return h * 1099511628211ull ^ right.hash();
  }

  // |a| + |b|; the module-monomial degree used by fairness counting.
  std::size_t length() const { return left.length() + right.length(); }
};

struct ModMonomialHash {
  std::size_t operator()(const ModMonomial& m) const { return m.hash(); }
};

// Term-over-position order on module monomials: compare the concatenations
// a1 b1 vs a2 b2 under deglex, then the left words under deglex, then the
// indices. Fair, and compatible with deglex.
std::strong_ordering top_compare(const ModMonomial& m1, const ModMonomial& m2);

// Position-over-term order: index first, then TOP. Not fair for rank >= 2;
// shipped only so that the fairness check has something to reject.
std::strong_ordering pot_compare(const ModMonomial& m1, const ModMonomial& m2);

using ModOrderFn = std::strong_ordering (*)(const ModMonomial&, const ModMonomial&);

// a * mu * b
inline ModMonomial shift(const Word& a, const ModMonomial& mu, const Word& b) {
  return {a * mu.left, mu.index, mu.right * b};
}

// Witness (a, b) with a * mu * b == sigma, if any; unique when it exists.
std::optional<std::pair<Word, Word>> mm_divides(const ModMonomial& mu, const ModMonomial& sigma);

struct TopOrder {
  static std::strong_ordering cmp(const ModMonomial& a, const ModMonomial& b) {
    return top_compare(a, b);
  }
};

// Element of the free bimodule: finite map from module monomials to nonzero
// coefficients, descending under TOP. The zero element is the empty map.
class ModElement {
public:
  using Terms = TermVec<ModMonomial, TopOrder>;
  using Term = Terms::Term;

  ModElement() = default;
  explicit ModElement(Terms t) : t_(std::move(t)) {}
  static ModElement from_terms(std::vector<Term> ts) {
    return ModElement(Terms::from_terms(std::move(ts)));
  }
  static ModElement monomial(Rational c, ModMonomial m) {
    if (sgb::is_zero(c)) return ModElement();
    return ModElement(Terms::from_sorted({{std::move(m), std::move(c)}}));
  }
  static ModElement generator(std::uint32_t index) { return monomial(1, {Word(), index, Word()}); }

  bool is_zero() const { return t_.is_zero(); }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_.terms(); }

  // s(alpha): the largest module monomial; undefined for the zero element.
  const ModMonomial& signature() const {
    if (is_zero()) throw domain_error("signature of the zero module element is undefined");
    return t_.leading_monomial();
  }
  // sigc(0) = 0 and st(0) = 0 by convention.
  Rational signature_coeff() const { return is_zero() ? Rational(0) : t_.leading_coeff(); }
  std::pair<Rational, ModMonomial> signature_term() const {
    if (is_zero()) return {Rational(0), ModMonomial{}};
    return {t_.leading_coeff(), t_.leading_monomial()};
  }

  friend ModElement operator+(const ModElement& f, const ModElement& g) {
    return ModElement(f.t_ + g.t_);
  }
  friend ModElement operator-(const ModElement& f, const ModElement& g) {
    return ModElement(f.t_ - g.t_);
  }
  ModElement operator-() const { return scaled(-1); }
  ModElement scaled(const Rational& c) const { return ModElement(t_.scaled(c)); }

  bool operator==(const ModElement&) const = default;

private:
  Terms t_;
};

// a * alpha * b
ModElement mod_sandwich(const Word& a, const ModElement& alpha, const Word& b);

// alpha * f and f * alpha for a polynomial f (used by trivial syzygies).
ModElement mod_mul_poly(const ModElement& alpha, const Poly& f);
ModElement poly_mul_mod(const Poly& f, const ModElement& alpha);

// The bimodule homomorphism onto the ideal: sum of c * a * F[i] * b over the
// terms c * (a e_i b) of alpha. Indices must be within F.
Poly evaluate(const ModElement& alpha, std::span<const Poly> F);

} // namespace sgb
