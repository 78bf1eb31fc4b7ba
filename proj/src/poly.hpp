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

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "terms.hpp"
#include "word.hpp"

namespace sgb {

struct DeglexOrder {
  static std::strong_ordering cmp(const Word& a, const Word& b) { return deglex_compare(a, b); }
};

// Noncommutative polynomial over the rationals: a finite map from words to
// nonzero coefficients, stored descending under deglex. The zero polynomial
// is the empty map. Immutable value type.
class Poly {
public:
  using Terms = TermVec<Word, DeglexOrder>;
  using Term = Terms::Term;

  Poly() = default;
  explicit Poly(Terms t) : t_(std::move(t)) {}
  static Poly from_terms(std::vector<Term> ts) { return Poly(Terms::from_terms(std::move(ts))); }
  static Poly monomial(Rational c, Word w) {
    if (sgb::is_zero(c)) return Poly();
    return Poly(Terms::from_sorted({{std::move(w), std::move(c)}}));
  }
  static Poly constant(const Rational& c) { return monomial(c, Word()); }

  bool is_zero() const { return t_.is_zero(); }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_.terms(); }

  // Leading data under deglex. lm(0) is undefined; lc(0) = 0 and lt(0) = 0.
  const Word& leading_monomial() const {
    if (is_zero()) throw domain_error("leading monomial of the zero polynomial is undefined");
    return t_.leading_monomial();
  }
  Rational leading_coeff() const { return is_zero() ? Rational(0) : t_.leading_coeff(); }
  Poly leading_term() const {
    if (is_zero()) return Poly();
    return monomial(t_.leading_coeff(), t_.leading_monomial());
  }

  // Coefficient of w; 0 if absent.
  Rational coeff(const Word& w) const {
    const Rational* c = t_.coeff(w);
    return c ? *c : Rational(0);
  }
  std::vector<Word> support() const {
    std::vector<Word> ws;
    ws.reserve(t_.size());
    for (const auto& [w, c] : t_.terms()) ws.push_back(w);
    return ws;
  }

  std::size_t degree() const { return is_zero() ? 0 : leading_monomial().length(); }

  friend Poly operator+(const Poly& f, const Poly& g) { return Poly(f.t_ + g.t_); }
  friend Poly operator-(const Poly& f, const Poly& g) { return Poly(f.t_ - g.t_); }
  Poly operator-() const { return scaled(-1); }
  Poly scaled(const Rational& c) const { return Poly(t_.scaled(c)); }
  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coeff());
  }

  bool operator==(const Poly&) const = default;

private:
  Terms t_;
};

// a * f * b
Poly sandwich(const Word& a, const Poly& f, const Word& b);

Poly operator*(const Poly& f, const Poly& g);

// One reduction step of f by g: picks the deglex-largest word of supp(f)
// containing lm(g) as a factor, and among its factorizations the one with the
// shortest left part; returns f - coeff(f, a lm(g) b)/lc(g) * a g b, or
// nullopt when no word of supp(f) contains lm(g). g must be nonzero.
std::optional<Poly> reduce_step(const Poly& f, const Poly& g);

// Called once per performed reduction step with the reducer index and the
// step data (f -> f - c * a * basis[g] * b).
using ReduceTrace =
    std::function<void(std::size_t g, const Rational& c, const Word& a, const Word& b)>;

// Normal form of f modulo basis: repeatedly rewrites the largest reducible
// word (reducers tried in basis order, factorizations by shortest left part)
// until no word of the support is divisible by any leading monomial.
Poly reduce_full(Poly f, std::span<const Poly> basis, const ReduceTrace& trace = nullptr);

} // namespace sgb
