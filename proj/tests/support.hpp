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

#include <random>
#include <string>
#include <vector>

#include "baseline.hpp"
#include "engine.hpp"
#include "problem.hpp"
#include "reconstruct.hpp"

namespace sgb::test {

inline const std::vector<std::string> XY = {"x", "y"};
inline const std::vector<std::string> XYZ = {"x", "y", "z"};

// Words from character strings: 'x' -> 0, 'y' -> 1, 'z' -> 2.
inline Word W(const std::string& s) {
  Word::Letters ls;
  for (char c : s) ls.push_back(static_cast<Letter>(c - 'x'));
  return Word(std::move(ls));
}

inline Poly P(const std::string& text, const std::vector<std::string>& vars = XY) {
  return parse_polynomial(text, vars);
}

inline ModMonomial MM(const std::string& left, std::uint32_t index1, const std::string& right) {
  return {W(left), index1 - 1, W(right)};
}

inline ModElement ME(std::vector<std::pair<ModMonomial, long>> terms) {
  std::vector<ModElement::Term> ts;
  for (auto& [m, c] : terms) ts.emplace_back(m, Rational(c));
  return ModElement::from_terms(std::move(ts));
}

// The running example used throughout the tests: f1 = xyx - xy, f2 = yxy,
// f3 = xyy - xxy over x < y, with f4 = xxy completing the Groebner basis.
struct WorkedExample {
  Poly f1 = P("x*y*x - x*y");
  Poly f2 = P("y*x*y");
  Poly f3 = P("x*y*y - x*x*y");
  Poly f4 = P("x*x*y");

  std::vector<Poly> three() const { return {f1, f2, f3}; }
  std::vector<Poly> four() const { return {f1, f2, f3, f4}; }

  // Module witness of f4 over (f1, f2, f3): evaluates to xxy, signature e_1*y.
  ModElement f4_label() const {
    return ME({{MM("", 1, "y"), -1}, {MM("x", 2, ""), 1}, {MM("", 3, ""), -1}});
  }

  LabelledPoly lab(const Poly& f, std::uint32_t index1) const {
    return {f, ModElement::generator(index1 - 1)};
  }
};

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  Word word(unsigned n_vars, std::size_t max_len, std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> var(0, static_cast<int>(n_vars) - 1);
    Word::Letters ls;
    std::size_t n = len(gen);
    for (std::size_t i = 0; i < n; ++i) ls.push_back(static_cast<Letter>(var(gen)));
    return Word(std::move(ls));
  }

  Rational coeff() {
    std::uniform_int_distribution<long> num(-9, 9);
    long n = num(gen);
    if (n == 0) n = 1;
    return rational(n);
  }

  Poly poly(unsigned n_vars, std::size_t max_terms, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    std::vector<Poly::Term> ts;
    std::size_t n = nterms(gen);
    for (std::size_t i = 0; i < n; ++i) ts.emplace_back(word(n_vars, max_len), coeff());
    return Poly::from_terms(std::move(ts));
  }

  ModMonomial mod_monomial(unsigned n_vars, unsigned rank, std::size_t max_len) {
    std::uniform_int_distribution<std::uint32_t> idx(0, rank - 1);
    return {word(n_vars, max_len), idx(gen), word(n_vars, max_len)};
  }

  ModElement mod_element(unsigned n_vars, unsigned rank, std::size_t max_terms,
                         std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    std::vector<ModElement::Term> ts;
    std::size_t n = nterms(gen);
    for (std::size_t i = 0; i < n; ++i)
      ts.emplace_back(mod_monomial(n_vars, rank, max_len), coeff());
    return ModElement::from_terms(std::move(ts));
  }
};

// Every element of lhs reduces to zero modulo rhs.
inline bool reduces_to_zero(const std::vector<Poly>& lhs, const std::vector<Poly>& rhs) {
  for (const Poly& f : lhs)
    if (!reduce_full(f, rhs).is_zero()) return false;
  return true;
}

inline std::vector<Poly> basis_polys(const SigBasisResult& r) {
  std::vector<Poly> out;
  for (const SigPoly& p : r.basis) out.push_back(p.poly);
  return out;
}

inline std::vector<Poly> basis_polys(const LabelledBasisResult& r) {
  std::vector<Poly> out;
  for (const LabelledPoly& p : r.basis) out.push_back(p.poly);
  return out;
}

} // namespace sgb::test
