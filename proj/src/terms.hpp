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

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace sgb {

// Sparse linear combination of monomials with nonzero rational coefficients,
// kept strictly descending under Order::cmp. Shared backbone of NCPolynomial
// and module elements: both are just term maps under different orders.
template <class M, class Order>
class TermVec {
public:
  using Term = std::pair<M, Rational>;

  TermVec() = default;

  // Sorts, merges equal monomials and drops zero coefficients.
  static TermVec from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) {
      return Order::cmp(x.first, y.first) == std::strong_ordering::greater;
    });
    TermVec out;
    for (auto& t : ts) {
      if (!out.ts_.empty() && out.ts_.back().first == t.first)
        out.ts_.back().second += t.second;
      else
        out.ts_.push_back(std::move(t));
      if (!out.ts_.empty() && sgb::is_zero(out.ts_.back().second)) out.ts_.pop_back();
    }
    return out;
  }

  // Terms must already be strictly descending with nonzero coefficients.
  static TermVec from_sorted(std::vector<Term> ts) {
    TermVec out;
    out.ts_ = std::move(ts);
    return out;
  }

  bool is_zero() const { return ts_.empty(); }
  std::size_t size() const { return ts_.size(); }
  const std::vector<Term>& terms() const { return ts_; }

  const M& leading_monomial() const { return ts_.front().first; }
  const Rational& leading_coeff() const { return ts_.front().second; }

  const Rational* coeff(const M& m) const {
    auto it = std::lower_bound(ts_.begin(), ts_.end(), m, [](const Term& t, const M& key) {
      return Order::cmp(t.first, key) == std::strong_ordering::greater;
    });
    if (it != ts_.end() && it->first == m) return &it->second;
    return nullptr;
  }

  friend TermVec operator+(const TermVec& f, const TermVec& g) {
    TermVec out;
    out.ts_.reserve(f.ts_.size() + g.ts_.size());
    auto i = f.ts_.begin();
    auto j = g.ts_.begin();
    while (i != f.ts_.end() && j != g.ts_.end()) {
      auto c = Order::cmp(i->first, j->first);
      if (c == std::strong_ordering::greater) {
        out.ts_.push_back(*i++);
      } else if (c == std::strong_ordering::less) {
        out.ts_.push_back(*j++);
      } else {
        Rational s = i->second + j->second;
        if (!sgb::is_zero(s)) out.ts_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    out.ts_.insert(out.ts_.end(), i, f.ts_.end());
    out.ts_.insert(out.ts_.end(), j, g.ts_.end());
    return out;
  }

  friend TermVec operator-(const TermVec& f, const TermVec& g) { return f + g.scaled(-1); }

  TermVec scaled(const Rational& c) const {
    TermVec out;
    if (sgb::is_zero(c)) return out;
    out.ts_.reserve(ts_.size());
    for (const auto& [m, k] : ts_) out.ts_.emplace_back(m, k * c);
    return out;
  }

  // Applies m -> f(m) to every monomial; f must be strictly monotone for the
  // order (true for one-sided and two-sided monomial shifts), so sortedness
  // and distinctness are preserved.
  template <class F>
  TermVec mapped(F&& f) const {
    TermVec out;
    out.ts_.reserve(ts_.size());
    for (const auto& [m, c] : ts_) out.ts_.emplace_back(f(m), c);
    return out;
  }

  bool operator==(const TermVec&) const = default;

private:
  std::vector<Term> ts_;
};

} // namespace sgb
