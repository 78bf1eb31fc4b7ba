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

#include "baseline.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

namespace sgb {

namespace {

using Clock = std::chrono::steady_clock;

struct PairCmp {
  // Fair selection: ascending degree of the common multiple, then insertion
  // order. priority_queue pops the largest, so the comparison is inverted.
  bool operator()(const BaselinePair& x, const BaselinePair& y) const {
    if (x.word.length() != y.word.length()) return x.word.length() > y.word.length();
    return x.seq > y.seq;
  }
};

Poly spoly_plain(const BaselinePair& p, std::span<const Poly> basis) {
  const Poly& f = basis[p.first];
  const Poly& g = basis[p.second];
  Rational cf = 1 / f.leading_coeff();
  Rational cg = 1 / g.leading_coeff();
  if (p.kind == Ambiguity::Kind::overlap)
    return sandwich(Word(), f, p.right).scaled(cf) - sandwich(p.left, g, Word()).scaled(cg);
  return f.scaled(cf) - sandwich(p.left, g, p.right).scaled(cg);
}

} // namespace

bool chain_criterion(const BaselinePair& pair, std::span<const Poly> basis) {
  if (pair.kind != Ambiguity::Kind::overlap) return false;
  const Word& W = pair.word;
  const std::size_t lf = basis[pair.first].leading_monomial().length();
  const std::size_t lg = basis[pair.second].leading_monomial().length();
  for (std::size_t h = 0; h < basis.size(); ++h) {
    if (h == pair.first || h == pair.second) continue;
    const Word& lmh = basis[h].leading_monomial();
    if (lmh.length() >= W.length()) continue;
    for (std::size_t pos : occurrence_positions(W, lmh)) {
      const std::size_t end = pos + lmh.length();
      // lm(h) must overlap both outer leading monomials without touching
      // either end of W, so that both induced ambiguities are strictly
      // smaller and are treated before this pair under fair selection.
      if (pos > 0 && end < W.length() && pos < lf && end > W.length() - lg) return true;
    }
  }
  return false;
}

BaselineResult buchberger(std::span<const Poly> generators, const BaselineOptions& opts) {
  if (generators.empty()) throw domain_error("buchberger: need at least one generator");
  for (const Poly& f : generators)
    if (f.is_zero()) throw domain_error("buchberger: zero generator");
  if (opts.max_degree && *opts.max_degree < 1)
    throw domain_error("buchberger: degree bound must be at least 1");

  BaselineResult res;
  const auto t0 = Clock::now();
  std::priority_queue<BaselinePair, std::vector<BaselinePair>, PairCmp> queue;
  std::uint64_t seq = 0;
  bool truncated_any = false;

  auto add_pairs = [&](std::size_t new_idx) {
    const Word& lmp = res.basis[new_idx].leading_monomial();
    for (std::size_t j = 0; j < res.basis.size(); ++j) {
      const bool self = (j == new_idx);
      for (const Ambiguity& a : find_ambiguities(lmp, res.basis[j].leading_monomial(), self)) {
        const Poly& first = a.first == 0 ? res.basis[new_idx] : res.basis[j];
        const Poly& second = a.second == 0 ? res.basis[new_idx] : res.basis[j];
        if (opts.max_degree && spoly_degree_bound(a, first, second) >
                                   static_cast<std::size_t>(*opts.max_degree)) {
          truncated_any = true;
          continue;
        }
        queue.push({a.kind, a.word, a.left, a.right, a.first == 0 ? new_idx : j,
                    a.second == 0 ? new_idx : j, seq++});
        ++res.stats.pairs_generated;
      }
    }
  };

  // Keeps every stored tail in normal form with respect to the current
  // basis; leading monomials are never touched, so queued pairs stay valid.
  auto tail_reduce_existing = [&](const Word& new_lm) {
    for (std::size_t i = 0; i + 1 < res.basis.size(); ++i) {
      Poly& h = res.basis[i];
      bool hit = false;
      for (std::size_t t = 1; t < h.term_count() && !hit; ++t) {
        if (new_lm.length() > h.terms()[t].first.length()) continue;
        hit = !occurrence_positions(h.terms()[t].first, new_lm).empty();
      }
      if (!hit) continue;
      Poly tail = h - h.leading_term();
      h = h.leading_term() + reduce_full(std::move(tail), res.basis);
    }
  };

  auto insert = [&](Poly p) {
    p = p.monic();
    res.basis.push_back(std::move(p));
    tail_reduce_existing(res.basis.back().leading_monomial());
    add_pairs(res.basis.size() - 1);
  };

  for (const Poly& f : generators) {
    Poly r = reduce_full(f, res.basis);
    if (!r.is_zero()) insert(std::move(r));
  }

  bool interrupted = false;
  auto timed_out = [&] {
    if (opts.timeout_seconds <= 0) return false;
    return std::chrono::duration<double>(Clock::now() - t0).count() > opts.timeout_seconds;
  };

  while (!queue.empty()) {
    if (timed_out() || (opts.pairs_budget > 0 &&
                        res.stats.spolys + res.stats.chain_hits >= opts.pairs_budget)) {
      res.status.outcome = RunOutcome::up_to_signature;
      interrupted = true;
      break;
    }
    BaselinePair pair = queue.top();
    queue.pop();
    if (opts.chain_criterion && chain_criterion(pair, res.basis)) {
      ++res.stats.chain_hits;
      continue;
    }
    Poly s = spoly_plain(pair, res.basis);
    ++res.stats.spolys;
    Poly r = reduce_full(std::move(s), res.basis);
    if (r.is_zero()) {
      ++res.stats.zero_reductions;
      continue;
    }
    insert(std::move(r));
  }

  if (!interrupted && truncated_any) {
    res.status.outcome = RunOutcome::truncated;
    res.status.degree_bound = opts.max_degree;
  }
  res.stats.basis_size = static_cast<long long>(res.basis.size());
  res.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return res;
}

std::vector<Poly> reduced_gb(std::vector<Poly> basis) {
  for (Poly& g : basis) g = g.monic();
  std::erase_if(basis, [](const Poly& g) { return g.is_zero(); });
  std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) {
    return deglex_compare(a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::less;
  });

  // Minimalize: divisors are deglex-smaller, so a single ascending sweep
  // finds every dominated leading monomial (duplicates keep the first).
  std::vector<Poly> kept;
  for (Poly& g : basis) {
    bool dominated = false;
    for (const Poly& h : kept) {
      if (h.leading_monomial() == g.leading_monomial() ||
          !occurrence_positions(g.leading_monomial(), h.leading_monomial()).empty()) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(g));
  }

  // Tail-reduce to a fixpoint. Leads are mutually irreducible, so elements
  // never vanish and the order is stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      Poly r = reduce_full(kept[i], others).monic();
      if (r != kept[i]) {
        kept[i] = std::move(r);
        changed = true;
      }
    }
  }
  return kept;
}

} // namespace sgb
