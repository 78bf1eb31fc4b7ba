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

#include "engine.hpp"

#include <chrono>
#include <queue>

namespace sgb {

bool syzygy_criterion(const ModMonomial& sig, std::span<const ModMonomial> syzygy_sigs) {
  for (const ModMonomial& eta : syzygy_sigs)
    if (mm_divides(eta, sig)) return true;
  return false;
}

bool f5_criterion(const ModMonomial& sig, std::span<const BasisHead> basis) {
  // Condition 1: sig = a s(g) m lm(g2) b with s(g) m lm(g2) > lm(g) m s(g2).
  // Writing s(g) = c e_i d, the match forces c to be a suffix of sig.left
  // (fixing a) and d a prefix of sig.right; each occurrence of lm(g2) in the
  // remainder of sig.right fixes m and b.
  for (const BasisHead& g : basis) {
    if (g.sig.index != sig.index) continue;
    if (!g.sig.left.is_suffix_of(sig.left)) continue;
    if (!g.sig.right.is_prefix_of(sig.right)) continue;
    Word rest = sig.right.suffix(sig.right.length() - g.sig.right.length());
    for (const BasisHead& g2 : basis) {
      if (g2.lm.length() > rest.length()) continue;
      for (std::size_t pos : occurrence_positions(rest, g2.lm)) {
        Word m = rest.prefix(pos);
        ModMonomial dominant = {g.sig.left, g.sig.index, g.sig.right * m * g2.lm};
        ModMonomial other = {g.lm * m * g2.sig.left, g2.sig.index, g2.sig.right};
        if (top_compare(dominant, other) == std::strong_ordering::greater) return true;
      }
    }
  }
  // Condition 2, mirrored on the left word: sig = a lm(g) m s(g2) b with
  // lm(g) m s(g2) > s(g) m lm(g2).
  for (const BasisHead& g2 : basis) {
    if (g2.sig.index != sig.index) continue;
    if (!g2.sig.left.is_suffix_of(sig.left)) continue;
    if (!g2.sig.right.is_prefix_of(sig.right)) continue;
    Word rest = sig.left.prefix(sig.left.length() - g2.sig.left.length());
    for (const BasisHead& g : basis) {
      if (g.lm.length() > rest.length()) continue;
      for (std::size_t pos : occurrence_positions(rest, g.lm)) {
        Word m = rest.subword(pos + g.lm.length(), rest.length() - pos - g.lm.length());
        ModMonomial dominant = {g.lm * m * g2.sig.left, g2.sig.index, g2.sig.right};
        ModMonomial other = {g.sig.left, g.sig.index, g.sig.right * m * g2.lm};
        if (top_compare(dominant, other) == std::strong_ordering::greater) return true;
      }
    }
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Elem>
std::vector<PendingPair> generate_pairs_impl(std::size_t new_idx, std::span<const Elem> basis,
                                             const EngineOptions& opts, bool* truncated,
                                             std::uint64_t* seq) {
  std::vector<PendingPair> out;
  const Elem& p = basis[new_idx];
  const Word& lmp = p.poly.leading_monomial();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const bool self = (j == new_idx);
    for (const Ambiguity& a : find_ambiguities(lmp, basis[j].poly.leading_monomial(), self)) {
      const Elem& first = a.first == 0 ? p : basis[j];
      const Elem& second = a.second == 0 ? p : basis[j];
      const ModMonomial& s1 = sig_of(first);
      const ModMonomial& s2 = sig_of(second);
      if (!ambiguity_is_regular(a, s1, s2)) continue;
      if (opts.max_degree && spoly_degree_bound(a, first.poly, second.poly) >
                                 static_cast<std::size_t>(*opts.max_degree)) {
        if (truncated) *truncated = true;
        continue;
      }
      out.push_back({spoly_signature(a, s1, s2), a.kind, a.left, a.right,
                     a.first == 0 ? new_idx : j, a.second == 0 ? new_idx : j, a.word.length(),
                     seq ? (*seq)++ : 0});
    }
  }
  return out;
}

template <class Elem>
Elem materialize(const PendingPair& pp, std::span<const Elem> basis) {
  const Word& lm_first = basis[pp.first].poly.leading_monomial();
  Word word = pp.kind == Ambiguity::Kind::overlap ? lm_first * pp.right : lm_first;
  Ambiguity a{pp.kind, std::move(word), pp.left, pp.right, 0, 1};
  return spoly(a, basis[pp.first], basis[pp.second]);
}

template <class Elem>
struct PipelineTraits;

template <>
struct PipelineTraits<SigPoly> {
  using Result = SigBasisResult;
  static SigPoly make_generator(const Poly& f, std::uint32_t i) {
    return {f, ModMonomial{Word(), i, Word()}};
  }
  static void record_zero(SigBasisResult& res, SigPoly&& nf, std::span<const Poly>) {
    res.syzygies.push_back(std::move(nf.sig));
  }
  static void make_monic(SigPoly& p) { p.poly = p.poly.monic(); }
  static void debug_check(const SigPoly&, std::span<const Poly>) {}
};

template <>
struct PipelineTraits<LabelledPoly> {
  using Result = LabelledBasisResult;
  static LabelledPoly make_generator(const Poly& f, std::uint32_t i) {
    return {f, ModElement::generator(i)};
  }
  static void record_zero(LabelledBasisResult& res, LabelledPoly&& nf,
                          std::span<const Poly> gens) {
#ifndef NDEBUG
    SGB_CHECK(evaluate(nf.label, gens).is_zero(), "labelledgb: recorded syzygy does not vanish");
#else
    (void)gens;
#endif
    res.syzygies.push_back(std::move(nf.label));
  }
  static void make_monic(LabelledPoly& p) {
    Rational c = 1 / p.poly.leading_coeff();
    p.poly = p.poly.scaled(c);
    p.label = p.label.scaled(c);
  }
  static void debug_check(const LabelledPoly& p, std::span<const Poly> gens) {
#ifndef NDEBUG
    SGB_CHECK(evaluate(p.label, gens) == p.poly, "labelledgb: label out of sync with polynomial");
#else
    (void)p;
    (void)gens;
#endif
  }
};

struct QueueEntry {
  ModMonomial sig;
  std::uint64_t seq = 0;
  int generator = -1; // >= 0: initial generator, pending S-pair otherwise
  PendingPair pair;
};

struct QueueCmp {
  // std::priority_queue keeps the largest element on top; invert so that the
  // minimal (signature, sequence) pair is popped first.
  bool operator()(const QueueEntry& x, const QueueEntry& y) const {
    auto c = top_compare(x.sig, y.sig);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return x.seq > y.seq;
  }
};

bool all_homogeneous(std::span<const Poly> gens) {
  for (const Poly& f : gens) {
    if (f.is_zero()) continue;
    std::size_t d = f.leading_monomial().length();
    for (const auto& [w, c] : f.terms())
      if (w.length() != d) return false;
  }
  return true;
}

template <class Elem>
typename PipelineTraits<Elem>::Result run_engine(std::span<const Poly> generators,
                                                 const EngineOptions& opts) {
  using Traits = PipelineTraits<Elem>;
  if (generators.empty()) throw domain_error("engine: need at least one generator");
  for (const Poly& f : generators)
    if (f.is_zero()) throw domain_error("engine: zero generator");
  if (opts.max_degree && *opts.max_degree < 1)
    throw domain_error("engine: degree bound must be at least 1");

  typename Traits::Result res;
  const auto t0 = Clock::now();
  const bool homogeneous = all_homogeneous(generators);

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCmp> queue;
  std::uint64_t seq = 0;
  for (std::uint32_t i = 0; i < generators.size(); ++i)
    queue.push({ModMonomial{Word(), i, Word()}, seq++, static_cast<int>(i), {}});

  std::vector<BasisHead> heads;
  SignatureIndex sig_index;
  std::vector<ModMonomial> h_sigs;
  bool truncated_any = false;
  bool interrupted = false;
  long long spair_pops = 0;
  std::optional<ModMonomial> last_sig;

  auto timed_out = [&] {
    if (opts.timeout_seconds <= 0) return false;
    return std::chrono::duration<double>(Clock::now() - t0).count() > opts.timeout_seconds;
  };

  while (!queue.empty()) {
    const QueueEntry& top = queue.top();
    if (timed_out() ||
        (opts.pairs_budget > 0 && top.generator < 0 && spair_pops >= opts.pairs_budget)) {
      res.status.outcome = RunOutcome::up_to_signature;
      res.status.frontier = top.sig;
      interrupted = true;
      break;
    }
    QueueEntry entry = top;
    queue.pop();

    // Popped signatures must be non-decreasing over the whole run.
    if (last_sig)
      SGB_CHECK(top_compare(entry.sig, *last_sig) != std::strong_ordering::less,
                "engine: ascending-signature invariant violated");
    last_sig = entry.sig;

    Elem p;
    if (entry.generator >= 0) {
      p = Traits::make_generator(generators[entry.generator],
                                 static_cast<std::uint32_t>(entry.generator));
    } else {
      ++spair_pops;
      if (opts.syzygy_criterion && syzygy_criterion(entry.sig, h_sigs)) {
        ++res.stats.syzygy_hits;
        continue;
      }
      if (opts.f5_criterion && f5_criterion(entry.sig, heads)) {
        ++res.stats.f5_hits;
        continue;
      }
      if (opts.singular_criterion && singular_criterion(entry.sig, sig_index)) {
        ++res.stats.singular_hits;
        continue;
      }
      p = materialize(entry.pair, std::span<const Elem>(res.basis));
      ++res.stats.spolys;
    }

    Elem nf = regular_sreduce(std::move(p), std::span<const Elem>(res.basis), opts.top_only);
    if (nf.poly.is_zero()) {
      if (entry.generator < 0) ++res.stats.zero_reductions;
      h_sigs.push_back(entry.sig);
      Traits::record_zero(res, std::move(nf), generators);
      continue;
    }
    if (is_singular_top_reducible(nf.poly, sig_of(nf), std::span<const Elem>(res.basis)))
      continue;

    Traits::make_monic(nf);
    Traits::debug_check(nf, generators);
    heads.push_back({nf.poly.leading_monomial(), sig_of(nf)});
    sig_index.insert(sig_of(nf));
    res.basis.push_back(std::move(nf));
    auto pairs = generate_pairs_impl(res.basis.size() - 1, std::span<const Elem>(res.basis),
                                     opts, &truncated_any, &seq);
    res.stats.pairs_generated += static_cast<long long>(pairs.size());
    for (PendingPair& pp : pairs) {
      ModMonomial s = pp.sig;
      std::uint64_t q = pp.seq;
      queue.push({std::move(s), q, -1, std::move(pp)});
    }
  }

  if (!interrupted && truncated_any) {
    res.status.outcome = RunOutcome::truncated;
    res.status.degree_bound = opts.max_degree;
    res.status.heuristic_truncation = !homogeneous;
  }
  res.stats.basis_size = static_cast<long long>(res.basis.size());
  res.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return res;
}

template <class Elem>
bool is_minimal_impl(std::span<const Elem> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Word& lm = basis[i].poly.leading_monomial();
    const ModMonomial& sig = sig_of(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == i) continue;
      const Word& glm = basis[j].poly.leading_monomial();
      if (glm.length() > lm.length()) continue;
      for (std::size_t pos : occurrence_positions(lm, glm)) {
        Word a = lm.prefix(pos);
        Word b = lm.suffix(lm.length() - pos - glm.length());
        if (top_compare(shift(a, sig_of(basis[j]), b), sig) != std::strong_ordering::greater)
          return false;
      }
    }
  }
  return true;
}

} // namespace

SigBasisResult siggb(std::span<const Poly> generators, const EngineOptions& opts) {
  return run_engine<SigPoly>(generators, opts);
}

LabelledBasisResult labelledgb(std::span<const Poly> generators, const EngineOptions& opts) {
  return run_engine<LabelledPoly>(generators, opts);
}

std::vector<PendingPair> generate_pairs(std::size_t new_idx, std::span<const SigPoly> basis,
                                        const EngineOptions& opts) {
  return generate_pairs_impl(new_idx, basis, opts, nullptr, nullptr);
}

std::vector<PendingPair> generate_pairs(std::size_t new_idx, std::span<const LabelledPoly> basis,
                                        const EngineOptions& opts) {
  return generate_pairs_impl(new_idx, basis, opts, nullptr, nullptr);
}

bool is_minimal_basis(std::span<const SigPoly> basis) { return is_minimal_impl(basis); }
bool is_minimal_basis(std::span<const LabelledPoly> basis) { return is_minimal_impl(basis); }

} // namespace sgb
