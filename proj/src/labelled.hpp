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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "module.hpp"
#include "poly.hpp"

namespace sgb {

// Polynomial with its full module witness; the defining constraint is
// poly == evaluate(label, F) for the fixed generator family F.
struct LabelledPoly {
  Poly poly;
  ModElement label;
};

// Polynomial carrying only the signature of some witness.
struct SigPoly {
  Poly poly;
  ModMonomial sig;
};

inline const ModMonomial& sig_of(const SigPoly& p) { return p.sig; }
inline const ModMonomial& sig_of(const LabelledPoly& p) { return p.label.signature(); }

// A coincidence of two leading monomials. For an overlap, lm(first) = AB and
// lm(second) = BC with A, B, C all nonempty. For an inclusion, lm(first) =
// ABC and lm(second) = B with possibly empty A, C and first != second as
// objects. `first`/`second` tell which of the two arguments of
// find_ambiguities plays which role (0 = p, 1 = q).
struct Ambiguity {
  enum class Kind { overlap, inclusion };
  Kind kind;
  Word word;  // the common multiple ABC
  Word left;  // A
  Word right; // C
  int first = 0;
  int second = 1;

  bool operator==(const Ambiguity&) const = default;
};

// All ambiguities between two elements with the given leading monomials:
// overlaps of (p,q) and (q,p) — only one direction when same_object — plus
// inclusions in both directions when the elements are distinct objects.
// Within each group the order is by increasing |A|.
std::vector<Ambiguity> find_ambiguities(const Word& lm_p, const Word& lm_q, bool same_object);

template <class Elem>
std::vector<Ambiguity> find_ambiguities(const Elem& p, const Elem& q, bool same_object) {
  return find_ambiguities(p.poly.leading_monomial(), q.poly.leading_monomial(), same_object);
}

// The two shifted signatures whose comparison classifies the ambiguity:
// s(alpha C) and s(A beta) for an overlap, s(alpha) and s(A beta C) for an
// inclusion.
std::pair<ModMonomial, ModMonomial> shifted_signatures(const Ambiguity& a,
                                                       const ModMonomial& sig_first,
                                                       const ModMonomial& sig_second);

// Regular iff the two shifted signatures differ.
bool ambiguity_is_regular(const Ambiguity& a, const ModMonomial& sig_first,
                          const ModMonomial& sig_second);

// Signature of the S-polynomial of a regular ambiguity: the larger shifted
// signature.
ModMonomial spoly_signature(const Ambiguity& a, const ModMonomial& sig_first,
                            const ModMonomial& sig_second);

// spol(a) = 1/lc(f) f C - 1/lc(g) A g for overlaps, with the label combined
// the same way; 1/lc(f) f - 1/lc(g) A g C for inclusions. p and q are the
// two arguments the ambiguity was built from.
LabelledPoly spoly(const Ambiguity& a, const LabelledPoly& p, const LabelledPoly& q);
SigPoly spoly(const Ambiguity& a, const SigPoly& p, const SigPoly& q);

// Degree of the S-polynomial, computed from the operands' tails without
// materializing it: the leading terms cancel by construction, so only the
// shifted tails contribute. Cross-side cancellation can only lower it. For
// homogeneous operands this equals |ABC| whenever the S-polynomial is
// nonzero. first/second are the polynomials in the ambiguity's role order.
std::size_t spoly_degree_bound(const Ambiguity& a, const Poly& first, const Poly& second);

struct SReduceFlags {
  bool top = false;     // the step rewrites lm(f)
  bool regular = false; // the shifted signature is strictly below s(f)
};

// One s-reduction step of f by g: the deglex-largest word of supp(f) that
// admits a factorization a lm(g) b with s(a gamma b) <= s(alpha), shortest
// left part first. Singular steps are allowed here; the flags report what
// kind of step was taken.
std::optional<LabelledPoly> sreduce_step(const LabelledPoly& f, const LabelledPoly& g,
                                         SReduceFlags* flags = nullptr);

// Regular s-reduction to a normal form: keeps applying strictly
// signature-decreasing steps (reducers in basis order, factorizations by
// shortest left part, words scanned from the top) until none applies. The
// signature term is preserved exactly. With top_only, only steps at the
// leading monomial are taken.
LabelledPoly regular_sreduce(LabelledPoly f, std::span<const LabelledPoly> basis,
                             bool top_only = false);
SigPoly regular_sreduce(SigPoly f, std::span<const SigPoly> basis, bool top_only = false);

// True iff some g in basis gives a lm(g) b = lm(p) with a s(g) b = s(p).
bool is_singular_top_reducible(const Poly& p, const ModMonomial& sig,
                               std::span<const SigPoly> basis);
bool is_singular_top_reducible(const Poly& p, const ModMonomial& sig,
                               std::span<const LabelledPoly> basis);

// True iff some g in basis gives a lm(g) b = lm(p) with a s(g) b <= s(p).
bool is_top_sreducible(const Poly& p, const ModMonomial& sig, std::span<const SigPoly> basis);
bool is_top_sreducible(const Poly& p, const ModMonomial& sig, std::span<const LabelledPoly> basis);

// The syzygy label(g) m h.poly - g.poly m label(h); always evaluates to 0.
ModElement trivial_syzygy(const LabelledPoly& g, const LabelledPoly& h, const Word& m);

} // namespace sgb
