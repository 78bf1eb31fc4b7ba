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

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "labelled.hpp"

namespace sgb {

struct EngineOptions {
  std::optional<int> max_degree; // drop pairs whose common multiple exceeds this
  bool syzygy_criterion = true;
  bool f5_criterion = true;
  bool singular_criterion = true;
  bool top_only = false; // restrict regular s-reduction to the leading monomial
  long long pairs_budget = 0;    // stop after this many S-pairs popped; 0 = unlimited
  double timeout_seconds = 0;    // 0 = none
};

enum class RunOutcome { complete, up_to_signature, truncated };

struct RunStatus {
  RunOutcome outcome = RunOutcome::complete;
  std::optional<ModMonomial> frontier; // set for up_to_signature
  std::optional<int> degree_bound;     // set for truncated
  bool heuristic_truncation = false;   // degree bound on non-homogeneous input
};

struct RunStats {
  long long spolys = 0;          // S-polynomials materialized and s-reduced
  long long zero_reductions = 0; // of those, reductions to zero
  long long syzygy_hits = 0;
  long long f5_hits = 0;
  long long singular_hits = 0;
  long long chain_hits = 0; // baseline only
  long long pairs_generated = 0;
  long long basis_size = 0;
  double wall_ms = 0;
};

struct SigBasisResult {
  std::vector<SigPoly> basis;        // insertion order; polynomials monic
  std::vector<ModMonomial> syzygies; // signatures of the zero reductions (H)
  RunStats stats;
  RunStatus status;
};

struct LabelledBasisResult {
  std::vector<LabelledPoly> basis;
  std::vector<ModElement> syzygies; // full syzygy witnesses (H)
  RunStats stats;
  RunStatus status;
};

// Signature pipeline: enumerates a minimal signature Groebner basis of the
// two-sided ideal generated by F, collecting in H the signatures of all
// S-polynomials that s-reduce to zero. Pairs are processed in ascending
// signature order; the syzygy, F5 and singular criteria (in that order)
// discard pairs before reduction. Stops early on a degree bound, a pair
// budget or a timeout, reporting how far it got.
SigBasisResult siggb(std::span<const Poly> generators, const EngineOptions& opts = {});

// Same control flow carrying full module witnesses; H contains the actual
// syzygies instead of just their signatures.
LabelledBasisResult labelledgb(std::span<const Poly> generators, const EngineOptions& opts = {});

// True iff some recorded syzygy signature divides sig.
bool syzygy_criterion(const ModMonomial& sig, std::span<const ModMonomial> syzygy_sigs);

// Leading data of a basis element, as consumed by the F5 criterion.
struct BasisHead {
  Word lm;
  ModMonomial sig;
};

// True iff sig is a multiple of the dominant signature of a trivial syzygy
// between two basis elements, i.e. there are elements g, g' and words
// a, m, b with sig = a s(g) m lm(g') b and s(g) m lm(g') > lm(g) m s(g'),
// or the left-right mirrored condition.
bool f5_criterion(const ModMonomial& sig, std::span<const BasisHead> basis);

using SignatureIndex = std::unordered_set<ModMonomial, ModMonomialHash>;

// True iff some basis element has exactly this signature.
inline bool singular_criterion(const ModMonomial& sig, const SignatureIndex& basis_sigs) {
  return basis_sigs.contains(sig);
}

// A queued S-polynomial, stored unevaluated: the ambiguity data plus the
// signature it will carry.
struct PendingPair {
  ModMonomial sig;
  Ambiguity::Kind kind;
  Word left;  // A
  Word right; // C
  std::size_t first = 0;  // basis index of the AB / ABC operand
  std::size_t second = 0; // basis index of the BC / B operand
  std::size_t word_length = 0;
  std::uint64_t seq = 0;
};

// All regular S-polynomials between basis[new_idx] and every basis element
// including itself, as pending pairs; singular ambiguities are dropped, and
// pairs whose common multiple exceeds opts.max_degree are discarded.
std::vector<PendingPair> generate_pairs(std::size_t new_idx, std::span<const SigPoly> basis,
                                        const EngineOptions& opts);
std::vector<PendingPair> generate_pairs(std::size_t new_idx, std::span<const LabelledPoly> basis,
                                        const EngineOptions& opts);

// Post-hoc minimality check: no element is top s-reducible by the others.
bool is_minimal_basis(std::span<const SigPoly> basis);
bool is_minimal_basis(std::span<const LabelledPoly> basis);

} // namespace sgb
