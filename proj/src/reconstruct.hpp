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
#include <vector>

#include "labelled.hpp"

namespace sgb {

// Rebuilds full module witnesses for a minimal signature Groebner basis (as
// produced by siggb, possibly up to a signature). Elements are processed in
// ascending signature order; each is recovered as a g b for a suitable
// multiple of an already-recovered element or an input generator, regular
// top s-reduced against the recovered set. Output leading monomials and
// signatures match the input pairwise; polynomials come out monic.
// Throws inconsistent_input when no multiplier exists (corrupted input).
std::vector<LabelledPoly> sig2labelled(std::span<const SigPoly> sig_basis,
                                       std::span<const Poly> generators);

// Recovers, for each recorded syzygy signature, an actual syzygy with that
// signature by regular s-reducing a suitable multiple to zero over the
// reconstructed labelled basis. Output order matches H. Throws
// inconsistent_input when a reduction fails to reach zero.
std::vector<ModElement> syzygy_recovery(std::span<const SigPoly> sig_basis,
                                        std::span<const ModMonomial> syzygy_sigs,
                                        std::span<const Poly> generators);

struct CertRow {
  Rational coeff;
  Word left;
  std::uint32_t index = 0; // 0-based; printed 1-based
  Word right;
};

// An explicit representation target = sum of coeff * left * F[index] * right.
struct Certificate {
  Poly target;
  std::vector<CertRow> rows; // descending by module monomial
};

// Classical reduction of target by the basis polynomials, accumulating the
// module contributions. Returns a re-verified certificate when the remainder
// is zero, nullopt otherwise (not provably in the ideal at this truncation).
std::optional<Certificate> certify(const Poly& target, std::span<const LabelledPoly> basis,
                                   std::span<const Poly> generators);

// Finite data from which the full syzygy-module basis is enumerated: the
// explicitly recovered syzygies plus the labelled basis whose pairwise
// products generate all trivial syzygies.
struct SyzygyBasisDescription {
  std::vector<ModElement> explicit_part;
  std::vector<LabelledPoly> trivial_part;
};

// Degree of the word family a lm(F[i]) b described by a module monomial.
std::size_t monomial_degree(const ModMonomial& m, std::span<const Poly> generators);

// All explicit syzygies plus all trivial syzygies g m h' - g' m h with
// signature degree within the bound, deduplicated by signature. n_vars is
// the alphabet size used to enumerate the middle words m.
std::vector<ModElement> enumerate_syzygy_basis(const SyzygyBasisDescription& desc,
                                               std::span<const Poly> generators,
                                               unsigned n_vars, int degree_bound);

} // namespace sgb
