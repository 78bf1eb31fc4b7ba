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

#include "engine.hpp"
#include "poly.hpp"

namespace sgb {

struct BaselineOptions {
  std::optional<int> max_degree;
  bool chain_criterion = false;
  long long pairs_budget = 0;
  double timeout_seconds = 0;
};

struct BaselineResult {
  std::vector<Poly> basis; // insertion order; monic, fully reduced on entry
  RunStats stats;
  RunStatus status;
};

// Classical noncommutative Buchberger enumeration. Pairs are processed
// fairly, by ascending degree of the common multiple and then insertion
// order; S-polynomials are fully reduced and made monic before insertion,
// and basis tails are kept reduced as new elements arrive. With
// chain_criterion, pairs whose common multiple is cut by a third leading
// monomial into two strictly smaller ambiguities are discarded.
BaselineResult buchberger(std::span<const Poly> generators, const BaselineOptions& opts = {});

// The unique reduced basis at the given truncation: monic elements, none
// reducible by the others.
std::vector<Poly> reduced_gb(std::vector<Poly> basis);

// Ambiguity of a queued baseline pair, label-free.
struct BaselinePair {
  Ambiguity::Kind kind;
  Word word; // ABC
  Word left;
  Word right;
  std::size_t first = 0;
  std::size_t second = 0;
  std::uint64_t seq = 0;
};

// Decision procedure behind the optimized variant: true when the pair is
// safe to discard because some other basis element's leading monomial sits
// inside the common multiple, overlapping both ends' leading monomials, and
// neither induced sub-ambiguity reaches the full width of the word.
bool chain_criterion(const BaselinePair& pair, std::span<const Poly> basis);

} // namespace sgb
