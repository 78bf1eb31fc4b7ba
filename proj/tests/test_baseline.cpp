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

#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace sgb;
using namespace sgb::test;

TEST_CASE("buchberger enumerates the truncated basis of (xyx - xy)") {
  BaselineOptions opts;
  opts.max_degree = 6;
  BaselineResult r = buchberger(std::vector<Poly>{P("x*y*x - x*y")}, opts);
  CHECK(r.status.outcome == RunOutcome::truncated);
  for (int n = 1; n <= 4; ++n) {
    Poly gn = P("x*y^" + std::to_string(n) + "*x - x*y^" + std::to_string(n));
    CHECK(std::count(r.basis.begin(), r.basis.end(), gn) == 1);
  }
}

TEST_CASE("buchberger trivial cases") {
  SUBCASE("a single monomial is already a basis") {
    BaselineResult r = buchberger(std::vector<Poly>{P("x*y")});
    CHECK(r.basis.size() == 1);
    CHECK(r.stats.spolys == 0);
    CHECK(r.status.outcome == RunOutcome::complete);
  }
  SUBCASE("input generators reduce to zero modulo the output") {
    WorkedExample sys;
    BaselineResult r = buchberger(sys.three());
    for (const Poly& f : sys.three()) CHECK(reduce_full(f, r.basis).is_zero());
  }
  SUBCASE("duplicate generator is dropped on entry") {
    BaselineResult r = buchberger(std::vector<Poly>{P("x*y - y*x"), P("2*x*y - 2*y*x")});
    CHECK(r.basis.size() == 1);
  }
}

TEST_CASE("the worked-example ideal closes with xxy") {
  WorkedExample sys;
  BaselineResult r = buchberger(sys.three());
  CHECK(r.status.outcome == RunOutcome::complete);
  auto reduced = reduced_gb(r.basis);
  // G = {f1, f2, f3, f4} is the Groebner basis of the ideal
  std::vector<Poly> expected = reduced_gb(sys.four());
  CHECK(reduced == expected);
}

TEST_CASE("chain criterion") {
  WorkedExample sys;
  SUBCASE("no third divisor: keep the pair") {
    std::vector<Poly> basis = {sys.f1, sys.f2};
    BaselinePair pair{Ambiguity::Kind::overlap, W("xyxy"), W("x"), W("y"), 0, 1, 0};
    CHECK(!chain_criterion(pair, basis));
  }
  SUBCASE("interior divisor overlapping both ends: discard") {
    // W = aabba with lm0 = aabb, lm1 = ba, divisor h = abb strictly inside,
    // overlapping both: use explicit words over {x, y}
    std::vector<Poly> basis = {P("x*x*y*y"), P("y*x"), P("x*y*y")};
    BaselinePair pair{Ambiguity::Kind::overlap, W("xxyyx"), W("xxy"), W("x"), 0, 1, 0};
    CHECK(chain_criterion(pair, basis));
  }
  SUBCASE("divisor touching an end does not qualify") {
    std::vector<Poly> basis = {P("x*x*y*y"), P("y*x"), P("x*x*y")};
    BaselinePair pair{Ambiguity::Kind::overlap, W("xxyyx"), W("xxy"), W("x"), 0, 1, 0};
    CHECK(!chain_criterion(pair, basis));
  }
  SUBCASE("never changes the computed ideal") {
    WorkedExample s2;
    BaselineOptions vanilla, optimized;
    optimized.chain_criterion = true;
    BaselineResult rv = buchberger(s2.three(), vanilla);
    BaselineResult ro = buchberger(s2.three(), optimized);
    CHECK(ro.stats.spolys <= rv.stats.spolys);
    CHECK(reduced_gb(rv.basis) == reduced_gb(ro.basis));
  }
  SUBCASE("cuts most of the redundant reductions on a real system") {
    Problem p = parse_problem_text("vars x y\ngen x^3 - 1\ngen y^3 - 1\n"
                                   "gen (y*x*y*x^2)^2 - 1\n");
    BaselineOptions vanilla, optimized;
    optimized.chain_criterion = true;
    BaselineResult rv = buchberger(p.generators, vanilla);
    BaselineResult ro = buchberger(p.generators, optimized);
    CHECK(ro.stats.spolys * 2 <= rv.stats.spolys);
    CHECK(ro.stats.chain_hits > 0);
    CHECK(reduced_gb(rv.basis) == reduced_gb(ro.basis));
  }
}

TEST_CASE("reduced_gb") {
  SUBCASE("scaling collapses to the monic element") {
    std::vector<Poly> in = {P("x*y - y*x"), P("2*x*y - 2*y*x")};
    auto out = reduced_gb(in);
    REQUIRE(out.size() == 1);
    // monic under deglex: the leading monomial is y*x
    CHECK(out[0] == P("y*x - x*y"));
  }
  SUBCASE("empty input") { CHECK(reduced_gb({}).empty()); }
  SUBCASE("result is monic and mutually irreducible") {
    WorkedExample sys;
    auto out = reduced_gb(buchberger(sys.three()).basis);
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i].leading_coeff() == 1);
      std::vector<Poly> others;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != i) others.push_back(out[j]);
      CHECK(reduce_full(out[i], others) == out[i]);
    }
  }
}

TEST_CASE("signature basis and baseline generate the same ideal") {
  WorkedExample sys;
  auto F = sys.four();
  SigBasisResult sig = siggb(F);
  BaselineResult bb = buchberger(F);
  auto sig_polys = basis_polys(sig);
  CHECK(reduces_to_zero(sig_polys, bb.basis));
  CHECK(reduces_to_zero(bb.basis, sig_polys));
}
