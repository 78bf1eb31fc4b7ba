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
#include <string>
#include <vector>

#include "engine.hpp"
#include "reconstruct.hpp"

namespace sgb {

// A parsed problem file: the variable alphabet (listed order = ascending
// precedence), the nonzero generators, and the optional degree bound.
struct Problem {
  std::vector<std::string> vars;
  std::vector<Poly> generators;
  std::optional<int> max_degree;
};

// Polynomial expression grammar: exact integer or p/q coefficients, `*` for
// products (juxtaposition is not accepted), `+`/`-`, `^` with nonnegative
// integer exponents, parentheses. The noncommutative product order is kept
// as written. Errors carry 1-based line/column positions.
Poly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

// Problem file format, line oriented: `#` comments and blank lines are
// skipped; `vars <name>...` declares the alphabet (required, once, first);
// `maxdeg <n>`, `order deglex` and `modorder top` are optional; each
// `gen <expression>` adds a generator. Generators must be nonzero.
Problem parse_problem_text(const std::string& text);
Problem parse_problem_file(const std::string& path);

std::string format_word(const Word& w, const std::vector<std::string>& vars);
std::string format_poly(const Poly& f, const std::vector<std::string>& vars);
// Module monomials print as `a*e_i*b` with 1-based i and empty words omitted.
std::string format_mod_monomial(const ModMonomial& m, const std::vector<std::string>& vars);
std::string format_mod_element(const ModElement& e, const std::vector<std::string>& vars);
// One `c | a | i | b` row per summand.
std::string format_certificate(const Certificate& cert, const std::vector<std::string>& vars);

std::string format_status(const RunStatus& status, const std::vector<std::string>& vars);
std::string format_stats_json(const RunStats& stats, const RunStatus& status,
                              const std::vector<std::string>& vars, bool baseline = false);

} // namespace sgb
