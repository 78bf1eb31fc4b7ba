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

#include "problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sgb {

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  Lexer(const std::string& text, int line0, int col0) : text_(text), line_(line0), col_(col0) {}

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::Kind::end, "", line, col};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        num += advance();
      return {Token::Kind::number, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        id += advance();
      return {Token::Kind::ident, id, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Token::Kind::plus, "+", line, col};
      case '-': return {Token::Kind::minus, "-", line, col};
      case '*': return {Token::Kind::star, "*", line, col};
      case '/': return {Token::Kind::slash, "/", line, col};
      case '^': return {Token::Kind::caret, "^", line, col};
      case '(': return {Token::Kind::lparen, "(", line, col};
      case ')': return {Token::Kind::rparen, ")", line, col};
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }
  }

private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

class PolyParser {
public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars, int line0,
             int col0 = 1)
      : lexer_(text, line0, col0), vars_(vars) {
    cur_ = lexer_.next();
  }

  Poly parse() {
    if (cur_.kind == Token::Kind::end) throw parse_error("empty polynomial expression", cur_.line, cur_.column);
    Poly p = parse_expr();
    expect(Token::Kind::end, "end of expression");
    return p;
  }

private:
  Poly parse_expr() {
    Poly acc = parse_term();
    while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
      bool neg = cur_.kind == Token::Kind::minus;
      bump();
      Poly t = parse_term();
      acc = neg ? acc - t : acc + t;
    }
    return acc;
  }

  Poly parse_term() {
    bool neg = false;
    while (cur_.kind == Token::Kind::minus) {
      neg = !neg;
      bump();
    }
    Poly acc = parse_factor();
    while (cur_.kind == Token::Kind::star) {
      bump();
      acc = acc * parse_factor();
    }
    return neg ? -acc : acc;
  }

  Poly parse_factor() {
    Poly base = parse_primary();
    if (cur_.kind == Token::Kind::caret) {
      bump();
      Token t = expect(Token::Kind::number, "a nonnegative integer exponent");
      long e = std::stol(t.text);
      Poly acc = Poly::constant(1);
      for (long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Poly parse_primary() {
    switch (cur_.kind) {
      case Token::Kind::number: {
        Token num = cur_;
        bump();
        Rational c(num.text);
        if (cur_.kind == Token::Kind::slash) {
          bump();
          Token den = expect(Token::Kind::number, "a denominator");
          if (den.text.find_first_not_of('0') == std::string::npos)
            throw parse_error("malformed rational: zero denominator", den.line, den.column);
          c = Rational(num.text + "/" + den.text);
        }
        c.canonicalize();
        return Poly::constant(c);
      }
      case Token::Kind::ident: {
        Token id = cur_;
        bump();
        for (std::size_t i = 0; i < vars_.size(); ++i)
          if (vars_[i] == id.text) return Poly::monomial(1, Word{static_cast<Letter>(i)});
        throw parse_error("unknown variable '" + id.text + "'", id.line, id.column);
      }
      case Token::Kind::lparen: {
        bump();
        Poly p = parse_expr();
        expect(Token::Kind::rparen, "')'");
        return p;
      }
      default:
        throw parse_error("expected a coefficient, a variable or '('", cur_.line, cur_.column);
    }
  }

  Token expect(Token::Kind k, const std::string& what) {
    if (cur_.kind != k)
      throw parse_error("expected " + what, cur_.line, cur_.column);
    Token t = cur_;
    bump();
    return t;
  }
  void bump() { cur_ = lexer_.next(); }

  Lexer lexer_;
  const std::vector<std::string>& vars_;
  Token cur_;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

} // namespace

Poly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  return PolyParser(text, vars, 1).parse();
}

Problem parse_problem_text(const std::string& text) {
  Problem prob;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    auto first = stripped.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto key_end = stripped.find_first_of(" \t", first);
    std::string key = stripped.substr(first, key_end == std::string::npos ? std::string::npos
                                                                          : key_end - first);
    std::string rest = key_end == std::string::npos ? "" : stripped.substr(key_end + 1);
    if (key == "vars") {
      if (have_vars) throw parse_error("duplicate vars line", lineno, 1);
      prob.vars = split_ws(rest);
      if (prob.vars.empty()) throw parse_error("vars line declares no variables", lineno, 1);
      if (prob.vars.size() > 255) throw parse_error("too many variables", lineno, 1);
      for (std::size_t i = 0; i < prob.vars.size(); ++i)
        for (std::size_t j = i + 1; j < prob.vars.size(); ++j)
          if (prob.vars[i] == prob.vars[j])
            throw parse_error("duplicate variable name '" + prob.vars[i] + "'", lineno, 1);
      have_vars = true;
    } else if (key == "gen") {
      if (!have_vars) throw parse_error("gen before vars", lineno, 1);
      Poly p = PolyParser(rest, prob.vars, lineno,
                          key_end == std::string::npos ? 1 : static_cast<int>(key_end) + 2)
                   .parse();
      if (p.is_zero()) throw parse_error("zero generator", lineno, 1);
      prob.generators.push_back(std::move(p));
    } else if (key == "maxdeg") {
      auto ws = split_ws(rest);
      if (ws.size() != 1 || ws[0].empty() ||
          ws[0].find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("maxdeg expects one integer", lineno, 1);
      int d = std::stoi(ws[0]);
      if (d < 1) throw parse_error("maxdeg must be at least 1", lineno, 1);
      prob.max_degree = d;
    } else if (key == "order") {
      auto ws = split_ws(rest);
      if (ws != std::vector<std::string>{"deglex"})
        throw parse_error("unsupported monomial order (only deglex)", lineno, 1);
    } else if (key == "modorder") {
      auto ws = split_ws(rest);
      if (ws != std::vector<std::string>{"top"})
        throw parse_error("unsupported module order (only top)", lineno, 1);
    } else {
      throw parse_error("unknown directive '" + key + "'", lineno, 1);
    }
  }
  if (!have_vars) throw parse_error("missing vars line", lineno ? lineno : 1, 1);
  if (prob.generators.empty()) throw parse_error("no generators", lineno ? lineno : 1, 1);
  return prob;
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::string format_word(const Word& w, const std::vector<std::string>& vars) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    SGB_CHECK(w[i] < vars.size(), "format_word: letter outside the variable table");
    out += vars[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// Shared sign/coefficient layout for polynomials and module elements.
template <class Term, class FormatMonomial>
std::string format_terms(const std::vector<Term>& terms, FormatMonomial&& fmt_mono) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = fmt_mono(m);
    if (mono == "1") {
      out += to_string(a);
    } else if (is_one(a)) {
      out += mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

} // namespace

std::string format_poly(const Poly& f, const std::vector<std::string>& vars) {
  return format_terms(f.terms(), [&](const Word& w) { return format_word(w, vars); });
}

std::string format_mod_monomial(const ModMonomial& m, const std::vector<std::string>& vars) {
  std::string out;
  if (!m.left.empty()) out += format_word(m.left, vars) + "*";
  out += "e_" + std::to_string(m.index + 1);
  if (!m.right.empty()) out += "*" + format_word(m.right, vars);
  return out;
}

std::string format_mod_element(const ModElement& e, const std::vector<std::string>& vars) {
  return format_terms(e.terms(),
                      [&](const ModMonomial& m) { return format_mod_monomial(m, vars); });
}

std::string format_certificate(const Certificate& cert, const std::vector<std::string>& vars) {
  std::string out;
  for (const CertRow& row : cert.rows) {
    out += to_string(row.coeff) + " | " + format_word(row.left, vars) + " | " +
           std::to_string(row.index + 1) + " | " + format_word(row.right, vars) + "\n";
  }
  return out;
}

std::string format_status(const RunStatus& status, const std::vector<std::string>& vars) {
  switch (status.outcome) {
    case RunOutcome::complete: return "complete";
    case RunOutcome::up_to_signature:
      return "up to signature " + format_mod_monomial(*status.frontier, vars);
    case RunOutcome::truncated: {
      std::string s = "truncated at degree " + std::to_string(*status.degree_bound);
      if (status.heuristic_truncation) s += " (heuristic: non-homogeneous input)";
      return s;
    }
  }
  return "unknown";
}

std::string format_stats_json(const RunStats& stats, const RunStatus& status,
                              const std::vector<std::string>& vars, bool baseline) {
  nlohmann::ordered_json j;
  j["spolys"] = stats.spolys;
  j["zero_reductions"] = stats.zero_reductions;
  if (baseline) {
    j["criteria_hits"] = {{"chain", stats.chain_hits}};
  } else {
    j["criteria_hits"] = {{"syzygy", stats.syzygy_hits},
                          {"f5", stats.f5_hits},
                          {"singular", stats.singular_hits}};
  }
  j["basis_size"] = stats.basis_size;
  j["status"] = format_status(status, vars);
  j["wall_time_ms"] = stats.wall_ms;
  return j.dump(2) + "\n";
}

} // namespace sgb
