// Copyright 2026 The qseries Authors
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

#include "qseries/dsl/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <utility>

namespace qseries::dsl {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kInt, kIdent, kSym, kEqEq, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int col = 1;

  bool is_sym(char c) const { return kind == Tok::kSym && text.size() == 1 && text[0] == c; }
  bool is_ident(std::string_view s) const { return kind == Tok::kIdent && text == s; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::kInt;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += take();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::kIdent;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text += take();
      }
    } else if (c == '=' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
      t.kind = Tok::kEqEq;
      t.text = "==";
      take();
      take();
    } else if (std::string_view("[](),;+-*/^:").find(c) != std::string_view::npos) {
      t.kind = Tok::kSym;
      t.text = std::string(1, take());
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    return t;
  }

  // Raw text up to the next ']' (consumed), for statement labels.
  std::string read_label(int line, int col) {
    std::string label;
    while (pos_ < src_.size() && src_[pos_] != ']') {
      if (src_[pos_] == '\n') break;
      label += take();
    }
    if (pos_ >= src_.size() || src_[pos_] != ']') throw ParseError("unterminated label", line, col);
    take();
    const auto first = label.find_first_not_of(" \t");
    const auto last = label.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty label", line, col);
    return label.substr(first, last - first + 1);
  }

 private:
  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) {}

  ExprPtr expression_only() {
    ExprPtr e = expr();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

  std::vector<Statement> program() {
    std::vector<Statement> out;
    while (peek().kind != Tok::kEnd) out.push_back(statement());
    return out;
  }

 private:
  const Token& peek() {
    if (!ahead_) ahead_ = lexer_.next();
    return *ahead_;
  }

  Token advance() {
    Token t = peek();
    ahead_.reset();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) { fail_at(peek(), message); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    throw ParseError(message, t.line, t.col);
  }

  void expect_sym(char c) {
    if (!peek().is_sym(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_ident(std::string_view word) {
    if (!peek().is_ident(word)) fail("expected '" + std::string(word) + "'");
    advance();
  }

  std::int64_t integer() {
    const Token t = peek();
    if (t.kind != Tok::kInt) fail("expected an integer");
    advance();
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail_at(t, "integer out of range");
    return v;
  }

  std::int64_t signed_integer() {
    if (peek().is_sym('-')) {
      advance();
      return -integer();
    }
    if (peek().is_sym('+')) advance();
    return integer();
  }

  Monomial monomial() {
    int sign = 1;
    if (peek().is_sym('-')) {
      advance();
      sign = -1;
    }
    if (!peek().is_ident("q")) fail("expected a monomial such as q, -q or q^3");
    advance();
    std::int64_t e = 1;
    if (peek().is_sym('^')) {
      advance();
      e = integer();
    }
    return Monomial(sign, e);
  }

  // expr := term (('+'|'-') term)*
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().is_sym('+') || peek().is_sym('-')) {
      const ExprKind op = advance().text == "+" ? ExprKind::kAdd : ExprKind::kSub;
      lhs = make_binary(op, lhs, term());
    }
    return lhs;
  }

  // term := unary (('*'|'/') unary)*
  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().is_sym('*') || peek().is_sym('/')) {
      const ExprKind op = advance().text == "*" ? ExprKind::kMul : ExprKind::kDiv;
      lhs = make_binary(op, lhs, unary());
    }
    return lhs;
  }

  // unary := '-' unary | power
  ExprPtr unary() {
    if (peek().is_sym('-')) {
      advance();
      return make_neg(unary());
    }
    return power();
  }

  // power := primary ('^' signed-integer)?
  ExprPtr power() {
    bool bare_q = false;
    ExprPtr base = primary(bare_q);
    if (!peek().is_sym('^')) return base;
    advance();
    if (!(peek().kind == Tok::kInt || peek().is_sym('-') || peek().is_sym('+'))) {
      fail("exponent must be an integer literal");
    }
    const std::int64_t k = signed_integer();
    ExprPtr result = bare_q ? make_qpower(k) : make_pow(base, k);
    if (peek().is_sym('^')) fail("chained exponents need parentheses");
    return result;
  }

  ExprPtr primary(bool& bare_q) {
    const Token t = peek();
    if (t.kind == Tok::kInt) {
      advance();
      return make_integer(mpz_class(t.text));
    }
    if (t.is_sym('(')) {
      advance();
      ExprPtr e = expr();
      expect_sym(')');
      return e;
    }
    if (t.kind != Tok::kIdent) fail(t.kind == Tok::kEnd ? "unexpected end of input" : "expected an expression");
    advance();
    const std::string& id = t.text;
    if (id == "q") {
      bare_q = true;
      return make_qpower(1);
    }
    if (id == "E") {
      expect_sym('[');
      const Token jt = peek();
      const std::int64_t j = integer();
      if (j < 1) fail_at(jt, "E[j] needs j >= 1");
      expect_sym(']');
      return make_euler(j);
    }
    if (id == "f" || id == "fprod") {
      expect_sym('(');
      const Monomial a = monomial();
      expect_sym(',');
      const Monomial b = monomial();
      expect_sym(')');
      return make_theta(a, b, id == "fprod");
    }
    if (id == "poch") {
      expect_sym('(');
      const Monomial a = monomial();
      expect_sym(';');
      const Monomial base = monomial();
      expect_sym(')');
      const Token suffix = peek();
      if (suffix.kind != Tok::kIdent || suffix.text.size() < 2 || suffix.text[0] != '_') {
        fail("expected _inf or _<n> after poch(...)");
      }
      advance();
      const std::string rest = suffix.text.substr(1);
      if (rest == "inf") return make_pochhammer(a, base, std::nullopt);
      std::int64_t n = 0;
      const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) fail_at(suffix, "expected _inf or _<n>");
      return make_pochhammer(a, base, n);
    }
    if (id == "ajp") {
      expect_sym('(');
      const std::int64_t j = integer();
      expect_sym(',');
      const std::int64_t p = integer();
      expect_sym(')');
      return make_ajp(j, p);
    }
    if (id == "subst") {
      expect_sym('(');
      ExprPtr inner = expr();
      expect_sym(',');
      const Token st = peek();
      const std::int64_t sign = signed_integer();
      if (sign != 1 && sign != -1) fail_at(st, "subst sign must be 1 or -1");
      expect_sym(',');
      const Token kt = peek();
      const std::int64_t k = integer();
      if (k < 1) fail_at(kt, "subst dilation must be positive");
      expect_sym(')');
      return make_subst(inner, static_cast<int>(sign), k);
    }
    if (id == "extract") {
      expect_sym('(');
      ExprPtr inner = expr();
      expect_sym(',');
      const Token mt = peek();
      const std::int64_t m = integer();
      expect_sym(',');
      const Token rt = peek();
      const std::int64_t r = integer();
      expect_sym(')');
      if (m < 2) fail_at(mt, "extract modulus must be at least 2");
      if (r >= m) fail_at(rt, "extract residue must be below the modulus");
      return make_extract(inner, m, r);
    }
    if (auto b = builtin_from_name(id)) {
      ExprPtr e = make_builtin(*b);
      if (!peek().is_sym('(')) return e;
      advance();
      // name(±q^k) and name(subst [-]k) both mean q -> ±q^k.
      int sign = 1;
      std::int64_t k = 1;
      const Token at = peek();
      if (peek().is_ident("subst")) {
        advance();
        const std::int64_t v = signed_integer();
        sign = v < 0 ? -1 : 1;
        k = v < 0 ? -v : v;
      } else {
        const Monomial m = monomial();
        sign = m.sign;
        k = m.exp;
      }
      if (k < 1) fail_at(at, "substitution exponent must be positive");
      expect_sym(')');
      return make_subst(e, sign, k);
    }
    fail_at(t, "unknown identifier '" + id + "'");
  }

  Ring ring_descriptor() {
    const Token t = peek();
    if (t.is_ident("int") || t.is_ident("rat")) {
      advance();
      return t.text == "int" ? Ring::integer() : Ring::rational();
    }
    if (t.is_ident("mod")) {
      advance();
      expect_sym(':');
      const std::int64_t m = integer();
      if (m < 2) fail_at(t, "modulus must be at least 2");
      return Ring::modular(m);
    }
    fail("expected int, rat or mod:<m>");
  }

  Progression triple() {
    expect_sym('(');
    Progression p;
    p.a = integer();
    expect_sym(',');
    p.b = integer();
    expect_sym(',');
    p.modulus = integer();
    expect_sym(')');
    return p;
  }

  Statement statement() {
    const Token open = peek();
    if (!open.is_sym('[')) fail("expected '[label]' to start a statement");
    advance();
    Statement s;
    s.line = open.line;
    s.label = lexer_.read_label(open.line, open.col);
    const Token kw = advance();
    if (kw.is_ident("verify")) {
      s.kind = StatementKind::kVerify;
      s.lhs = expr();
      if (peek().kind != Tok::kEqEq) fail("expected '=='");
      advance();
      s.rhs = expr();
    } else if (kw.is_ident("congruence")) {
      s.kind = StatementKind::kCongruence;
      s.lhs = expr();
      expect_ident("at");
      s.progression.a = peek().kind == Tok::kInt ? integer() : 1;
      expect_ident("n");
      s.progression.b = 0;
      if (peek().is_sym('+')) {
        advance();
        s.progression.b = integer();
      }
      expect_ident("mod");
      s.progression.modulus = integer();
    } else if (kw.is_ident("scan")) {
      s.kind = StatementKind::kScan;
      s.lhs = expr();
    } else {
      fail_at(kw, "expected verify, congruence or scan after the label");
    }
    options(s);
    validate(s, open);
    return s;
  }

  void options(Statement& s) {
    while (peek().kind == Tok::kIdent) {
      const Token opt = advance();
      if (opt.text == "order") {
        s.order = integer();
      } else if (opt.text == "ring") {
        s.ring = ring_descriptor();
      } else if (opt.text == "witnesses" && s.kind == StatementKind::kCongruence) {
        s.witnesses = integer();
      } else if (opt.text == "maxA" && s.kind == StatementKind::kScan) {
        s.max_a = integer();
      } else if (opt.text == "minWitnesses" && s.kind == StatementKind::kScan) {
        s.min_witnesses = integer();
      } else if (opt.text == "moduli" && s.kind == StatementKind::kScan) {
        s.moduli = {integer()};
        while (peek().is_sym(',')) {
          advance();
          s.moduli.push_back(integer());
        }
      } else if (opt.text == "expect" && s.kind == StatementKind::kScan) {
        std::vector<Progression> want;
        if (peek().is_ident("none")) {
          advance();
        } else {
          want.push_back(triple());
          while (peek().is_sym(',')) {
            advance();
            want.push_back(triple());
          }
        }
        s.expect = std::move(want);
      } else {
        fail_at(opt, "unknown option '" + opt.text + "'");
      }
    }
  }

  static void validate(const Statement& s, const Token& at) {
    if (s.order && *s.order < 1) fail_at(at, "order must be at least 1");
    if (s.kind == StatementKind::kCongruence) {
      const auto& p = s.progression;
      if (p.a < 1 || p.b < 0 || p.b >= p.a) fail_at(at, "progression needs 0 <= B < A");
      if (p.modulus < 2) fail_at(at, "modulus must be at least 2");
      if (s.witnesses < 1) fail_at(at, "witnesses must be at least 1");
    }
    if (s.kind == StatementKind::kScan) {
      if (s.moduli.empty()) fail_at(at, "scan needs 'moduli'");
      for (auto m : s.moduli) {
        if (m < 2) fail_at(at, "moduli must be at least 2");
      }
      if (s.max_a < 1 || s.min_witnesses < 1) fail_at(at, "maxA and minWitnesses must be positive");
    }
  }

  Lexer lexer_;
  std::optional<Token> ahead_;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).expression_only(); }

std::vector<Statement> parse_program(std::string_view text) { return Parser(text).program(); }

}  // namespace qseries::dsl
