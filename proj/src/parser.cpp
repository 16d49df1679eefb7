// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <charconv>
#include <set>

#include "nu/error.hpp"
#include "nu/lang.hpp"

namespace nu {
namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const std::set<std::string, std::less<>> kKeywords = {
    "let", "in", "new", "if", "then", "else", "fix", "fun", "true", "false", "int", "bool", "name"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {  // line comment
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_' || src[j] == '\'')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    bool negative = c == '-' && i + 1 < src.size() &&
                    std::isdigit(static_cast<unsigned char>(src[i + 1]));
    if (std::isdigit(static_cast<unsigned char>(c)) || negative) {
      std::size_t j = i + (negative ? 1 : 0);
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", tl, tc});
      advance(2);
      continue;
    }
    if (std::string_view("()=+:.").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw Error(ErrorKind::SyntaxError, std::to_string(tl) + ":" + std::to_string(tc) +
                                            ": unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  CompPtr comp_to_end() {
    CompPtr e = comp();
    expect_end();
    return e;
  }

  Type type_to_end() {
    Type t = type();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool is_kw(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorKind::SyntaxError, std::to_string(t.line) + ":" + std::to_string(t.col) +
                                            ": expected " + what + ", found " + found);
  }

  void expect_sym(std::string_view s) {
    if (!is_sym(s)) fail("'" + std::string(s) + "'");
    ++pos_;
  }
  void expect_kw(std::string_view s) {
    if (!is_kw(s)) fail("'" + std::string(s) + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("end of input");
  }

  std::string ident() {
    if (peek().kind != Tok::Ident || kKeywords.count(peek().text)) fail("identifier");
    return toks_[pos_++].text;
  }

  bool at_comp_end() const {
    return peek().kind == Tok::End || is_sym(")") || is_kw("in") || is_kw("then") ||
           is_kw("else");
  }

  bool at_atom_start() const {
    const Token& t = peek();
    if (t.kind == Tok::Int) return true;
    if (t.kind == Tok::Sym) return t.text == "(";
    if (t.kind != Tok::Ident) return false;
    if (!kKeywords.count(t.text)) return true;
    return t.text == "true" || t.text == "false" || t.text == "fix" || t.text == "fun";
  }

  CompPtr comp() {
    if (is_kw("let")) {
      ++pos_;
      std::string x = ident();
      expect_sym("=");
      CompPtr bound = comp();
      expect_kw("in");
      CompPtr body = comp();
      return build::let(std::move(x), std::move(bound), std::move(body));
    }
    if (is_kw("if")) {
      ++pos_;
      ValuePtr c = value();
      expect_kw("then");
      CompPtr t = comp();
      expect_kw("else");
      CompPtr e = comp();
      return build::cond(std::move(c), std::move(t), std::move(e));
    }
    if (is_kw("new")) {
      ++pos_;
      return build::fresh();
    }
    if (is_sym("(")) {
      std::size_t saved = pos_;
      try {
        CompPtr e = value_or_app();
        if (at_comp_end()) return e;
      } catch (const Error&) {
      }
      pos_ = saved;
      expect_sym("(");
      CompPtr e = comp();
      expect_sym(")");
      return e;
    }
    return value_or_app();
  }

  CompPtr value_or_app() {
    ValuePtr v = value();
    if (at_atom_start()) return build::app(std::move(v), atom());
    return build::ret(std::move(v));
  }

  ValuePtr value() {
    ValuePtr lhs = sum();
    if (is_sym("=")) {
      ++pos_;
      return build::equal(std::move(lhs), sum());
    }
    return lhs;
  }

  ValuePtr sum() {
    ValuePtr acc = atom();
    while (is_sym("+")) {
      ++pos_;
      acc = build::plus(std::move(acc), atom());
    }
    return acc;
  }

  ValuePtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc()) fail("integer literal in range");
      ++pos_;
      return build::integer(v);
    }
    if (is_sym("(")) {
      ++pos_;
      ValuePtr v = value();
      expect_sym(")");
      return v;
    }
    if (is_kw("true") || is_kw("false")) {
      bool b = t.text == "true";
      ++pos_;
      return build::boolean(b);
    }
    if (is_kw("fix")) {
      ++pos_;
      std::string f = ident();
      expect_sym("(");
      std::string x = ident();
      expect_sym(":");
      Type arg = type();
      expect_sym(")");
      expect_sym(":");
      Type res = type();
      expect_sym(".");
      CompPtr body = comp();
      return build::fix(std::move(f), std::move(x), std::move(arg), std::move(res),
                        std::move(body));
    }
    if (is_kw("fun")) {
      ++pos_;
      expect_sym("(");
      std::string x = ident();
      expect_sym(":");
      Type arg = type();
      expect_sym(")");
      expect_sym(".");
      CompPtr body = comp();
      return build::fun(std::move(x), std::move(arg), std::move(body));
    }
    return build::var(ident());
  }

  Type type() {
    Type base = base_type();
    if (is_sym("->")) {
      ++pos_;
      return Type::arrow(std::move(base), type());
    }
    return base;
  }

  Type base_type() {
    if (is_kw("int")) {
      ++pos_;
      return Type::integer();
    }
    if (is_kw("bool")) {
      ++pos_;
      return Type::boolean();
    }
    if (is_kw("name")) {
      ++pos_;
      return Type::name();
    }
    if (is_sym("(")) {
      ++pos_;
      Type t = type();
      expect_sym(")");
      return t;
    }
    fail("type");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

CompPtr parse(std::string_view text) { return Parser(lex(text)).comp_to_end(); }

Type parse_type(std::string_view text) { return Parser(lex(text)).type_to_end(); }

}  // namespace nu
