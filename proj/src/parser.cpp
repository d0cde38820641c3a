/*
 * Copyright 2026 The pitwo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cctype>

#include "pitwo/error.hpp"
#include "pitwo/syntax.hpp"

namespace pitwo {
namespace {

enum class Tok { kIdent, kZero, kQuestion, kBang, kLParen, kRParen, kComma, kArrow, kBar, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int line = line_, column = column_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::kEnd, "", line, column});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string text;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          text += src_[pos_];
          advance();
        }
        out.push_back({Tok::kIdent, std::move(text), line, column});
        continue;
      }
      switch (c) {
        case '0':
          advance();
          if (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
            throw ParseError("unexpected character after '0'", line_, column_);
          }
          out.push_back({Tok::kZero, "0", line, column});
          continue;
        case '?':
          advance();
          out.push_back({Tok::kQuestion, "?", line, column});
          continue;
        case '!':
          advance();
          out.push_back({Tok::kBang, "!", line, column});
          continue;
        case '(':
          advance();
          out.push_back({Tok::kLParen, "(", line, column});
          continue;
        case ')':
          advance();
          out.push_back({Tok::kRParen, ")", line, column});
          continue;
        case ',':
          advance();
          out.push_back({Tok::kComma, ",", line, column});
          continue;
        case '|':
          advance();
          out.push_back({Tok::kBar, "|", line, column});
          continue;
        case '=':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '>') {
            advance();
            out.push_back({Tok::kArrow, "=>", line, column});
            continue;
          }
          throw ParseError("expected '=>'", line, column);
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// par    := prefix ('|' prefix)*
// prefix := '0' | name '?' '(' names ')' '=>' prefix | name '!' '(' names ')'
//         | '(' 'new' name ')' prefix | '(' par ')'
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Process run() {
    Process p = parse_par();
    if (peek().kind != Tok::kEnd) fail("expected end of input");
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(msg + (t.kind == Tok::kEnd ? " at end of input" : " near '" + t.text + "'"),
                     t.line, t.column);
  }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    take();
  }
  Name name() {
    if (peek().kind != Tok::kIdent) fail("expected a name");
    if (peek().text == "new") fail("'new' is reserved");
    return Name(take().text);
  }

  std::vector<Name> names(bool distinct) {
    std::vector<Name> out;
    expect(Tok::kLParen, "'('");
    if (peek().kind != Tok::kRParen) {
      for (;;) {
        const Token& at = peek();
        Name n = name();
        if (distinct && std::find(out.begin(), out.end(), n) != out.end()) {
          throw ParseError("duplicate input parameter '" + n.str() + "'", at.line, at.column);
        }
        out.push_back(std::move(n));
        if (peek().kind != Tok::kComma) break;
        take();
      }
    }
    expect(Tok::kRParen, "')'");
    return out;
  }

  Process parse_par() {
    Process left = parse_prefix();
    while (peek().kind == Tok::kBar) {
      take();
      left = Process::par(left, parse_prefix());
    }
    return left;
  }

  Process parse_prefix() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kZero:
        take();
        return Process::stop();
      case Tok::kLParen: {
        if (peek(1).kind == Tok::kIdent && peek(1).text == "new") {
          take();
          take();
          Name binder = name();
          expect(Tok::kRParen, "')' after restricted name");
          return Process::restrict(std::move(binder), parse_prefix());
        }
        take();
        Process inner = parse_par();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent: {
        Name subject = name();
        if (peek().kind == Tok::kQuestion) {
          take();
          auto params = names(true);
          expect(Tok::kArrow, "'=>'");
          return Process::input(std::move(subject), std::move(params), parse_prefix());
        }
        if (peek().kind == Tok::kBang) {
          take();
          return Process::output(std::move(subject), names(false));
        }
        fail("expected '?' or '!' after channel name");
      }
      default:
        fail("expected a process");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Name>& ns) {
  std::string out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ',';
    out += ns[i].str();
  }
  return out;
}

// `tight` means the surrounding position cannot hold a bare parallel
// composition (a prefix body or the right operand of '|').
std::string print_rec(const Process& p, bool tight) {
  switch (p.tag()) {
    case Tag::kStop:
      return "0";
    case Tag::kOutput:
      return p.as_output().subject.str() + "!(" + join(p.as_output().args) + ")";
    case Tag::kInput: {
      const auto& in = p.as_input();
      return in.subject.str() + "?(" + join(in.params) + ") => " + print_rec(in.body, true);
    }
    case Tag::kNew: {
      std::string body = print_rec(p.as_new().body, true);
      return "(new " + p.as_new().binder.str() + ")" + (body.front() == '(' ? "" : " ") + body;
    }
    case Tag::kPar: {
      const auto& par = p.as_par();
      std::string s = print_rec(par.left, false) + " | " + print_rec(par.right, true);
      return tight ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

Process parse(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

std::string print(const Process& p) { return print_rec(p, false); }

}  // namespace pitwo
