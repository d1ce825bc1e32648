// Copyright 2026 The lamsh Authors.
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

#include "lamsh/parser.hpp"

#include <cctype>
#include <vector>

namespace lamsh {

SyntaxError::SyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kLambdaUtf8 = "\xCE\xBB";

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& opts) : src_(src), opts_(opts) {}

  Term run() {
    skip_ws();
    if (at_end()) fail("empty input");
    Term t = term();
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return t;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at_lambda() const {
    if (at_end()) return false;
    return src_[pos_] == '\\' || src_.substr(pos_, kLambdaUtf8.size()) == kLambdaUtf8;
  }

  bool at_ident_start() const {
    return !at_end() && std::isalpha(static_cast<unsigned char>(src_[pos_]));
  }

  std::string ident() {
    if (!at_ident_start()) fail("expected identifier");
    std::size_t start = pos_;
    while (!at_end()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  bool is_constant(const std::string& x) const {
    return opts_.expand_constants && (x == "I" || x == "D") && !bound(x);
  }

  bool bound(const std::string& x) const {
    for (const auto& b : binders_) {
      if (b == x) return true;
    }
    return false;
  }

  Term term() {
    skip_ws();
    if (at_lambda()) return abstraction();
    return application();
  }

  Term abstraction() {
    pos_ += src_[pos_] == '\\' ? 1 : kLambdaUtf8.size();
    skip_ws();
    std::string x = ident();
    if (opts_.expand_constants && (x == "I" || x == "D")) {
      fail("the constant '" + x + "' cannot be rebound");
    }
    skip_ws();
    if (at_end() || src_[pos_] != '.') fail("expected '.' after binder");
    ++pos_;
    binders_.push_back(x);
    Term body = term();
    binders_.pop_back();
    return Term::abs(std::move(x), std::move(body));
  }

  Term application() {
    Term head = atom();
    for (;;) {
      skip_ws();
      if (!(at_ident_start() || (!at_end() && src_[pos_] == '('))) break;
      head = Term::app(std::move(head), atom());
    }
    return head;
  }

  Term atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (src_[pos_] == '(') {
      ++pos_;
      Term t = term();
      skip_ws();
      if (at_end() || src_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (at_lambda()) fail("an abstraction in argument position must be parenthesised");
    std::string x = ident();
    if (is_constant(x)) return x == "I" ? identity_term() : delta_term();
    return Term::var(std::move(x));
  }

  std::string_view src_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;
};

void print(const Term& t, const PrintOptions& opts, std::string& out);

void print_atom(const Term& t, const PrintOptions& opts, std::string& out) {
  if (t.is_var()) {
    out += t.name();
  } else {
    out += '(';
    print(t, opts, out);
    out += ')';
  }
}

void print(const Term& t, const PrintOptions& opts, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Abs:
      out += opts.unicode ? std::string(kLambdaUtf8) : std::string("\\");
      out += t.name();
      out += '.';
      print(t.body(), opts, out);
      return;
    case TermKind::App:
      if (t.fun().is_abs()) {
        print_atom(t.fun(), opts, out);
      } else {
        print(t.fun(), opts, out);
      }
      if (t.arg().is_var()) out += ' ';
      print_atom(t.arg(), opts, out);
      return;
  }
}

}  // namespace

Term parse(std::string_view src, const ParseOptions& opts) {
  return Parser(src, opts).run();
}

std::string to_string(const Term& t, const PrintOptions& opts) {
  std::string out;
  print(t, opts, out);
  return out;
}

}  // namespace lamsh
