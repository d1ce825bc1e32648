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

#include "lamsh/term.hpp"

#include <algorithm>
#include <map>

namespace lamsh {

namespace {

std::vector<std::string> merge_sorted(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

Term Term::var(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Var;
  n->fv = {name};
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::abs(std::string binder, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Abs;
  n->fv = body.free_var_list();
  auto it = std::lower_bound(n->fv.begin(), n->fv.end(), binder);
  if (it != n->fv.end() && *it == binder) n->fv.erase(it);
  n->count = 1 + body.node_count();
  n->name = std::move(binder);
  n->children.push_back(std::move(body));
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::App;
  n->fv = merge_sorted(fun.free_var_list(), arg.free_var_list());
  n->count = 1 + fun.node_count() + arg.node_count();
  n->children.push_back(std::move(fun));
  n->children.push_back(std::move(arg));
  return Term(std::move(n));
}

const std::string& Term::name() const {
  if (is_app()) throw std::logic_error("Term::name on an application");
  return node_->name;
}

const Term& Term::body() const {
  if (!is_abs()) throw std::logic_error("Term::body on a non-abstraction");
  return node_->children[0];
}

const Term& Term::fun() const {
  if (!is_app()) throw std::logic_error("Term::fun on a non-application");
  return node_->children[0];
}

const Term& Term::arg() const {
  if (!is_app()) throw std::logic_error("Term::arg on a non-application");
  return node_->children[1];
}

bool Term::has_free(std::string_view x) const noexcept {
  const auto& fv = node_->fv;
  return std::binary_search(fv.begin(), fv.end(), x,
                            [](std::string_view a, std::string_view b) { return a < b; });
}

ValueWitness::ValueWitness(Term t) : term_(std::move(t)) {
  if (!term_.is_value()) {
    throw std::invalid_argument("ValueWitness: an application is not a value");
  }
}

std::optional<ValueWitness> ValueWitness::of(const Term& t) {
  if (!t.is_value()) return std::nullopt;
  return ValueWitness(t);
}

std::set<std::string> free_vars(const Term& t) {
  const auto& fv = t.free_var_list();
  return {fv.begin(), fv.end()};
}

namespace {

// Index of x in the binder stack counted from the innermost binder, or -1.
int bound_index(const std::vector<std::string>& stack, const std::string& x) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (stack[i] == x) return static_cast<int>(stack.size() - 1 - i);
  }
  return -1;
}

bool alpha_eq_rec(const Term& t, const Term& u, std::vector<std::string>& st,
                  std::vector<std::string>& su) {
  if (t.identity() == u.identity() && st == su) return true;
  if (t.kind() != u.kind()) return false;
  switch (t.kind()) {
    case TermKind::Var: {
      int i = bound_index(st, t.name());
      int j = bound_index(su, u.name());
      if (i != j) return false;
      return i >= 0 || t.name() == u.name();
    }
    case TermKind::Abs: {
      st.push_back(t.name());
      su.push_back(u.name());
      bool r = alpha_eq_rec(t.body(), u.body(), st, su);
      st.pop_back();
      su.pop_back();
      return r;
    }
    case TermKind::App:
      return alpha_eq_rec(t.fun(), u.fun(), st, su) &&
             alpha_eq_rec(t.arg(), u.arg(), st, su);
  }
  return false;
}

void alpha_key_rec(const Term& t, std::vector<std::string>& stack, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var: {
      int i = bound_index(stack, t.name());
      if (i >= 0) {
        out += '#';
        out += std::to_string(i);
      } else {
        out += t.name();
      }
      out += ' ';
      return;
    }
    case TermKind::Abs:
      out += "\\ ";
      stack.push_back(t.name());
      alpha_key_rec(t.body(), stack, out);
      stack.pop_back();
      return;
    case TermKind::App:
      out += "@ ";
      alpha_key_rec(t.fun(), stack, out);
      alpha_key_rec(t.arg(), stack, out);
      return;
  }
}

Term subst_rec(const Term& t, const std::string& x, const Term& v) {
  if (!t.has_free(x)) return t;
  switch (t.kind()) {
    case TermKind::Var:
      return v;  // t is exactly x here
    case TermKind::App:
      return Term::app(subst_rec(t.fun(), x, v), subst_rec(t.arg(), x, v));
    case TermKind::Abs: {
      const std::string& y = t.name();
      if (!v.has_free(y)) return Term::abs(y, subst_rec(t.body(), x, v));
      const Term& body = t.body();
      std::string z = fresh_name(y, [&](const std::string& c) {
        return c == x || body.has_free(c) || v.has_free(c);
      });
      Term renamed = subst_rec(body, y, Term::var(z));
      return Term::abs(z, subst_rec(renamed, x, v));
    }
  }
  return t;
}

void all_names_rec(const Term& t, std::set<std::string>& out) {
  out.insert(t.is_app() ? std::string() : t.name());
  if (t.is_abs()) all_names_rec(t.body(), out);
  if (t.is_app()) {
    all_names_rec(t.fun(), out);
    all_names_rec(t.arg(), out);
  }
}

}  // namespace

bool alpha_eq(const Term& t, const Term& u) {
  std::vector<std::string> st, su;
  return alpha_eq_rec(t, u, st, su);
}

std::string alpha_key(const Term& t) {
  std::vector<std::string> stack;
  std::string out;
  out.reserve(t.node_count() * 3);
  alpha_key_rec(t, stack, out);
  return out;
}

Term subst(const Term& t, const std::string& x, const ValueWitness& v) {
  return subst_rec(t, x, v.term());
}

Term rename_free(const Term& t, const std::string& x, const std::string& y) {
  if (x == y) return t;
  return subst_rec(t, x, Term::var(y));
}

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  all_names_rec(t, out);
  out.erase(std::string());
  return out;
}

Term identity_term() { return Term::abs("x", Term::var("x")); }

Term delta_term() {
  return Term::abs("x", Term::app(Term::var("x"), Term::var("x")));
}

}  // namespace lamsh
