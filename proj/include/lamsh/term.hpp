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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lamsh {

enum class TermKind : std::uint8_t { Var, Abs, App };

struct TermNode;

// Immutable λ-term. Nodes are shared; copying a Term copies a pointer.
// There is deliberately no operator==: terms are compared with alpha_eq.
class Term {
 public:
  static Term var(std::string name);
  static Term abs(std::string binder, Term body);
  static Term app(Term fun, Term arg);

  TermKind kind() const noexcept;
  bool is_var() const noexcept { return kind() == TermKind::Var; }
  bool is_abs() const noexcept { return kind() == TermKind::Abs; }
  bool is_app() const noexcept { return kind() == TermKind::App; }
  bool is_value() const noexcept { return !is_app(); }

  // Variable name for Var, binder for Abs.
  const std::string& name() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  // Sorted, duplicate-free.
  const std::vector<std::string>& free_var_list() const noexcept;
  bool has_free(std::string_view x) const noexcept;
  bool is_closed() const noexcept { return free_var_list().empty(); }

  // Number of constructors (variables + abstractions + applications).
  std::size_t node_count() const noexcept;

  // Identity of the shared node, for memo tables.
  const void* identity() const noexcept { return node_.get(); }

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

struct TermNode {
  TermKind kind;
  std::string name;
  std::vector<Term> children;  // Abs: {body}; App: {fun, arg}
  std::vector<std::string> fv;
  std::size_t count = 1;
};

inline TermKind Term::kind() const noexcept { return node_->kind; }
inline const std::vector<std::string>& Term::free_var_list() const noexcept {
  return node_->fv;
}
inline std::size_t Term::node_count() const noexcept { return node_->count; }

// A term statically known to be a variable or an abstraction.
class ValueWitness {
 public:
  explicit ValueWitness(Term t);
  static std::optional<ValueWitness> of(const Term& t);
  const Term& term() const noexcept { return term_; }

 private:
  Term term_;
};

std::set<std::string> free_vars(const Term& t);

bool alpha_eq(const Term& t, const Term& u);

// Locally nameless rendering: bound variables become de Bruijn indices,
// free variables keep their names. Two terms are α-equivalent iff their
// keys are equal; the key also gives a total order on α-classes.
std::string alpha_key(const Term& t);

// Capture-avoiding t{v/x}. Binders of t that would capture a free variable
// of v are renamed with fresh_name.
Term subst(const Term& t, const std::string& x, const ValueWitness& v);

// t{y/x} for a variable y.
Term rename_free(const Term& t, const std::string& x, const std::string& y);

// Deterministic fresh name: strips trailing digits and primes from base and
// appends the smallest positive index not rejected by `taken`.
template <typename Taken>
std::string fresh_name(std::string_view base, Taken&& taken) {
  std::size_t end = base.size();
  while (end > 1 && (base[end - 1] == '\'' ||
                     (base[end - 1] >= '0' && base[end - 1] <= '9'))) {
    --end;
  }
  std::string stem(base.substr(0, end));
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

// All variable names (free or bound) occurring anywhere in t.
std::set<std::string> all_names(const Term& t);

// Frequently used closed terms.
Term identity_term();  // λx.x
Term delta_term();     // λx.x x

}  // namespace lamsh
