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
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lamsh/parser.hpp"
#include "lamsh/reduction.hpp"
#include "lamsh/term.hpp"
#include "lamsh/types.hpp"

namespace lamsh {

// Γ ⊢ t : P
struct Judgment {
  Environment env;
  Term subject;
  PosType type;
};

bool same_judgment(const Judgment& a, const Judgment& b);  // subjects up to α
std::string to_string(const Judgment& j, const PrintOptions& opts = {});

enum class Rule : std::uint8_t { Ax, App, Lam };

// A node of a derivation violates its rule. `path` locates the node, e.g.
// "root.left.premises[1]".
class RuleViolation : public std::runtime_error {
 public:
  RuleViolation(std::string path, std::string reason);
  const std::string& path() const noexcept { return path_; }
  const std::string& reason() const noexcept { return reason_; }
  RuleViolation under(const std::string& prefix) const;

 private:
  std::string path_;
  std::string reason_;
};

class DerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class SplitMismatch : public DerivationError {
 public:
  using DerivationError::DerivationError;
};
class TypeMismatch : public DerivationError {
 public:
  using DerivationError::DerivationError;
};
class StepMismatch : public DerivationError {
 public:
  using DerivationError::DerivationError;
};
class NotNormal : public DerivationError {
 public:
  using DerivationError::DerivationError;
};

struct DerivationNode;

// A type derivation built from the rules
//
//   ─────────── ax      Γ ⊢ t : [⟨P,Q⟩]   Γ' ⊢ u : P         Γᵢ, x:Pᵢ ⊢ t : Qᵢ  (1 ≤ i ≤ n)
//   x:P ⊢ x : P         ───────────────────────── @     ─────────────────────────────── λ
//                          Γ ⊎ Γ' ⊢ t u : Q              ⊎Γᵢ ⊢ λx.t : [⟨P₁,Q₁⟩,…,⟨Pₙ,Qₙ⟩]
//
// The smart constructors compute the conclusion and reject rule violations,
// so every Derivation value is well formed. Abstraction nodes carry their
// body term because a 0-premise λ rule types λx.t for any t.
class Derivation {
 public:
  static Derivation ax(std::string x, PosType type);
  static Derivation app(Derivation left, Derivation right);
  // Premises are stored in canonical order (by arrow type, then by shape).
  static Derivation lam(std::string binder, Term body, std::vector<Derivation> premises);

  Rule rule() const noexcept;
  // Variable of an ax node, binder of a λ node.
  const std::string& name() const;
  const Derivation& left() const;
  const Derivation& right() const;
  const std::vector<Derivation>& premises() const;
  const Term& lam_body() const;

  const Judgment& conclusion() const noexcept;
  const Environment& env() const noexcept { return conclusion().env; }
  const Term& subject() const noexcept { return conclusion().subject; }
  const PosType& type() const noexcept { return conclusion().type; }

  // Number of @ nodes.
  std::size_t size() const noexcept;

 private:
  explicit Derivation(std::shared_ptr<const DerivationNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const DerivationNode> node_;
};

struct DerivationNode {
  Rule rule;
  std::string name;
  Term body;  // λ nodes only; a placeholder otherwise
  std::vector<Derivation> children;
  Judgment conclusion;
  std::size_t size = 0;
};

inline Rule Derivation::rule() const noexcept { return node_->rule; }
inline const Judgment& Derivation::conclusion() const noexcept { return node_->conclusion; }
inline std::size_t Derivation::size() const noexcept { return node_->size; }

// Recomputes every conclusion bottom-up from the rule data alone and returns
// the root judgment.
Judgment check(const Derivation& d);

inline std::size_t size(const Derivation& d) noexcept { return d.size(); }

// α-invariant canonical rendering; equal keys ⟺ equal derivations up to
// renaming of bound variables and premise order.
std::string derivation_key(const Derivation& d);
inline bool same_derivation(const Derivation& a, const Derivation& b) {
  return derivation_key(a) == derivation_key(b);
}

// ---------------------------------------------------------------------------
// Values.

// The unique derivation ⊢ v : 𝟘 (size 0).
Derivation empty_value_derivation(const Term& v);

// Splits Δ ⊢ v : P₁ ⊎ … ⊎ Pₚ into Δᵢ ⊢ v : Pᵢ with ⊎Δᵢ = Δ and sizes summing
// to the original.
std::vector<Derivation> decompose_value(const Derivation& d, const std::vector<PosType>& split);

// Inverse of decompose_value. `parts` may be empty (yields the 𝟘 derivation).
Derivation merge_value(const Term& v, const std::vector<Derivation>& parts);

// ---------------------------------------------------------------------------
// Substitution and renaming.

// From Γ, x:P ⊢ t : Q and Δ ⊢ v : P builds Γ ⊎ Δ ⊢ t{v/x} : Q of size
// |body| + |arg|.
Derivation subst_derivation(const Derivation& body, const std::string& x, const Derivation& arg);

// Renames free x to y (y must not be free in the subject).
Derivation rename_derivation(const Derivation& d, const std::string& x, const std::string& y);

// ---------------------------------------------------------------------------
// Subject reduction and expansion.
//
// For Balanced steps the size changes by exactly −1 (β_v) or 0 (σ) when
// reducing, +1 or 0 when expanding. Full steps are supported too; under an
// abstraction with k premises the step is replayed in each premise, so a
// β_v step changes the size by −k.

Derivation subject_reduce(const Derivation& d, const ReductionStep& step);
Derivation subject_expand(const Derivation& after, const Term& before, const ReductionStep& step);

// Pulls a derivation of seq.last() back to a derivation of seq.start.
Derivation pull_back(const Derivation& last, const ReductionSequence& seq);

// λy.((λx.t)v) : ⊎ᵢ[⟨P'ᵢ,Pᵢ⟩]  ⟶  (λx.λy.t)v, size + 1 − k  (y ∉ fv(v))
Derivation commute_abs_abs(const Derivation& d);
// ((λx.t)v)((λx.u)v) : P  ⟶  (λx.tu)v, size − 1
Derivation commute_app_abs(const Derivation& d);

// ---------------------------------------------------------------------------
// Normal forms.

// Constructive typing of a balanced normal form. Neutral terms accept any
// target; other shapes accept the target only where it is attainable.
Derivation type_normal(const Term& t, const std::optional<PosType>& target = std::nullopt);

// A derivation of size |t|₀.
Derivation min_derivation_normal(const Term& t);

struct EmptyDerivation {
  Derivation derivation;  // ⊢ t : 𝟘
  ReductionSequence sequence;
};

// Semi-decision: normalises t and pulls the 𝟘 derivation of the value back.
std::optional<EmptyDerivation> derive_empty(const Term& t, std::size_t fuel = kDefaultNormalizeFuel);

// ---------------------------------------------------------------------------
// Bounded search.

struct SearchLimits {
  std::size_t type_cap = 6;                   // every type in the derivation
  std::size_t max_size = static_cast<std::size_t>(-1);  // number of @ nodes
  std::size_t max_results = 500000;
  // Variables that every environment must map to 𝟘. Binders of the searched
  // term must not reuse these names.
  std::vector<std::string> zero_vars;
};

inline constexpr std::size_t kDefaultTypeCap = 6;

class DerivationSearch {
 public:
  explicit DerivationSearch(SearchLimits limits = {});

  // All derivations of t : q within the limits, each listed once.
  const std::vector<Derivation>& at_type(const Term& t, const PosType& q);
  // All derivations of t with any conclusion type within the limits.
  std::vector<Derivation> any_type(const Term& t);

  const SearchLimits& limits() const noexcept { return limits_; }

 private:
  std::vector<Derivation> search(const Term& t, const PosType& q, std::size_t budget);
  const std::vector<Derivation>& cached(const Term& t, const PosType& q, std::size_t budget);
  bool within_cap(const Derivation& d) const;

  SearchLimits limits_;
  std::vector<PosType> types_;
  std::map<std::tuple<const void*, std::string, std::size_t>, std::vector<Derivation>> memo_;
  std::vector<Term> keep_alive_;
  std::size_t produced_ = 0;
};

}  // namespace lamsh
