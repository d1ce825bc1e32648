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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lamsh/term.hpp"

namespace lamsh {

enum class RedexKind : std::uint8_t { BetaV, Sigma1, Sigma3 };

// Which root rules a reduction may fire.
enum class RuleSet : std::uint8_t { Shuffling, BetaVOnly, SigmaOnly };

enum class Mode : std::uint8_t { Balanced, Full };

enum class Direction : std::uint8_t { Fun, Arg, Body };

enum class Strategy : std::uint8_t { LeftmostOutermost };

std::string_view to_string(RedexKind k);
std::string_view to_string(Mode m);
std::string_view to_string(Direction d);
std::optional<RedexKind> redex_kind_from_string(std::string_view s);
std::optional<Mode> mode_from_string(std::string_view s);
std::optional<Direction> direction_from_string(std::string_view s);

bool admits(RuleSet rules, RedexKind k) noexcept;

// A path from the root: Fun/Arg descend into an application, Body into an
// abstraction.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<Direction> path) : path_(std::move(path)) {}

  const std::vector<Direction>& path() const noexcept { return path_; }
  bool is_root() const noexcept { return path_.empty(); }
  std::size_t depth() const noexcept { return path_.size(); }

  // Balanced iff every Body step directly follows a Fun step, i.e. the hole
  // context is generated by B ::= ⟨·⟩ | (λx.B)t | Bt | tB.
  bool is_balanced() const noexcept;

  Position child(Direction d) const;

  // "fun.body.arg"; the root prints as "root".
  std::string to_string() const;
  static Position from_string(std::string_view s);

  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Direction> path_;
};

struct ReductionStep {
  Position position;
  RedexKind kind = RedexKind::BetaV;
  Mode mode = Mode::Balanced;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

class InvalidPosition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidStep : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReductionSequence {
  Term start;
  std::vector<std::pair<ReductionStep, Term>> steps;
  std::size_t leng_betav = 0;

  explicit ReductionSequence(Term s) : start(std::move(s)) {}
  const Term& last() const noexcept { return steps.empty() ? start : steps.back().second; }
  std::size_t length() const noexcept { return steps.size(); }
  void push(ReductionStep step, Term result);
};

// ---------------------------------------------------------------------------
// Syntactic classes.
//   a ::= x v | x a | a n        (neutral, Λ_a)
//   n ::= v | a | (λx.n) a       (balanced normal forms, Λ_n)

enum class Shape : std::uint8_t { Value, AppNeutral, Normal, Reducible };

std::string_view to_string(Shape s);

bool is_neutral(const Term& t);
bool is_balanced_normal(const Term& t);
Shape classify(const Term& t);

// ---------------------------------------------------------------------------
// Redexes and steps.

// The root rule matching t, if any. At most one kind matches a given node.
std::optional<RedexKind> root_redex(const Term& t);

// Contracts a root redex of the given kind. σ binders clashing with the
// side condition are α-renamed first.
Term contract(const Term& redex, RedexKind kind);

// Pre-order (node, fun, arg / body): leftmost-outermost first.
std::vector<ReductionStep> find_redexes(const Term& t, Mode mode,
                                        RuleSet rules = RuleSet::Shuffling);

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& replacement);

Term apply_step(const Term& t, const ReductionStep& s);

// ---------------------------------------------------------------------------
// Normalisation.

inline constexpr std::size_t kDefaultNormalizeFuel = 10000;
inline constexpr std::size_t kDefaultEnumerateFuel = 25;
inline constexpr std::size_t kDefaultMaxSequences = 100000;

struct NormalizeResult {
  bool normal = false;  // false: fuel exhausted
  ReductionSequence sequence;

  const Term& term() const noexcept { return sequence.last(); }
};

NormalizeResult normalize(const Term& t, Mode mode, std::size_t fuel,
                          RuleSet rules = RuleSet::Shuffling,
                          Strategy strategy = Strategy::LeftmostOutermost);

struct EnumeratedSequence {
  ReductionSequence sequence;
  bool complete = false;  // ends in a normal form
};

// All maximal sequences of at most `fuel` steps, depth first.
std::vector<EnumeratedSequence> enumerate_sequences(
    const Term& t, Mode mode, std::size_t fuel = kDefaultEnumerateFuel,
    std::size_t max_sequences = kDefaultMaxSequences, RuleSet rules = RuleSet::Shuffling);

// |v|₀ = 0, |(λx.s)u|₀ = |s|₀ + |u|₀ + 1, |tu|₀ = |t|₀ + |u|₀ + 1.
std::size_t balanced_size(const Term& t);

enum class Equivalence : std::uint8_t { Equivalent, Distinct, Unknown };

std::string_view to_string(Equivalence e);

// Sound but incomplete: compares balanced normal forms reached within fuel.
Equivalence shuf_equiv_semi(const Term& t, const Term& u,
                            std::size_t fuel = kDefaultNormalizeFuel);

// ---------------------------------------------------------------------------
// Reduction graph over α-classes.

struct ReductionGraph {
  struct Edge {
    std::size_t target;
    ReductionStep step;
  };
  std::vector<Term> nodes;               // nodes[0] is the start term
  std::vector<std::vector<Edge>> edges;  // out-edges per node
  bool truncated = false;                // node cap reached before closure

  bool is_normal(std::size_t i) const { return edges[i].empty(); }
  std::vector<std::size_t> normal_nodes() const;

  // A cycle reachable from the start, as a node list, if one exists.
  std::optional<std::vector<std::size_t>> find_cycle() const;

  // For each complete path from the start: (number of β_v steps, index of
  // the normal form reached). Only meaningful for acyclic, untruncated graphs.
  std::vector<std::pair<std::size_t, std::size_t>> complete_outcomes() const;

  // Length of the longest path from the start (acyclic graphs only).
  std::size_t longest_path() const;
};

inline constexpr std::size_t kDefaultGraphNodeCap = 20000;

ReductionGraph explore(const Term& t, Mode mode, RuleSet rules = RuleSet::Shuffling,
                       std::size_t node_cap = kDefaultGraphNodeCap);

}  // namespace lamsh
