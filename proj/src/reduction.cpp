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

#include "lamsh/reduction.hpp"

#include <sstream>

namespace lamsh {

std::string_view to_string(RedexKind k) {
  switch (k) {
    case RedexKind::BetaV:
      return "beta_v";
    case RedexKind::Sigma1:
      return "sigma1";
    case RedexKind::Sigma3:
      return "sigma3";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::Balanced ? "balanced" : "full"; }

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Fun:
      return "fun";
    case Direction::Arg:
      return "arg";
    case Direction::Body:
      return "body";
  }
  return "?";
}

std::optional<RedexKind> redex_kind_from_string(std::string_view s) {
  if (s == "beta_v") return RedexKind::BetaV;
  if (s == "sigma1") return RedexKind::Sigma1;
  if (s == "sigma3") return RedexKind::Sigma3;
  return std::nullopt;
}

std::optional<Mode> mode_from_string(std::string_view s) {
  if (s == "balanced") return Mode::Balanced;
  if (s == "full") return Mode::Full;
  return std::nullopt;
}

std::optional<Direction> direction_from_string(std::string_view s) {
  if (s == "fun") return Direction::Fun;
  if (s == "arg") return Direction::Arg;
  if (s == "body") return Direction::Body;
  return std::nullopt;
}

bool admits(RuleSet rules, RedexKind k) noexcept {
  switch (rules) {
    case RuleSet::Shuffling:
      return true;
    case RuleSet::BetaVOnly:
      return k == RedexKind::BetaV;
    case RuleSet::SigmaOnly:
      return k != RedexKind::BetaV;
  }
  return false;
}

bool Position::is_balanced() const noexcept {
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (path_[i] == Direction::Body && (i == 0 || path_[i - 1] != Direction::Fun)) {
      return false;
    }
  }
  return true;
}

Position Position::child(Direction d) const {
  Position p = *this;
  p.path_.push_back(d);
  return p;
}

std::string Position::to_string() const {
  if (path_.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i) out += '.';
    out += lamsh::to_string(path_[i]);
  }
  return out;
}

Position Position::from_string(std::string_view s) {
  if (s == "root" || s.empty()) return {};
  std::vector<Direction> path;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t dot = s.find('.', start);
    std::string_view label = s.substr(start, dot == std::string_view::npos ? s.size() - start
                                                                           : dot - start);
    auto d = direction_from_string(label);
    if (!d) throw InvalidPosition("bad position label '" + std::string(label) + "'");
    path.push_back(*d);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Position(std::move(path));
}

void ReductionSequence::push(ReductionStep step, Term result) {
  if (step.kind == RedexKind::BetaV) ++leng_betav;
  steps.emplace_back(std::move(step), std::move(result));
}

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::Value:
      return "value";
    case Shape::AppNeutral:
      return "neutral";
    case Shape::Normal:
      return "normal";
    case Shape::Reducible:
      return "reducible";
  }
  return "?";
}

bool is_neutral(const Term& t) {
  if (!t.is_app()) return false;
  const Term& f = t.fun();
  const Term& a = t.arg();
  if (f.is_var()) return a.is_value() || is_neutral(a);  // x v | x a
  return is_neutral(f) && is_balanced_normal(a);          // a n
}

bool is_balanced_normal(const Term& t) {
  if (t.is_value()) return true;
  if (is_neutral(t)) return true;
  return t.fun().is_abs() && is_balanced_normal(t.fun().body()) && is_neutral(t.arg());
}

Shape classify(const Term& t) {
  if (t.is_value()) return Shape::Value;
  if (is_neutral(t)) return Shape::AppNeutral;
  if (is_balanced_normal(t)) return Shape::Normal;
  return Shape::Reducible;
}

std::optional<RedexKind> root_redex(const Term& t) {
  if (!t.is_app()) return std::nullopt;
  const Term& f = t.fun();
  const Term& a = t.arg();
  if (f.is_abs() && a.is_value()) return RedexKind::BetaV;
  if (f.is_app() && f.fun().is_abs()) return RedexKind::Sigma1;
  if (f.is_value() && a.is_app() && a.fun().is_abs()) return RedexKind::Sigma3;
  return std::nullopt;
}

Term contract(const Term& redex, RedexKind kind) {
  if (root_redex(redex) != kind) {
    throw InvalidStep(std::string("term is not a ") + std::string(to_string(kind)) + "-redex");
  }
  switch (kind) {
    case RedexKind::BetaV: {
      const Term& lam = redex.fun();
      return subst(lam.body(), lam.name(), ValueWitness(redex.arg()));
    }
    case RedexKind::Sigma1: {
      // (λx.t)u s  ↦  (λx.t s)u
      const Term& lam = redex.fun().fun();
      const Term& u = redex.fun().arg();
      const Term& s = redex.arg();
      std::string x = lam.name();
      Term body = lam.body();
      if (s.has_free(x)) {
        std::string z = fresh_name(x, [&](const std::string& c) {
          return body.has_free(c) || s.has_free(c);
        });
        body = rename_free(body, x, z);
        x = std::move(z);
      }
      return Term::app(Term::abs(std::move(x), Term::app(std::move(body), s)), u);
    }
    case RedexKind::Sigma3: {
      // v((λx.s)u)  ↦  (λx.v s)u
      const Term& v = redex.fun();
      const Term& lam = redex.arg().fun();
      const Term& u = redex.arg().arg();
      std::string x = lam.name();
      Term body = lam.body();
      if (v.has_free(x)) {
        std::string z = fresh_name(x, [&](const std::string& c) {
          return body.has_free(c) || v.has_free(c);
        });
        body = rename_free(body, x, z);
        x = std::move(z);
      }
      return Term::app(Term::abs(std::move(x), Term::app(v, std::move(body))), u);
    }
  }
  return redex;
}

namespace {

void collect_redexes(const Term& t, Position& here, bool may_enter_body, Mode mode,
                     RuleSet rules, std::vector<ReductionStep>& out) {
  if (auto k = root_redex(t); k && admits(rules, *k)) {
    out.push_back(ReductionStep{here, *k, mode});
  }
  switch (t.kind()) {
    case TermKind::Var:
      return;
    case TermKind::Abs:
      if (mode == Mode::Full || may_enter_body) {
        Position inner = here.child(Direction::Body);
        collect_redexes(t.body(), inner, false, mode, rules, out);
      }
      return;
    case TermKind::App: {
      Position f = here.child(Direction::Fun);
      collect_redexes(t.fun(), f, true, mode, rules, out);
      Position a = here.child(Direction::Arg);
      collect_redexes(t.arg(), a, false, mode, rules, out);
      return;
    }
  }
}

const Term& descend(const Term& t, Direction d) {
  switch (d) {
    case Direction::Fun:
      if (t.is_app()) return t.fun();
      break;
    case Direction::Arg:
      if (t.is_app()) return t.arg();
      break;
    case Direction::Body:
      if (t.is_abs()) return t.body();
      break;
  }
  throw InvalidPosition("position leaves the term at a '" + std::string(to_string(d)) + "' step");
}

Term replace_rec(const Term& t, const std::vector<Direction>& path, std::size_t i,
                 const Term& replacement) {
  if (i == path.size()) return replacement;
  const Term& next = descend(t, path[i]);
  Term inner = replace_rec(next, path, i + 1, replacement);
  switch (path[i]) {
    case Direction::Fun:
      return Term::app(std::move(inner), t.arg());
    case Direction::Arg:
      return Term::app(t.fun(), std::move(inner));
    case Direction::Body:
      return Term::abs(t.name(), std::move(inner));
  }
  return t;
}

}  // namespace

std::vector<ReductionStep> find_redexes(const Term& t, Mode mode, RuleSet rules) {
  std::vector<ReductionStep> out;
  Position root;
  collect_redexes(t, root, false, mode, rules, out);
  return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (Direction d : p.path()) cur = &descend(*cur, d);
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
  return replace_rec(t, p.path(), 0, replacement);
}

Term apply_step(const Term& t, const ReductionStep& s) {
  if (s.mode == Mode::Balanced && !s.position.is_balanced()) {
    throw InvalidStep("position " + s.position.to_string() + " is not balanced");
  }
  const Term* sub = nullptr;
  try {
    sub = &subterm_at(t, s.position);
  } catch (const InvalidPosition& e) {
    throw InvalidStep(e.what());
  }
  if (root_redex(*sub) != s.kind) {
    throw InvalidStep("no " + std::string(to_string(s.kind)) + "-redex at " +
                      s.position.to_string());
  }
  return replace_at(t, s.position, contract(*sub, s.kind));
}

NormalizeResult normalize(const Term& t, Mode mode, std::size_t fuel, RuleSet rules,
                          Strategy /*strategy*/) {
  NormalizeResult r{false, ReductionSequence(t)};
  for (std::size_t i = 0;; ++i) {
    auto redexes = find_redexes(r.sequence.last(), mode, rules);
    if (redexes.empty()) {
      r.normal = true;
      return r;
    }
    if (i == fuel) return r;
    const ReductionStep& s = redexes.front();
    Term next = apply_step(r.sequence.last(), s);
    r.sequence.push(s, std::move(next));
  }
}

namespace {

void enumerate_rec(ReductionSequence& current, Mode mode, std::size_t fuel,
                   std::size_t max_sequences, RuleSet rules,
                   std::vector<EnumeratedSequence>& out) {
  auto redexes = find_redexes(current.last(), mode, rules);
  if (redexes.empty() || current.length() == fuel) {
    if (out.size() == max_sequences) {
      throw BudgetExceeded("more than " + std::to_string(max_sequences) +
                           " maximal reduction sequences");
    }
    out.push_back(EnumeratedSequence{current, redexes.empty()});
    return;
  }
  for (const auto& s : redexes) {
    Term next = apply_step(current.last(), s);
    current.push(s, std::move(next));
    enumerate_rec(current, mode, fuel, max_sequences, rules, out);
    if (current.steps.back().first.kind == RedexKind::BetaV) --current.leng_betav;
    current.steps.pop_back();
  }
}

}  // namespace

std::vector<EnumeratedSequence> enumerate_sequences(const Term& t, Mode mode, std::size_t fuel,
                                                    std::size_t max_sequences, RuleSet rules) {
  std::vector<EnumeratedSequence> out;
  ReductionSequence current(t);
  enumerate_rec(current, mode, fuel, max_sequences, rules, out);
  return out;
}

std::size_t balanced_size(const Term& t) {
  if (t.is_value()) return 0;
  const Term& f = t.fun();
  std::size_t left = f.is_abs() ? balanced_size(f.body()) : balanced_size(f);
  return left + balanced_size(t.arg()) + 1;
}

std::string_view to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent:
      return "equivalent";
    case Equivalence::Distinct:
      return "distinct";
    case Equivalence::Unknown:
      return "unknown";
  }
  return "?";
}

Equivalence shuf_equiv_semi(const Term& t, const Term& u, std::size_t fuel) {
  auto rt = normalize(t, Mode::Balanced, fuel);
  if (!rt.normal) return Equivalence::Unknown;
  auto ru = normalize(u, Mode::Balanced, fuel);
  if (!ru.normal) return Equivalence::Unknown;
  return alpha_eq(rt.term(), ru.term()) ? Equivalence::Equivalent : Equivalence::Distinct;
}

}  // namespace lamsh
