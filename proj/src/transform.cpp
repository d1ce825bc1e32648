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

// Transformations of derivations: value splitting, substitution, subject
// reduction/expansion, commutations and the constructive typing of normal
// forms.

#include <algorithm>

#include "lamsh/derivation.hpp"

namespace lamsh {

namespace {

bool taken_in(const std::string& c, std::initializer_list<const Term*> terms,
              std::initializer_list<std::string_view> names) {
  for (const Term* t : terms) {
    if (t->has_free(c)) return true;
  }
  for (auto n : names) {
    if (n == c) return true;
  }
  return false;
}

Derivation rename_premise(const Derivation& p, const std::string& from, const std::string& to) {
  return from == to ? p : rename_derivation(p, from, to);
}

}  // namespace

Derivation empty_value_derivation(const Term& v) {
  if (v.is_var()) return Derivation::ax(v.name(), PosType::zero());
  if (v.is_abs()) return Derivation::lam(v.name(), v.body(), {});
  throw std::invalid_argument("empty_value_derivation: " + to_string(v) + " is not a value");
}

std::vector<Derivation> decompose_value(const Derivation& d, const std::vector<PosType>& split) {
  if (!(mset_sum(split) == d.type())) {
    throw SplitMismatch("split does not sum to " + to_string(d.type()));
  }
  std::vector<Derivation> out;
  out.reserve(split.size());
  switch (d.rule()) {
    case Rule::Ax:
      for (const auto& p : split) out.push_back(Derivation::ax(d.name(), p));
      return out;
    case Rule::Lam: {
      const auto& prems = d.premises();
      std::vector<bool> used(prems.size(), false);
      for (const auto& part : split) {
        std::vector<Derivation> chosen;
        for (const auto& arrow : part.elems()) {
          bool found = false;
          for (std::size_t i = 0; i < prems.size() && !found; ++i) {
            if (used[i]) continue;
            if (NegType{prems[i].env().at(d.name()), prems[i].type()} == arrow) {
              used[i] = true;
              chosen.push_back(prems[i]);
              found = true;
            }
          }
          if (!found) throw SplitMismatch("no premise left for arrow " + to_string(arrow));
        }
        out.push_back(Derivation::lam(d.name(), d.lam_body(), std::move(chosen)));
      }
      return out;
    }
    case Rule::App:
      break;
  }
  throw SplitMismatch("decompose_value: subject is not a value");
}

Derivation merge_value(const Term& v, const std::vector<Derivation>& parts) {
  if (parts.empty()) return empty_value_derivation(v);
  if (v.is_var()) {
    std::vector<PosType> types;
    for (const auto& p : parts) {
      if (p.rule() != Rule::Ax || p.name() != v.name()) {
        throw SplitMismatch("merge_value: part does not type " + v.name());
      }
      types.push_back(p.type());
    }
    return Derivation::ax(v.name(), mset_sum(types));
  }
  if (!v.is_abs()) throw SplitMismatch("merge_value: " + to_string(v) + " is not a value");
  std::vector<Derivation> prems;
  for (const auto& p : parts) {
    if (p.rule() != Rule::Lam || !alpha_eq(p.subject(), v)) {
      throw SplitMismatch("merge_value: part does not type " + to_string(v));
    }
    for (const auto& q : p.premises()) prems.push_back(rename_premise(q, p.name(), v.name()));
  }
  return Derivation::lam(v.name(), v.body(), std::move(prems));
}

// ---------------------------------------------------------------------------

namespace {

Derivation subst_rec(const Derivation& d, const std::string& x, const Derivation& arg) {
  if (!d.subject().has_free(x)) return d;  // arg has type 𝟘 and empty env
  switch (d.rule()) {
    case Rule::Ax:
      return arg;
    case Rule::App: {
      auto parts = decompose_value(arg, {d.left().env().at(x), d.right().env().at(x)});
      return Derivation::app(subst_rec(d.left(), x, parts[0]), subst_rec(d.right(), x, parts[1]));
    }
    case Rule::Lam: {
      Term after = subst(d.subject(), x, ValueWitness(arg.subject()));
      const std::string& z = after.name();
      std::vector<PosType> split;
      for (const auto& p : d.premises()) split.push_back(p.env().at(x));
      auto parts = decompose_value(arg, split);
      std::vector<Derivation> prems;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        prems.push_back(subst_rec(rename_premise(d.premises()[i], d.name(), z), x, parts[i]));
      }
      return Derivation::lam(z, after.body(), std::move(prems));
    }
  }
  return d;
}

}  // namespace

Derivation subst_derivation(const Derivation& body, const std::string& x, const Derivation& arg) {
  if (!arg.subject().is_value()) {
    throw TypeMismatch("substituted derivation does not type a value");
  }
  if (!(body.env().at(x) == arg.type())) {
    throw TypeMismatch("the body assigns " + to_string(body.env().at(x)) + " to " + x +
                       " but the argument has type " + to_string(arg.type()));
  }
  return subst_rec(body, x, arg);
}

Derivation rename_derivation(const Derivation& d, const std::string& x, const std::string& y) {
  if (x == y) return d;
  if (d.subject().has_free(y)) {
    throw std::invalid_argument("rename_derivation: " + y + " is already free");
  }
  return subst_derivation(d, x, Derivation::ax(y, d.env().at(x)));
}

// ---------------------------------------------------------------------------
// Subject reduction.

namespace {

const Derivation& only_premise(const Derivation& lam) {
  if (lam.rule() != Rule::Lam || lam.premises().size() != 1) {
    throw DerivationError("expected an abstraction with a single premise");
  }
  return lam.premises().front();
}

Derivation reduce_root(const Derivation& d, RedexKind kind) {
  if (d.rule() != Rule::App) throw InvalidStep("derivation shape does not match the redex");
  switch (kind) {
    case RedexKind::BetaV: {
      const Derivation& lam = d.left();
      return subst_derivation(only_premise(lam), lam.name(), d.right());
    }
    case RedexKind::Sigma1: {
      const Derivation& inner = d.left();
      const Derivation& lam = inner.left();
      Term after = contract(d.subject(), kind);
      const Term& abs = after.fun();
      Derivation dt = rename_premise(only_premise(lam), lam.name(), abs.name());
      Derivation body = Derivation::app(dt, d.right());
      return Derivation::app(Derivation::lam(abs.name(), abs.body(), {body}), inner.right());
    }
    case RedexKind::Sigma3: {
      const Derivation& inner = d.right();
      const Derivation& lam = inner.left();
      Term after = contract(d.subject(), kind);
      const Term& abs = after.fun();
      Derivation ds = rename_premise(only_premise(lam), lam.name(), abs.name());
      Derivation body = Derivation::app(d.left(), ds);
      return Derivation::app(Derivation::lam(abs.name(), abs.body(), {body}), inner.right());
    }
  }
  return d;
}

Derivation reduce_at(const Derivation& d, const ReductionStep& step, std::size_t i) {
  const auto& path = step.position.path();
  if (i == path.size()) return reduce_root(d, step.kind);
  switch (path[i]) {
    case Direction::Fun:
      return Derivation::app(reduce_at(d.left(), step, i + 1), d.right());
    case Direction::Arg:
      return Derivation::app(d.left(), reduce_at(d.right(), step, i + 1));
    case Direction::Body: {
      ReductionStep rest{Position({path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end()}),
                         step.kind, Mode::Full};
      Term body = apply_step(d.lam_body(), rest);
      std::vector<Derivation> prems;
      for (const auto& p : d.premises()) prems.push_back(reduce_at(p, step, i + 1));
      return Derivation::lam(d.name(), std::move(body), std::move(prems));
    }
  }
  return d;
}

}  // namespace

Derivation subject_reduce(const Derivation& d, const ReductionStep& step) {
  apply_step(d.subject(), step);  // validates the step
  return reduce_at(d, step, 0);
}

// ---------------------------------------------------------------------------
// Subject expansion.

namespace {

// Walks s alongside a derivation of s{v/x}. Occurrences of x become axioms and
// the derivations found there are collected in `pieces`.
Derivation anti_subst(const Derivation& d, const Term& s, const std::string& x, const Term& v,
                      std::vector<Derivation>& pieces) {
  if (!s.has_free(x)) return d;
  switch (s.kind()) {
    case TermKind::Var:
      pieces.push_back(d);
      return Derivation::ax(x, d.type());
    case TermKind::App:
      if (d.rule() != Rule::App) throw StepMismatch("derivation does not follow the redex body");
      return Derivation::app(anti_subst(d.left(), s.fun(), x, v, pieces),
                             anti_subst(d.right(), s.arg(), x, v, pieces));
    case TermKind::Abs: {
      if (d.rule() != Rule::Lam) throw StepMismatch("derivation does not follow the redex body");
      std::string w = s.name();
      Term body = s.body();
      if (w == x || v.has_free(w)) {
        w = fresh_name(w, [&](const std::string& c) {
          return taken_in(c, {&body, &v}, {x, s.name(), d.name()});
        });
        body = rename_free(body, s.name(), w);
      }
      std::vector<Derivation> prems;
      for (const auto& p : d.premises()) {
        prems.push_back(anti_subst(rename_premise(p, d.name(), w), body, x, v, pieces));
      }
      return Derivation::lam(w, std::move(body), std::move(prems));
    }
  }
  return d;
}

Derivation expand_root(const Derivation& d, const Term& before, RedexKind kind) {
  switch (kind) {
    case RedexKind::BetaV: {
      const Term& abs = before.fun();
      std::vector<Derivation> pieces;
      Derivation ds = anti_subst(d, abs.body(), abs.name(), before.arg(), pieces);
      Derivation dv = merge_value(before.arg(), pieces);
      return Derivation::app(Derivation::lam(abs.name(), abs.body(), {ds}), dv);
    }
    case RedexKind::Sigma1: {
      // (λz.t s)u  ⟵  (λx.t)u s
      if (d.rule() != Rule::App) throw StepMismatch("derivation does not type a σ1-contractum");
      const Derivation& lam = d.left();
      const Derivation& body = only_premise(lam);
      if (body.rule() != Rule::App) throw StepMismatch("derivation does not type a σ1-contractum");
      const Term& abs = before.fun().fun();
      Derivation dt = rename_premise(body.left(), lam.name(), abs.name());
      Derivation inner = Derivation::app(Derivation::lam(abs.name(), abs.body(), {dt}), d.right());
      return Derivation::app(inner, body.right());
    }
    case RedexKind::Sigma3: {
      // (λz.v s)u  ⟵  v((λx.s)u)
      if (d.rule() != Rule::App) throw StepMismatch("derivation does not type a σ3-contractum");
      const Derivation& lam = d.left();
      const Derivation& body = only_premise(lam);
      if (body.rule() != Rule::App) throw StepMismatch("derivation does not type a σ3-contractum");
      const Term& abs = before.arg().fun();
      Derivation ds = rename_premise(body.right(), lam.name(), abs.name());
      Derivation inner = Derivation::app(Derivation::lam(abs.name(), abs.body(), {ds}), d.right());
      return Derivation::app(body.left(), inner);
    }
  }
  return d;
}

Derivation expand_at(const Derivation& d, const Term& before, const ReductionStep& step,
                     std::size_t i) {
  const auto& path = step.position.path();
  if (i == path.size()) return expand_root(d, before, step.kind);
  switch (path[i]) {
    case Direction::Fun:
      if (d.rule() != Rule::App) break;
      return Derivation::app(expand_at(d.left(), before.fun(), step, i + 1), d.right());
    case Direction::Arg:
      if (d.rule() != Rule::App) break;
      return Derivation::app(d.left(), expand_at(d.right(), before.arg(), step, i + 1));
    case Direction::Body: {
      if (d.rule() != Rule::Lam) break;
      std::vector<Derivation> prems;
      for (const auto& p : d.premises()) {
        prems.push_back(
            expand_at(rename_premise(p, d.name(), before.name()), before.body(), step, i + 1));
      }
      return Derivation::lam(before.name(), before.body(), std::move(prems));
    }
  }
  throw StepMismatch("derivation shape does not follow the step position");
}

}  // namespace

Derivation subject_expand(const Derivation& after, const Term& before, const ReductionStep& step) {
  Term reduced = [&] {
    try {
      return apply_step(before, step);
    } catch (const std::exception& e) {
      throw StepMismatch(std::string("step does not apply to the source term: ") + e.what());
    }
  }();
  if (!alpha_eq(reduced, after.subject())) {
    throw StepMismatch("step leads to " + to_string(reduced) + ", not to " +
                       to_string(after.subject()));
  }
  return expand_at(after, before, step, 0);
}

Derivation pull_back(const Derivation& last, const ReductionSequence& seq) {
  if (!alpha_eq(last.subject(), seq.last())) {
    throw StepMismatch("derivation does not type the end of the sequence");
  }
  Derivation d = last;
  for (std::size_t i = seq.steps.size(); i-- > 0;) {
    const Term& before = i == 0 ? seq.start : seq.steps[i - 1].second;
    d = subject_expand(d, before, seq.steps[i].first);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Commutations.

Derivation commute_abs_abs(const Derivation& d) {
  // λy.((λx.t)v)  ⟶  (λx.λy.t)v
  const Term& subj = d.subject();
  if (d.rule() != Rule::Lam || !subj.body().is_app() || !subj.body().fun().is_abs() ||
      !subj.body().arg().is_value()) {
    throw DerivationError("commute_abs_abs: subject is not of the form λy.((λx.t)v)");
  }
  const std::string& y = d.name();
  const Term& abs = subj.body().fun();
  const Term& v = subj.body().arg();
  if (v.has_free(y)) throw DerivationError("commute_abs_abs: " + y + " is free in the argument");
  std::string x = abs.name();
  Term t = abs.body();
  if (x == y) {
    x = fresh_name(x, [&](const std::string& c) { return taken_in(c, {&t, &v}, {y}); });
    t = rename_free(t, abs.name(), x);
  }
  std::vector<Derivation> inner;
  std::vector<Derivation> args;
  for (const auto& p : d.premises()) {
    const Derivation& lam = p.left();
    inner.push_back(rename_premise(only_premise(lam), lam.name(), x));
    args.push_back(p.right());
  }
  Derivation ly = Derivation::lam(y, t, std::move(inner));
  Derivation lx = Derivation::lam(x, Term::abs(y, t), {ly});
  return Derivation::app(lx, merge_value(v, args));
}

Derivation commute_app_abs(const Derivation& d) {
  // ((λx.t)v)((λx.u)v)  ⟶  (λx.t u)v
  if (d.rule() != Rule::App || d.left().rule() != Rule::App || d.right().rule() != Rule::App ||
      d.left().left().rule() != Rule::Lam || d.right().left().rule() != Rule::Lam ||
      !alpha_eq(d.left().right().subject(), d.right().right().subject())) {
    throw DerivationError("commute_app_abs: subject is not of the form ((λx.t)v)((λx.u)v)");
  }
  const Derivation& l1 = d.left().left();
  const Derivation& l2 = d.right().left();
  const Term& a1 = l1.subject();
  const Term& a2 = l2.subject();
  std::string x = a1.name();
  if (a2.has_free(x)) {
    x = fresh_name(x, [&](const std::string& c) { return taken_in(c, {&a1, &a2}, {}); });
  }
  Derivation dt = rename_premise(only_premise(l1), a1.name(), x);
  Derivation du = rename_premise(only_premise(l2), a2.name(), x);
  Term body = Term::app(rename_free(a1.body(), a1.name(), x), rename_free(a2.body(), a2.name(), x));
  Derivation lam = Derivation::lam(x, std::move(body), {Derivation::app(dt, du)});
  const Term& v = d.left().right().subject();
  return Derivation::app(lam, merge_value(v, {d.left().right(), d.right().right()}));
}

// ---------------------------------------------------------------------------
// Normal forms.

Derivation type_normal(const Term& t, const std::optional<PosType>& target) {
  PosType q = target.value_or(PosType::zero());
  if (t.is_var()) return Derivation::ax(t.name(), q);
  if (t.is_abs()) {
    if (!q.is_zero()) {
      throw TypeMismatch("type_normal: target " + to_string(q) + " for the abstraction " +
                         to_string(t) + " is not supported");
    }
    return empty_value_derivation(t);
  }
  const Term& f = t.fun();
  const Term& a = t.arg();
  if (f.is_var()) {
    // x v  |  x a
    Derivation head = Derivation::ax(f.name(), PosType::singleton(NegType{PosType::zero(), q}));
    if (a.is_value()) return Derivation::app(head, empty_value_derivation(a));
    if (is_neutral(a)) return Derivation::app(head, type_normal(a, PosType::zero()));
    throw NotNormal(to_string(t) + " is not balanced-normal");
  }
  if (is_neutral(f)) {
    // a n
    if (!is_balanced_normal(a)) throw NotNormal(to_string(t) + " is not balanced-normal");
    Derivation arg = type_normal(a);
    Derivation head = type_normal(f, PosType::singleton(NegType{arg.type(), q}));
    return Derivation::app(head, arg);
  }
  if (f.is_abs() && is_neutral(a)) {
    // (λx.n)a
    Derivation body = type_normal(f.body(), target);
    Derivation arg = type_normal(a, body.env().at(f.name()));
    return Derivation::app(Derivation::lam(f.name(), f.body(), {body}), arg);
  }
  throw NotNormal(to_string(t) + " is not balanced-normal");
}

Derivation min_derivation_normal(const Term& t) {
  if (!is_balanced_normal(t)) throw NotNormal(to_string(t) + " is not balanced-normal");
  return type_normal(t);
}

std::optional<EmptyDerivation> derive_empty(const Term& t, std::size_t fuel) {
  NormalizeResult r = normalize(t, Mode::Balanced, fuel);
  if (!r.normal || !r.term().is_value()) return std::nullopt;
  Derivation d = pull_back(empty_value_derivation(r.term()), r.sequence);
  return EmptyDerivation{std::move(d), std::move(r.sequence)};
}

}  // namespace lamsh
