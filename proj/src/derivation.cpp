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

#include "lamsh/derivation.hpp"

#include <algorithm>

namespace lamsh {

RuleViolation::RuleViolation(std::string path, std::string reason)
    : std::runtime_error(path + ": " + reason), path_(std::move(path)), reason_(std::move(reason)) {}

RuleViolation RuleViolation::under(const std::string& prefix) const {
  std::string p = path_ == "root" ? prefix : prefix + path_.substr(4);
  return RuleViolation(p, reason_);
}

bool same_judgment(const Judgment& a, const Judgment& b) {
  return a.env == b.env && a.type == b.type && alpha_eq(a.subject, b.subject);
}

std::string to_string(const Judgment& j, const PrintOptions& opts) {
  std::string env = to_string(j.env);
  std::string out = env.empty() ? "|- " : env + " |- ";
  out += to_string(j.subject, opts);
  out += " : ";
  out += to_string(j.type);
  return out;
}

namespace {

const Term& placeholder_term() {
  static const Term t = Term::var("_");
  return t;
}

NegType arrow_of(const Derivation& premise, const std::string& binder) {
  return NegType{premise.env().at(binder), premise.type()};
}

// Canonical key of d with `stack` holding the enclosing binders.
void key_rec(const Derivation& d, std::vector<std::string>& stack, std::string& out);

std::string key_in(const Derivation& d, std::vector<std::string>& stack) {
  std::string out;
  key_rec(d, stack, out);
  return out;
}

std::string term_key_in(const Term& t, const std::vector<std::string>& stack) {
  // Wrap t in the enclosing binders so that alpha_key sees them as bound.
  Term wrapped = t;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) wrapped = Term::abs(*it, wrapped);
  return alpha_key(wrapped);
}

void key_rec(const Derivation& d, std::vector<std::string>& stack, std::string& out) {
  switch (d.rule()) {
    case Rule::Ax: {
      out += "ax(";
      bool bound = false;
      for (std::size_t i = stack.size(); i-- > 0;) {
        if (stack[i] == d.name()) {
          out += '#' + std::to_string(stack.size() - 1 - i);
          bound = true;
          break;
        }
      }
      if (!bound) out += d.name();
      out += ':';
      out += to_string(d.type());
      out += ')';
      return;
    }
    case Rule::App:
      out += "app(";
      key_rec(d.left(), stack, out);
      out += ',';
      key_rec(d.right(), stack, out);
      out += ')';
      return;
    case Rule::Lam: {
      out += "lam[";
      stack.push_back(d.name());
      out += term_key_in(d.lam_body(), stack);
      std::vector<std::string> keys;
      for (const auto& p : d.premises()) keys.push_back(key_in(p, stack));
      stack.pop_back();
      std::sort(keys.begin(), keys.end());
      for (const auto& k : keys) {
        out += '|';
        out += k;
      }
      out += ']';
      return;
    }
  }
}

std::string premise_sort_key(const Derivation& p, const std::string& binder) {
  std::vector<std::string> stack{binder};
  return key_in(p, stack);
}

}  // namespace

Derivation Derivation::ax(std::string x, PosType type) {
  auto n = std::make_shared<DerivationNode>(DerivationNode{
      Rule::Ax, x, placeholder_term(), {}, Judgment{Environment{}, Term::var(x), type}, 0});
  n->conclusion.env.set(x, std::move(type));
  return Derivation(std::move(n));
}

Derivation Derivation::app(Derivation left, Derivation right) {
  const PosType& lt = left.type();
  if (lt.cardinality() != 1) {
    throw RuleViolation("root", "left premise of @ must have a singleton arrow type, got " +
                                    to_string(lt));
  }
  const NegType& arrow = lt.elems().front();
  if (!(arrow.domain == right.type())) {
    throw RuleViolation("root", "argument type " + to_string(right.type()) +
                                    " does not match the arrow domain " + to_string(arrow.domain));
  }
  Judgment j{env_sum(left.env(), right.env()), Term::app(left.subject(), right.subject()),
             arrow.codomain};
  std::size_t sz = 1 + left.size() + right.size();
  auto n = std::make_shared<DerivationNode>(
      DerivationNode{Rule::App, std::string(), placeholder_term(),
                     {std::move(left), std::move(right)}, std::move(j), sz});
  return Derivation(std::move(n));
}

Derivation Derivation::lam(std::string binder, Term body, std::vector<Derivation> premises) {
  std::vector<NegType> arrows;
  Environment env;
  std::size_t sz = 0;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const Derivation& p = premises[i];
    if (!alpha_eq(p.subject(), body)) {
      throw RuleViolation("root", "premise " + std::to_string(i) + " types " +
                                      to_string(p.subject()) + " instead of the body " +
                                      to_string(body));
    }
    arrows.push_back(arrow_of(p, binder));
    env = env_sum(env, p.env().without(binder));
    sz += p.size();
  }
  // Canonical premise order.
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    order.emplace_back(premise_sort_key(premises[i], binder), i);
  }
  std::vector<std::size_t> idx(premises.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (int c = compare(arrows[a], arrows[b])) return c < 0;
    return order[a].first < order[b].first;
  });
  std::vector<Derivation> sorted;
  sorted.reserve(premises.size());
  for (std::size_t i : idx) sorted.push_back(premises[i]);

  Judgment j{std::move(env), Term::abs(binder, body), PosType(std::move(arrows))};
  auto n = std::make_shared<DerivationNode>(DerivationNode{
      Rule::Lam, std::move(binder), std::move(body), std::move(sorted), std::move(j), sz});
  return Derivation(std::move(n));
}

const std::string& Derivation::name() const {
  if (rule() == Rule::App) throw std::logic_error("Derivation::name on an @ node");
  return node_->name;
}

const Derivation& Derivation::left() const {
  if (rule() != Rule::App) throw std::logic_error("Derivation::left on a non-@ node");
  return node_->children[0];
}

const Derivation& Derivation::right() const {
  if (rule() != Rule::App) throw std::logic_error("Derivation::right on a non-@ node");
  return node_->children[1];
}

const std::vector<Derivation>& Derivation::premises() const {
  if (rule() != Rule::Lam) throw std::logic_error("Derivation::premises on a non-λ node");
  return node_->children;
}

const Term& Derivation::lam_body() const {
  if (rule() != Rule::Lam) throw std::logic_error("Derivation::lam_body on a non-λ node");
  return node_->body;
}

namespace {

Judgment check_rec(const Derivation& d, const std::string& path) {
  Judgment j{Environment{}, placeholder_term(), PosType::zero()};
  switch (d.rule()) {
    case Rule::Ax:
      j.env.set(d.name(), d.type());
      j.subject = Term::var(d.name());
      j.type = d.type();
      break;
    case Rule::App: {
      Judgment l = check_rec(d.left(), path + ".left");
      Judgment r = check_rec(d.right(), path + ".right");
      if (l.type.cardinality() != 1) {
        throw RuleViolation(path, "@: left type " + to_string(l.type) + " is not a singleton arrow");
      }
      const NegType& arrow = l.type.elems().front();
      if (!(arrow.domain == r.type)) {
        throw RuleViolation(path, "@: argument type " + to_string(r.type) +
                                      " differs from domain " + to_string(arrow.domain));
      }
      j.env = env_sum(l.env, r.env);
      j.subject = Term::app(l.subject, r.subject);
      j.type = arrow.codomain;
      break;
    }
    case Rule::Lam: {
      std::vector<NegType> arrows;
      const auto& ps = d.premises();
      for (std::size_t i = 0; i < ps.size(); ++i) {
        Judgment p = check_rec(ps[i], path + ".premises[" + std::to_string(i) + "]");
        if (!alpha_eq(p.subject, d.lam_body())) {
          throw RuleViolation(path, "λ: premise " + std::to_string(i) +
                                        " does not type the abstraction body");
        }
        arrows.push_back(NegType{p.env.at(d.name()), p.type});
        j.env = env_sum(j.env, p.env.without(d.name()));
      }
      j.subject = Term::abs(d.name(), d.lam_body());
      j.type = PosType(std::move(arrows));
      break;
    }
  }
  if (!same_judgment(j, d.conclusion())) {
    throw RuleViolation(path, "stored conclusion differs from the recomputed one");
  }
  return j;
}

}  // namespace

Judgment check(const Derivation& d) { return check_rec(d, "root"); }

std::string derivation_key(const Derivation& d) {
  std::vector<std::string> stack;
  return key_in(d, stack);
}

}  // namespace lamsh
