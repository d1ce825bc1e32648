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

#include <doctest.h>

#include <random>

#include "lamsh/derivation.hpp"
#include "lamsh/generator.hpp"
#include "lamsh/json_io.hpp"
#include "oracle.hpp"

using namespace lamsh;

namespace {

Term P(const char* s) { return parse(s, ParseOptions{true}); }

SearchLimits capped(std::size_t cap) {
  SearchLimits l;
  l.type_cap = cap;
  return l;
}
PosType T(const char* s) { return parse_pos_type(s); }
ReductionStep root(RedexKind k) { return ReductionStep{Position{}, k, Mode::Balanced}; }

// ⊢ I : 𝟘
Derivation pi_I() { return Derivation::lam("x", Term::var("x"), {}); }

// ⊢ I I : 𝟘
Derivation pi_II() {
  return Derivation::app(
      Derivation::lam("x", Term::var("x"), {Derivation::ax("x", PosType::zero())}), pi_I());
}

// k premises, each typing I I
Derivation pi_k(std::size_t k) {
  return Derivation::lam("y", P("I I"), std::vector<Derivation>(k, pi_II()));
}

std::size_t apps_in_json(const Json& j) {
  std::size_t n = j["rule"] == "app" ? 1 : 0;
  for (const char* key : {"left", "right"}) {
    if (j.contains(key)) n += apps_in_json(j[key]);
  }
  if (j.contains("premises")) {
    for (const auto& p : j["premises"]) n += apps_in_json(p);
  }
  return n;
}

}  // namespace

TEST_CASE("checking the derivations of I and I I") {
  Judgment ji = check(pi_I());
  CHECK(ji.env.empty());
  CHECK(ji.type.is_zero());
  CHECK(alpha_eq(ji.subject, P("I")));
  CHECK(size(pi_I()) == 0);

  Judgment jii = check(pi_II());
  CHECK(to_string(jii) == "|- (\\x.x)(\\x.x) : 0");
  CHECK(size(pi_II()) == 1);
}

TEST_CASE("size counts @ nodes") {
  for (std::size_t k = 0; k < 5; ++k) {
    Derivation d = pi_k(k);
    CHECK(d.size() == k);
    CHECK(apps_in_json(derivation_to_json(d)) == k);
    CHECK(d.type().cardinality() == k);
  }
}

TEST_CASE("rule violations are rejected with a path") {
  CHECK_THROWS_AS(Derivation::app(Derivation::ax("x", PosType::zero()), pi_I()), RuleViolation);
  CHECK_THROWS_AS(
      Derivation::app(Derivation::ax("x", T("[0>0]")), Derivation::ax("y", T("[0>0]"))),
      RuleViolation);
  CHECK_THROWS_AS(Derivation::lam("x", P("x x"), {Derivation::ax("x", PosType::zero())}),
                  RuleViolation);
  Json bad = derivation_to_json(pi_II());
  bad["left"]["premises"][0]["var"] = "z";
  try {
    derivation_from_json(bad);
    FAIL("expected a rule violation");
  } catch (const RuleViolation& v) {
    CHECK(v.path() == "root.left");
  }
}

TEST_CASE("canonical premise order makes derivation equality decidable") {
  Derivation a = Derivation::ax("x", T("[0>0]"));
  Derivation b = Derivation::ax("x", T("[[0>0]>0]"));
  Derivation l1 = Derivation::lam("x", P("x"), {a, b});
  Derivation l2 = Derivation::lam("z", P("z"), {Derivation::ax("z", T("[[0>0]>0]")),
                                                Derivation::ax("z", T("[0>0]"))});
  CHECK(same_derivation(l1, l2));
  CHECK_FALSE(same_derivation(l1, Derivation::lam("x", P("x"), {a})));
}

TEST_CASE("decompose and merge values") {
  auto parts = decompose_value(pi_k(3), {T("[0>0]"), T("[0>0]"), T("[0>0]")});
  REQUIRE(parts.size() == 3);
  for (const auto& p : parts) CHECK(p.size() == 1);
  CHECK(same_derivation(merge_value(P("\\y.I I"), parts), pi_k(3)));

  auto one = decompose_value(pi_k(2), {pi_k(2).type()});
  REQUIRE(one.size() == 1);
  CHECK(same_derivation(one[0], pi_k(2)));

  auto empties = decompose_value(pi_I(), {PosType::zero(), PosType::zero()});
  REQUIRE(empties.size() == 2);
  CHECK(empties[0].size() + empties[1].size() == 0);

  Derivation ax = Derivation::ax("x", T("[0>0, 0>[0>0]]"));
  auto axs = decompose_value(ax, {T("[0>0]"), T("[0>[0>0]]")});
  CHECK(axs[1].type() == T("[0>[0>0]]"));
  CHECK(same_derivation(merge_value(P("x"), axs), ax));

  CHECK_THROWS_AS(decompose_value(pi_k(2), {T("[0>0]")}), SplitMismatch);
  CHECK(same_derivation(merge_value(P("I"), {}), pi_I()));
}

TEST_CASE("substitution of derivations") {
  Derivation at_x = Derivation::ax("x", PosType::zero());
  CHECK(same_derivation(subst_derivation(at_x, "x", pi_I()), pi_I()));

  // the premise of π_II with the argument derivation gives π_I
  Derivation s = subst_derivation(pi_II().left().premises()[0], "x", pi_I());
  CHECK(same_derivation(s, pi_I()));
  CHECK(s.size() == 0);

  Derivation body = Derivation::ax("y", T("[0>0]"));
  CHECK(same_derivation(subst_derivation(body, "x", pi_I()), body));

  CHECK_THROWS_AS(subst_derivation(at_x, "x", pi_k(1)), TypeMismatch);
}

TEST_CASE("substitution renames binders that would capture") {
  // x : [0>0] |- \y.x y : [0>0], one premise
  Derivation xy = Derivation::app(Derivation::ax("x", T("[0>0]")), Derivation::ax("y", T("0")));
  Derivation lam = Derivation::lam("y", P("x y"), {xy});
  Derivation arg = Derivation::ax("y", T("[0>0]"));
  Derivation r = subst_derivation(lam, "x", arg);
  check(r);
  CHECK(alpha_eq(r.subject(), P("\\w.y w")));
  CHECK(r.env().at("y") == T("[0>0]"));
  CHECK(r.size() == lam.size());
}

TEST_CASE("subject reduction and expansion on I I") {
  Derivation red = subject_reduce(pi_II(), root(RedexKind::BetaV));
  CHECK(same_derivation(red, pi_I()));
  Derivation back = subject_expand(pi_I(), P("I I"), root(RedexKind::BetaV));
  CHECK(back.size() == 1);
  CHECK(same_judgment(check(back), check(pi_II())));
  CHECK(same_derivation(back, pi_II()));
  CHECK_THROWS_AS(subject_reduce(pi_I(), root(RedexKind::BetaV)), InvalidStep);
  CHECK_THROWS_AS(subject_expand(pi_I(), P("D I"), root(RedexKind::BetaV)), StepMismatch);
}

TEST_CASE("two expansions give the derivation of D I") {
  Derivation d = pi_I();
  d = subject_expand(d, P("I I"), root(RedexKind::BetaV));
  d = subject_expand(d, P("D I"), root(RedexKind::BetaV));
  Judgment j = check(d);
  CHECK(alpha_eq(j.subject, P("D I")));
  CHECK(j.env.empty());
  CHECK(d.size() == 2);
  CHECK(d.size() == oracle::cbv_eval(P("D I"))->beta_steps);
}

TEST_CASE("sigma steps keep the size") {
  Term t = P("(\\y.y')(D(x I)) I");
  auto n = normalize(t, Mode::Balanced, 100);
  REQUIRE(n.normal);
  Derivation d = pull_back(type_normal(n.term()), n.sequence);
  check(d);
  auto steps = find_redexes(t, Mode::Balanced);
  bool saw_sigma1 = false;
  for (const auto& s : steps) {
    Derivation r = subject_reduce(d, s);
    check(r);
    CHECK(r.size() == d.size());
    CHECK(r.env() == d.env());
    CHECK(r.type() == d.type());
    saw_sigma1 = saw_sigma1 || (s.kind == RedexKind::Sigma1 && s.position.is_root());
  }
  CHECK(saw_sigma1);
}

TEST_CASE("full-mode beta_v under an abstraction with k premises") {
  ReductionStep under{Position::from_string("body"), RedexKind::BetaV, Mode::Full};
  for (std::size_t k = 0; k < 4; ++k) {
    Derivation r = subject_reduce(pi_k(k), under);
    check(r);
    CHECK(alpha_eq(r.subject(), P("\\y.I")));
    CHECK(pi_k(k).size() - r.size() == k);
    Derivation e = subject_expand(r, P("\\y.I I"), under);
    CHECK(same_derivation(e, pi_k(k)));
  }
}

TEST_CASE("commutation of abstractions") {
  // λy.((λx.x)z) with k premises; y ∉ fv(z)
  Term body = P("(\\x.x) z");
  auto premise = [&](const char* q) {
    PosType p = T(q);
    Derivation lx = Derivation::lam("x", P("x"), {Derivation::ax("x", p)});
    return Derivation::app(lx, Derivation::ax("z", p));
  };
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<Derivation> ps;
    for (std::size_t i = 0; i < k; ++i) ps.push_back(premise(i % 2 ? "[0>0]" : "0"));
    Derivation d = Derivation::lam("y", body, ps);
    Derivation c = commute_abs_abs(d);
    Judgment j = check(c);
    CHECK(alpha_eq(j.subject, P("(\\x.\\y.x) z")));
    CHECK(j.env == d.env());
    CHECK(j.type == d.type());
    CHECK(c.size() + k == d.size() + 1);
  }
}

TEST_CASE("commutation of an application with an abstraction") {
  PosType q = T("[0>0]");
  Derivation left = Derivation::app(
      Derivation::lam("x", P("y"), {Derivation::ax("y", PosType::singleton(NegType{PosType::zero(), PosType::zero()}))}),
      Derivation::ax("z", PosType::zero()));
  Derivation right = Derivation::app(Derivation::lam("x", P("x"), {Derivation::ax("x", PosType::zero())}),
                                     Derivation::ax("z", PosType::zero()));
  Derivation d = Derivation::app(left, right);
  Derivation c = commute_app_abs(d);
  Judgment j = check(c);
  CHECK(alpha_eq(j.subject, P("(\\x.y x) z")));
  CHECK(j.env == d.env());
  CHECK(c.size() + 1 == d.size());
  (void)q;
}

TEST_CASE("typing normal forms") {
  Derivation ax = type_normal(P("x"), T("[0>0]"));
  CHECK(ax.rule() == Rule::Ax);
  CHECK(ax.env().at("x") == T("[0>0]"));

  Term stuck = P("(\\y.D)(z I)");
  Derivation d = type_normal(stuck);
  Judgment j = check(d);
  CHECK(!j.env.at("z").is_zero());
  CHECK(d.size() >= balanced_size(stuck));
  CHECK(d.size() == 2);

  for (const char* v : {"\\x.D D", "y", "I"}) {
    Derivation dv = type_normal(P(v));
    CHECK(dv.size() == 0);
    CHECK(dv.type().is_zero());
  }
  CHECK_THROWS_AS(type_normal(P("I I")), NotNormal);
  CHECK_THROWS_AS(type_normal(P("I"), T("[0>0]")), TypeMismatch);

  // neutral terms accept any target
  Derivation n = type_normal(P("x y (z z)"), T("[[0>0]>0]"));
  CHECK(n.type() == T("[[0>0]>0]"));
  check(n);
}

TEST_CASE("minimal derivations of normal forms") {
  CHECK(min_derivation_normal(P("\\x.x x")).size() == 0);
  CHECK(min_derivation_normal(P("(\\x.y y)(z z)")).size() == 3);
  CHECK(min_derivation_normal(P("x I")).size() == 1);
  CHECK(min_derivation_normal(P("x I")).size() == oracle::balanced_apps(P("x I")));
  CHECK_THROWS_AS(min_derivation_normal(P("D I")), NotNormal);
}

TEST_CASE("empty derivations") {
  auto di = derive_empty(P("D I"));
  REQUIRE(di);
  CHECK(di->derivation.size() == 2);
  CHECK(check(di->derivation).env.empty());
  CHECK_FALSE(derive_empty(P("(\\y.D)(z I) D"), 200));
  auto i = derive_empty(P("I"));
  REQUIRE(i);
  CHECK(same_derivation(i->derivation, pi_I()));
  CHECK_FALSE(derive_empty(P("x I")));
}

TEST_CASE("bounded search") {
  DerivationSearch search(capped(1));
  const auto& at_zero = search.at_type(P("I"), PosType::zero());
  REQUIRE(at_zero.size() == 1);
  CHECK(same_derivation(at_zero[0], pi_I()));
  // I : [0>0] has exactly one derivation within cap 1
  CHECK(search.at_type(P("I"), T("[0>0]")).size() == 1);
  CHECK(search.at_type(P("x x"), PosType::zero()).size() == 1);  // x : [0>0] only

  DerivationSearch wide(capped(3));
  for (const auto& d : wide.at_type(P("x x"), PosType::zero())) {
    Judgment j = check(d);
    CHECK(j.type.is_zero());
    CHECK(type_size(j.env.at("x")) <= 3);
  }
  CHECK(wide.at_type(P("x x"), PosType::zero()).size() == 2);
}

TEST_CASE("reduction and expansion size laws on random terms") {
  std::mt19937_64 rng(21);
  GeneratorOptions opts;
  opts.free_vars = {"x", "y"};
  opts.max_size = 10;
  std::size_t pairs = 0;
  for (int i = 0; i < 800; ++i) {
    Term t = random_term(rng, opts);
    auto n = normalize(t, Mode::Balanced, 500);
    if (!n.normal) continue;
    Derivation d = pull_back(min_derivation_normal(n.term()), n.sequence);
    Judgment j = check(d);
    CHECK(alpha_eq(j.subject, t));
    CHECK(d.size() == n.sequence.leng_betav + balanced_size(n.term()));
    for (const auto& s : find_redexes(t, Mode::Balanced)) {
      Derivation r = subject_reduce(d, s);
      check(r);
      CHECK(r.size() + (s.kind == RedexKind::BetaV ? 1 : 0) == d.size());
      Derivation e = subject_expand(r, t, s);
      CHECK(e.size() == d.size());
      CHECK(same_judgment(check(e), j));
      ++pairs;
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("value decomposition round-trips") {
  std::mt19937_64 rng(23);
  DerivationSearch search(capped(3));
  for (const char* v : {"\\x.x", "\\x.x x", "y", "\\x.y x"}) {
    Term t = P(v);
    for (const auto& d : search.any_type(t)) {
      std::vector<PosType> split;
      std::vector<NegType> elems = d.type().elems();
      std::shuffle(elems.begin(), elems.end(), rng);
      std::size_t cut = elems.empty() ? 0 : rng() % (elems.size() + 1);
      split.push_back(PosType({elems.begin(), elems.begin() + cut}));
      split.push_back(PosType({elems.begin() + cut, elems.end()}));
      auto parts = decompose_value(d, split);
      CHECK(parts[0].size() + parts[1].size() == d.size());
      CHECK(env_sum(parts[0].env(), parts[1].env()) == d.env());
      CHECK(same_derivation(merge_value(t, parts), d));
    }
  }
}
