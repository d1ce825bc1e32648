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

#include "lamsh/generator.hpp"
#include "lamsh/json_io.hpp"

using namespace lamsh;

namespace {

Term P(const char* s) { return parse(s, ParseOptions{true}); }

SearchLimits capped(std::size_t cap) {
  SearchLimits l;
  l.type_cap = cap;
  return l;
}

}  // namespace

TEST_CASE("loading the counterexample file") {
  Derivation d = load_derivation_file(std::string(LAMSH_DATA_DIR) + "/counterexample.json");
  Judgment j = check(d);
  CHECK(to_string(j) == "y:[0>0] |- (\\x.x)(y y) : 0");
  CHECK(d.size() == 2);
  CHECK_THROWS_AS(load_derivation_file(std::string(LAMSH_DATA_DIR) + "/missing.json"),
                  std::runtime_error);
}

TEST_CASE("derivations round-trip") {
  DerivationSearch search(capped(2));
  std::size_t n = 0;
  for (const char* s : {"I", "D I", "x I", "(\\x.x)(y y)", "\\y.I I", "x (\\z.z x)"}) {
    Term t = P(s);
    auto nf = normalize(t, Mode::Balanced, 100);
    for (const auto& d0 : search.any_type(nf.term())) {
      Derivation d = pull_back(d0, nf.sequence);
      Json j = derivation_to_json(d);
      Derivation back = derivation_from_json(Json::parse(j.dump()));
      CHECK(same_derivation(back, d));
      ++n;
    }
  }
  CHECK(n > 12);
}

TEST_CASE("malformed derivations") {
  CHECK_THROWS_AS(derivation_from_json(Json::parse(R"({"rule":"cut"})")), JsonFormatError);
  CHECK_THROWS_AS(derivation_from_json(Json::parse(R"({"rule":"ax","var":"x"})")),
                  JsonFormatError);
  CHECK_THROWS_AS(derivation_from_json(Json::parse(R"({"rule":"ax","var":"x","type":"[0"})")),
                  JsonFormatError);
  // no premises and no body leaves the subject unknown
  CHECK_THROWS_AS(derivation_from_json(Json::parse(R"({"rule":"lam","binder":"x","premises":[]})")),
                  JsonFormatError);
  Derivation i = derivation_from_json(
      Json::parse(R"({"rule":"lam","binder":"x","body":"x","premises":[]})"));
  CHECK(alpha_eq(check(i).subject, P("I")));

  try {
    derivation_from_json(Json::parse(R"({"rule":"app","left":{"rule":"ax","var":"x","type":"0"},
                                         "right":{"rule":"ax","var":"y","type":"0"}})"));
    FAIL("expected a rule violation");
  } catch (const RuleViolation& v) {
    CHECK(v.path() == "root");
  }
  try {
    derivation_from_json(Json::parse(R"({"rule":"ax","var":"x","type":7})"));
    FAIL("expected a format error");
  } catch (const JsonFormatError& e) {
    CHECK(e.path() == "/type");
  }
}

TEST_CASE("traces round-trip") {
  for (const char* s : {"D I", "(\\y.y')(D(x I)) I", "(\\x.\\y.y)(I I)(I I)"}) {
    auto n = normalize(P(s), Mode::Balanced, 100);
    Json j = trace_to_json(n.sequence, Mode::Balanced, n.normal);
    CHECK(j["leng_bv"] == n.sequence.leng_betav);
    CHECK(j["steps"].size() == n.sequence.length());
    Trace t = trace_from_json(Json::parse(j.dump()));
    CHECK(same_trace(t, Trace{n.sequence, Mode::Balanced, n.normal}));
  }
  auto n = normalize(P("D I"), Mode::Balanced, 100);
  Json j = trace_to_json(n.sequence, Mode::Balanced, true);
  j["leng_bv"] = 5;
  CHECK_THROWS_AS(trace_from_json(j), JsonFormatError);
  j = trace_to_json(n.sequence, Mode::Balanced, true);
  j["steps"][0]["term"] = "x";
  CHECK_THROWS_AS(trace_from_json(j), JsonFormatError);
}

TEST_CASE("fragments round-trip") {
  auto f = interpret_bounded(P("(\\x.x)(y y)"), SuitableList({"y"}), 1);
  Json j = fragment_to_json(f);
  CHECK(j["cap"] == 1);
  CHECK(j["incomplete"] == false);
  CHECK(same_fragment(fragment_from_json(Json::parse(j.dump())), f));
  auto g = interpret_bounded(P("D D"), SuitableList{}, 1, 100);
  CHECK(same_fragment(fragment_from_json(fragment_to_json(g)), g));
  CHECK_FALSE(same_fragment(f, g));
}

TEST_CASE("a trace claiming normality must end in a normal form") {
  auto n = normalize(P("D I"), Mode::Balanced, 1);
  CHECK_FALSE(n.normal);
  Json j = trace_to_json(n.sequence, Mode::Balanced, true);
  CHECK_THROWS_AS(trace_from_json(j), JsonFormatError);
}
