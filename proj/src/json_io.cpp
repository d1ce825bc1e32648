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

#include "lamsh/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lamsh {

JsonFormatError::JsonFormatError(std::string path, const std::string& reason)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + reason),
      path_(std::move(path)) {}

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw JsonFormatError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonFormatError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_string()) throw JsonFormatError(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

Term term_field(const Json& j, const char* key, const std::string& path) {
  std::string src = string_field(j, key, path);
  try {
    return parse(src);
  } catch (const SyntaxError& e) {
    throw JsonFormatError(path + "/" + key, e.what());
  }
}

PosType type_field(const Json& j, const char* key, const std::string& path) {
  std::string src = string_field(j, key, path);
  try {
    return parse_pos_type(src);
  } catch (const TypeSyntaxError& e) {
    throw JsonFormatError(path + "/" + key, e.what());
  }
}

Derivation load_rec(const Json& j, const std::string& path, const std::string& rule_path) {
  std::string rule = string_field(j, "rule", path);
  try {
    if (rule == "ax") {
      return Derivation::ax(string_field(j, "var", path), type_field(j, "type", path));
    }
    if (rule == "app") {
      Derivation l = load_rec(field(j, "left", path), path + "/left", rule_path + ".left");
      Derivation r = load_rec(field(j, "right", path), path + "/right", rule_path + ".right");
      return Derivation::app(std::move(l), std::move(r));
    }
    if (rule == "lam") {
      std::string binder = string_field(j, "binder", path);
      const Json& ps = field(j, "premises", path);
      if (!ps.is_array()) throw JsonFormatError(path + "/premises", "expected an array");
      std::vector<Derivation> prems;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        std::string idx = std::to_string(i);
        prems.push_back(load_rec(ps[i], path + "/premises/" + idx,
                                 rule_path + ".premises[" + idx + "]"));
      }
      std::optional<Term> body;
      if (j.contains("body")) {
        body = term_field(j, "body", path);
      } else if (!prems.empty()) {
        body = prems.front().subject();
      } else {
        throw JsonFormatError(path, "a λ node without premises needs a \"body\"");
      }
      return Derivation::lam(std::move(binder), *body, std::move(prems));
    }
  } catch (const RuleViolation& e) {
    if (e.path() == "root") throw RuleViolation(rule_path, e.reason());
    throw;
  }
  throw JsonFormatError(path + "/rule", "unknown rule \"" + rule + "\"");
}

}  // namespace

Json derivation_to_json(const Derivation& d) {
  switch (d.rule()) {
    case Rule::Ax:
      return Json{{"rule", "ax"}, {"var", d.name()}, {"type", to_string(d.type())}};
    case Rule::App:
      return Json{{"rule", "app"},
                  {"left", derivation_to_json(d.left())},
                  {"right", derivation_to_json(d.right())}};
    case Rule::Lam: {
      Json ps = Json::array();
      for (const auto& p : d.premises()) ps.push_back(derivation_to_json(p));
      return Json{{"rule", "lam"},
                  {"binder", d.name()},
                  {"body", to_string(d.lam_body())},
                  {"premises", std::move(ps)}};
    }
  }
  return Json();
}

Derivation derivation_from_json(const Json& j) { return load_rec(j, "", "root"); }

Derivation load_derivation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw JsonFormatError("", e.what());
  }
  return derivation_from_json(j);
}

// ---------------------------------------------------------------------------

Json trace_to_json(const ReductionSequence& seq, Mode mode, bool normal) {
  Json steps = Json::array();
  for (const auto& [step, term] : seq.steps) {
    steps.push_back(Json{{"kind", std::string(to_string(step.kind))},
                         {"position", step.position.to_string()},
                         {"term", to_string(term)}});
  }
  return Json{{"start", to_string(seq.start)},
              {"mode", std::string(to_string(mode))},
              {"steps", std::move(steps)},
              {"leng_bv", seq.leng_betav},
              {"normal", normal}};
}

Trace trace_from_json(const Json& j) {
  auto mode = mode_from_string(string_field(j, "mode", ""));
  if (!mode) throw JsonFormatError("/mode", "unknown mode");
  Trace t{ReductionSequence(term_field(j, "start", "")), *mode, false};
  const Json& normal = field(j, "normal", "");
  if (!normal.is_boolean()) throw JsonFormatError("/normal", "expected a boolean");
  t.normal = normal.get<bool>();
  const Json& steps = field(j, "steps", "");
  if (!steps.is_array()) throw JsonFormatError("/steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string path = "/steps/" + std::to_string(i);
    auto kind = redex_kind_from_string(string_field(steps[i], "kind", path));
    if (!kind) throw JsonFormatError(path + "/kind", "unknown redex kind");
    Position pos;
    try {
      pos = Position::from_string(string_field(steps[i], "position", path));
    } catch (const std::exception& e) {
      throw JsonFormatError(path + "/position", e.what());
    }
    ReductionStep step{pos, *kind, *mode};
    Term result = term_field(steps[i], "term", path);
    Term replayed = [&] {
      try {
        return apply_step(t.sequence.last(), step);
      } catch (const std::exception& e) {
        throw JsonFormatError(path, e.what());
      }
    }();
    if (!alpha_eq(replayed, result)) {
      throw JsonFormatError(path + "/term", "does not match the result of the step");
    }
    t.sequence.push(step, std::move(result));
  }
  if (t.normal && !find_redexes(t.sequence.last(), t.mode).empty()) {
    throw JsonFormatError("/normal", "last term is not normal");
  }
  const Json& leng = field(j, "leng_bv", "");
  if (!leng.is_number_unsigned() || leng.get<std::size_t>() != t.sequence.leng_betav) {
    throw JsonFormatError("/leng_bv", "does not match the number of beta_v steps");
  }
  return t;
}

bool same_trace(const Trace& a, const Trace& b) {
  if (a.mode != b.mode || a.normal != b.normal) return false;
  const auto& s = a.sequence;
  const auto& u = b.sequence;
  if (!alpha_eq(s.start, u.start) || s.length() != u.length() || s.leng_betav != u.leng_betav) {
    return false;
  }
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (!(s.steps[i].first == u.steps[i].first) ||
        !alpha_eq(s.steps[i].second, u.steps[i].second)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Json fragment_to_json(const InterpretationFragment& f) {
  Json points = Json::array();
  for (const auto& [p, d] : f.points) {
    Json inputs = Json::array();
    for (const auto& t : p.inputs) inputs.push_back(to_string(t));
    points.push_back(Json{{"point", to_string(p)},
                          {"inputs", std::move(inputs)},
                          {"output", to_string(p.output)},
                          {"size", d.size()},
                          {"derivation", derivation_to_json(d)}});
  }
  return Json{{"subject", to_string(f.subject)},
              {"vars", f.vars.vars()},
              {"cap", f.cap},
              {"incomplete", f.incomplete},
              {"points", std::move(points)}};
}

InterpretationFragment fragment_from_json(const Json& j) {
  const Json& vars = field(j, "vars", "");
  if (!vars.is_array()) throw JsonFormatError("/vars", "expected an array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw JsonFormatError("/vars", "expected strings");
    names.push_back(v.get<std::string>());
  }
  InterpretationFragment f{term_field(j, "subject", ""), SuitableList(std::move(names)), {}, 0,
                           false};
  const Json& cap = field(j, "cap", "");
  const Json& incomplete = field(j, "incomplete", "");
  if (!cap.is_number_unsigned()) throw JsonFormatError("/cap", "expected a count");
  if (!incomplete.is_boolean()) throw JsonFormatError("/incomplete", "expected a boolean");
  f.cap = cap.get<std::size_t>();
  f.incomplete = incomplete.get<bool>();
  const Json& points = field(j, "points", "");
  if (!points.is_array()) throw JsonFormatError("/points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::string path = "/points/" + std::to_string(i);
    Derivation d = load_rec(field(points[i], "derivation", path), path + "/derivation", "root");
    SemPoint p = point_of(d, f.vars);
    if (to_string(p) != string_field(points[i], "point", path)) {
      throw JsonFormatError(path + "/point", "does not match the witness conclusion");
    }
    f.points.emplace(std::move(p), std::move(d));
  }
  return f;
}

bool same_fragment(const InterpretationFragment& a, const InterpretationFragment& b) {
  if (!alpha_eq(a.subject, b.subject) || !(a.vars == b.vars) || a.cap != b.cap ||
      a.incomplete != b.incomplete || a.points.size() != b.points.size()) {
    return false;
  }
  for (auto i = a.points.begin(), k = b.points.begin(); i != a.points.end(); ++i, ++k) {
    if (!(i->first == k->first) || !same_derivation(i->second, k->second)) return false;
  }
  return true;
}

}  // namespace lamsh
