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

#include "lamsh/semantics.hpp"

#include <algorithm>
#include <set>

namespace lamsh {

SuitableList::SuitableList(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& x : vars_) {
    if (!seen.insert(x).second) throw UnsuitableList("variable " + x + " is listed twice");
  }
}

bool SuitableList::suitable_for(const Term& t) const {
  for (const auto& x : t.free_var_list()) {
    if (std::find(vars_.begin(), vars_.end(), x) == vars_.end()) return false;
  }
  return true;
}

void SuitableList::require_suitable(const Term& t) const {
  for (const auto& x : t.free_var_list()) {
    if (std::find(vars_.begin(), vars_.end(), x) == vars_.end()) {
      throw UnsuitableList("free variable " + x + " is missing from the list");
    }
  }
}

SemPoint point_of(const Derivation& d, const SuitableList& vars) {
  SemPoint p;
  for (const auto& x : vars.vars()) p.inputs.push_back(d.env().at(x));
  p.output = d.type();
  return p;
}

InterpretationFragment interpret_bounded(const Term& t, const SuitableList& vars,
                                         std::size_t size_cap, std::size_t fuel) {
  vars.require_suitable(t);
  InterpretationFragment f{t, vars, {}, size_cap, false};
  NormalizeResult r = normalize(t, Mode::Balanced, fuel);
  if (!r.normal) {
    f.incomplete = true;
    return f;
  }
  SearchLimits limits;
  limits.type_cap = size_cap;
  DerivationSearch search(limits);
  for (const auto& d : search.any_type(r.term())) {
    SemPoint p = point_of(d, vars);
    auto it = f.points.find(p);
    if (it != f.points.end() && it->second.size() <= d.size() + r.sequence.leng_betav) continue;
    Derivation w = pull_back(d, r.sequence);
    if (it == f.points.end()) {
      f.points.emplace(std::move(p), std::move(w));
    } else {
      it->second = std::move(w);
    }
  }
  return f;
}

NonEmptyResult is_nonempty_semi(const Term& t, const SuitableList& vars, std::size_t fuel) {
  vars.require_suitable(t);
  NormalizeResult r = normalize(t, Mode::Balanced, fuel);
  if (!r.normal) return {};
  return {NonEmptyResult::Status::NonEmpty, pull_back(type_normal(r.term()), r.sequence)};
}

EmptyPointResult has_empty_point_semi(const Term& t, const SuitableList& vars, std::size_t fuel) {
  vars.require_suitable(t);
  NormalizeResult r = normalize(t, Mode::Balanced, fuel);
  if (!r.normal) return {};
  if (!r.term().is_value()) return {EmptyPointResult::Status::No, std::nullopt, r.term()};
  Derivation w = pull_back(empty_value_derivation(r.term()), r.sequence);
  return {EmptyPointResult::Status::Yes, std::move(w), r.term()};
}

std::string_view to_string(NonEmptyResult::Status s) {
  return s == NonEmptyResult::Status::NonEmpty ? "non-empty" : "unknown";
}

std::string_view to_string(EmptyPointResult::Status s) {
  switch (s) {
    case EmptyPointResult::Status::Yes:
      return "yes";
    case EmptyPointResult::Status::No:
      return "no";
    case EmptyPointResult::Status::Unknown:
      break;
  }
  return "unknown";
}

}  // namespace lamsh
