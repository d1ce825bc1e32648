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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamsh/derivation.hpp"

namespace lamsh {

class UnsuitableList : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Pairwise distinct variables; suitable for t when they cover fv(t).
class SuitableList {
 public:
  SuitableList() = default;
  explicit SuitableList(std::vector<std::string> vars);
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  bool suitable_for(const Term& t) const;
  void require_suitable(const Term& t) const;
  friend bool operator==(const SuitableList&, const SuitableList&) = default;

 private:
  std::vector<std::string> vars_;
};

// A finite part of ⟦t⟧ with one witness per point.
struct InterpretationFragment {
  Term subject;
  SuitableList vars;
  std::map<SemPoint, Derivation> points;
  std::size_t cap = 0;
  bool incomplete = false;
};

SemPoint point_of(const Derivation& d, const SuitableList& vars);

InterpretationFragment interpret_bounded(const Term& t, const SuitableList& vars,
                                         std::size_t size_cap,
                                         std::size_t fuel = kDefaultNormalizeFuel);

struct NonEmptyResult {
  enum class Status { NonEmpty, Unknown } status = Status::Unknown;
  std::optional<Derivation> witness;
};

NonEmptyResult is_nonempty_semi(const Term& t, const SuitableList& vars,
                                std::size_t fuel = kDefaultNormalizeFuel);

struct EmptyPointResult {
  enum class Status { Yes, No, Unknown } status = Status::Unknown;
  std::optional<Derivation> witness;  // Yes
  std::optional<Term> normal_form;    // Yes and No
};

EmptyPointResult has_empty_point_semi(const Term& t, const SuitableList& vars,
                                      std::size_t fuel = kDefaultNormalizeFuel);

std::string_view to_string(NonEmptyResult::Status s);
std::string_view to_string(EmptyPointResult::Status s);

}  // namespace lamsh
