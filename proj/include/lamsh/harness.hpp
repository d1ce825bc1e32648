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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamsh/derivation.hpp"
#include "lamsh/semantics.hpp"

namespace lamsh {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  explicit CheckReport(std::string name = {}) : check_name(std::move(name)) {}

  std::string check_name;
  std::size_t instances_run = 0;
  std::size_t skipped = 0;  // fuel or node budget exhausted
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::map<std::string, std::size_t> counters;

  bool passed() const noexcept { return failures.empty(); }
  void merge(const CheckReport& other);
  void fail(const Term& t, std::string expected, std::string actual);
};

class OpenTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HarnessOptions {
  std::size_t fuel = kDefaultNormalizeFuel;
  std::size_t graph_node_cap = 5000;
  std::size_t type_cap = kDefaultTypeCap;
};

// leng = |π| − |t₀|₀ for the pulled-back minimal derivation, and
// leng = |π| − |π₀| ≥ … for a sample of other derivations of t₀.
CheckReport check_number_steps(const Term& t, const HarnessOptions& o = {});
// Every balanced maximal sequence that ends has the same leng and normal form.
CheckReport check_same_number(const Term& t, const HarnessOptions& o = {});
// size(π) = leng for the derivation of ⊢ t : 𝟘.
CheckReport check_value_theorem(const Term& t, const HarnessOptions& o = {});
// The derivation of y:[⟨𝟘,𝟘⟩] ⊢ (λx.x)(y y) : 𝟘 is larger than its point.
CheckReport check_counterexample();
Derivation counterexample_derivation();
// β_v-only facts on closed terms.
CheckReport check_plotkin_closed(const Term& t, const HarnessOptions& o = {});

// Size laws of subject reduction/expansion for every balanced redex met along
// the normalizing sequence. One instance per (derivation, step) pair.
CheckReport check_subject_reduction(const Term& t, const HarnessOptions& o = {});
// σ-only reduction terminates; derivation size is constant along it.
CheckReport check_sigma_termination(const Term& t, const HarnessOptions& o = {});
// Non-empty semantics ⟺ normalizing ⟺ no infinite balanced sequence.
CheckReport check_characterization(const Term& t, const HarnessOptions& o = {});
// Reachable normal forms are unique up to α.
CheckReport check_confluence(const Term& t, const HarnessOptions& o = {});
// Balanced normal forms: a value has exactly one derivation of ⊢ v : 𝟘 (size 0);
// any other normal form has none.
CheckReport check_uniqueness(const Term& t, const HarnessOptions& o = {});
// Balanced normal forms: no derivation below |t|₀; the minimal one attains it.
CheckReport check_minimality(const Term& t, const HarnessOptions& o = {});

const std::vector<std::string>& check_names();

// One term per line; '#' starts a comment; I and D are expanded.
std::vector<Term> load_corpus(const std::string& path);

struct CorpusOptions {
  HarnessOptions harness;
  std::uint64_t seed = 0;
  std::size_t random_closed = 0;  // extra generated closed terms
  std::size_t random_normal = 0;  // extra generated balanced normal forms
  std::optional<std::string> only;  // a single check name
};

// One merged report per check, in check_names() order.
std::vector<CheckReport> run_checks(const std::vector<Term>& corpus, const CorpusOptions& o);
std::vector<CheckReport> run_corpus(const std::string& path, const CorpusOptions& o);

}  // namespace lamsh
