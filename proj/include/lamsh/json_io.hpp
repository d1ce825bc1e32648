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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lamsh/derivation.hpp"
#include "lamsh/semantics.hpp"

namespace lamsh {

using Json = nlohmann::json;

// Malformed input; `path` is a JSON pointer to the offending value.
class JsonFormatError : public std::runtime_error {
 public:
  JsonFormatError(std::string path, const std::string& reason);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// {"rule":"ax","var":x,"type":P} | {"rule":"app","left":d,"right":d} |
// {"rule":"lam","binder":x,"body":t,"premises":[d...]}
// "body" may be omitted when there is at least one premise. Loading rebuilds
// every conclusion; rule violations surface as RuleViolation with the node
// path.
Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);
Derivation load_derivation_file(const std::string& path);

Json trace_to_json(const ReductionSequence& seq, Mode mode, bool normal);
struct Trace {
  ReductionSequence sequence;
  Mode mode = Mode::Balanced;
  bool normal = false;
};
Trace trace_from_json(const Json& j);
bool same_trace(const Trace& a, const Trace& b);

Json fragment_to_json(const InterpretationFragment& f);
InterpretationFragment fragment_from_json(const Json& j);
bool same_fragment(const InterpretationFragment& a, const InterpretationFragment& b);

}  // namespace lamsh
