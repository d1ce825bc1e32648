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

// Reference computations used only by the tests. They share no code with the
// library beyond the Term accessors.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lamsh/term.hpp"
#include "lamsh/types.hpp"

namespace oracle {

struct CbvResult {
  std::size_t beta_steps;
  std::string value;  // de Bruijn rendering, same format as db_string
};

// Big-step call-by-value evaluation of a closed term with de Bruijn indices,
// counting β_v contractions. Nothing on divergence within `fuel` steps.
std::optional<CbvResult> cbv_eval(const lamsh::Term& closed, std::size_t fuel = 10000);

// De Bruijn rendering, e.g. "L(0 0)"; free variables print by name.
std::string db_string(const lamsh::Term& t);

// Applications sitting at positions where every body step follows a
// function step.
std::size_t balanced_apps(const lamsh::Term& t);

// Arrows counted in the printed type.
std::size_t arrows_in(const lamsh::PosType& p);

}  // namespace oracle
