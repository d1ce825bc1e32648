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
#include <stdexcept>
#include <string>
#include <string_view>

#include "lamsh/term.hpp"

namespace lamsh {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  // Free occurrences of `I` and `D` denote λx.x and λx.x x; binding either
  // name is rejected.
  bool expand_constants = false;
};

//   term := abs | app
//   abs  := ("\" | "λ") ident "." term
//   app  := atom { atom }
//   atom := ident | "(" term ")"
Term parse(std::string_view src, const ParseOptions& opts = {});

struct PrintOptions {
  bool unicode = false;
};

std::string to_string(const Term& t, const PrintOptions& opts = {});

}  // namespace lamsh
