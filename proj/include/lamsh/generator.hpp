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
#include <random>
#include <string>
#include <vector>

#include "lamsh/term.hpp"

namespace lamsh {

struct GeneratorOptions {
  std::size_t max_size = 10;               // number of nodes
  std::vector<std::string> free_vars = {};  // empty: closed terms
  bool application_root = false;           // skip values at the root
};

// Uniform size in [1, max_size], then uniform among terms of that size up to α.
// Returns a closed term when free_vars is empty.
Term random_term(std::mt19937_64& rng, const GeneratorOptions& opts);

// A random balanced normal form over the free variables x, y, z.
Term random_normal_term(std::mt19937_64& rng, std::size_t max_size);

// `count` distinct (up to α) terms.
std::vector<Term> random_corpus(std::uint64_t seed, std::size_t count, const GeneratorOptions& opts);
std::vector<Term> random_normal_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size);

}  // namespace lamsh
