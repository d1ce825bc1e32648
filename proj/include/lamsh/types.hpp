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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lamsh {

struct NegType;

// Finite multiset of negative types, kept sorted by the canonical order.
// The empty multiset is the atomic type 𝟘.
class PosType {
 public:
  PosType();
  explicit PosType(std::vector<NegType> elems);  // canonicalises
  static PosType zero();
  static PosType singleton(NegType n);

  const std::vector<NegType>& elems() const noexcept { return elems_; }
  bool is_zero() const noexcept { return elems_.empty(); }
  std::size_t cardinality() const noexcept { return elems_.size(); }
  // Number of arrow constructors, |P|.
  std::size_t size() const noexcept { return size_; }

 private:
  std::vector<NegType> elems_;
  std::size_t size_ = 0;
};

// The arrow ⟨P, Q⟩.
struct NegType {
  PosType domain;
  PosType codomain;

  std::size_t size() const noexcept { return 1 + domain.size() + codomain.size(); }
};

// Total order: size first, then components lexicographically.
int compare(const PosType& a, const PosType& b) noexcept;
int compare(const NegType& a, const NegType& b) noexcept;

inline bool operator==(const PosType& a, const PosType& b) noexcept { return compare(a, b) == 0; }
inline bool operator<(const PosType& a, const PosType& b) noexcept { return compare(a, b) < 0; }
inline bool operator==(const NegType& a, const NegType& b) noexcept { return compare(a, b) == 0; }
inline bool operator<(const NegType& a, const NegType& b) noexcept { return compare(a, b) < 0; }

PosType mset_sum(const PosType& p, const PosType& q);
PosType mset_sum(const std::vector<PosType>& parts);

// Multiset difference p − q; throws std::invalid_argument unless q ⊆ p.
PosType mset_diff(const PosType& p, const PosType& q);
bool mset_contains(const PosType& p, const PosType& q);

inline std::size_t type_size(const PosType& p) noexcept { return p.size(); }

// Least k with P ∈ M_fin(U_k), where U_0 = ∅ and U_{k+1} = M_fin(U_k) × M_fin(U_k).
std::size_t universe_level(const PosType& p) noexcept;
inline bool in_universe(const PosType& p, std::size_t k) noexcept {
  return universe_level(p) <= k;
}

// Type grammar: pos := "0" | "[" neg {"," neg} "]" ;  neg := pos ">" pos
class TypeSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PosType parse_pos_type(std::string_view src);
std::string to_string(const PosType& p);
std::string to_string(const NegType& n);

// All positive types of size exactly n / at most n, in canonical order.
std::vector<PosType> pos_types_of_size(std::size_t n);
std::vector<PosType> pos_types_up_to(std::size_t n);

// ---------------------------------------------------------------------------

// Total map from variables to positive types with finite support; bindings
// to 𝟘 are never stored.
class Environment {
 public:
  Environment() = default;
  Environment(std::initializer_list<std::pair<const std::string, PosType>> init);

  const PosType& at(const std::string& x) const;
  void set(const std::string& x, PosType p);
  Environment without(const std::string& x) const;
  bool empty() const noexcept { return bindings_.empty(); }
  const std::map<std::string, PosType>& bindings() const noexcept { return bindings_; }

  friend bool operator==(const Environment& a, const Environment& b) { return a.bindings_ == b.bindings_; }

 private:
  std::map<std::string, PosType> bindings_;
};

Environment env_sum(const Environment& g, const Environment& d);

// "x:[0>0], y:0"; the empty environment prints as the empty string.
std::string to_string(const Environment& env);

// ---------------------------------------------------------------------------

struct SemPoint {
  std::vector<PosType> inputs;
  PosType output;

  friend bool operator==(const SemPoint& a, const SemPoint& b) {
    return a.inputs == b.inputs && a.output == b.output;
  }
};

// |((P1,…,Pk),Q)| = |Q| + Σ |Pi|
std::size_t point_size(const SemPoint& p) noexcept;

// Ordered by point_size, then lexicographically.
bool operator<(const SemPoint& a, const SemPoint& b) noexcept;

// "(P1,...,Pk) |- Q"
std::string to_string(const SemPoint& p);
SemPoint parse_point(std::string_view src);

}  // namespace lamsh
