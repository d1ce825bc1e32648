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

#include <functional>

#include "lamsh/derivation.hpp"

namespace lamsh {

DerivationSearch::DerivationSearch(SearchLimits limits)
    : limits_(limits), types_(pos_types_up_to(limits.type_cap)) {}

bool DerivationSearch::within_cap(const Derivation& d) const {
  if (d.type().size() > limits_.type_cap) return false;
  for (const auto& [x, p] : d.env().bindings()) {
    if (p.size() > limits_.type_cap) return false;
  }
  for (const auto& x : limits_.zero_vars) {
    if (!d.env().at(x).is_zero()) return false;
  }
  return true;
}

const std::vector<Derivation>& DerivationSearch::at_type(const Term& t, const PosType& q) {
  keep_alive_.push_back(t);
  return cached(t, q, limits_.max_size);
}

std::vector<Derivation> DerivationSearch::any_type(const Term& t) {
  std::vector<Derivation> out;
  for (const auto& q : types_) {
    const auto& ds = at_type(t, q);
    out.insert(out.end(), ds.begin(), ds.end());
  }
  return out;
}

const std::vector<Derivation>& DerivationSearch::cached(const Term& t, const PosType& q,
                                                        std::size_t budget) {
  auto key = std::make_tuple(t.identity(), to_string(q), budget);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  auto result = search(t, q, budget);
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

std::vector<Derivation> DerivationSearch::search(const Term& t, const PosType& q,
                                                 std::size_t budget) {
  std::vector<Derivation> out;
  if (q.size() > limits_.type_cap) return out;
  auto emit = [&](Derivation d) {
    if (d.size() > budget || !within_cap(d)) return;
    if (++produced_ > limits_.max_results) {
      throw BudgetExceeded("derivation search produced more than " +
                           std::to_string(limits_.max_results) + " derivations");
    }
    out.push_back(std::move(d));
  };

  switch (t.kind()) {
    case TermKind::Var:
      emit(Derivation::ax(t.name(), q));
      break;

    case TermKind::App: {
      if (budget == 0) break;
      for (const auto& p : types_) {
        if (1 + p.size() + q.size() > limits_.type_cap) break;  // types_ is sorted by size
        PosType arrow = PosType::singleton(NegType{p, q});
        const auto& lefts = cached(t.fun(), arrow, budget - 1);
        for (const auto& l : lefts) {
          const auto& rights = cached(t.arg(), p, budget - 1 - l.size());
          for (const auto& r : rights) emit(Derivation::app(l, r));
        }
      }
      break;
    }

    case TermKind::Abs: {
      // Group equal arrows; a group of multiplicity m takes a multiset of m
      // candidates so that premise permutations are not listed twice.
      struct Group {
        std::size_t count;
        std::vector<Derivation> candidates;
      };
      std::vector<Group> groups;
      const auto& elems = q.elems();
      for (std::size_t i = 0; i < elems.size();) {
        std::size_t j = i;
        while (j < elems.size() && elems[j] == elems[i]) ++j;
        Group g{j - i, {}};
        for (const auto& d : cached(t.body(), elems[i].codomain, budget)) {
          if (d.env().at(t.name()) == elems[i].domain) g.candidates.push_back(d);
        }
        if (g.candidates.empty()) return out;
        groups.push_back(std::move(g));
        i = j;
      }
      std::vector<Derivation> chosen;
      std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> pick =
          [&](std::size_t gi, std::size_t left, std::size_t from, std::size_t used) {
            if (gi == groups.size()) {
              emit(Derivation::lam(t.name(), t.body(), chosen));
              return;
            }
            if (left == 0) {
              std::size_t next = gi + 1 < groups.size() ? groups[gi + 1].count : 0;
              pick(gi + 1, next, 0, used);
              return;
            }
            const auto& cands = groups[gi].candidates;
            for (std::size_t k = from; k < cands.size(); ++k) {
              if (used + cands[k].size() > budget) continue;
              chosen.push_back(cands[k]);
              pick(gi, left - 1, k, used + cands[k].size());
              chosen.pop_back();
            }
          };
      pick(0, groups.empty() ? 0 : groups[0].count, 0, 0);
      break;
    }
  }
  return out;
}

}  // namespace lamsh
