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

#include "lamsh/generator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lamsh {

namespace {

const char* const kBinders[] = {"x", "y", "z", "w", "u", "v"};

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Counts terms of each size with m variables in scope, identifying terms up
// to α, so that sampling by these weights is uniform among them.
class Counter {
 public:
  double count(std::size_t n, std::size_t m) {
    if (n == 0) return 0;
    if (n == 1) return static_cast<double>(m);
    auto key = std::make_pair(n, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    double c = count(n - 1, m + 1);
    for (std::size_t k = 1; k + 1 < n; ++k) c += count(k, m) * count(n - 1 - k, m);
    memo_[key] = c;
    return c;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, double> memo_;
};

class Builder {
 public:
  Builder(std::mt19937_64& rng, const GeneratorOptions& opts, Counter& counter)
      : rng_(rng), opts_(opts), counter_(counter) {}

  // Weight of application-rooted terms of size n.
  double apps(std::size_t n, std::size_t m) {
    double c = 0;
    for (std::size_t k = 1; k + 1 < n; ++k) c += counter_.count(k, m) * counter_.count(n - 1 - k, m);
    return c;
  }

  Term build(std::size_t n, bool application = false) {
    std::size_t m = scope_.size() + opts_.free_vars.size();
    if (n == 1) {
      std::size_t i = pick(rng_, m);
      return Term::var(i < scope_.size() ? scope_[scope_.size() - 1 - i]
                                         : opts_.free_vars[i - scope_.size()]);
    }
    double total = application ? apps(n, m) : counter_.count(n, m);
    double r = std::uniform_real_distribution<double>(0.0, total)(rng_);
    if (!application) r -= counter_.count(n - 1, m + 1);
    if (r < 0) {
      std::string x = binder();
      scope_.push_back(x);
      Term body = build(n - 1);
      scope_.pop_back();
      return Term::abs(x, body);
    }
    std::size_t left = 1;
    for (; left + 2 < n; ++left) {
      r -= counter_.count(left, m) * counter_.count(n - 1 - left, m);
      if (r < 0) break;
    }
    Term f = build(left);
    Term a = build(n - 1 - left);
    return Term::app(f, a);
  }

 private:
  // A name not already in scope, so every index stays visible.
  std::string binder() {
    std::vector<std::string> unused;
    for (const char* b : kBinders) {
      if (!in_scope(b)) unused.push_back(b);
    }
    if (!unused.empty()) return unused[pick(rng_, unused.size())];
    return fresh_name("x", [&](const std::string& s) { return in_scope(s); });
  }

  bool in_scope(const std::string& s) const {
    return std::find(scope_.begin(), scope_.end(), s) != scope_.end() ||
           std::find(opts_.free_vars.begin(), opts_.free_vars.end(), s) != opts_.free_vars.end();
  }

  std::mt19937_64& rng_;
  const GeneratorOptions& opts_;
  Counter& counter_;
  std::vector<std::string> scope_;
};

const char* const kFree[] = {"x", "y", "z"};

Term random_var(std::mt19937_64& rng) { return Term::var(kFree[pick(rng, std::size(kFree))]); }

Term random_value(std::mt19937_64& rng, std::size_t budget);
Term random_neutral(std::mt19937_64& rng, std::size_t budget);

// Budgets are upper bounds on node counts.
// n ::= v | a | (λx.n)a
Term random_normal(std::mt19937_64& rng, std::size_t budget) {
  std::size_t choices = budget >= 6 ? 3 : budget >= 3 ? 2 : 1;
  switch (pick(rng, choices)) {
    case 0:
      return random_value(rng, budget);
    case 1:
      return random_neutral(rng, budget);
    default: {
      std::size_t fun = 2 + pick(rng, budget - 5);  // λx.n takes [2, budget-4]
      std::string x = kFree[pick(rng, std::size(kFree))];
      return Term::app(Term::abs(x, random_normal(rng, fun - 1)),
                       random_neutral(rng, budget - 1 - fun));
    }
  }
}

Term random_value(std::mt19937_64& rng, std::size_t budget) {
  if (budget < 2 || coin(rng, 0.5)) return random_var(rng);
  std::string x = kFree[pick(rng, std::size(kFree))];
  return Term::abs(x, random_normal(rng, budget - 1));
}

// a ::= x v | x a | a n; needs budget >= 3
Term random_neutral(std::mt19937_64& rng, std::size_t budget) {
  switch (pick(rng, budget >= 5 ? 3 : 1)) {
    case 0:
      return Term::app(random_var(rng), random_value(rng, budget - 2));
    case 1:
      return Term::app(random_var(rng), random_neutral(rng, budget - 2));
    default: {
      std::size_t split = 3 + pick(rng, budget - 4);  // [3, budget-2]
      return Term::app(random_neutral(rng, split), random_normal(rng, budget - 1 - split));
    }
  }
}

}  // namespace

Term random_term(std::mt19937_64& rng, const GeneratorOptions& opts) {
  std::size_t lo = opts.free_vars.empty() ? 2 : 1;
  if (opts.max_size < lo) throw std::invalid_argument("random_term: max_size too small");
  Counter counter;
  Builder b(rng, opts, counter);
  std::vector<std::size_t> sizes;
  for (std::size_t n = lo; n <= opts.max_size; ++n) {
    if (!opts.application_root || b.apps(n, opts.free_vars.size()) > 0) sizes.push_back(n);
  }
  if (sizes.empty()) throw std::invalid_argument("random_term: max_size too small");
  return b.build(sizes[pick(rng, sizes.size())], opts.application_root);
}

Term random_normal_term(std::mt19937_64& rng, std::size_t max_size) {
  return random_normal(rng, 1 + pick(rng, max_size));
}

namespace {

template <typename Gen>
std::vector<Term> distinct(std::size_t count, Gen&& gen) {
  std::vector<Term> out;
  std::set<std::string> seen;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 100 * count + 100) {
    ++attempts;
    Term t = gen();
    if (seen.insert(alpha_key(t)).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<Term> random_corpus(std::uint64_t seed, std::size_t count, const GeneratorOptions& opts) {
  std::mt19937_64 rng(seed);
  return distinct(count, [&] { return random_term(rng, opts); });
}

std::vector<Term> random_normal_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  std::mt19937_64 rng(seed);
  return distinct(count, [&] { return random_normal_term(rng, max_size); });
}

}  // namespace lamsh
