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

#include "oracle.hpp"

#include <memory>
#include <vector>

namespace oracle {

namespace {

struct Db;
using DbPtr = std::shared_ptr<const Db>;

struct Db {
  enum Kind { Var, Free, Lam, App } kind;
  std::size_t index = 0;
  std::string name;
  DbPtr a, b;
};

DbPtr convert(const lamsh::Term& t, std::vector<std::string>& scope) {
  switch (t.kind()) {
    case lamsh::TermKind::Var:
      for (std::size_t i = scope.size(); i-- > 0;) {
        if (scope[i] == t.name()) {
          return std::make_shared<Db>(Db{Db::Var, scope.size() - 1 - i, "", nullptr, nullptr});
        }
      }
      return std::make_shared<Db>(Db{Db::Free, 0, t.name(), nullptr, nullptr});
    case lamsh::TermKind::Abs: {
      scope.push_back(t.name());
      DbPtr body = convert(t.body(), scope);
      scope.pop_back();
      return std::make_shared<Db>(Db{Db::Lam, 0, "", body, nullptr});
    }
    case lamsh::TermKind::App:
      return std::make_shared<Db>(
          Db{Db::App, 0, "", convert(t.fun(), scope), convert(t.arg(), scope)});
  }
  return nullptr;
}

std::string render(const DbPtr& d) {
  switch (d->kind) {
    case Db::Var:
      return std::to_string(d->index);
    case Db::Free:
      return d->name;
    case Db::Lam:
      return "L(" + render(d->a) + ")";
    case Db::App:
      return "(" + render(d->a) + " " + render(d->b) + ")";
  }
  return "";
}

// v is closed, so no shifting is needed.
DbPtr subst(const DbPtr& t, std::size_t depth, const DbPtr& v) {
  switch (t->kind) {
    case Db::Var:
      return t->index == depth ? v : t;
    case Db::Free:
      return t;
    case Db::Lam:
      return std::make_shared<Db>(Db{Db::Lam, 0, "", subst(t->a, depth + 1, v), nullptr});
    case Db::App:
      return std::make_shared<Db>(Db{Db::App, 0, "", subst(t->a, depth, v), subst(t->b, depth, v)});
  }
  return t;
}

std::optional<DbPtr> eval(const DbPtr& t, std::size_t& steps, std::size_t fuel) {
  if (t->kind != Db::App) return t;
  auto f = eval(t->a, steps, fuel);
  if (!f) return std::nullopt;
  auto a = eval(t->b, steps, fuel);
  if (!a) return std::nullopt;
  if ((*f)->kind != Db::Lam) return std::nullopt;  // cannot happen for closed terms
  if (++steps > fuel) return std::nullopt;
  return eval(subst((*f)->a, 0, *a), steps, fuel);
}

std::size_t count_apps(const lamsh::Term& t, bool after_fun) {
  switch (t.kind()) {
    case lamsh::TermKind::Var:
      return 0;
    case lamsh::TermKind::Abs:
      return after_fun ? count_apps(t.body(), false) : 0;
    case lamsh::TermKind::App:
      return 1 + count_apps(t.fun(), true) + count_apps(t.arg(), false);
  }
  return 0;
}

}  // namespace

std::optional<CbvResult> cbv_eval(const lamsh::Term& closed, std::size_t fuel) {
  std::vector<std::string> scope;
  std::size_t steps = 0;
  auto v = eval(convert(closed, scope), steps, fuel);
  if (!v) return std::nullopt;
  return CbvResult{steps, render(*v)};
}

std::string db_string(const lamsh::Term& t) {
  std::vector<std::string> scope;
  return render(convert(t, scope));
}

std::size_t balanced_apps(const lamsh::Term& t) { return count_apps(t, false); }

std::size_t arrows_in(const lamsh::PosType& p) {
  std::size_t n = 0;
  for (char c : lamsh::to_string(p)) n += c == '>';
  return n;
}

}  // namespace oracle
