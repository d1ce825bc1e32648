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

#include "lamsh/types.hpp"

#include <algorithm>
#include <cctype>

namespace lamsh {

PosType::PosType() = default;

PosType::PosType(std::vector<NegType> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(),
            [](const NegType& a, const NegType& b) { return compare(a, b) < 0; });
  for (const auto& n : elems_) size_ += n.size();
}

PosType PosType::zero() { return PosType(); }

PosType PosType::singleton(NegType n) {
  std::vector<NegType> v;
  v.push_back(std::move(n));
  return PosType(std::move(v));
}

int compare(const NegType& a, const NegType& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (int c = compare(a.domain, b.domain)) return c;
  return compare(a.codomain, b.codomain);
}

int compare(const PosType& a, const PosType& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const auto& x = a.elems();
  const auto& y = b.elems();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(x[i], y[i])) return c;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

PosType mset_sum(const PosType& p, const PosType& q) {
  if (q.is_zero()) return p;
  if (p.is_zero()) return q;
  std::vector<NegType> all = p.elems();
  all.insert(all.end(), q.elems().begin(), q.elems().end());
  return PosType(std::move(all));
}

PosType mset_sum(const std::vector<PosType>& parts) {
  std::vector<NegType> all;
  for (const auto& p : parts) all.insert(all.end(), p.elems().begin(), p.elems().end());
  return PosType(std::move(all));
}

bool mset_contains(const PosType& p, const PosType& q) {
  const auto& a = p.elems();
  const auto& b = q.elems();
  std::size_t i = 0;
  for (const auto& n : b) {
    while (i < a.size() && compare(a[i], n) < 0) ++i;
    if (i == a.size() || compare(a[i], n) != 0) return false;
    ++i;
  }
  return true;
}

PosType mset_diff(const PosType& p, const PosType& q) {
  if (!mset_contains(p, q)) {
    throw std::invalid_argument("mset_diff: " + to_string(q) + " is not a sub-multiset of " +
                                to_string(p));
  }
  std::vector<NegType> out;
  const auto& a = p.elems();
  const auto& b = q.elems();
  std::size_t j = 0;
  for (const auto& n : a) {
    if (j < b.size() && compare(n, b[j]) == 0) {
      ++j;
    } else {
      out.push_back(n);
    }
  }
  return PosType(std::move(out));
}

std::size_t universe_level(const PosType& p) noexcept {
  std::size_t level = 0;
  for (const auto& n : p.elems()) {
    level = std::max(level, 1 + std::max(universe_level(n.domain), universe_level(n.codomain)));
  }
  return level;
}

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view s) : s_(s) {}

  PosType run() {
    PosType p = pos();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return p;
  }

  PosType pos() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of type");
    if (s_[i_] == '0') {
      ++i_;
      return PosType::zero();
    }
    if (s_[i_] != '[') fail("expected '0' or '['");
    ++i_;
    std::vector<NegType> elems;
    skip();
    if (i_ < s_.size() && s_[i_] == ']') {
      ++i_;
      return PosType::zero();
    }
    for (;;) {
      elems.push_back(neg());
      skip();
      if (i_ < s_.size() && s_[i_] == ',') {
        ++i_;
        continue;
      }
      if (i_ < s_.size() && s_[i_] == ']') {
        ++i_;
        break;
      }
      fail("expected ',' or ']'");
    }
    return PosType(std::move(elems));
  }

  NegType neg() {
    PosType d = pos();
    skip();
    if (i_ >= s_.size() || s_[i_] != '>') fail("expected '>'");
    ++i_;
    PosType c = pos();
    return NegType{std::move(d), std::move(c)};
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw TypeSyntaxError("type syntax error at offset " + std::to_string(i_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

void print(const PosType& p, std::string& out);

void print(const NegType& n, std::string& out) {
  print(n.domain, out);
  out += '>';
  print(n.codomain, out);
}

void print(const PosType& p, std::string& out) {
  if (p.is_zero()) {
    out += '0';
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < p.elems().size(); ++i) {
    if (i) out += ',';
    print(p.elems()[i], out);
  }
  out += ']';
}

}  // namespace

PosType parse_pos_type(std::string_view src) { return TypeParser(src).run(); }

std::string to_string(const PosType& p) {
  std::string out;
  print(p, out);
  return out;
}

std::string to_string(const NegType& n) {
  std::string out;
  print(n, out);
  return out;
}

namespace {

// neg_by_size[k]: negative types of size k; pos_by_size[k]: positive ones.
struct Catalog {
  std::vector<std::vector<NegType>> neg_by_size;
  std::vector<std::vector<PosType>> pos_by_size;

  void grow_to(std::size_t n) {
    if (pos_by_size.empty()) {
      neg_by_size.emplace_back();
      pos_by_size.push_back({PosType::zero()});
    }
    while (pos_by_size.size() <= n) {
      std::size_t k = pos_by_size.size();
      std::vector<NegType> negs;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = k - 1 - i;
        for (const auto& d : pos_by_size[i]) {
          for (const auto& c : pos_by_size[j]) negs.push_back(NegType{d, c});
        }
      }
      std::sort(negs.begin(), negs.end());
      neg_by_size.push_back(std::move(negs));

      // Multisets with total size k: non-decreasing sequences over all negs of
      // size <= k in canonical order.
      std::vector<NegType> pool;
      for (std::size_t s = 1; s <= k; ++s) {
        pool.insert(pool.end(), neg_by_size[s].begin(), neg_by_size[s].end());
      }
      std::vector<PosType> out;
      std::vector<NegType> chosen;
      build(pool, 0, k, chosen, out);
      std::sort(out.begin(), out.end());
      pos_by_size.push_back(std::move(out));
    }
  }

  static void build(const std::vector<NegType>& pool, std::size_t from, std::size_t remaining,
                    std::vector<NegType>& chosen, std::vector<PosType>& out) {
    if (remaining == 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].size() > remaining) continue;
      chosen.push_back(pool[i]);
      build(pool, i, remaining - pool[i].size(), chosen, out);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<PosType> pos_types_of_size(std::size_t n) {
  Catalog c;
  c.grow_to(n);
  return c.pos_by_size[n];
}

std::vector<PosType> pos_types_up_to(std::size_t n) {
  Catalog c;
  c.grow_to(n);
  std::vector<PosType> out;
  for (std::size_t k = 0; k <= n; ++k) {
    out.insert(out.end(), c.pos_by_size[k].begin(), c.pos_by_size[k].end());
  }
  return out;
}

Environment::Environment(std::initializer_list<std::pair<const std::string, PosType>> init) {
  for (const auto& [x, p] : init) set(x, p);
}

const PosType& Environment::at(const std::string& x) const {
  static const PosType kZero;
  auto it = bindings_.find(x);
  return it == bindings_.end() ? kZero : it->second;
}

void Environment::set(const std::string& x, PosType p) {
  if (p.is_zero()) {
    bindings_.erase(x);
  } else {
    bindings_.insert_or_assign(x, std::move(p));
  }
}

Environment Environment::without(const std::string& x) const {
  Environment e = *this;
  e.bindings_.erase(x);
  return e;
}

Environment env_sum(const Environment& g, const Environment& d) {
  if (d.empty()) return g;
  if (g.empty()) return d;
  Environment out = g;
  for (const auto& [x, p] : d.bindings()) out.set(x, mset_sum(out.at(x), p));
  return out;
}

std::string to_string(const Environment& env) {
  std::string out;
  bool first = true;
  for (const auto& [x, p] : env.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += x;
    out += ':';
    out += to_string(p);
  }
  return out;
}

std::size_t point_size(const SemPoint& p) noexcept {
  std::size_t s = p.output.size();
  for (const auto& q : p.inputs) s += q.size();
  return s;
}

bool operator<(const SemPoint& a, const SemPoint& b) noexcept {
  std::size_t sa = point_size(a), sb = point_size(b);
  if (sa != sb) return sa < sb;
  std::size_t n = std::min(a.inputs.size(), b.inputs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a.inputs[i], b.inputs[i])) return c < 0;
  }
  if (a.inputs.size() != b.inputs.size()) return a.inputs.size() < b.inputs.size();
  return compare(a.output, b.output) < 0;
}

std::string to_string(const SemPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.inputs.size(); ++i) {
    if (i) out += ',';
    out += to_string(p.inputs[i]);
  }
  out += ") |- ";
  out += to_string(p.output);
  return out;
}

SemPoint parse_point(std::string_view src) {
  auto open = src.find('(');
  auto close = src.find(") |-");
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw TypeSyntaxError("malformed point '" + std::string(src) + "'");
  }
  SemPoint p;
  std::string_view inside = src.substr(open + 1, close - open - 1);
  // Split on top-level commas.
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= inside.size(); ++i) {
    if (i == inside.size() || (inside[i] == ',' && depth == 0)) {
      std::string_view piece = inside.substr(start, i - start);
      if (i == inside.size() && p.inputs.empty() &&
          piece.find_first_not_of(" \t") == std::string_view::npos) {
        break;
      }
      p.inputs.push_back(parse_pos_type(piece));
      start = i + 1;
    } else if (inside[i] == '[') {
      ++depth;
    } else if (inside[i] == ']') {
      --depth;
    }
  }
  p.output = parse_pos_type(src.substr(close + 4));
  return p;
}

}  // namespace lamsh
