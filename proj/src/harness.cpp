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

#include "lamsh/harness.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lamsh/generator.hpp"

namespace lamsh {

void CheckReport::merge(const CheckReport& other) {
  instances_run += other.instances_run;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  for (const auto& [k, n] : other.counters) counters[k] += n;
}

void CheckReport::fail(const Term& t, std::string expected, std::string actual) {
  failures.push_back(Failure{to_string(t), std::move(expected), std::move(actual)});
}

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

SuitableList free_list(const Term& t) { return SuitableList(t.free_var_list()); }

// A few extra derivations of a normal form, for variety. Small caps keep the
// search cheap.
std::vector<Derivation> sample_derivations(const Term& nf, std::size_t count) {
  std::vector<Derivation> out;
  if (nf.node_count() > 12) return out;
  SearchLimits limits;
  limits.type_cap = 2;
  limits.max_results = 5000;
  DerivationSearch search(limits);
  try {
    for (const auto& d : search.any_type(nf)) {
      if (out.size() == count) break;
      out.push_back(d);
    }
  } catch (const BudgetExceeded&) {
  }
  return out;
}

const Term& term_before(const ReductionSequence& seq, std::size_t i) {
  return i == 0 ? seq.start : seq.steps[i - 1].second;
}

}  // namespace

CheckReport check_number_steps(const Term& t, const HarnessOptions& o) {
  CheckReport r{"number_steps"};
  NormalizeResult n = normalize(t, Mode::Balanced, o.fuel);
  if (!n.normal) {
    ++r.skipped;
    return r;
  }
  ++r.instances_run;
  const Term& nf = n.term();
  std::size_t leng = n.sequence.leng_betav;
  std::size_t nf_size = balanced_size(nf);
  try {
    Derivation pi0 = min_derivation_normal(nf);
    Derivation pi = pull_back(pi0, n.sequence);
    check(pi);
    if (!alpha_eq(pi.subject(), t)) r.fail(t, "derivation of the input", to_string(pi.subject()));
    if (pi0.size() != nf_size) {
      r.fail(t, "|pi0| = |t0|_0 = " + num(nf_size), "|pi0| = " + num(pi0.size()));
    }
    if (pi.size() != leng + nf_size) {
      r.fail(t, "leng = " + num(leng), "|pi| - |t0|_0 = " + num(pi.size()) + " - " + num(nf_size));
    }
    for (const auto& d : sample_derivations(nf, 8)) {
      Derivation p = pull_back(d, n.sequence);
      if (p.size() != leng + d.size() || leng + nf_size > p.size()) {
        r.fail(t, "leng = |pi| - |pi0| <= |pi| - |t0|_0 with leng = " + num(leng),
               "|pi| = " + num(p.size()) + ", |pi0| = " + num(d.size()));
      }
    }
  } catch (const std::exception& e) {
    r.fail(t, "a derivation pulled back along the sequence", e.what());
  }
  return r;
}

CheckReport check_same_number(const Term& t, const HarnessOptions& o) {
  CheckReport r{"same_number"};
  ReductionGraph g = explore(t, Mode::Balanced, RuleSet::Shuffling, o.graph_node_cap);
  if (g.truncated) {
    ++r.skipped;
    return r;
  }
  auto normals = g.normal_nodes();
  if (g.find_cycle()) {
    if (normals.empty()) {
      ++r.skipped;
    } else {
      ++r.instances_run;
      r.fail(t, "no infinite sequence from a normalizing term", "a reachable cycle");
    }
    return r;
  }
  ++r.instances_run;
  auto outcomes = g.complete_outcomes();
  std::set<std::size_t> lengs;
  std::set<std::size_t> nfs;
  for (auto [l, v] : outcomes) {
    lengs.insert(l);
    nfs.insert(v);
  }
  if (lengs.size() > 1) {
    r.fail(t, "a single leng", num(lengs.size()) + " distinct values, " + num(*lengs.begin()) +
                                   " to " + num(*lengs.rbegin()));
  }
  if (nfs.size() > 1) r.fail(t, "a single normal form", num(nfs.size()) + " α-classes");

  // Cross-check the graph against explicit enumeration on small instances.
  if (g.nodes.size() <= 300 && g.longest_path() <= kDefaultEnumerateFuel) {
    try {
      auto seqs = enumerate_sequences(t, Mode::Balanced, kDefaultEnumerateFuel, 20000);
      std::set<std::pair<std::size_t, std::string>> from_seqs;
      for (const auto& s : seqs) {
        if (!s.complete) {
          r.fail(t, "every sequence ends", "an incomplete sequence within the longest path bound");
          break;
        }
        from_seqs.emplace(s.sequence.leng_betav, alpha_key(s.sequence.last()));
      }
      std::set<std::pair<std::size_t, std::string>> from_graph;
      for (auto [l, v] : outcomes) from_graph.emplace(l, alpha_key(g.nodes[v]));
      if (from_seqs != from_graph) r.fail(t, "enumeration agrees with the graph", "mismatch");
      ++r.counters["enumerated"];
      r.counters["sequences"] += seqs.size();
    } catch (const BudgetExceeded&) {
    }
  }
  return r;
}

CheckReport check_value_theorem(const Term& t, const HarnessOptions& o) {
  CheckReport r{"value_theorem"};
  auto e = derive_empty(t, o.fuel);
  if (!e) {
    if (normalize(t, Mode::Balanced, o.fuel).normal) {
      ++r.instances_run;  // normal form is not a value: nothing to compare
    } else {
      ++r.skipped;
    }
    return r;
  }
  ++r.instances_run;
  try {
    Judgment j = check(e->derivation);
    if (!j.env.empty() || !j.type.is_zero() || !alpha_eq(j.subject, t)) {
      r.fail(t, "|- t : 0", to_string(j));
    }
  } catch (const RuleViolation& v) {
    r.fail(t, "a valid derivation", v.what());
  }
  if (e->derivation.size() != e->sequence.leng_betav) {
    r.fail(t, "size = leng = " + num(e->sequence.leng_betav), "size = " + num(e->derivation.size()));
  }
  return r;
}

Derivation counterexample_derivation() {
  PosType arrow = PosType::singleton(NegType{PosType::zero(), PosType::zero()});
  Derivation id = Derivation::lam("x", Term::var("x"), {Derivation::ax("x", PosType::zero())});
  Derivation yy = Derivation::app(Derivation::ax("y", arrow), Derivation::ax("y", PosType::zero()));
  return Derivation::app(id, yy);
}

CheckReport check_counterexample() {
  CheckReport r{"counterexample"};
  ++r.instances_run;
  Derivation d = counterexample_derivation();
  const Term& t = d.subject();
  try {
    check(d);
  } catch (const RuleViolation& v) {
    r.fail(t, "a valid derivation", v.what());
    return r;
  }
  SemPoint p = point_of(d, SuitableList({"y"}));
  std::size_t ps = point_size(p);
  if (d.size() != 2) r.fail(t, "size 2", "size " + num(d.size()));
  if (ps != 1) r.fail(t, "point size 1", "point size " + num(ps));
  if (!(d.size() > ps)) r.fail(t, "size > point size", num(d.size()) + " <= " + num(ps));
  if (!find_redexes(t, Mode::Full).empty()) r.fail(t, "a normal form", "a redex in full mode");
  if (balanced_size(t) != d.size()) {
    r.fail(t, "|t|_0 = size", "|t|_0 = " + num(balanced_size(t)));
  }
  r.notes.push_back("size " + num(d.size()) + " > point size " + num(ps) + " for " + to_string(p));
  return r;
}

CheckReport check_plotkin_closed(const Term& t, const HarnessOptions& o) {
  if (!t.is_closed()) throw OpenTerm(to_string(t) + " is not closed");
  CheckReport r{"plotkin_closed"};
  NormalizeResult bv = normalize(t, Mode::Balanced, o.fuel, RuleSet::BetaVOnly);
  NormalizeResult sh = normalize(t, Mode::Balanced, o.fuel);
  if (!bv.normal && !sh.normal) {
    ++r.instances_run;  // coherently negative within fuel
    return r;
  }
  if (bv.normal && !sh.normal) {
    ++r.skipped;  // σ steps may need more fuel
    return r;
  }
  ++r.instances_run;
  if (!bv.normal) {
    r.fail(t, "beta_v-only normalizes", "fuel exhausted while balanced sh normalizes");
    return r;
  }
  if (!bv.term().is_value()) r.fail(t, "a closed value", to_string(bv.term()));
  if (!alpha_eq(bv.term(), sh.term())) {
    r.fail(t, "equal normal forms", to_string(bv.term()) + " vs " + to_string(sh.term()));
  }
  if (bv.sequence.leng_betav != sh.sequence.leng_betav) {
    r.fail(t, "leng " + num(bv.sequence.leng_betav), "leng_sh " + num(sh.sequence.leng_betav));
  }
  auto e = derive_empty(t, o.fuel);
  if (!e) {
    r.fail(t, "|- t : 0 derivable", "no derivation");
  } else if (e->derivation.size() != bv.sequence.leng_betav) {
    r.fail(t, "size = leng = " + num(bv.sequence.leng_betav), "size " + num(e->derivation.size()));
  }
  if (is_nonempty_semi(t, SuitableList{}, o.fuel).status != NonEmptyResult::Status::NonEmpty) {
    r.fail(t, "non-empty semantics", "unknown");
  }
  ReductionGraph g = explore(t, Mode::Balanced, RuleSet::BetaVOnly, o.graph_node_cap);
  if (!g.truncated) {
    if (g.find_cycle()) {
      r.fail(t, "no infinite beta_v sequence", "a reachable cycle");
    } else {
      std::set<std::size_t> lengs;
      for (auto [l, v] : g.complete_outcomes()) lengs.insert(l);
      if (lengs.size() != 1) r.fail(t, "a single beta_v leng", num(lengs.size()) + " values");
      if (g.normal_nodes().size() != 1) {
        r.fail(t, "one beta_v normal form", num(g.normal_nodes().size()));
      }
    }
  }
  return r;
}

namespace {

void reduction_pairs(const Term& t, const Derivation& last, const ReductionSequence& seq,
                     CheckReport& r) {
  constexpr std::size_t kMaxTerms = 200;
  std::vector<Derivation> ds(seq.length() + 1, last);
  for (std::size_t i = seq.length(); i-- > 0;) {
    ds[i] = subject_expand(ds[i + 1], term_before(seq, i), seq.steps[i].first);
  }
  for (std::size_t i = 0; i <= seq.length() && i < kMaxTerms; ++i) {
    const Term& here = term_before(seq, i);
    const Derivation& d = ds[i];
    for (const auto& step : find_redexes(here, Mode::Balanced)) {
      ++r.instances_run;
      ++r.counters[step.kind == RedexKind::BetaV ? "beta_v" : "sigma"];
      std::string where = to_string(here) + " at " + step.position.to_string();
      try {
        Derivation red = subject_reduce(d, step);
        Judgment j = check(red);
        std::size_t want = step.kind == RedexKind::BetaV ? d.size() - 1 : d.size();
        if (red.size() != want) {
          r.fail(t, where + ": size " + num(want), "size " + num(red.size()));
        }
        if (!(j.env == d.env()) || !(j.type == d.type()) ||
            !alpha_eq(j.subject, apply_step(here, step))) {
          r.fail(t, where + ": " + to_string(d.conclusion()), to_string(j));
        }
        Derivation back = subject_expand(red, here, step);
        Judgment k = check(back);
        if (back.size() != d.size() || !same_judgment(k, d.conclusion())) {
          r.fail(t, where + ": expansion restores size " + num(d.size()),
                 "size " + num(back.size()) + ", " + to_string(k));
        }
      } catch (const std::exception& e) {
        r.fail(t, where + ": a transformed derivation", e.what());
      }
    }
  }
}

}  // namespace

CheckReport check_subject_reduction(const Term& t, const HarnessOptions& o) {
  CheckReport r{"subject_reduction"};
  NormalizeResult n = normalize(t, Mode::Balanced, o.fuel);
  if (!n.normal) {
    ++r.skipped;
    return r;
  }
  std::vector<Derivation> roots{min_derivation_normal(n.term())};
  for (auto& d : sample_derivations(n.term(), 3)) roots.push_back(std::move(d));
  for (const auto& d : roots) {
    try {
      reduction_pairs(t, d, n.sequence, r);
    } catch (const std::exception& e) {
      ++r.instances_run;
      r.fail(t, "a derivation pulled back along the sequence", e.what());
    }
  }
  return r;
}

CheckReport check_sigma_termination(const Term& t, const HarnessOptions& o) {
  CheckReport r{"sigma_termination"};
  ReductionGraph g = explore(t, Mode::Full, RuleSet::SigmaOnly, o.graph_node_cap);
  if (g.truncated) {
    ++r.skipped;
    return r;
  }
  ++r.instances_run;
  if (g.find_cycle()) r.fail(t, "sigma reduction terminates", "a reachable cycle");
  // Size is constant along a σ-only sequence.
  NormalizeResult sh = normalize(t, Mode::Balanced, o.fuel);
  if (!sh.normal) return r;
  NormalizeResult sg = normalize(t, Mode::Balanced, o.fuel, RuleSet::SigmaOnly);
  try {
    Derivation d = pull_back(min_derivation_normal(sh.term()), sh.sequence);
    std::size_t size = d.size();
    for (const auto& [step, next] : sg.sequence.steps) {
      d = subject_reduce(d, step);
      if (d.size() != size) {
        r.fail(t, "size " + num(size) + " along sigma steps", "size " + num(d.size()));
        break;
      }
    }
    check(d);
  } catch (const std::exception& e) {
    r.fail(t, "sigma steps preserve the derivation", e.what());
  }
  return r;
}

CheckReport check_characterization(const Term& t, const HarnessOptions& o) {
  CheckReport r{"characterization"};
  NonEmptyResult ne = is_nonempty_semi(t, free_list(t), o.fuel);
  bool nonempty = ne.status == NonEmptyResult::Status::NonEmpty;
  bool normalizes = normalize(t, Mode::Balanced, o.fuel).normal;
  ReductionGraph g = explore(t, Mode::Balanced, RuleSet::Shuffling, o.graph_node_cap);
  if (!nonempty && g.truncated) {
    ++r.skipped;
    return r;
  }
  ++r.instances_run;
  if (nonempty != normalizes) {
    r.fail(t, "non-empty iff normalizing", nonempty ? "non-empty, diverging" : "unknown, normalizing");
  }
  if (nonempty) {
    try {
      Judgment j = check(*ne.witness);
      if (!alpha_eq(j.subject, t)) r.fail(t, "a witness for t", to_string(j));
    } catch (const RuleViolation& v) {
      r.fail(t, "a valid witness", v.what());
    }
  }
  if (!g.truncated) {
    bool infinite = g.find_cycle().has_value();
    if (nonempty && infinite) r.fail(t, "strongly normalizing", "a reachable cycle");
    if (!nonempty && !infinite && g.longest_path() <= o.fuel) {
      r.fail(t, "an infinite sequence", "every sequence ends within the fuel");
    }
  }
  return r;
}

CheckReport check_confluence(const Term& t, const HarnessOptions& o) {
  CheckReport r{"confluence"};
  ReductionGraph g = explore(t, Mode::Balanced, RuleSet::Shuffling, o.graph_node_cap);
  if (g.truncated) {
    ++r.skipped;
    return r;
  }
  ++r.instances_run;
  auto normals = g.normal_nodes();
  if (normals.size() > 1) {
    r.fail(t, "a unique normal form", num(normals.size()) + " α-classes, e.g. " +
                                          to_string(g.nodes[normals[0]]) + " and " +
                                          to_string(g.nodes[normals[1]]));
  }
  return r;
}

namespace {

std::optional<Term> normal_form(const Term& t, std::size_t fuel) {
  if (is_balanced_normal(t)) return t;
  NormalizeResult n = normalize(t, Mode::Balanced, fuel);
  if (!n.normal) return std::nullopt;
  return n.term();
}

// Renames binders that clash with free variables of t.
Term bound_apart(const Term& t, const std::set<std::string>& avoid, std::set<std::string>& used) {
  switch (t.kind()) {
    case TermKind::Var:
      return t;
    case TermKind::App:
      return Term::app(bound_apart(t.fun(), avoid, used), bound_apart(t.arg(), avoid, used));
    case TermKind::Abs: {
      std::string x = t.name();
      Term body = t.body();
      if (avoid.count(x)) {
        x = fresh_name(x, [&](const std::string& c) { return used.count(c) > 0; });
        used.insert(x);
        body = rename_free(body, t.name(), x);
      }
      return Term::abs(x, bound_apart(body, avoid, used));
    }
  }
  return t;
}

}  // namespace

CheckReport check_uniqueness(const Term& t, const HarnessOptions& o) {
  CheckReport r{"uniqueness"};
  auto nf = normal_form(t, o.fuel);
  if (!nf) {
    ++r.skipped;
    return r;
  }
  // Only derivations with an empty environment matter, so free variables
  // may be pinned to 𝟘 once no binder shares their name.
  std::set<std::string> free = free_vars(*nf);
  std::set<std::string> used = all_names(*nf);
  Term subject = bound_apart(*nf, free, used);
  SearchLimits limits;
  limits.type_cap = o.type_cap;
  limits.zero_vars.assign(free.begin(), free.end());
  DerivationSearch search(limits);
  std::vector<Derivation> closed;
  try {
    for (const auto& d : search.at_type(subject, PosType::zero())) {
      if (d.env().empty()) closed.push_back(d);
    }
  } catch (const BudgetExceeded&) {
    ++r.skipped;
    return r;
  }
  ++r.instances_run;
  if (nf->is_value()) {
    if (closed.size() != 1) {
      r.fail(*nf, "exactly one derivation of |- v : 0", num(closed.size()));
    } else if (closed[0].size() != 0 ||
               !same_derivation(closed[0], empty_value_derivation(*nf))) {
      r.fail(*nf, "the size-0 derivation", "size " + num(closed[0].size()));
    }
  } else if (!closed.empty()) {
    r.fail(*nf, "no derivation of |- t : 0", num(closed.size()));
  }
  return r;
}

CheckReport check_minimality(const Term& t, const HarnessOptions& o) {
  CheckReport r{"minimality"};
  auto nf = normal_form(t, o.fuel);
  if (!nf) {
    ++r.skipped;
    return r;
  }
  std::size_t n0 = balanced_size(*nf);
  try {
    Derivation m = min_derivation_normal(*nf);
    check(m);
    if (m.size() != n0) r.fail(*nf, "minimal size " + num(n0), "size " + num(m.size()));
  } catch (const std::exception& e) {
    r.fail(*nf, "a minimal derivation", e.what());
  }
  if (n0 > 0) {
    SearchLimits limits;
    limits.type_cap = o.type_cap;
    limits.max_size = n0 - 1;
    DerivationSearch search(limits);
    try {
      auto found = search.any_type(*nf);
      if (!found.empty()) {
        r.fail(*nf, "no derivation below " + num(n0), "size " + num(found.front().size()));
      }
    } catch (const BudgetExceeded&) {
      ++r.skipped;
      return r;
    }
  }
  ++r.instances_run;
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "number_steps",     "same_number",       "value_theorem",    "counterexample",
      "plotkin_closed",   "subject_reduction", "sigma_termination", "characterization",
      "confluence",       "uniqueness",        "minimality"};
  return names;
}

std::vector<Term> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Term> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(line, ParseOptions{true}));
    } catch (const SyntaxError& e) {
      throw std::runtime_error(path + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CheckReport> run_checks(const std::vector<Term>& corpus, const CorpusOptions& o) {
  std::vector<Term> terms = corpus;
  GeneratorOptions gen;
  gen.application_root = true;
  for (auto& t : random_corpus(o.seed, o.random_closed, gen)) terms.push_back(std::move(t));
  for (auto& t : random_normal_corpus(o.seed + 1, o.random_normal, 8)) {
    terms.push_back(std::move(t));
  }
  if (terms.empty()) return {};
  using Fn = CheckReport (*)(const Term&, const HarnessOptions&);
  const std::vector<std::pair<std::string, Fn>> per_term{
      {"number_steps", check_number_steps},   {"same_number", check_same_number},
      {"value_theorem", check_value_theorem}, {"plotkin_closed", check_plotkin_closed},
      {"subject_reduction", check_subject_reduction},
      {"sigma_termination", check_sigma_termination},
      {"characterization", check_characterization},
      {"confluence", check_confluence},       {"uniqueness", check_uniqueness},
      {"minimality", check_minimality}};
  std::vector<CheckReport> out;
  for (const auto& name : check_names()) {
    if (o.only && *o.only != name) continue;
    if (name == "counterexample") {
      out.push_back(check_counterexample());
      continue;
    }
    Fn fn = std::find_if(per_term.begin(), per_term.end(),
                         [&](const auto& p) { return p.first == name; })->second;
    CheckReport total{name};
    for (const auto& t : terms) {
      if (name == "plotkin_closed" && !t.is_closed()) continue;
      total.merge(fn(t, o.harness));
    }
    out.push_back(std::move(total));
  }
  return out;
}

std::vector<CheckReport> run_corpus(const std::string& path, const CorpusOptions& o) {
  return run_checks(load_corpus(path), o);
}

}  // namespace lamsh
