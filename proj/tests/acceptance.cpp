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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "lamsh/generator.hpp"
#include "lamsh/harness.hpp"
#include "lamsh/json_io.hpp"
#include "oracle.hpp"

using namespace lamsh;

namespace {

using Clock = std::chrono::steady_clock;

Term P(const char* s) { return parse(s, ParseOptions{true}); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
  void absorb(const CheckReport& r) {
    for (const auto& f : r.failures) {
      require(false, r.check_name + " on " + f.input + ": expected " + f.expected + ", got " +
                         f.actual);
    }
  }
};

struct Corpus {
  std::vector<Term> bundled;
  std::vector<Term> closed;
  std::vector<Term> open;
  std::vector<Term> normal;

  std::vector<Term> all() const {
    std::vector<Term> out = bundled;
    for (const auto* part : {&closed, &open, &normal}) out.insert(out.end(), part->begin(), part->end());
    return out;
  }
};

Corpus build_corpus() {
  Corpus c;
  c.bundled = load_corpus(std::string(LAMSH_DATA_DIR) + "/paper_terms.corpus");
  // Values are trivial for every check, so generated terms are applications.
  // There are fewer than 1000 of them up to size 10; the rest go up to 12.
  GeneratorOptions closed;
  closed.max_size = 10;
  closed.application_root = true;
  c.closed = random_corpus(0, 1000, closed);
  std::set<std::string> seen;
  for (const auto& t : c.closed) seen.insert(alpha_key(t));
  closed.max_size = 12;
  for (const auto& t : random_corpus(1, 2000, closed)) {
    if (c.closed.size() >= 1000) break;
    if (seen.insert(alpha_key(t)).second) c.closed.push_back(t);
  }
  GeneratorOptions open = closed;
  open.max_size = 10;
  open.free_vars = {"x", "y", "z"};
  c.open = random_corpus(2, 500, open);
  c.normal = random_normal_corpus(3, 500, 8);
  return c;
}

CheckReport run_all(const std::vector<Term>& terms,
                    const std::function<CheckReport(const Term&)>& check) {
  CheckReport total;
  for (const auto& t : terms) total.merge(check(t));
  return total;
}

// ---------------------------------------------------------------------------

void size_example(Outcome& o) {
  Derivation pi_i = Derivation::lam("x", P("x"), {});
  Derivation pi_ii = Derivation::app(
      Derivation::lam("x", P("x"), {Derivation::ax("x", PosType::zero())}), pi_i);
  Judgment ji = check(pi_i);
  Judgment jii = check(pi_ii);
  o.require(ji.env.empty() && ji.type.is_zero() && alpha_eq(ji.subject, P("I")), "|- I : 0");
  o.require(jii.env.empty() && jii.type.is_zero() && alpha_eq(jii.subject, P("I I")),
            "|- I I : 0");
  o.require(pi_i.size() == 0 && pi_ii.size() == 1, "sizes 0 and 1");
  ReductionStep root{Position{}, RedexKind::BetaV, Mode::Balanced};
  o.require(same_derivation(subject_reduce(pi_ii, root), pi_i), "reduce gives pi_I");
  Derivation back = subject_expand(pi_i, P("I I"), root);
  o.require(back.size() == 1 && same_judgment(check(back), jii), "expand gives a size-1 pi_II");
  o.detail << "size(pi_II)=" << pi_ii.size() << " size(pi_I)=" << pi_i.size();
}

void counterexample(Outcome& o) {
  o.absorb(check_counterexample());
  Derivation d = load_derivation_file(std::string(LAMSH_DATA_DIR) + "/counterexample.json");
  Judgment j = check(d);
  std::size_t ps = point_size(point_of(d, SuitableList({"y"})));
  o.require(to_string(j) == "y:[0>0] |- (\\x.x)(y y) : 0", "conclusion");
  o.require(d.size() == 2 && ps == 1 && d.size() > ps, "2 > 1");
  o.require(find_redexes(j.subject, Mode::Full).empty(), "subject is sh-normal");
  o.detail << "size=" << d.size() << " point_size=" << ps;
}

void subject_reduction(Outcome& o, const Corpus& c) {
  auto t0 = Clock::now();
  std::vector<Term> terms = c.bundled;
  terms.insert(terms.end(), c.open.begin(), c.open.end());
  terms.insert(terms.end(), c.closed.begin(), c.closed.end());
  CheckReport r = run_all(terms, [](const Term& t) { return check_subject_reduction(t); });
  double secs = seconds_since(t0);
  o.absorb(r);
  o.require(r.instances_run >= 1000, "at least 1000 pairs");
  o.require(secs < 30, "under 30 s");
  o.detail << "pairs=" << r.instances_run << " beta_v=" << r.counters["beta_v"]
           << " sigma=" << r.counters["sigma"] << " time=" << secs << "s";
}

void same_number(Outcome& o, const Corpus& c) {
  auto t0 = Clock::now();
  Term cp = P("(\\y.y')(D(x I)) I");
  auto seqs = enumerate_sequences(cp, Mode::Balanced);
  std::set<std::size_t> lengs;
  std::set<std::string> nfs;
  for (const auto& s : seqs) {
    o.require(s.complete, "critical pair: every sequence ends");
    lengs.insert(s.sequence.leng_betav);
    nfs.insert(alpha_key(s.sequence.last()));
  }
  o.require(lengs.size() == 1 && nfs.size() == 1, "critical pair: one leng, one normal form");

  std::vector<Term> terms{cp};
  for (const auto& t : c.closed) {
    if (t.node_count() <= 10) terms.push_back(t);
  }
  CheckReport r = run_all(terms, [](const Term& t) { return check_same_number(t); });
  double secs = seconds_since(t0);
  o.absorb(r);
  o.require(secs < 60, "under 60 s");
  o.detail << "critical_pair_sequences=" << seqs.size() << " terms=" << terms.size()
           << " run=" << r.instances_run << " enumerated=" << r.counters["enumerated"]
           << " sequences=" << r.counters["sequences"] << " skipped=" << r.skipped
           << " time=" << secs << "s";
}

void number_steps(Outcome& o, const Corpus& c) {
  CheckReport r = run_all(c.all(), [](const Term& t) { return check_number_steps(t); });
  o.absorb(r);
  o.require(r.instances_run > 0, "some instance ran");
  o.detail << "run=" << r.instances_run << " skipped=" << r.skipped;
}

void value_theorem(Outcome& o, const Corpus& c) {
  CheckReport r = run_all(c.all(), [](const Term& t) { return check_value_theorem(t); });
  std::vector<Term> closed = c.closed;
  for (const auto& t : c.bundled) {
    if (free_vars(t).empty()) closed.push_back(t);
  }
  CheckReport p = run_all(closed, [](const Term& t) { return check_plotkin_closed(t); });
  o.absorb(r);
  o.absorb(p);
  // independent big-step evaluator for closed terms
  std::size_t agreed = 0;
  for (const auto& t : closed) {
    auto cbv = oracle::cbv_eval(t, 10000);
    auto n = normalize(t, Mode::Balanced, kDefaultNormalizeFuel);
    if (!cbv || !n.normal) {
      o.require(!cbv && !n.normal, "termination agrees with the evaluator on " + to_string(t));
      continue;
    }
    auto d = derive_empty(t);
    bool ok = d && d->derivation.size() == cbv->beta_steps &&
              n.sequence.leng_betav == cbv->beta_steps && oracle::db_string(n.term()) == cbv->value;
    o.require(ok, "evaluator agreement on " + to_string(t));
    agreed += ok;
  }
  o.detail << "value_theorem run=" << r.instances_run << " plotkin run=" << p.instances_run
           << " evaluator_agreements=" << agreed;
}

void characterization(Outcome& o, const Corpus& c) {
  CheckReport r = run_all(c.all(), [](const Term& t) { return check_characterization(t); });
  o.absorb(r);
  Term t = P("(\\y.D)(z I) D");
  Term u = P("D((\\y.D)(z I))");
  Term omega = P("D D");
  for (const Term* x : {&t, &u, &omega}) {
    std::set<std::string> fv = free_vars(*x);
    auto res = is_nonempty_semi(*x, SuitableList({fv.begin(), fv.end()}), 10000);
    o.require(res.status == NonEmptyResult::Status::Unknown, "Unknown on " + to_string(*x));
  }
  std::size_t seqs = 0;
  std::vector<std::string> cycles;
  for (const Term* x : {&t, &u}) {
    for (const auto& s : enumerate_sequences(*x, Mode::Balanced)) {
      o.require(!s.complete, "every sequence of " + to_string(*x) + " is cut by fuel");
      ++seqs;
    }
    ReductionGraph g = explore(*x, Mode::Balanced);
    auto cyc = g.find_cycle();
    o.require(cyc.has_value(), "cycle reachable from " + to_string(*x));
    o.require(g.normal_nodes().empty() && !g.truncated, "closed graph without normal forms");
    if (cyc) {
      std::ostringstream s;
      s << cyc->size() << " on " << to_string(g.nodes[cyc->front()]);
      cycles.push_back(s.str());
    }
  }
  o.detail << "run=" << r.instances_run << " divergent_pair_sequences=" << seqs << " cycles: ";
  for (std::size_t i = 0; i < cycles.size(); ++i) o.detail << (i ? "; " : "") << "length " << cycles[i];
}

void sizes(Outcome& o, const Corpus& c) {
  auto t0 = Clock::now();
  HarnessOptions h;
  h.type_cap = 6;
  CheckReport r = run_all(c.normal, [&](const Term& t) { return check_minimality(t, h); });
  o.absorb(r);
  o.require(r.instances_run == c.normal.size(), "all 500 normal terms checked");
  std::size_t a = balanced_size(P("(\\x.y y)(z z)"));
  std::size_t b = balanced_size(P("(\\x.\\x'.y y)(z z)"));
  o.require(a == 3 && b == 2, "reference balanced sizes");
  o.require(oracle::balanced_apps(P("(\\x.y y)(z z)")) == 3, "oracle agrees on 3");
  o.detail << "normal_terms=" << r.instances_run << " |(\\x.y y)(z z)|0=" << a
           << " |(\\x.\\x'.y y)(z z)|0=" << b << " time=" << seconds_since(t0) << "s";
}

void uniqueness(Outcome& o, const Corpus& c) {
  CheckReport r = run_all(c.all(), [](const Term& t) { return check_uniqueness(t); });
  o.absorb(r);
  o.detail << "run=" << r.instances_run << " skipped=" << r.skipped;
  for (const auto& [k, v] : r.counters) o.detail << ' ' << k << '=' << v;
}

void general_properties(Outcome& o, const Corpus& c) {
  std::vector<Term> terms = c.all();
  CheckReport s = run_all(terms, [](const Term& t) { return check_sigma_termination(t); });
  CheckReport k = run_all(terms, [](const Term& t) { return check_confluence(t); });
  o.absorb(s);
  o.absorb(k);
  o.detail << "sigma run=" << s.instances_run << " confluence run=" << k.instances_run
           << " skipped=" << k.skipped;
}

}  // namespace

int main() {
  Corpus corpus = build_corpus();
  std::cout << "corpus: bundled=" << corpus.bundled.size() << " closed=" << corpus.closed.size()
            << " open=" << corpus.open.size() << " normal=" << corpus.normal.size() << std::endl;

  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {"size example replay", size_example},
      {"counterexample replay", counterexample},
      {"quantitative subject reduction", [&](Outcome& o) { subject_reduction(o, corpus); }},
      {"same number of beta_v steps", [&](Outcome& o) { same_number(o, corpus); }},
      {"number of steps", [&](Outcome& o) { number_steps(o, corpus); }},
      {"number of steps for values", [&](Outcome& o) { value_theorem(o, corpus); }},
      {"qualitative characterization", [&](Outcome& o) { characterization(o, corpus); }},
      {"balanced size is the minimal size", [&](Outcome& o) { sizes(o, corpus); }},
      {"uniqueness of empty-type derivations", [&](Outcome& o) { uniqueness(o, corpus); }},
      {"sigma termination and confluence", [&](Outcome& o) { general_properties(o, corpus); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].name
              << "  (" << o.detail.str() << ")" << std::endl;
    for (std::size_t k = 0; k < o.problems.size() && k < 10; ++k) {
      std::cout << "    " << o.problems[k] << '\n';
    }
  }
  return failed == 0 ? 0 : 1;
}
