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

#include "lamsh/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "lamsh/harness.hpp"
#include "lamsh/json_io.hpp"

namespace lamsh::cli {

namespace {

struct Globals {
  bool unicode = false;
  bool json = false;
  std::size_t fuel = kDefaultNormalizeFuel;
  std::size_t cap = kDefaultTypeCap;
  std::uint64_t seed = 0;
};

// Thrown by handlers to end with a given exit code after printing `what`.
struct Exit {
  int code;
  std::string message;
};

Term read_term(const std::string& src) {
  try {
    return parse(src, ParseOptions{true});
  } catch (const SyntaxError& e) {
    throw Exit{kExitUsage, std::string("parse error: ") + e.what()};
  }
}

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string judgment_line(const Derivation& d, const PrintOptions& po) {
  return to_string(d.conclusion(), po) + "  size=" + std::to_string(d.size());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Workbench for the shuffling call-by-value lambda calculus", "lamsh"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--unicode", g.unicode, "Print λ instead of \\");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--fuel", g.fuel, "Step budget for normalization")->capture_default_str();
  app.add_option("--cap", g.cap, "Type size cap for derivation search")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for generated terms")->capture_default_str();

  std::string term_src;
  std::string mode_name = "balanced";
  bool trace = false;
  std::string file;
  std::string vars;
  std::string corpus;
  std::string only;
  std::size_t random_closed = 0;
  std::size_t random_normal = 0;

  auto* c_parse = app.add_subcommand("parse", "Parse and print a term");
  c_parse->add_option("term", term_src)->required();

  auto* c_reduce = app.add_subcommand("reduce", "Normalize with the leftmost-outermost strategy");
  c_reduce->add_option("term", term_src)->required();
  c_reduce->add_option("--mode", mode_name, "balanced or full")
      ->check(CLI::IsMember({"balanced", "full"}))
      ->capture_default_str();
  c_reduce->add_flag("--trace", trace, "Print every step");

  auto* c_classify = app.add_subcommand("classify", "Value, neutral, normal or reducible");
  c_classify->add_option("term", term_src)->required();

  auto* c_check = app.add_subcommand("check-derivation", "Check a derivation in JSON");
  c_check->add_option("file", file)->required();

  auto* c_empty = app.add_subcommand("derive-empty", "Build a derivation of |- t : 0");
  c_empty->add_option("term", term_src)->required();

  auto* c_count = app.add_subcommand("count-steps", "Count beta_v steps to the normal form");
  c_count->add_option("term", term_src)->required();

  auto* c_sem = app.add_subcommand("semantics", "Enumerate a capped fragment of the semantics");
  c_sem->add_option("term", term_src)->required();
  c_sem->add_option("--vars", vars, "Comma-separated suitable list (default: free variables)");

  auto* c_verify = app.add_subcommand("verify", "Run the theorem checks on a corpus");
  c_verify->add_option("--corpus", corpus, "Corpus file")->required();
  c_verify->add_option("--check", only, "Run a single check")
      ->check(CLI::IsMember(check_names()));
  c_verify->add_option("--random-closed", random_closed, "Extra generated closed terms")
      ->capture_default_str();
  c_verify->add_option("--random-normal", random_normal, "Extra generated normal forms")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  PrintOptions po{g.unicode};
  auto show = [&](const Term& t) { return to_string(t, po); };
  const char* arrow = g.unicode ? "  ⇒  " : "  =>  ";

  try {
    if (*c_parse) {
      Term t = read_term(term_src);
      if (g.json) {
        out << Json{{"term", show(t)}, {"free_vars", t.free_var_list()}}.dump(2) << '\n';
      } else {
        out << show(t) << '\n';
      }
      return kExitOk;
    }

    if (*c_reduce) {
      Term t = read_term(term_src);
      Mode mode = *mode_from_string(mode_name);
      NormalizeResult r = normalize(t, mode, g.fuel);
      if (g.json) {
        out << trace_to_json(r.sequence, mode, r.normal).dump(2) << '\n';
      } else {
        if (trace) {
          std::size_t i = 0;
          for (const auto& [step, next] : r.sequence.steps) {
            out << ++i << ": " << to_string(step.kind) << " @ " << step.position.to_string()
                << arrow << show(next) << '\n';
          }
        } else {
          out << show(r.term()) << '\n';
        }
        out << "leng_bv=" << r.sequence.leng_betav << " steps=" << r.sequence.length()
            << (r.normal ? "" : " (fuel exhausted)") << '\n';
      }
      return r.normal ? kExitOk : kExitFuel;
    }

    if (*c_classify) {
      Term t = read_term(term_src);
      Shape s = classify(t);
      auto redexes = find_redexes(t, Mode::Balanced);
      if (g.json) {
        Json j{{"term", show(t)}, {"shape", std::string(to_string(s))}};
        if (s != Shape::Reducible) j["balanced_size"] = balanced_size(t);
        Json rs = Json::array();
        for (const auto& st : redexes) {
          rs.push_back(Json{{"kind", std::string(to_string(st.kind))},
                            {"position", st.position.to_string()}});
        }
        j["redexes"] = std::move(rs);
        out << j.dump(2) << '\n';
      } else {
        out << to_string(s);
        if (s != Shape::Reducible) out << "  |t|_0=" << balanced_size(t);
        out << '\n';
        for (const auto& st : redexes) {
          out << "  " << to_string(st.kind) << " @ " << st.position.to_string() << '\n';
        }
      }
      return kExitOk;
    }

    if (*c_check) {
      Derivation d = [&] {
        try {
          return load_derivation_file(file);
        } catch (const RuleViolation&) {
          throw;
        } catch (const std::exception& e) {
          throw Exit{kExitUsage, e.what()};
        }
      }();
      check(d);
      if (g.json) {
        out << Json{{"judgment", to_string(d.conclusion(), po)}, {"size", d.size()}}.dump(2)
            << '\n';
      } else {
        out << judgment_line(d, po) << '\n';
      }
      return kExitOk;
    }

    if (*c_empty) {
      Term t = read_term(term_src);
      NormalizeResult n = normalize(t, Mode::Balanced, g.fuel);
      if (!n.normal) throw Exit{kExitFuel, "diverges (fuel exhausted)"};
      auto e = derive_empty(t, g.fuel);
      if (!e) {
        throw Exit{kExitCheckFailed,
                   "no derivation of |- t : 0: the normal form " + show(n.term()) +
                       " is not a value"};
      }
      if (g.json) {
        out << derivation_to_json(e->derivation).dump(2) << '\n';
      } else {
        out << judgment_line(e->derivation, po) << "  leng_bv=" << e->sequence.leng_betav
            << '\n';
      }
      return kExitOk;
    }

    if (*c_count) {
      Term t = read_term(term_src);
      NormalizeResult n = normalize(t, Mode::Balanced, g.fuel);
      if (!n.normal) throw Exit{kExitFuel, "diverges (fuel exhausted)"};
      if (g.json) {
        out << Json{{"leng_bv", n.sequence.leng_betav},
                    {"steps", n.sequence.length()},
                    {"normal_form", show(n.term())}}
                   .dump(2)
            << '\n';
      } else {
        out << "leng_bv=" << n.sequence.leng_betav << " steps=" << n.sequence.length()
            << " normal_form=" << show(n.term()) << '\n';
      }
      return kExitOk;
    }

    if (*c_sem) {
      Term t = read_term(term_src);
      SuitableList list(c_sem->count("--vars") ? split_vars(vars) : t.free_var_list());
      InterpretationFragment f = interpret_bounded(t, list, g.cap, g.fuel);
      if (g.json) {
        out << fragment_to_json(f).dump(2) << '\n';
      } else {
        // std::map order is point_size, then lexicographic
        for (const auto& [p, d] : f.points) out << to_string(p) << '\n';
        if (f.incomplete) err << "incomplete: fuel exhausted before a normal form\n";
      }
      return f.incomplete ? kExitFuel : kExitOk;
    }

    if (*c_verify) {
      CorpusOptions o;
      o.harness.fuel = g.fuel;
      o.harness.type_cap = g.cap;
      o.seed = g.seed;
      o.random_closed = random_closed;
      o.random_normal = random_normal;
      if (!only.empty()) o.only = only;
      std::vector<CheckReport> reports;
      try {
        reports = run_corpus(corpus, o);
      } catch (const std::runtime_error& e) {
        throw Exit{kExitUsage, e.what()};
      }
      bool ok = true;
      Json js = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        if (g.json) {
          Json fs = Json::array();
          for (const auto& f : r.failures) {
            fs.push_back(Json{{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
          }
          js.push_back(Json{{"check", r.check_name},
                            {"run", r.instances_run},
                            {"skipped", r.skipped},
                            {"failures", std::move(fs)},
                            {"notes", r.notes}});
          continue;
        }
        out << (r.passed() ? "PASS " : "FAIL ") << r.check_name << "  run=" << r.instances_run
            << " skipped=" << r.skipped << " failures=" << r.failures.size() << '\n';
        for (const auto& n : r.notes) out << "  note: " << n << '\n';
        for (const auto& f : r.failures) {
          out << "  input: " << f.input << "\n    expected: " << f.expected
              << "\n    actual:   " << f.actual << '\n';
        }
      }
      if (g.json) out << js.dump(2) << '\n';
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const Exit& e) {
    (e.code == kExitUsage ? err : out) << e.message << '\n';
    return e.code;
  } catch (const RuleViolation& v) {
    out << "invalid derivation at " << v.path() << ": " << v.reason() << '\n';
    return kExitCheckFailed;
  } catch (const UnsuitableList& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace lamsh::cli
