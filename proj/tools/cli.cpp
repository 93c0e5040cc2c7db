#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "mtfa/closure.hpp"
#include "mtfa/error.hpp"
#include "mtfa/format.hpp"
#include "mtfa/group.hpp"
#include "mtfa/oracle.hpp"

namespace mtfa::cli {

namespace {

// A failure the user caused; printed to stderr, exit code 3.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AnyMachine load(const std::string& path) {
  try {
    return load_machine(path);
  } catch (const FormatError& e) {
    throw BadInput(path + ": " + e.what());
  }
}

SAA to_saa(const AnyMachine& m) {
  if (const auto* x = std::get_if<SAA>(&m)) return *x;
  if (const auto* x = std::get_if<SemiSortedAsync>(&m)) return as_saa(*x);
  if (const auto* x = std::get_if<SortedAsync>(&m)) return as_saa(*x);
  if (const auto* x = std::get_if<FAA>(&m)) return dfaa_to_saa(*x);
  throw BadInput("a synchronous machine cannot be used here; expected an asynchronous one");
}

std::optional<SemiSortedAsync> to_semisorted(const AnyMachine& m) {
  if (const auto* x = std::get_if<SemiSortedAsync>(&m)) return *x;
  if (const auto* x = std::get_if<SortedAsync>(&m)) return sorted_to_semisorted(*x);
  return std::nullopt;
}

std::string spell_column(const Alphabet& a, const std::vector<Letter>& seq) {
  if (seq.empty()) return std::string(kEpsToken);
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && a.needs_separator()) out += '.';
    out += a.token(seq[i]);
  }
  return out;
}

WordTuple tuple_from_args(const Alphabet& a, int tapes, const std::vector<std::string>& words) {
  WordTuple t;
  try {
    if (words.size() == 1 && !words[0].empty() && words[0].front() == '(') {
      t = parse_tuple(a, words[0]);
    } else {
      for (const auto& w : words) t.push_back(a.parse_word(w));
    }
  } catch (const Error& e) {
    throw BadInput(e.what());
  }
  if (t.size() != static_cast<std::size_t>(tapes)) {
    throw BadInput("expected " + std::to_string(tapes) + " words, got " + std::to_string(t.size()));
  }
  return t;
}

std::string describe(const Alphabet& a, const Verdict& v) {
  std::ostringstream out;
  out << "axiom " << v.axiom << ": " << to_string(v.kind);
  if (v.violated()) {
    if (v.letter) out << " [x=" << a.token(*v.letter) << "]";
    if (!v.signed_word.empty() || v.axiom == 13) out << " w=" << spell_signed(a, v.signed_word);
    if (!v.witness.empty()) out << " witness " << a.spell_tuple(v.witness);
    if (v.via_axiom) out << " (partner search refutes axiom " << *v.via_axiom << ")";
    if (!v.detail.empty()) out << ": " << v.detail;
  } else if (v.kind == VerdictKind::NoViolationWithinBudget) {
    out << " (" << v.candidates << " candidates";
    if (!v.detail.empty()) out << ", " << v.detail;
    out << ")";
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-tape and asynchronous finite automata toolkit", "mtfa"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string machine_path;
  std::string second_path;
  std::vector<std::string> words;

  auto* accept = app.add_subcommand("accept", "Exit 0 if the machine accepts the tuple, 1 otherwise");
  bool trace = false;
  accept->add_option("machine", machine_path, "Machine file")->required();
  accept->add_option("words", words, "One word per tape (eps for the empty word), or a tuple (w1,w2)");
  accept->add_flag("--trace", trace, "Print the run of a deterministic asynchronous machine");
  accept->callback([&] {
    action = [&] {
      const auto m = load(machine_path);
      const auto t = tuple_from_args(alphabet_of(m), tapes_of(m), words);
      const auto semi = to_semisorted(m);
      if (trace && semi) {
        const auto run = run_semisorted(*semi, t);
        for (const auto& step : run.steps) {
          out << semi->name(step.state) << " reads " << semi->alphabet().token(step.symbol) << " from tape "
              << step.tape + 1 << '\n';
        }
        if (run.last) out << "ends in " << semi->name(*run.last) << '\n';
        out << to_string(run.status) << '\n';
      }
      const bool ok = accepts_any(m, t);
      out << (ok ? "accept" : "reject") << '\n';
      return ok ? kOk : kNegative;
    };
  });

  auto* convert = app.add_subcommand("convert", "Convert between machine models");
  std::string target;
  convert->add_option("machine", machine_path, "Machine file")->required();
  convert->add_option("--to", target, "semisorted, sorted, saa, faa, dfaa or sync")->required();
  convert->callback([&] {
    action = [&] {
      const auto m = load(machine_path);
      const std::string_view from = kind_of(m);
      std::optional<AnyMachine> result;
      if (target == from && target != "faa") {
        result = m;
      } else if (target == "semisorted") {
        if (auto semi = to_semisorted(m)) result = *semi;
      } else if (target == "sorted") {
        if (auto semi = to_semisorted(m)) result = semisorted_to_sorted(*semi);
      } else if (target == "saa") {
        if (m.index() != 0) result = to_saa(m);
      } else if (target == "faa" || target == "dfaa") {
        if (const auto* f = std::get_if<FAA>(&m)) result = faa_to_dfaa(*f);
        else if (m.index() != 0) result = saa_to_dfaa(to_saa(m));
      } else if (target == "sync" || target == "regular") {
        if (const auto* s = std::get_if<SyncAutomaton>(&m)) result = determinize(*s);
        else if (tapes_of(m) == 1) result = saa_to_regular(to_saa(m));
      }
      if (!result) throw BadInput("no conversion from " + std::string(from) + " to " + target);
      out << print_machine(*result);
      return kOk;
    };
  });

  auto* compl_cmd = app.add_subcommand("complement", "Complement a regular or deterministic asynchronous machine");
  compl_cmd->add_option("machine", machine_path, "Machine file")->required();
  compl_cmd->callback([&] {
    action = [&] {
      const auto m = load(machine_path);
      if (const auto* s = std::get_if<SyncAutomaton>(&m)) {
        out << print_machine(complement(*s));
      } else if (const auto* sorted = std::get_if<SortedAsync>(&m)) {
        out << print_machine(complement_sorted(*sorted));
      } else if (auto semi = to_semisorted(m)) {
        out << print_machine(complement_sorted(*semi));
      } else {
        throw BadInput("nondeterministic asynchronous machines are not closed under complement");
      }
      return kOk;
    };
  });

  auto add_binary = [&](const char* name, const char* help, bool sync_only) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("first", machine_path, "Machine file")->required();
    cmd->add_option("second", second_path, "Machine file")->required();
    cmd->callback([&, name = std::string(name), sync_only] {
      action = [&, name, sync_only] {
        const auto a = load(machine_path);
        const auto b = load(second_path);
        const auto* sa = std::get_if<SyncAutomaton>(&a);
        const auto* sb = std::get_if<SyncAutomaton>(&b);
        if (sa && sb) {
          out << print_machine(name == "union" ? unite(*sa, *sb) : intersect(*sa, *sb));
        } else if (!sync_only && !sa && !sb) {
          out << print_machine(union_saa(to_saa(a), to_saa(b)));
        } else {
          throw BadInput(name + " needs two synchronous machines" + (sync_only ? "" : " or two asynchronous ones"));
        }
        return kOk;
      };
    });
  };
  add_binary("union", "Union of two machines of the same family", false);
  add_binary("intersect", "Intersection of two synchronous machines", true);

  auto* project = app.add_subcommand("project", "Existential projection erasing one tape");
  int tape = 0;
  std::string project_to;
  project->add_option("machine", machine_path, "Machine file")->required();
  project->add_option("--tape", tape, "Tape to erase (1-based)")->required();
  project->add_option("--to", project_to, "regular or saa");
  project->callback([&] {
    action = [&] {
      const auto m = load(machine_path);
      if (tape < 1 || tape > tapes_of(m)) throw BadInput("--tape out of range");
      if (const auto* s = std::get_if<SyncAutomaton>(&m)) {
        out << print_machine(project_exists(*s, tape - 1));
        return kOk;
      }
      const SAA projected = exists_saa(to_saa(m), tape - 1);
      if (project_to == "regular") {
        if (projected.tapes() != 1) throw BadInput("--to regular needs a two-tape machine");
        out << print_machine(saa_to_regular(projected));
      } else if (project_to.empty() || project_to == "saa") {
        out << print_machine(projected);
      } else {
        throw BadInput("--to must be regular or saa");
      }
      return kOk;
    };
  });

  auto* bridge_cmd = app.add_subcommand("bridge", "Deterministic machine with one extra tape projecting onto the input");
  bridge_cmd->add_option("machine", machine_path, "Machine file")->required();
  bridge_cmd->callback([&] {
    action = [&] {
      out << print_machine(bridge(to_saa(load(machine_path))));
      return kOk;
    };
  });

  auto* pump_cmd = app.add_subcommand("pump", "Pumping decomposition of an accepted tuple");
  pump_cmd->add_option("machine", machine_path, "Synchronous machine file")->required();
  pump_cmd->add_option("words", words, "One word per tape, or a tuple (w1,w2)")->required();
  pump_cmd->callback([&] {
    action = [&] {
      const auto m = load(machine_path);
      const auto* s = std::get_if<SyncAutomaton>(&m);
      if (!s) throw BadInput("pump needs a synchronous machine");
      const auto t = tuple_from_args(s->alphabet(), s->tapes(), words);
      const auto d = pump(*s, t);
      const auto& a = s->alphabet();
      out << "k=" << d.k << " l=" << d.l << '\n';
      for (std::size_t i = 0; i < d.middle.size(); ++i) {
        out << "tape " << i + 1 << ": prefix=" << spell_column(a, d.prefix[i]) << " middle=" << spell_column(a, d.middle[i])
            << " suffix=" << spell_column(a, d.suffix[i]) << '\n';
      }
      for (std::size_t r : {2u, 3u}) {
        const auto p = d.pumped(r);
        out << "r=" << r << ": " << a.spell_tuple(p) << (accepts(*s, p) ? " accepted" : " rejected") << '\n';
      }
      return kOk;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "List accepted tuples with every component at most --max-len long");
  std::size_t max_len = 3;
  bool use_oracle = false;
  enumerate->add_option("machine", machine_path, "Machine file")->required();
  enumerate->add_option("--max-len", max_len, "Longest component")->required();
  enumerate->add_flag("--oracle", use_oracle, "Use the brute-force oracle instead of the simulator");
  enumerate->callback([&] {
    action = [&] {
      const auto m = load(machine_path);
      const BoundedDomain d(alphabet_of(m), tapes_of(m), max_len);
      const auto set = language_set(m, d, use_oracle ? Engine::Oracle : Engine::Simulator);
      for (const auto& t : set) out << alphabet_of(m).spell_tuple(t) << '\n';
      return kOk;
    };
  });

  auto* bound = app.add_subcommand("bound", "Boundedness of a deterministic asynchronous machine");
  bound->add_option("machine", machine_path, "Machine file")->required();
  bound->callback([&] {
    action = [&] {
      const auto semi = to_semisorted(load(machine_path));
      if (!semi) throw BadInput("bound needs a semisorted or sorted machine");
      const auto b = is_bounded(*semi);
      if (b.bounded) out << "bounded k=" << *b.k << '\n'; else out << "unbounded\n";
      return b.bounded ? kOk : kNegative;
    };
  });

  auto* check = app.add_subcommand("check-structure", "Check a candidate asynchronous automatic structure");
  std::string bundle_path;
  Budget budget;
  check->add_option("bundle", bundle_path, "Bundle manifest")->required();
  check->add_option("--max-len", budget.max_word_len, "Longest word enumerated")->capture_default_str();
  check->add_option("--max-candidates", budget.max_candidates, "Candidates per axiom")->capture_default_str();
  check->add_option("--step-limit", budget.step_limit, "Partner searches allowed (0 = no limit)")->capture_default_str();
  check->callback([&] {
    action = [&] {
      StructureCandidate candidate = [&] {
        try {
          return load_bundle(bundle_path);
        } catch (const FormatError& e) {
          throw BadInput(bundle_path + ": " + e.what());
        }
      }();
      const auto params = bound_params(candidate);
      out << "c=" << params.c << " k=" << params.k << " axiom13_len=" << params.axiom13_len << '\n';
      StructureChecker checker(candidate, budget);
      const auto report = checker.run_all();
      for (const auto& v : report.verdicts) out << describe(candidate.alphabet, v) << '\n';
      if (report.not_a_structure()) {
        out << "NotAStructure (axiom " << report.verdicts[*report.first_violation].axiom << ")\n";
        return kNegative;
      }
      out << "PassedWithinBudget\n";
      return kOk;
    };
  });

  auto* compare = app.add_subcommand("oracle-compare", "Compare two languages on a bounded domain with the oracle");
  compare->add_option("first", machine_path, "Machine file")->required();
  compare->add_option("second", second_path, "Machine file")->required();
  compare->add_option("--max-len", max_len, "Longest component")->required();
  compare->callback([&] {
    action = [&] {
      const auto a = load(machine_path);
      const auto b = load(second_path);
      if (tapes_of(a) != tapes_of(b)) throw BadInput("machines have different tape counts");
      const BoundedDomain d(alphabet_of(a), tapes_of(a), max_len);
      const auto diff = languages_equal(a, b, d);
      if (diff.equal) {
        out << "equal on " << d.tuples().size() << " tuples\n";
        return kOk;
      }
      out << "differ at " << alphabet_of(a).spell_tuple(*diff.first_difference) << ": accepted by "
          << (diff.in_first ? "first" : "second") << " only\n";
      return kNegative;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }
  try {
    return action ? action() : kBadInput;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kBadInput;
}

}  // namespace mtfa::cli
