#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include <autgroup/autgroup.hpp>

namespace autgroup::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool quiet = false;
  std::string alias_file;
  std::size_t max_level = 0;

  oracle::Limits limits() const {
    oracle::Limits l;
    l.max_level = max_level;
    return l;
  }
};

// Output of one command on one file.
struct Result {
  int code = kOk;
  std::string out;
  std::string err;
};

int code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Validation:
    case ErrorKind::Domain:
    case ErrorKind::CapExceeded:
      return kInputError;
    case ErrorKind::NotInvertible:
    case ErrorKind::NotBounded:
    case ErrorKind::Unsupported:
    case ErrorKind::EmptyPostCritical:
      return kPrecondition;
    case ErrorKind::Internal:
      break;
  }
  return kInternal;
}

Result failure(const std::string& file, const Error& e) {
  Result r;
  r.code = code_for(e.kind());
  r.err = file + ": " + e.what() + "\n";
  return r;
}

// Display names of the post-critical elements, from the alias file if any.
std::vector<std::string> element_names(const Globals& g, const MealyAutomaton& a,
                                       const PostCriticalData& pc) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pc.size(); ++i) names.push_back(std::to_string(i));
  if (g.alias_file.empty()) return names;
  std::istringstream in(read_text_file(g.alias_file));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    std::string rest;
    std::getline(ls, rest);
    const auto word = parse_ev_periodic(rest, a.alphabet());
    if (!word) {
      throw ParseError(line_no, 1, "alias '" + name + "' is not a word of the form (w)^-w u");
    }
    const auto index = pc.index_of(*word);
    if (!index) {
      throw Error(ErrorKind::Validation,
                  "alias '" + name + "' names " + word->render(a.alphabet()) +
                      ", which is not post-critical");
    }
    names[*index] = name;
  }
  return names;
}

std::string quoted_word(const Alphabet& alphabet, const Word& w) {
  return "'" + alphabet.render(w) + "'";
}

json lasso_json(const Alphabet& alphabet, const Lasso& l) {
  return {{"stem", alphabet.render(l.stem)}, {"cycle", alphabet.render(l.cycle)}};
}

std::string lasso_text(const Alphabet& alphabet, const Lasso& l) {
  return "stem " + quoted_word(alphabet, l.stem) + ", cycle " + quoted_word(alphabet, l.cycle);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream& os, const std::string& key, const std::string& value) {
  os << "  " << key;
  for (std::size_t i = key.size(); i < 18; ++i) os << ' ';
  os << value << '\n';
}

Result analyze_file(const std::string& file, const Globals& g) {
  Result res;
  std::ostringstream t;
  json j;
  j["file"] = file;
  try {
    const auto a = load_automaton(file);
    const auto& alphabet = a.alphabet();
    j["automaton"] = {{"states", a.num_states()}, {"alphabet", alphabet.letters()}};
    t << file << '\n';
    std::string letters;
    for (const auto& l : alphabet.letters()) letters += (letters.empty() ? "" : ",") + l;
    row(t, "states", std::to_string(a.num_states()) + " over {" + letters + "}");

    const bool invertible = is_invertible(a);
    j["invertible"] = invertible;
    row(t, "invertible", yes_no(invertible));
    if (!invertible) {
      res.code = kPrecondition;
      res.err = file + ": automaton is not invertible\n";
    } else {
      const auto minimal = minimize(a);
      const bool is_minimal = minimal.num_states() == a.num_states();
      j["minimal"] = is_minimal;
      row(t, "minimal", is_minimal ? "yes"
                                   : "no (" + std::to_string(minimal.num_states()) + " classes)");
      const bool bounded = is_bounded(ensure_trivial_state(minimal));
      j["bounded"] = bounded;
      row(t, "bounded", yes_no(bounded));
      if (!bounded) {
        res.code = kPrecondition;
        res.err = file + ": automaton is not bounded\n";
      } else {
        const auto an = analyze_bounded(a);
        const auto names = element_names(g, an.circuit, an.post_critical);
        j["circuit_states"] = an.circuit.names();
        j["is_circuit"] = an.is_circuit;
        std::string circuit;
        for (const auto& n : an.circuit.names()) circuit += (circuit.empty() ? "" : " ") + n;
        row(t, "circuit part", circuit + (an.is_circuit ? "" : " (proper)"));

        auto pc = post_critical_to_json(an.post_critical, alphabet);
        for (std::size_t i = 0; i < names.size(); ++i) pc["elements"][i]["name"] = names[i];
        j["post_critical"] = std::move(pc);
        row(t, "post-critical", std::to_string(an.post_critical.size()));
        for (std::size_t i = 0; i < an.post_critical.size(); ++i) {
          t << "    " << names[i] << "  " << an.post_critical.elements[i].render(alphabet) << '\n';
        }
        j["ee_count"] = an.post_critical.ee_pairs.size();
        j["e_count"] = an.post_critical.e_pairs.size();
        row(t, "|E^e|", std::to_string(an.post_critical.ee_pairs.size()));
        row(t, "|E|", std::to_string(an.post_critical.e_pairs.size()));
        if (an.chain) {
          j["n0"] = an.chain->fixpoint();
          row(t, "chain", "n0 = " + std::to_string(an.chain->fixpoint()));
        } else {
          j["n0"] = nullptr;
        }

        const auto fin = decide_finite(an);
        j["finite"] = fin.finite;
        j["witness"] = fin.witness ? lasso_json(alphabet, *fin.witness) : json(nullptr);
        if (fin.finite) {
          row(t, "finite", fin.trivial_circuit ? "yes (trivial circuit part)" : "yes");
        } else {
          row(t, "finite", "no (" + lasso_text(alphabet, *fin.witness) + ")");
        }

        if (!an.is_circuit) {
          j["level_transitive"] = "unsupported: automaton differs from its circuit part";
          row(t, "level-transitive", "unsupported (automaton differs from its circuit part)");
        } else {
          const bool lt = decide_level_transitive(an);
          j["level_transitive"] = lt;
          row(t, "level-transitive", yes_no(lt));
        }
        if (an.has_machines()) {
          const auto re = fingerprint(export_json(*an.re));
          const auto r = fingerprint(export_json(*an.r));
          j["hashes"] = {{"re", re}, {"r", r}};
          row(t, "machines", "Re " + std::to_string(an.re->num_states()) + " states " + re +
                                 ", R " + r);
        }
      }
    }
  } catch (const Error& e) {
    return failure(file, e);
  }
  res.out = g.json ? j.dump(2) + "\n" : t.str();
  return res;
}

struct Loaded {
  MealyAutomaton automaton;
  BoundedAnalysis analysis;
  std::vector<std::string> names;
};

Loaded load(const std::string& file, const Globals& g) {
  Loaded l;
  l.automaton = load_automaton(file);
  l.analysis = analyze_bounded(l.automaton);
  l.names = element_names(g, l.analysis.circuit, l.analysis.post_critical);
  return l;
}

const Recognizer& machine(const BoundedAnalysis& an, const std::string& which) {
  if (!an.has_machines()) {
    throw Error(ErrorKind::EmptyPostCritical, "post-critical set is empty; no machine to export");
  }
  return which == "re" ? *an.re : *an.r;
}

Recognizer load_machine(const std::string& file, Flavor flavor) {
  json j;
  try {
    j = json::parse(read_text_file(file));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, file + ": " + e.what());
  }
  auto m = recognizer_from_json(j);
  if (m.flavor() != flavor) {
    throw Error(ErrorKind::Validation, file + ": expected a machine of flavor " +
                                           std::string(to_string(flavor)));
  }
  return m;
}

std::size_t default_level(std::size_t k, const oracle::Limits& limits) {
  std::size_t n = 0;
  for (;;) {
    try {
      oracle::check_level(k, n + 1, limits);
    } catch (const Error&) {
      return n;
    }
    ++n;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Decide finiteness, level-transitivity and orbit finiteness for bounded "
               "automaton groups.",
               "autgroup"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("-q,--quiet", g.quiet, "Print nothing; report through the exit code");
  app.add_option("--alias", g.alias_file, "Names for post-critical words, one '<name> <word>' per line");
  app.add_option("--max-level", g.max_level, "Highest level the brute-force oracle may expand");

  std::vector<std::string> files;
  auto* analyze = app.add_subcommand("analyze", "Full report for one or more automata");
  analyze->add_option("files", files, "Automaton files")->required();

  std::string file;
  std::size_t enumerate_cap = 0;
  auto* finite = app.add_subcommand("finite", "Decide whether the group is finite");
  finite->add_option("file", file)->required();
  finite->add_option("--enumerate", enumerate_cap, "Also enumerate the group up to this many elements");

  auto* transitive = app.add_subcommand("transitive", "Decide level-transitivity");
  transitive->add_option("file", file)->required();

  std::string preperiod, period;
  std::size_t growth = 0;
  auto* orbit = app.add_subcommand("orbit", "Classify the orbit of u v v v ...");
  orbit->add_option("file", file)->required();
  orbit->add_option("--preperiod", preperiod, "Word u");
  orbit->add_option("--period", period, "Word v")->required();
  orbit->add_option("--growth", growth, "Print orbit sizes of the prefixes up to this length");

  std::vector<std::string> words;
  auto* postcritical = app.add_subcommand("postcritical", "Classify post-critical words");
  postcritical->add_option("file", file)->required();
  postcritical->add_option("words", words, "Alias names or words '(w)^-w u'; all when omitted");

  std::string which = "re", format = "dot";
  bool no_sink = false;
  auto* exp = app.add_subcommand("export", "Print a recognizer machine");
  exp->add_option("file", file)->required();
  exp->add_option("--machine", which)->check(CLI::IsMember({"re", "r"}));
  exp->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  exp->add_flag("--no-sink", no_sink, "Leave the sink out of DOT output");

  std::optional<std::size_t> level;
  std::string checks = "all", re_file, r_file;
  auto* orc = app.add_subcommand("oracle", "Cross-check the machines against brute force");
  orc->add_option("file", file)->required();
  orc->add_option("--level", level, "Highest level to check");
  orc->add_option("--check", checks)->check(CLI::IsMember({"all", "partitions", "eorbits", "orbits"}));
  orc->add_option("--re", re_file, "Check this Re machine (JSON) instead of the built one");
  orc->add_option("--r", r_file, "Check this R machine (JSON) instead of the built one");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto emit = [&](const Result& r) {
    if (!g.quiet) out << r.out;
    err << r.err;
    return r.code;
  };

  if (*analyze) {
    std::vector<std::future<Result>> jobs;
    for (const auto& f : files) jobs.push_back(std::async(std::launch::async, analyze_file, f, g));
    std::vector<Result> results;
    for (auto& job : jobs) results.push_back(job.get());
    int code = kOk;
    if (g.json && files.size() > 1) {
      json all = json::array();
      for (auto& r : results) {
        if (!r.out.empty()) all.push_back(json::parse(r.out));
        err << r.err;
        code = std::max(code, r.code);
      }
      if (!g.quiet) out << all.dump(2) << '\n';
      return code;
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i && !g.quiet && !g.json) out << '\n';
      code = std::max(code, emit(results[i]));
    }
    return code;
  }

  Result res;
  std::ostringstream t;
  json j;
  try {
    if (*finite) {
      const auto l = load(file, g);
      const auto& alphabet = l.automaton.alphabet();
      const auto rep = decide_finite(l.analysis);
      j["finite"] = rep.finite;
      j["trivial_circuit"] = rep.trivial_circuit;
      j["witness"] = rep.witness ? lasso_json(alphabet, *rep.witness) : json(nullptr);
      t << (rep.finite ? "finite" : "infinite") << '\n';
      if (rep.witness) t << "  witness: " << lasso_text(alphabet, *rep.witness) << '\n';
      if (rep.trivial_circuit) t << "  circuit part is trivial\n";
      if (enumerate_cap) {
        const auto order = oracle::enumerate_group(l.automaton, enumerate_cap);
        j["order"] = order.order ? json(*order.order) : json(nullptr);
        if (order.order) {
          t << "  order: " << *order.order << '\n';
        } else {
          t << "  order: more than " << enumerate_cap << " elements\n";
        }
      }
    } else if (*transitive) {
      const auto l = load(file, g);
      const bool lt = decide_level_transitive(l.analysis);
      j["level_transitive"] = lt;
      t << (lt ? "level-transitive" : "not level-transitive") << '\n';
    } else if (*orbit) {
      const auto a = load_automaton(file);
      OmegaWordSpec w{a.alphabet().parse_word(preperiod), a.alphabet().parse_word(period)};
      if (w.period.empty()) throw Error(ErrorKind::Domain, "period must be nonempty");
      const auto an = analyze_bounded(a);
      const auto v = classify_omega_orbit(an, w);
      const auto& alphabet = a.alphabet();
      j["finite"] = v.finite;
      j["lasso"] = lasso_json(alphabet, v.lasso);
      t << (v.finite ? "finite" : "infinite") << '\n';
      t << "  run: " << lasso_text(alphabet, v.lasso) << '\n';
      if (v.finite) {
        j["last_accepting_step"] = v.last_accepting_step;
        t << "  last accepting step: " << v.last_accepting_step << '\n';
      } else {
        j["cycle_accepting_edges"] = v.cycle_accepting_edges;
        t << "  accepting edges per cycle: " << v.cycle_accepting_edges << '\n';
      }
      if (growth) {
        const auto sizes = oracle::orbit_growth(a, w, growth, g.limits());
        j["growth"] = sizes;
        t << oracle::orbit_growth_csv(sizes);
      }
    } else if (*postcritical) {
      const auto l = load(file, g);
      const auto& pc = l.analysis.post_critical;
      const auto& alphabet = l.automaton.alphabet();
      std::vector<std::size_t> selected;
      if (words.empty()) {
        for (std::size_t i = 0; i < pc.size(); ++i) selected.push_back(i);
      }
      for (const auto& w : words) {
        auto named = std::find(l.names.begin(), l.names.end(), w);
        if (!g.alias_file.empty() && named != l.names.end()) {
          selected.push_back(static_cast<std::size_t>(named - l.names.begin()));
          continue;
        }
        const auto p = parse_ev_periodic(w, alphabet);
        if (!p) throw Error(ErrorKind::Domain, "cannot read '" + w + "' as a word (w)^-w u");
        const auto index = pc.index_of(*p);
        if (!index) throw Error(ErrorKind::Domain, p->render(alphabet) + " is not post-critical");
        selected.push_back(*index);
      }
      j["words"] = json::array();
      for (auto i : selected) {
        const bool unbounded = classify_postcritical(l.analysis, pc.elements[i]) ==
                               PostCriticalClass::Unbounded;
        j["words"].push_back({{"index", i},
                              {"name", l.names[i]},
                              {"word", pc.elements[i].render(alphabet)},
                              {"class", unbounded ? "unbounded" : "bounded"}});
        t << l.names[i] << "  " << pc.elements[i].render(alphabet) << "  "
          << (unbounded ? "unbounded" : "bounded") << '\n';
      }
    } else if (*exp) {
      const auto l = load(file, g);
      DotOptions opts;
      opts.include_sink = !no_sink;
      if (!g.alias_file.empty()) opts.element_names = l.names;
      res.out = export_machine(machine(l.analysis, which), format, opts);
      return emit(res);
    } else if (*orc) {
      const auto l = load(file, g);
      oracle::CrossCheckOptions opts;
      opts.limits = g.limits();
      static const std::map<std::string, oracle::CheckSet> sets{
          {"all", oracle::CheckSet::All},
          {"partitions", oracle::CheckSet::Partitions},
          {"eorbits", oracle::CheckSet::EOrbits},
          {"orbits", oracle::CheckSet::Orbits}};
      opts.checks = sets.at(checks);
      std::optional<Recognizer> re, r;
      if (!re_file.empty()) {
        re = load_machine(re_file, Flavor::Re);
        opts.re_override = &*re;
      }
      if (!r_file.empty()) {
        r = load_machine(r_file, Flavor::R);
        opts.r_override = &*r;
      }
      const auto n = level.value_or(default_level(l.automaton.alphabet_size(), opts.limits));
      const auto rep = oracle::cross_check(l.analysis, n, opts);
      if (g.json) {
        res.out = rep.to_json();
      } else {
        for (const auto& c : rep.checks) {
          t << (c.passed ? "pass  " : "FAIL  ") << c.name << "  level " << c.level << "  "
            << c.details << '\n';
        }
        t << "mismatches: " << rep.mismatches() << '\n';
        res.out = t.str();
      }
      res.code = rep.ok() ? kOk : kOracleMismatch;
      return emit(res);
    }
  } catch (const Error& e) {
    return emit(failure(file, e));
  }
  res.out = g.json ? j.dump(2) + "\n" : t.str();
  return emit(res);
}

}  // namespace autgroup::cli
