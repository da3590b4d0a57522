#include "autgroup/oracle.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "autgroup/error.hpp"
#include "graph.hpp"

namespace autgroup::oracle {

std::size_t Limits::level_cap(std::size_t alphabet_size) const {
  if (max_level != 0) return max_level;
  return alphabet_size == 2 ? 12 : 8;
}

void check_level(std::size_t alphabet_size, std::size_t n, const Limits& limits) {
  const auto cap = limits.level_cap(alphabet_size);
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                "level " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
  if (limits.max_level != 0) return;  // an explicit level cap replaces the word cap
  std::size_t words = 1;
  for (std::size_t i = 0; i < n; ++i) {
    words *= alphabet_size;
    if (words > limits.max_words) {
      throw Error(ErrorKind::CapExceeded, "level " + std::to_string(n) + " has more than " +
                                              std::to_string(limits.max_words) + " words");
    }
  }
}

std::size_t encode(std::span<const Letter> v, std::size_t alphabet_size) {
  std::size_t c = 0;
  for (Letter x : v) c = c * alphabet_size + x;
  return c;
}

Word decode(std::size_t code, std::size_t n, std::size_t alphabet_size) {
  Word w(n);
  for (std::size_t i = n; i-- > 0;) {
    w[i] = static_cast<Letter>(code % alphabet_size);
    code /= alphabet_size;
  }
  return w;
}

LevelTable::LevelTable(const MealyAutomaton& a, std::size_t n, const Limits& limits)
    : generators_(union_with_inverse(minimize(a))), level_(n), num_words_(1) {
  const std::size_t k = a.alphabet_size();
  check_level(k, n, limits);
  const std::size_t g = generators_.num_states();
  image_.assign(g, 0);
  section_.resize(g);
  for (StateId s = 0; s < g; ++s) section_[s] = s;
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t words = num_words_ * k;
    std::vector<std::size_t> image(g * words);
    std::vector<StateId> section(g * words);
    for (std::size_t s = 0; s < g; ++s) {
      for (std::size_t w = 0; w < num_words_; ++w) {
        const auto img = image_[s * num_words_ + w];
        const auto sec = section_[s * num_words_ + w];
        for (Letter x = 0; x < k; ++x) {
          const auto& tr = generators_.transition(sec, x);
          image[s * words + w * k + x] = img * k + tr.out;
          section[s * words + w * k + x] = tr.to;
        }
      }
    }
    image_ = std::move(image);
    section_ = std::move(section);
    num_words_ = words;
  }
}

namespace {

WordPartition classes(detail::MinUnionFind& uf) {
  WordPartition p;
  p.class_of.resize(uf.size());
  std::unordered_map<std::size_t, std::size_t> id;
  for (std::size_t w = 0; w < uf.size(); ++w) {
    auto [it, inserted] = id.emplace(uf.find(w), p.class_size.size());
    if (inserted) p.class_size.push_back(0);
    p.class_of[w] = it->second;
    ++p.class_size[it->second];
  }
  return p;
}

WordPartition level_orbits(const LevelTable& t, bool trivial_sections_only) {
  detail::MinUnionFind uf(t.num_words());
  for (std::size_t g = 0; g < t.num_generators(); ++g) {
    for (std::size_t w = 0; w < t.num_words(); ++w) {
      if (!trivial_sections_only || t.section_trivial(g, w)) uf.unite(w, t.image(g, w));
    }
  }
  return classes(uf);
}

}  // namespace

WordPartition e_orbits_level(const LevelTable& table) { return level_orbits(table, true); }
WordPartition orbits_level(const LevelTable& table) { return level_orbits(table, false); }

WordPartition e_orbits_level(const MealyAutomaton& a, std::size_t n, const Limits& limits) {
  return e_orbits_level(LevelTable(a, n, limits));
}

WordPartition orbits_level(const MealyAutomaton& a, std::size_t n, const Limits& limits) {
  return orbits_level(LevelTable(a, n, limits));
}

namespace {

std::vector<std::size_t> suffix_codes(std::span<const EvPeriodicWord> elements, std::size_t n,
                                      std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(elements.size());
  for (const auto& p : elements) out.push_back(encode(p.suffix(n), k));
  return out;
}

Partition induced(const WordPartition& eo, std::span<const std::size_t> codes) {
  std::vector<std::size_t> key;
  key.reserve(codes.size());
  for (auto c : codes) key.push_back(eo.class_of[c]);
  return Partition::from_keys(key);
}

}  // namespace

Partition pcs_partition_level(const MealyAutomaton& a, std::span<const EvPeriodicWord> elements,
                              std::size_t n, const Limits& limits) {
  const auto eo = e_orbits_level(a, n, limits);
  return induced(eo, suffix_codes(elements, n, a.alphabet_size()));
}

std::vector<std::size_t> orbit_growth(const MealyAutomaton& a, const OmegaWordSpec& w,
                                      std::size_t max_n, const Limits& limits) {
  w.validate();
  const std::size_t k = a.alphabet_size();
  check_level(k, max_n, limits);
  const auto prefix = w.prefix(max_n);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto o = orbits_level(a, n, limits);
    out.push_back(o.size_of_class_containing(encode(std::span(prefix).first(n), k)));
  }
  return out;
}

namespace {

// States acting as the identity: greatest set closed under x|x transitions.
std::vector<bool> identity_states(const MealyAutomaton& a) {
  std::vector<bool> id(a.num_states(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < a.num_states(); ++s) {
      if (!id[s]) continue;
      for (Letter x = 0; x < a.alphabet_size(); ++x) {
        const auto& tr = a.transition(s, x);
        if (tr.out != x || !id[tr.to]) {
          id[s] = false;
          changed = true;
          break;
        }
      }
    }
  }
  return id;
}

}  // namespace

std::size_t nontrivial_section_count(const MealyAutomaton& a, StateId s, std::size_t n) {
  if (s >= a.num_states()) throw Error(ErrorKind::Domain, "not a state");
  const auto id = identity_states(a);
  std::vector<std::size_t> count(a.num_states(), 0);
  count[s] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<std::size_t> next(a.num_states(), 0);
    for (StateId u = 0; u < a.num_states(); ++u) {
      if (count[u] == 0 || id[u]) continue;
      for (Letter x = 0; x < a.alphabet_size(); ++x) next[a.target(u, x)] += count[u];
    }
    count = std::move(next);
  }
  std::size_t total = 0;
  for (StateId u = 0; u < a.num_states(); ++u) {
    if (!id[u]) total += count[u];
  }
  return total;
}

namespace {

// A pointed automaton as a bare table; state 0 is the base point.
struct Element {
  std::vector<Transition> table;
};

Element canonical(const std::vector<Transition>& table, std::size_t k, std::size_t start) {
  const std::size_t n = table.size() / k;
  // Moore refinement seeded by the output function.
  std::vector<std::size_t> cls(n, 0);
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> key{cls[s]};
      for (std::size_t x = 0; x < k; ++x) {
        key.push_back(table[s * k + x].out);
        key.push_back(cls[table[s * k + x].to]);
      }
      next[s] = ids.emplace(std::move(key), ids.size()).first->second;
    }
    cls = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  // Breadth-first renumbering of the classes reachable from the base point.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rep(count, kUnset), id(count, kUnset), order;
  for (std::size_t s = 0; s < n; ++s) {
    if (rep[cls[s]] == kUnset) rep[cls[s]] = s;
  }
  id[cls[start]] = 0;
  order.push_back(cls[start]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto s = rep[order[i]];
    for (std::size_t x = 0; x < k; ++x) {
      const auto c = cls[table[s * k + x].to];
      if (id[c] == kUnset) {
        id[c] = order.size();
        order.push_back(c);
      }
    }
  }
  Element e;
  for (auto c : order) {
    const auto s = rep[c];
    for (std::size_t x = 0; x < k; ++x) {
      const auto& tr = table[s * k + x];
      e.table.push_back({tr.out, static_cast<StateId>(id[cls[tr.to]])});
    }
  }
  return e;
}

// g after h, restricted to pairs reachable from (g0, 0).
Element product(const MealyAutomaton& gens, StateId g0, const Element& h, std::size_t k) {
  const std::size_t hn = h.table.size() / k;
  std::unordered_map<std::size_t, std::size_t> id;
  std::vector<std::pair<StateId, StateId>> pairs{{g0, 0}};
  id.emplace(static_cast<std::size_t>(g0) * hn, 0);
  std::vector<Transition> table;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [g, s] = pairs[i];
    for (std::size_t x = 0; x < k; ++x) {
      const auto& inner = h.table[s * k + x];
      const auto& outer = gens.transition(g, inner.out);
      const std::size_t key = static_cast<std::size_t>(outer.to) * hn + inner.to;
      auto [it, inserted] = id.emplace(key, pairs.size());
      if (inserted) pairs.push_back({outer.to, inner.to});
      table.push_back({outer.out, static_cast<StateId>(it->second)});
    }
  }
  return canonical(table, k, 0);
}

std::string key_of(const Element& e) {
  std::string s;
  for (const auto& tr : e.table) {
    s += std::to_string(tr.out) + ':' + std::to_string(tr.to) + ';';
  }
  return s;
}

}  // namespace

GroupOrder enumerate_group(const MealyAutomaton& a, std::size_t cap) {
  if (!is_invertible(a)) throw Error(ErrorKind::NotInvertible, "automaton is not invertible");
  const auto gens = union_with_inverse(minimize(a));
  const std::size_t k = a.alphabet_size();
  std::vector<StateId> generators;
  for (StateId s = 0; s < gens.num_states(); ++s) {
    if (!gens.is_trivial(s)) generators.push_back(s);
  }

  Element identity;
  for (std::size_t x = 0; x < k; ++x) identity.table.push_back({static_cast<Letter>(x), 0});
  std::unordered_map<std::string, std::size_t> seen{{key_of(identity), 0}};
  std::deque<Element> queue{identity};
  GroupOrder out;
  while (!queue.empty()) {
    const Element h = std::move(queue.front());
    queue.pop_front();
    for (StateId g : generators) {
      Element gh = product(gens, g, h, k);
      auto key = key_of(gh);
      if (seen.count(key)) continue;
      if (seen.size() >= cap) {
        out.elements_seen = seen.size();
        return out;
      }
      seen.emplace(std::move(key), seen.size());
      queue.push_back(std::move(gh));
    }
  }
  out.order = seen.size();
  out.elements_seen = seen.size();
  return out;
}

std::size_t CrossCheckReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.passed;
  return n;
}

std::string CrossCheckReport::to_json() const {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"level", c.level}, {"status", c.passed ? "pass" : "fail"},
         {"details", c.details}});
  }
  return j.dump(2) + "\n";
}

namespace {

// Collects failures for one check, keeping the first few for the report.
class Tally {
 public:
  Tally(std::string name, std::size_t level) : check_{std::move(name), level, true, ""} {}

  void fail(const std::string& what) {
    if (failures_++ < 3) check_.details += (check_.details.empty() ? "" : "; ") + what;
    check_.passed = false;
  }

  Check finish(std::size_t compared) {
    if (check_.passed) {
      check_.details = std::to_string(compared) + " compared";
    } else if (failures_ > 3) {
      check_.details += "; " + std::to_string(failures_ - 3) + " more";
    }
    return check_;
  }

 private:
  Check check_;
  std::size_t failures_ = 0;
};

std::string word_text(std::size_t code, std::size_t n, const Alphabet& alphabet) {
  if (n == 0) return "<empty>";
  return alphabet.render(decode(code, n, alphabet.size()));
}

std::string set_text(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void check_machine(const Recognizer& m, bool use_label, const char* sets_name,
                   const char* growth_name, const WordPartition& orbits,
                   const WordPartition* previous, const std::vector<std::size_t>& states,
                   const std::vector<std::size_t>* previous_states,
                   std::span<const std::size_t> codes, std::size_t n, const Alphabet& alphabet,
                   std::vector<Check>& out) {
  const std::size_t k = alphabet.size();
  const std::size_t words = states.size();

  // Post-critical indices grouped by the orbit class of their suffix.
  std::vector<std::vector<std::size_t>> members(orbits.num_classes());
  for (std::size_t i = 0; i < codes.size(); ++i) members[orbits.class_of[codes[i]]].push_back(i);

  Tally sets(sets_name, n);
  for (std::size_t w = 0; w < words; ++w) {
    const auto& st = m.state(states[w]);
    const auto& got = use_label ? st.label : st.part;
    const auto& want = members[orbits.class_of[w]];
    if (got != want) {
      sets.fail(word_text(w, n, alphabet) + ": machine " + set_text(got) + ", oracle " +
                set_text(want));
    }
  }
  out.push_back(sets.finish(words));

  if (!previous) return;
  Tally growth(growth_name, n);
  std::size_t compared = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const auto u = w / k;
    const auto from = (*previous_states)[u];
    if (m.state(from).sink || m.state(states[w]).sink) continue;
    ++compared;
    const bool grew = orbits.size_of_class_containing(w) > previous->size_of_class_containing(u);
    const bool acc = m.edge_accepting(from, static_cast<Letter>(w % k));
    if (grew != acc) {
      growth.fail(word_text(w, n, alphabet) + ": edge " + (acc ? "accepting" : "plain") +
                  ", orbit " + std::to_string(previous->size_of_class_containing(u)) + " -> " +
                  std::to_string(orbits.size_of_class_containing(w)));
    }
  }
  out.push_back(growth.finish(compared));
}

}  // namespace

CrossCheckReport cross_check(const BoundedAnalysis& analysis, std::size_t max_n,
                             const CrossCheckOptions& options) {
  if (!analysis.is_circuit) {
    throw Error(ErrorKind::Unsupported, "automaton differs from its circuit part");
  }
  if (!analysis.has_machines()) {
    throw Error(ErrorKind::EmptyPostCritical, "post-critical set is empty; no machines to check");
  }
  const auto& a = analysis.circuit;
  const auto& alphabet = a.alphabet();
  const std::size_t k = alphabet.size();
  check_level(k, max_n, options.limits);
  const Recognizer& re = options.re_override ? *options.re_override : *analysis.re;
  const Recognizer& r = options.r_override ? *options.r_override : *analysis.r;
  const auto& elements = analysis.post_critical.elements;
  const bool partitions = options.checks == CheckSet::All || options.checks == CheckSet::Partitions;
  const bool eorbits = options.checks == CheckSet::All || options.checks == CheckSet::EOrbits;
  const bool orbits = options.checks == CheckSet::All || options.checks == CheckSet::Orbits;

  CrossCheckReport report;
  std::vector<std::size_t> re_states{re.initial()}, r_states{r.initial()};
  std::optional<WordPartition> prev_eo, prev_o;
  std::vector<std::size_t> prev_re_states, prev_r_states;
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (n > 0) {
      prev_re_states = std::move(re_states);
      prev_r_states = std::move(r_states);
      re_states.assign(prev_re_states.size() * k, 0);
      r_states.assign(prev_r_states.size() * k, 0);
      for (std::size_t u = 0; u < prev_re_states.size(); ++u) {
        for (Letter x = 0; x < k; ++x) {
          re_states[u * k + x] = re.next(prev_re_states[u], x);
          r_states[u * k + x] = r.next(prev_r_states[u], x);
        }
      }
    }
    const LevelTable table(a, n, options.limits);
    const auto codes = suffix_codes(elements, n, k);
    const auto eo = e_orbits_level(table);

    if (partitions) {
      const auto want = induced(eo, codes);
      const auto& got = analysis.chain->at_level(n);
      Tally t("partition_chain", n);
      if (!(got == want)) {
        std::string g, w;
        for (const auto& b : got.blocks()) g += set_text(b);
        for (const auto& b : want.blocks()) w += set_text(b);
        t.fail("chain " + g + ", oracle " + w);
      }
      report.checks.push_back(t.finish(elements.size()));
    }
    if (eorbits) {
      check_machine(re, false, "re_parts", "re_growth", eo, prev_eo ? &*prev_eo : nullptr,
                    re_states, &prev_re_states, codes, n, alphabet, report.checks);
    }
    if (orbits) {
      const auto o = orbits_level(table);
      check_machine(r, true, "r_labels", "r_growth", o, prev_o ? &*prev_o : nullptr, r_states,
                    &prev_r_states, codes, n, alphabet, report.checks);
      prev_o = o;
    }
    prev_eo = eo;
  }
  return report;
}

std::string orbit_growth_csv(std::span<const std::size_t> sizes) {
  std::ostringstream os;
  os << "n,orbit_size\n";
  for (std::size_t n = 0; n < sizes.size(); ++n) os << n << ',' << sizes[n] << '\n';
  return os.str();
}

}  // namespace autgroup::oracle
