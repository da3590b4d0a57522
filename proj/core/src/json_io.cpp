#include "autgroup/json_io.hpp"

#include <cstdio>
#include <map>

#include "autgroup/error.hpp"

namespace autgroup {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) invalid(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string string_field(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_string()) invalid(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::size_t index_field(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_number_unsigned()) invalid(std::string("field '") + name + "' must be an index");
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_array()) invalid(std::string("field '") + name + "' must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!e.is_number_unsigned()) invalid(std::string("field '") + name + "' must hold indices");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

Alphabet alphabet_from(const json& j) {
  const auto& v = field(j, "alphabet");
  if (!v.is_array()) invalid("alphabet must be an array");
  std::vector<std::string> letters;
  for (const auto& e : v) {
    if (!e.is_string()) invalid("letters must be strings");
    letters.push_back(e.get<std::string>());
  }
  try {
    return Alphabet(std::move(letters));
  } catch (const Error& e) {
    invalid(e.what());
  }
}

Word word_from(const json& j, const Alphabet& alphabet) {
  if (!j.is_array()) invalid("a word must be an array of letters");
  Word w;
  for (const auto& e : j) {
    if (!e.is_string()) invalid("letters must be strings");
    auto x = alphabet.find(e.get<std::string>());
    if (!x) invalid("unknown letter '" + e.get<std::string>() + "'");
    w.push_back(*x);
  }
  return w;
}

json word_to(std::span<const Letter> w, const Alphabet& alphabet) {
  json out = json::array();
  for (Letter x : w) out.push_back(alphabet.name(x));
  return out;
}

json cell_json(std::size_t index, Letter x, const Alphabet& alphabet) {
  return json::array({index, alphabet.name(x)});
}

}  // namespace

json automaton_to_json(const MealyAutomaton& a) {
  json j;
  j["alphabet"] = a.alphabet().letters();
  j["states"] = json::array();
  for (StateId s = 0; s < a.num_states(); ++s) {
    json st;
    st["name"] = a.name(s);
    st["transitions"] = json::array();
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const auto& tr = a.transition(s, x);
      st["transitions"].push_back(
          {{"in", a.alphabet().name(x)}, {"out", a.alphabet().name(tr.out)}, {"to", a.name(tr.to)}});
    }
    j["states"].push_back(std::move(st));
  }
  j["trivial"] = a.trivial() ? json(a.name(*a.trivial())) : json(nullptr);
  return j;
}

MealyAutomaton automaton_from_json(const json& j) {
  const Alphabet alphabet = alphabet_from(j);
  const std::size_t k = alphabet.size();
  const auto& states = field(j, "states");
  if (!states.is_array() || states.empty()) invalid("states must be a nonempty array");
  std::vector<std::string> names;
  std::map<std::string, StateId> ids;
  for (const auto& st : states) {
    auto name = string_field(st, "name");
    if (!ids.emplace(name, static_cast<StateId>(names.size())).second) {
      invalid("duplicate state '" + name + "'");
    }
    names.push_back(std::move(name));
  }
  std::vector<std::optional<Transition>> table(names.size() * k);
  for (std::size_t s = 0; s < names.size(); ++s) {
    const auto& trs = field(states[s], "transitions");
    if (!trs.is_array()) invalid("transitions must be an array");
    for (const auto& tr : trs) {
      const auto in = alphabet.find(string_field(tr, "in"));
      const auto out = alphabet.find(string_field(tr, "out"));
      if (!in || !out) invalid("unknown letter in a transition of '" + names[s] + "'");
      auto to = ids.find(string_field(tr, "to"));
      if (to == ids.end()) invalid("unknown target in a transition of '" + names[s] + "'");
      auto& slot = table[s * k + *in];
      if (slot) invalid("duplicate transition of '" + names[s] + "'");
      slot = Transition{*out, to->second};
    }
  }
  std::vector<Transition> full;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      invalid("table not total: state '" + names[i / k] + "' has no transition on letter '" +
              alphabet.name(static_cast<Letter>(i % k)) + "'");
    }
    full.push_back(*table[i]);
  }
  std::optional<StateId> trivial;
  if (j.contains("trivial") && !j.at("trivial").is_null()) {
    auto it = ids.find(string_field(j, "trivial"));
    if (it == ids.end()) invalid("unknown trivial state");
    trivial = it->second;
  }
  return MealyAutomaton(alphabet, std::move(names), std::move(full), trivial);
}

json ev_periodic_to_json(const EvPeriodicWord& p, const Alphabet& alphabet) {
  return {{"period", word_to(p.period(), alphabet)}, {"preperiod", word_to(p.preperiod(), alphabet)}};
}

EvPeriodicWord ev_periodic_from_json(const json& j, const Alphabet& alphabet) {
  auto period = word_from(field(j, "period"), alphabet);
  auto preperiod = word_from(field(j, "preperiod"), alphabet);
  if (period.empty()) invalid("period must be nonempty");
  return EvPeriodicWord::make(std::move(period), std::move(preperiod));
}

json post_critical_to_json(const PostCriticalData& data, const Alphabet& alphabet) {
  json j;
  j["elements"] = json::array();
  for (std::size_t i = 0; i < data.elements.size(); ++i) {
    auto e = ev_periodic_to_json(data.elements[i], alphabet);
    e["index"] = i;
    e["word"] = data.elements[i].render(alphabet);
    j["elements"].push_back(std::move(e));
  }
  j["ee_pairs"] = json::array();
  for (const auto& p : data.ee_pairs) {
    j["ee_pairs"].push_back({cell_json(p.first.index, p.first.letter, alphabet),
                             cell_json(p.second.index, p.second.letter, alphabet)});
  }
  j["e_pairs"] = json::array();
  for (const auto& p : data.e_pairs) j["e_pairs"].push_back({p.first, p.second});
  return j;
}

json chain_to_json(const PartitionChain& chain, const Alphabet& alphabet) {
  json j;
  j["fixpoint"] = chain.fixpoint();
  j["partitions"] = json::array();
  for (const auto& p : chain.partitions) j["partitions"].push_back(p.blocks());
  j["steps"] = json::array();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& step = chain.steps[i];
    json s;
    s["from"] = i;
    s["lambda_blocks"] = json::array();
    for (const auto& b : step.blocks) {
      json cells = json::array();
      for (const auto& c : b.cells) cells.push_back(cell_json(c.block, c.letter, alphabet));
      s["lambda_blocks"].push_back(
          {{"cells", std::move(cells)}, {"members", b.members}, {"merged", b.merged()}});
    }
    s["merges"] = json::array();
    for (const auto& m : step.merges) {
      s["merges"].push_back(
          {{"cells", {cell_json(m.first.block, m.first.letter, alphabet),
                      cell_json(m.second.block, m.second.letter, alphabet)}},
           {"witness", {cell_json(m.witness.first.index, m.witness.first.letter, alphabet),
                        cell_json(m.witness.second.index, m.witness.second.letter, alphabet)}}});
    }
    j["steps"].push_back(std::move(s));
  }
  return j;
}

json recognizer_to_json(const Recognizer& m) {
  if (m.empty()) throw Error(ErrorKind::Domain, "machine was not built");
  json j;
  j["flavor"] = to_string(m.flavor());
  j["alphabet"] = m.alphabet().letters();
  j["states"] = json::array();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    const auto& st = m.state(s);
    j["states"].push_back({{"id", s},
                           {"part", st.part},
                           {"label", st.label},
                           {"partition", st.partition},
                           {"accepting", st.accepting}});
  }
  j["initial"] = m.initial();
  j["sink"] = m.sink();
  j["edges"] = json::array();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (Letter x = 0; x < m.alphabet().size(); ++x) {
      j["edges"].push_back({{"from", s},
                            {"letter", m.alphabet().name(x)},
                            {"to", m.next(s, x)},
                            {"accepting", m.edge_accepting(s, x)}});
    }
  }
  return j;
}

Recognizer recognizer_from_json(const json& j) {
  const auto flavor_name = string_field(j, "flavor");
  Flavor flavor;
  if (flavor_name == "Re") {
    flavor = Flavor::Re;
  } else if (flavor_name == "R") {
    flavor = Flavor::R;
  } else {
    invalid("unknown flavor '" + flavor_name + "'");
  }
  const Alphabet alphabet = alphabet_from(j);
  const std::size_t k = alphabet.size();
  const auto& states_json = field(j, "states");
  if (!states_json.is_array()) invalid("states must be an array");
  const std::size_t n = states_json.size();
  const std::size_t sink = index_field(j, "sink");
  std::vector<RecognizerState> states(n);
  std::vector<bool> seen(n, false);
  for (const auto& sj : states_json) {
    const auto id = index_field(sj, "id");
    if (id >= n || seen[id]) invalid("state ids must be 0..n-1 without repeats");
    seen[id] = true;
    auto& st = states[id];
    st.part = index_list(sj, "part");
    st.label = index_list(sj, "label");
    st.partition = index_field(sj, "partition");
    const auto& acc = field(sj, "accepting");
    if (!acc.is_boolean()) invalid("accepting must be a boolean");
    st.accepting = acc.get<bool>();
    st.sink = id == sink;
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> delta(n * k, kUnset);
  std::vector<bool> accepting(n * k, false);
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) invalid("edges must be an array");
  for (const auto& e : edges) {
    const auto from = index_field(e, "from");
    const auto to = index_field(e, "to");
    const auto x = alphabet.find(string_field(e, "letter"));
    if (from >= n || to >= n || !x) invalid("edge out of range");
    if (delta[from * k + *x] != kUnset) invalid("duplicate edge");
    delta[from * k + *x] = to;
    const auto& acc = field(e, "accepting");
    if (!acc.is_boolean()) invalid("accepting must be a boolean");
    accepting[from * k + *x] = acc.get<bool>();
  }
  for (auto t : delta) {
    if (t == kUnset) invalid("transition table not total");
  }
  return Recognizer(flavor, alphabet, std::move(states), index_field(j, "initial"), sink,
                    std::move(delta), std::move(accepting));
}

std::string fingerprint(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace autgroup
