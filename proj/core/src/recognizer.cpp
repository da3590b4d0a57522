#include "autgroup/recognizer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "autgroup/error.hpp"
#include "autgroup/json_io.hpp"
#include "graph.hpp"

namespace autgroup {

const char* to_string(Flavor f) noexcept { return f == Flavor::Re ? "Re" : "R"; }

Recognizer::Recognizer(Flavor flavor, Alphabet alphabet, std::vector<RecognizerState> states,
                       std::size_t initial, std::size_t sink, std::vector<std::size_t> delta,
                       std::vector<bool> edge_accepting)
    : flavor_(flavor),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(initial),
      sink_(sink),
      delta_(std::move(delta)),
      edge_accepting_(std::move(edge_accepting)) {
  const std::size_t n = states_.size();
  const std::size_t k = alphabet_.size();
  if (n == 0) throw Error(ErrorKind::Validation, "machine has no states");
  if (initial_ >= n || sink_ >= n) throw Error(ErrorKind::Validation, "state id out of range");
  if (delta_.size() != n * k || edge_accepting_.size() != n * k) {
    throw Error(ErrorKind::Validation, "transition table has the wrong size");
  }
  for (std::size_t t : delta_) {
    if (t >= n) throw Error(ErrorKind::Validation, "transition target out of range");
  }
  if (!states_[sink_].sink) throw Error(ErrorKind::Validation, "sink state is not marked as sink");
  for (Letter x = 0; x < k; ++x) {
    if (next(sink_, x) != sink_ || this->edge_accepting(sink_, x)) {
      throw Error(ErrorKind::Validation, "sink must be absorbing and non-accepting");
    }
  }
}

Recognizer Recognizer::with_flipped_edge(std::size_t s, Letter x) const {
  Recognizer copy = *this;
  const std::size_t i = s * alphabet_.size() + x;
  copy.edge_accepting_.at(i) = !copy.edge_accepting_.at(i);
  return copy;
}

namespace {

struct RawMachine {
  std::vector<RecognizerState> states;  // sink at index 0
  std::vector<std::size_t> delta;
  std::vector<bool> accepting;
};

// Keeps the states reachable from `initial`, numbered breadth-first, and
// appends the sink.
Recognizer prune(Flavor flavor, const Alphabet& alphabet, RawMachine raw, std::size_t initial) {
  const std::size_t k = alphabet.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order;
  std::vector<std::size_t> id(raw.states.size(), kUnset);
  std::deque<std::size_t> queue{initial};
  id[initial] = 0;
  order.push_back(initial);
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (Letter x = 0; x < k; ++x) {
      const auto t = raw.delta[s * k + x];
      if (t == 0 || id[t] != kUnset) continue;
      id[t] = order.size();
      order.push_back(t);
      queue.push_back(t);
    }
  }
  const std::size_t sink = order.size();
  id[0] = sink;
  order.push_back(0);

  std::vector<RecognizerState> states;
  std::vector<std::size_t> delta;
  std::vector<bool> accepting;
  for (std::size_t old : order) {
    states.push_back(raw.states[old]);
    for (Letter x = 0; x < k; ++x) {
      delta.push_back(id[raw.delta[old * k + x]]);
      accepting.push_back(raw.accepting[old * k + x]);
    }
  }
  return Recognizer(flavor, alphabet, std::move(states), 0, sink, std::move(delta),
                    std::move(accepting));
}

RecognizerState sink_state() {
  RecognizerState s;
  s.sink = true;
  return s;
}

}  // namespace

Recognizer build_re(const PartitionChain& chain, const Alphabet& alphabet) {
  if (chain.partitions.empty() || chain.partitions.front().num_elements() == 0) {
    throw Error(ErrorKind::EmptyPostCritical, "post-critical set is empty");
  }
  const std::size_t k = alphabet.size();
  if (chain.alphabet_size != k) throw Error(ErrorKind::Domain, "alphabet size mismatch");

  // Raw id of (block b, partition i) is offset[i] + b; the sink is 0.
  std::vector<std::size_t> offset;
  RawMachine raw;
  raw.states.push_back(sink_state());
  for (std::size_t i = 0; i < chain.partitions.size(); ++i) {
    offset.push_back(raw.states.size());
    for (const auto& block : chain.partitions[i].blocks()) {
      RecognizerState st;
      st.part = block;
      st.label = block;
      st.partition = i;
      raw.states.push_back(std::move(st));
    }
  }
  raw.delta.assign(raw.states.size() * k, 0);
  raw.accepting.assign(raw.states.size() * k, false);
  for (std::size_t i = 0; i < chain.partitions.size(); ++i) {
    const auto& step = chain.steps[i];
    const std::size_t j = chain.successor(i);
    for (std::size_t b = 0; b < chain.partitions[i].num_blocks(); ++b) {
      const std::size_t s = offset[i] + b;
      for (Letter x = 0; x < k; ++x) {
        const auto lb = step.lambda_of({b, x});
        const auto& target = step.next_block[lb];
        if (!target) continue;
        raw.delta[s * k + x] = offset[j] + *target;
        raw.accepting[s * k + x] = step.blocks[lb].merged();
      }
    }
  }
  for (std::size_t e = 0; e < raw.delta.size(); ++e) {
    if (raw.accepting[e]) raw.states[raw.delta[e]].accepting = true;
  }
  return prune(Flavor::Re, alphabet, std::move(raw), offset[0]);
}

Recognizer build_r(const Recognizer& re, const PartitionChain& chain,
                   std::span<const IndexPair> e) {
  if (re.empty() || re.flavor() != Flavor::Re) {
    throw Error(ErrorKind::Domain, "build_r needs a built Re machine");
  }
  const std::size_t k = re.alphabet().size();
  std::vector<Partition> coarse;
  for (const auto& p : chain.partitions) coarse.push_back(coarsen(p, e));

  auto subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  std::vector<RecognizerState> states = re.states();
  for (auto& st : states) {
    if (st.sink) continue;
    const auto& c = coarse[st.partition];
    st.label = c.block(c.block_of(st.part.front()));
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto& st = states[s];
    st.accepting = false;
    if (st.sink) continue;
    for (const auto& other : re.states()) {
      if (!other.sink && other.accepting && other.partition == st.partition &&
          subset(other.part, st.label)) {
        st.accepting = true;
        break;
      }
    }
  }

  // Orbits at one level are unions of the e-orbits of the blocks in the
  // label, and every word of an orbit has the same number of one-letter
  // extensions in the next orbit. The orbit grows on an edge iff the cells
  // feeding the target label outnumber the blocks of the source label.
  std::vector<std::size_t> delta;
  std::vector<bool> accepting;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (Letter x = 0; x < k; ++x) {
      const auto t = re.next(s, x);
      delta.push_back(t);
      bool acc = false;
      if (!states[s].sink && !states[t].sink) {
        const auto i = states[s].partition;
        const auto& source = chain.partitions[i];
        std::vector<std::size_t> blocks;
        for (auto m : states[s].label) blocks.push_back(source.block_of(m));
        std::sort(blocks.begin(), blocks.end());
        const auto source_blocks = static_cast<std::size_t>(
            std::unique(blocks.begin(), blocks.end()) - blocks.begin());
        std::size_t cells = 0;
        for (const auto& lb : chain.steps[i].blocks) {
          if (!lb.members.empty() && subset(lb.members, states[t].label)) cells += lb.cells.size();
        }
        acc = cells > source_blocks;
      }
      accepting.push_back(acc);
    }
  }
  return Recognizer(Flavor::R, re.alphabet(), std::move(states), re.initial(), re.sink(),
                    std::move(delta), std::move(accepting));
}

RunResult run(const Recognizer& m, std::span<const Letter> v) {
  if (m.empty()) throw Error(ErrorKind::Domain, "machine was not built");
  RunResult r;
  std::size_t s = m.initial();
  r.trace.push_back(s);
  for (Letter x : v) {
    if (x >= m.alphabet().size()) throw Error(ErrorKind::Domain, "letter outside the alphabet");
    if (m.edge_accepting(s, x)) ++r.accepting_edges;
    s = m.next(s, x);
    r.trace.push_back(s);
  }
  r.final_state = s;
  return r;
}

namespace {

detail::Components machine_components(const Recognizer& m) {
  std::vector<std::vector<std::size_t>> adj(m.num_states());
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (Letter x = 0; x < m.alphabet().size(); ++x) adj[s].push_back(m.next(s, x));
  }
  return detail::strongly_connected(adj);
}

struct Bfs {
  std::vector<bool> seen;
  std::vector<std::size_t> parent;
  std::vector<Letter> via;
  std::vector<std::size_t> order;
};

// Breadth-first search from `from`; when `within` is set, stays inside that
// component.
Bfs bfs(const Recognizer& m, std::size_t from, const detail::Components* comps = nullptr) {
  Bfs b;
  b.seen.assign(m.num_states(), false);
  b.parent.assign(m.num_states(), 0);
  b.via.assign(m.num_states(), 0);
  std::deque<std::size_t> queue{from};
  b.seen[from] = true;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    b.order.push_back(s);
    for (Letter x = 0; x < m.alphabet().size(); ++x) {
      const auto t = m.next(s, x);
      if (b.seen[t]) continue;
      if (comps && comps->comp[t] != comps->comp[from]) continue;
      b.seen[t] = true;
      b.parent[t] = s;
      b.via[t] = x;
      queue.push_back(t);
    }
  }
  return b;
}

Word path_to(const Bfs& b, std::size_t from, std::size_t to) {
  Word w;
  while (to != from) {
    w.push_back(b.via[to]);
    to = b.parent[to];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::optional<Lasso> find_accepting_lasso(const Recognizer& m) {
  if (m.empty()) throw Error(ErrorKind::Domain, "machine was not built");
  const auto comps = machine_components(m);
  const auto reach = bfs(m, m.initial());
  for (std::size_t s : reach.order) {
    for (Letter x = 0; x < m.alphabet().size(); ++x) {
      const auto t = m.next(s, x);
      if (!m.edge_accepting(s, x) || comps.comp[t] != comps.comp[s]) continue;
      const auto inner = bfs(m, t, &comps);
      Lasso l;
      l.stem = path_to(reach, m.initial(), s);
      l.cycle.push_back(x);
      const auto back = path_to(inner, t, s);
      l.cycle.insert(l.cycle.end(), back.begin(), back.end());
      return l;
    }
  }
  return std::nullopt;
}

std::vector<bool> reachable_from_accepting_cycles(const Recognizer& m) {
  if (m.empty()) throw Error(ErrorKind::Domain, "machine was not built");
  const auto comps = machine_components(m);
  const auto reach = bfs(m, m.initial());
  std::vector<bool> hot(comps.count, false);
  for (std::size_t s : reach.order) {
    for (Letter x = 0; x < m.alphabet().size(); ++x) {
      const auto t = m.next(s, x);
      if (m.edge_accepting(s, x) && comps.comp[t] == comps.comp[s]) hot[comps.comp[s]] = true;
    }
  }
  std::vector<bool> out(m.num_states(), false);
  std::vector<std::size_t> stack;
  for (std::size_t s : reach.order) {
    if (hot[comps.comp[s]]) {
      out[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (Letter x = 0; x < m.alphabet().size(); ++x) {
      const auto t = m.next(s, x);
      if (!out[t]) {
        out[t] = true;
        stack.push_back(t);
      }
    }
  }
  return out;
}

namespace {

std::string set_text(const std::vector<std::size_t>& members, const DotOptions& opt) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    const auto m = members[i];
    out += m < opt.element_names.size() ? opt.element_names[m] : std::to_string(m);
  }
  return out + "}";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const Recognizer& m, const DotOptions& options) {
  if (m.empty()) throw Error(ErrorKind::Domain, "machine was not built");
  std::ostringstream os;
  os << "digraph " << to_string(m.flavor()) << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  start [shape=point];\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    const auto& st = m.state(s);
    if (st.sink && !options.include_sink) continue;
    std::string label;
    if (st.sink) {
      label = "⊥";
    } else {
      label = set_text(st.part, options) + " / " + std::to_string(st.partition);
      if (m.flavor() == Flavor::R) label += "\n" + set_text(st.label, options);
    }
    os << "  s" << s << " [label=\"" << escape(label) << "\"";
    if (st.accepting) os << ", shape=doublecircle";
    os << "];\n";
  }
  os << "  start -> s" << m.initial() << ";\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    // One DOT edge per (target, acceptance), letters joined.
    std::map<std::pair<std::size_t, bool>, std::string> grouped;
    std::vector<std::pair<std::size_t, bool>> order;
    for (Letter x = 0; x < m.alphabet().size(); ++x) {
      const auto t = m.next(s, x);
      if (!options.include_sink && (m.state(t).sink || m.state(s).sink)) continue;
      const auto key = std::make_pair(t, m.edge_accepting(s, x));
      auto [it, inserted] = grouped.emplace(key, "");
      if (inserted) {
        order.push_back(key);
      } else {
        it->second += ",";
      }
      it->second += m.alphabet().name(x);
    }
    for (const auto& key : order) {
      os << "  s" << s << " -> s" << key.first << " [label=\"" << escape(grouped[key]) << "\"";
      if (key.second) os << ", style=bold";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const Recognizer& m) {
  if (m.empty()) throw Error(ErrorKind::Domain, "machine was not built");
  return recognizer_to_json(m).dump(2) + "\n";
}

std::string export_machine(const Recognizer& m, std::string_view format,
                           const DotOptions& options) {
  if (format == "dot") return export_dot(m, options);
  if (format == "json") return export_json(m);
  throw Error(ErrorKind::Domain, "unknown export format '" + std::string(format) + "'");
}

}  // namespace autgroup
