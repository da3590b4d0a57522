#include "autgroup/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "autgroup/error.hpp"
#include "graph.hpp"

namespace autgroup {

namespace {

struct CycleStructure {
  detail::Components components;
  std::vector<bool> cyclic_component;
  std::vector<bool> trivial;
};

// SCCs of the graph on all states, with the trivial state's edges dropped.
CycleStructure nontrivial_cycles(const MealyAutomaton& a) {
  const std::size_t n = a.num_states();
  CycleStructure cs;
  cs.trivial.assign(n, false);
  if (auto e = find_identity_state(a)) cs.trivial[*e] = true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (StateId s = 0; s < n; ++s) {
    if (cs.trivial[s]) continue;
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const StateId t = a.target(s, x);
      if (!cs.trivial[t]) adj[s].push_back(t);
    }
  }
  cs.components = detail::strongly_connected(adj);
  cs.cyclic_component.assign(cs.components.count, false);
  for (StateId s = 0; s < n; ++s) {
    for (std::size_t t : adj[s]) {
      if (cs.components.comp[s] == cs.components.comp[t]) {
        cs.cyclic_component[cs.components.comp[s]] = true;
      }
    }
  }
  return cs;
}

void extend(const MealyAutomaton& a, const CycleStructure& cs, StateId u, PathPair& current,
            std::vector<PathPair>& out) {
  for (Letter x = 0; x < a.alphabet_size(); ++x) {
    const auto& tr = a.transition(u, x);
    if (cs.trivial[tr.to] || cs.cyclic_component[cs.components.comp[tr.to]]) continue;
    current.input_tail.push_back(x);
    current.output_tail.push_back(tr.out);
    current.end = tr.to;
    out.push_back(current);
    extend(a, cs, tr.to, current, out);
    current.input_tail.pop_back();
    current.output_tail.pop_back();
  }
}

std::map<EvPeriodicWord, std::size_t> index_map(std::span<const EvPeriodicWord> elements) {
  std::map<EvPeriodicWord, std::size_t> m;
  for (std::size_t i = 0; i < elements.size(); ++i) m.emplace(elements[i], i);
  return m;
}

std::size_t lookup(const std::map<EvPeriodicWord, std::size_t>& m, const EvPeriodicWord& p) {
  auto it = m.find(p);
  if (it == m.end()) throw Error(ErrorKind::Internal, "path label missing from the post-critical set");
  return it->second;
}

}  // namespace

MealyAutomaton circuit_part(const MealyAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<std::size_t>> adj(n);
  for (StateId s = 0; s < n; ++s) {
    for (Letter x = 0; x < a.alphabet_size(); ++x) adj[s].push_back(a.target(s, x));
  }
  const auto comps = detail::strongly_connected(adj);
  std::vector<bool> cyclic(comps.count, false);
  for (StateId s = 0; s < n; ++s) {
    for (std::size_t t : adj[s]) {
      if (comps.comp[s] == comps.comp[t]) cyclic[comps.comp[s]] = true;
    }
  }
  std::vector<bool> keep(n, false);
  std::vector<std::size_t> stack;
  for (StateId s = 0; s < n; ++s) {
    if (cyclic[comps.comp[s]]) {
      keep[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (std::size_t t : adj[s]) {
      if (!keep[t]) {
        keep[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::vector<StateId> kept;
  for (StateId s = 0; s < n; ++s) {
    if (keep[s]) kept.push_back(s);
  }
  return subautomaton(a, kept);
}

bool is_bounded(const MealyAutomaton& a) {
  if (!is_invertible(a)) throw Error(ErrorKind::NotInvertible, "automaton is not invertible");
  const auto cs = nontrivial_cycles(a);
  const std::size_t n = a.num_states();

  // Each cyclic component must be one simple cycle: exactly one internal
  // out-edge per state, parallel edges counted separately.
  std::vector<std::size_t> size(cs.components.count, 0), internal(cs.components.count, 0);
  for (StateId s = 0; s < n; ++s) {
    if (cs.trivial[s]) continue;
    ++size[cs.components.comp[s]];
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const StateId t = a.target(s, x);
      if (!cs.trivial[t] && cs.components.comp[t] == cs.components.comp[s]) {
        ++internal[cs.components.comp[s]];
      }
    }
  }
  for (std::size_t c = 0; c < cs.components.count; ++c) {
    if (cs.cyclic_component[c] && internal[c] != size[c]) return false;
  }

  // No directed path from one cyclic component to another.
  for (std::size_t c = 0; c < cs.components.count; ++c) {
    if (!cs.cyclic_component[c]) continue;
    std::vector<bool> seen(n, false);
    std::vector<StateId> stack;
    for (StateId s = 0; s < n; ++s) {
      if (!cs.trivial[s] && cs.components.comp[s] == c) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      const StateId s = stack.back();
      stack.pop_back();
      for (Letter x = 0; x < a.alphabet_size(); ++x) {
        const StateId t = a.target(s, x);
        if (cs.trivial[t] || seen[t]) continue;
        const auto ct = cs.components.comp[t];
        if (ct != c && cs.cyclic_component[ct]) return false;
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return true;
}

std::vector<PathPair> all_path_pairs(const MealyAutomaton& a) {
  if (!is_bounded(a)) throw Error(ErrorKind::NotBounded, "automaton is not bounded");
  const auto cs = nontrivial_cycles(a);
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet_size();

  std::vector<PathPair> out;
  std::vector<bool> done(cs.components.count, false);
  for (StateId start = 0; start < n; ++start) {
    if (cs.trivial[start]) continue;
    const auto c = cs.components.comp[start];
    if (!cs.cyclic_component[c] || done[c]) continue;
    done[c] = true;

    // Walk the unique cycle from its least state.
    std::vector<StateId> states;
    Word in, outw;
    StateId u = start;
    do {
      states.push_back(u);
      for (Letter x = 0; x < k; ++x) {
        const auto& tr = a.transition(u, x);
        if (!cs.trivial[tr.to] && cs.components.comp[tr.to] == c) {
          in.push_back(x);
          outw.push_back(tr.out);
          u = tr.to;
          break;
        }
      }
    } while (u != start);

    const std::size_t len = states.size();
    for (std::size_t r = 0; r < len; ++r) {
      // Paths ending at states[r] read the cycle edges r, r+1, ..., r-1.
      PathPair pp;
      for (std::size_t j = 0; j < len; ++j) {
        pp.input_period.push_back(in[(r + j) % len]);
        pp.output_period.push_back(outw[(r + j) % len]);
      }
      pp.end = states[r];
      out.push_back(pp);
      extend(a, cs, states[r], pp, out);
    }
  }
  return out;
}

std::vector<PathPair> path_pairs(const MealyAutomaton& a, StateId t) {
  if (t >= a.num_states()) throw Error(ErrorKind::Domain, "not a state");
  if (find_identity_state(a) == t) {
    throw Error(ErrorKind::Domain, "path pairs are defined for non-trivial states only");
  }
  std::vector<PathPair> out;
  for (auto& pp : all_path_pairs(a)) {
    if (pp.end == t) out.push_back(std::move(pp));
  }
  return out;
}

std::vector<EvPeriodicWord> post_critical_set(const MealyAutomaton& a) {
  std::set<EvPeriodicWord> s;
  for (const auto& pp : all_path_pairs(a)) {
    s.insert(pp.input());
    s.insert(pp.output());
  }
  return {s.begin(), s.end()};
}

std::vector<CellPair> compute_ee_pairs(const MealyAutomaton& a,
                                       std::span<const EvPeriodicWord> elements) {
  const auto index = index_map(elements);
  const auto trivial = find_identity_state(a);
  std::set<CellPair> out;
  for (const auto& pp : all_path_pairs(a)) {
    const std::size_t p = lookup(index, pp.input());
    const std::size_t q = lookup(index, pp.output());
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const auto& tr = a.transition(pp.end, x);
      if (trivial && tr.to == *trivial) out.insert(CellPair::make({p, x}, {q, tr.out}));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<IndexPair> compute_e_pairs(const MealyAutomaton& a,
                                       std::span<const EvPeriodicWord> elements) {
  const auto index = index_map(elements);
  std::set<IndexPair> out;
  for (const auto& pp : all_path_pairs(a)) {
    const std::size_t p = lookup(index, pp.input());
    const std::size_t q = lookup(index, pp.output());
    if (p != q) out.insert(IndexPair::make(p, q));
  }
  return {out.begin(), out.end()};
}

std::optional<std::size_t> PostCriticalData::index_of(const EvPeriodicWord& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<CellRef> PostCriticalData::embedding() const {
  std::vector<CellRef> out;
  out.reserve(elements.size());
  for (const auto& p : elements) {
    auto shifted = index_of(p.shift());
    if (!shifted) throw Error(ErrorKind::Internal, "post-critical set is not shift-closed");
    out.push_back({*shifted, p.last_letter()});
  }
  return out;
}

PostCriticalData analyze_post_critical(const MealyAutomaton& a) {
  PostCriticalData d;
  d.elements = post_critical_set(a);
  d.ee_pairs = compute_ee_pairs(a, d.elements);
  d.e_pairs = compute_e_pairs(a, d.elements);
  return d;
}

}  // namespace autgroup
