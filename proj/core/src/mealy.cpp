#include "autgroup/mealy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "autgroup/error.hpp"

namespace autgroup {

namespace {

constexpr std::string_view kInverseSuffix = "^-1";

std::string inverse_name(const std::string& name) {
  if (name.size() > kInverseSuffix.size() &&
      name.compare(name.size() - kInverseSuffix.size(), kInverseSuffix.size(), kInverseSuffix) == 0) {
    return name.substr(0, name.size() - kInverseSuffix.size());
  }
  return name + std::string(kInverseSuffix);
}

// Class ids assigned in order of first occurrence, so the result is ordered
// by least state index.
template <typename Key>
std::vector<std::size_t> number_by_first_occurrence(const std::vector<Key>& keys,
                                                     std::size_t& num_classes) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(keys[i], ids.size());
    out[i] = it->second;
  }
  num_classes = ids.size();
  return out;
}

}  // namespace

MealyAutomaton::MealyAutomaton(Alphabet alphabet, std::vector<std::string> names,
                               std::vector<Transition> table, std::optional<StateId> trivial)
    : alphabet_(std::move(alphabet)),
      names_(std::move(names)),
      table_(std::move(table)),
      trivial_(trivial) {
  const std::size_t n = names_.size();
  if (alphabet_.size() < 2) throw Error(ErrorKind::Validation, "alphabet needs at least two letters");
  if (n == 0) throw Error(ErrorKind::Validation, "automaton has no states");
  if (table_.size() != n * alphabet_.size()) {
    throw Error(ErrorKind::Validation, "transition table not total");
  }
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw Error(ErrorKind::Validation, "empty state name");
    if (!seen.insert(name).second) throw Error(ErrorKind::Validation, "duplicate state '" + name + "'");
  }
  for (const auto& t : table_) {
    if (t.to >= n) throw Error(ErrorKind::Validation, "transition target out of range");
    if (t.out >= alphabet_.size()) throw Error(ErrorKind::Validation, "output letter out of range");
  }
  if (trivial_) {
    if (*trivial_ >= n) throw Error(ErrorKind::Validation, "trivial state out of range");
    if (!is_identity_loop(*trivial_)) {
      throw Error(ErrorKind::Validation,
                  "state '" + names_[*trivial_] + "' is marked trivial but is not x|x for every x");
    }
  }
}

std::optional<StateId> MealyAutomaton::find_state(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

StateId MealyAutomaton::state(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw Error(ErrorKind::Domain, "unknown state '" + std::string(name) + "'");
}

bool MealyAutomaton::is_identity_loop(StateId s) const {
  for (Letter x = 0; x < alphabet_.size(); ++x) {
    const auto& t = transition(s, x);
    if (t.out != x || t.to != s) return false;
  }
  return true;
}

ActResult act(const MealyAutomaton& a, StateId s, std::span<const Letter> v) {
  if (s >= a.num_states()) throw Error(ErrorKind::Domain, "unknown state");
  ActResult r{{}, s};
  r.output.reserve(v.size());
  for (Letter x : v) {
    if (x >= a.alphabet_size()) throw Error(ErrorKind::Domain, "letter outside alphabet");
    const auto& t = a.transition(r.section, x);
    r.output.push_back(t.out);
    r.section = t.to;
  }
  return r;
}

bool is_invertible(const MealyAutomaton& a) {
  const std::size_t k = a.alphabet_size();
  std::vector<bool> hit(k);
  for (StateId s = 0; s < a.num_states(); ++s) {
    std::fill(hit.begin(), hit.end(), false);
    for (Letter x = 0; x < k; ++x) {
      Letter y = a.output(s, x);
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

MealyAutomaton invert(const MealyAutomaton& a) {
  if (!is_invertible(a)) throw Error(ErrorKind::NotInvertible, "automaton is not invertible");
  const std::size_t k = a.alphabet_size();
  std::vector<std::string> names;
  names.reserve(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s) {
    names.push_back(a.is_trivial(s) ? a.name(s) : inverse_name(a.name(s)));
  }
  std::vector<Transition> table(a.table().size());
  for (StateId s = 0; s < a.num_states(); ++s) {
    for (Letter x = 0; x < k; ++x) {
      const auto& t = a.transition(s, x);
      table[s * k + t.out] = Transition{x, t.to};
    }
  }
  return MealyAutomaton(a.alphabet(), std::move(names), std::move(table), a.trivial());
}

MealyAutomaton minimize(const MealyAutomaton& a) {
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet_size();

  std::vector<std::vector<std::size_t>> keys(n);
  for (StateId s = 0; s < n; ++s) {
    for (Letter x = 0; x < k; ++x) keys[s].push_back(a.output(s, x));
  }
  std::size_t num_classes = 0;
  std::vector<std::size_t> cls = number_by_first_occurrence(keys, num_classes);

  for (;;) {
    for (StateId s = 0; s < n; ++s) {
      keys[s].assign(1, cls[s]);
      for (Letter x = 0; x < k; ++x) keys[s].push_back(cls[a.target(s, x)]);
    }
    std::size_t refined_count = 0;
    auto refined = number_by_first_occurrence(keys, refined_count);
    const bool stable = refined_count == num_classes;
    cls = std::move(refined);
    num_classes = refined_count;
    if (stable) break;
  }

  std::vector<StateId> representative(num_classes, 0);
  std::vector<std::string> names(num_classes);
  std::vector<bool> seen(num_classes, false);
  for (StateId s = 0; s < n; ++s) {
    const auto c = cls[s];
    if (!seen[c]) {
      seen[c] = true;
      representative[c] = s;
      names[c] = a.name(s);
    } else if (a.name(s) < names[c]) {
      names[c] = a.name(s);
    }
  }
  std::vector<Transition> table;
  table.reserve(num_classes * k);
  for (std::size_t c = 0; c < num_classes; ++c) {
    for (Letter x = 0; x < k; ++x) {
      const auto& t = a.transition(representative[c], x);
      table.push_back(Transition{t.out, static_cast<StateId>(cls[t.to])});
    }
  }
  MealyAutomaton unmarked(a.alphabet(), names, table);
  return MealyAutomaton(a.alphabet(), std::move(names), std::move(table),
                        find_identity_state(unmarked));
}

std::optional<StateId> find_identity_state(const MealyAutomaton& a) {
  if (a.trivial()) return a.trivial();
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (a.is_identity_loop(s)) return s;
  }
  return std::nullopt;
}

MealyAutomaton ensure_trivial_state(const MealyAutomaton& a) {
  if (a.trivial()) return a;
  if (auto e = find_identity_state(a)) {
    return MealyAutomaton(a.alphabet(), a.names(), a.table(), e);
  }
  std::string name = "e";
  for (int i = 0; a.find_state(name); ++i) name = "e" + std::to_string(i);
  auto names = a.names();
  auto table = a.table();
  const auto e = static_cast<StateId>(names.size());
  names.push_back(name);
  for (Letter x = 0; x < a.alphabet_size(); ++x) table.push_back(Transition{x, e});
  return MealyAutomaton(a.alphabet(), std::move(names), std::move(table), e);
}

MealyAutomaton compose(const MealyAutomaton& a, const MealyAutomaton& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorKind::Domain, "cannot compose automata over different alphabets");
  }
  const std::size_t k = a.alphabet_size();
  const std::size_t nb = b.num_states();
  std::vector<std::string> names;
  std::vector<Transition> table;
  names.reserve(a.num_states() * nb);
  table.reserve(a.num_states() * nb * k);
  for (StateId s = 0; s < a.num_states(); ++s) {
    for (StateId t = 0; t < nb; ++t) {
      names.push_back(a.name(s) + "*" + b.name(t));
      for (Letter x = 0; x < k; ++x) {
        const auto& inner = b.transition(t, x);
        const auto& outer = a.transition(s, inner.out);
        table.push_back(Transition{outer.out, static_cast<StateId>(outer.to * nb + inner.to)});
      }
    }
  }
  std::optional<StateId> trivial;
  if (a.trivial() && b.trivial()) trivial = static_cast<StateId>(*a.trivial() * nb + *b.trivial());
  return MealyAutomaton(a.alphabet(), std::move(names), std::move(table), trivial);
}

MealyAutomaton union_with_inverse(const MealyAutomaton& a) {
  if (!is_invertible(a)) throw Error(ErrorKind::NotInvertible, "automaton is not invertible");
  const std::size_t k = a.alphabet_size();
  const std::size_t n = a.num_states();

  // Index of s^-1 in the union; the trivial state is its own inverse.
  std::vector<StateId> inv(n);
  StateId next = static_cast<StateId>(n);
  for (StateId s = 0; s < n; ++s) inv[s] = a.is_trivial(s) ? s : next++;

  std::vector<std::string> names = a.names();
  std::vector<Transition> table = a.table();
  names.resize(next);
  table.resize(static_cast<std::size_t>(next) * k);
  for (StateId s = 0; s < n; ++s) {
    if (a.is_trivial(s)) continue;
    names[inv[s]] = inverse_name(a.name(s));
    for (Letter x = 0; x < k; ++x) {
      const auto& t = a.transition(s, x);
      table[inv[s] * k + t.out] = Transition{x, inv[t.to]};
    }
  }
  return minimize(MealyAutomaton(a.alphabet(), std::move(names), std::move(table), a.trivial()));
}

MealyAutomaton subautomaton(const MealyAutomaton& a, std::span<const StateId> keep) {
  constexpr auto kAbsent = static_cast<StateId>(-1);
  std::vector<StateId> remap(a.num_states(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) remap.at(keep[i]) = static_cast<StateId>(i);
  std::vector<std::string> names;
  std::vector<Transition> table;
  for (StateId s : keep) {
    names.push_back(a.name(s));
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const auto& t = a.transition(s, x);
      if (remap[t.to] == kAbsent) {
        throw Error(ErrorKind::Internal, "subautomaton is not closed under transitions");
      }
      table.push_back(Transition{t.out, remap[t.to]});
    }
  }
  std::optional<StateId> trivial;
  if (a.trivial() && remap[*a.trivial()] != kAbsent) trivial = remap[*a.trivial()];
  return MealyAutomaton(a.alphabet(), std::move(names), std::move(table), trivial);
}

std::optional<Word> distinguishing_word(const MealyAutomaton& a, StateId s, StateId t) {
  struct Node {
    StateId s, t;
    Word w;
  };
  std::set<std::pair<StateId, StateId>> visited{{s, t}};
  std::deque<Node> queue{{s, t, {}}};
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const auto& ts = a.transition(cur.s, x);
      const auto& tt = a.transition(cur.t, x);
      if (ts.out != tt.out) {
        cur.w.push_back(x);
        return cur.w;
      }
      if (visited.emplace(ts.to, tt.to).second) {
        Word w = cur.w;
        w.push_back(x);
        queue.push_back({ts.to, tt.to, std::move(w)});
      }
    }
  }
  return std::nullopt;
}

}  // namespace autgroup
