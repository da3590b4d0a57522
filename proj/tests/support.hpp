#pragma once

#include <autgroup/autgroup.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace autgroup::testing {

inline std::string fixture(const std::string& name) {
  return std::string(AUTGROUP_FIXTURE_DIR) + "/" + name;
}

inline MealyAutomaton load_fixture(const std::string& name) {
  return load_automaton(fixture(name + ".aut"));
}

inline Word word(const MealyAutomaton& a, std::string_view text) {
  return a.alphabet().parse_word(text);
}

inline EvPeriodicWord ev(const MealyAutomaton& a, std::string_view text) {
  auto p = parse_ev_periodic(text, a.alphabet());
  if (!p) throw std::runtime_error("bad word in test: " + std::string(text));
  return *p;
}

/// Example numbering of the worked example: number -> word, read from the
/// alias fixture.
inline std::map<int, EvPeriodicWord> example_numbering(const MealyAutomaton& a) {
  std::ifstream in(fixture("example.alias"));
  std::map<int, EvPeriodicWord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int n;
    ls >> n;
    std::string rest;
    std::getline(ls, rest);
    out.emplace(n, ev(a, rest));
  }
  return out;
}

/// Maps the worked example's numbers to indices of `elements`.
class ExampleIndex {
 public:
  ExampleIndex(const MealyAutomaton& a, const std::vector<EvPeriodicWord>& elements) {
    for (const auto& [n, w] : example_numbering(a)) {
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == w) {
          to_index_[n] = i;
          to_number_[i] = n;
        }
      }
    }
  }

  std::size_t operator()(int n) const { return to_index_.at(n); }
  int number(std::size_t i) const { return to_number_.at(i); }

  std::set<int> numbers(const std::vector<std::size_t>& indices) const {
    std::set<int> out;
    for (auto i : indices) out.insert(number(i));
    return out;
  }

  std::set<std::set<int>> blocks(const Partition& p) const {
    std::set<std::set<int>> out;
    for (const auto& b : p.blocks()) out.insert(numbers(b));
    return out;
  }

 private:
  std::map<int, std::size_t> to_index_;
  std::map<std::size_t, int> to_number_;
};

/// Direct simulation of one state on a word, independent of `act`.
inline Word apply(const MealyAutomaton& a, StateId s, const Word& v) {
  Word out;
  for (Letter x : v) {
    out.push_back(a.output(s, x));
    s = a.target(s, x);
  }
  return out;
}

inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (Letter x = 0; x < k; ++x) {
        auto v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// True iff s and t agree on every word of length <= n.
inline bool agree_up_to(const MealyAutomaton& a, StateId s, const MealyAutomaton& b, StateId t,
                        std::size_t n) {
  for (std::size_t m = 0; m <= n; ++m) {
    for (const auto& w : all_words(a.alphabet_size(), m)) {
      if (apply(a, s, w) != apply(b, t, w)) return false;
    }
  }
  return true;
}

}  // namespace autgroup::testing
