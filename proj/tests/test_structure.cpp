#include <gtest/gtest.h>

#include <deque>

#include "support.hpp"

using namespace autgroup;
using namespace autgroup::testing;

namespace {

std::set<std::string> state_names(const MealyAutomaton& a) {
  return {a.names().begin(), a.names().end()};
}

// States lying on a cycle, found by searching from each state for itself.
std::set<std::string> circuit_oracle(const MealyAutomaton& a) {
  const std::size_t n = a.num_states();
  auto reach = [&](StateId from) {
    std::vector<bool> seen(n, false);
    std::deque<StateId> q;
    for (Letter x = 0; x < a.alphabet_size(); ++x) q.push_back(a.target(from, x));
    while (!q.empty()) {
      auto s = q.front();
      q.pop_front();
      if (seen[s]) continue;
      seen[s] = true;
      for (Letter x = 0; x < a.alphabet_size(); ++x) q.push_back(a.target(s, x));
    }
    return seen;
  };
  std::set<std::string> out;
  for (StateId s = 0; s < n; ++s) {
    if (!reach(s)[s]) continue;
    out.insert(a.name(s));
    const auto r = reach(s);
    for (StateId t = 0; t < n; ++t) {
      if (r[t]) out.insert(a.name(t));
    }
  }
  return out;
}

// States s with s(p_n) = q_n and s|p_n = t, for the length-n suffixes.
bool long_path_exists(const MealyAutomaton& a, const EvPeriodicWord& p, const EvPeriodicWord& q,
                      StateId t, std::size_t n) {
  const auto pn = p.suffix(n);
  const auto qn = q.suffix(n);
  for (StateId s = 0; s < a.num_states(); ++s) {
    const auto r = act(a, s, pn);
    if (r.output == qn && r.section == t) return true;
  }
  return false;
}

}  // namespace

TEST(EvPeriodic, Canonical) {
  const Word ab{0, 1};
  const Word a1{0};
  const auto w = EvPeriodicWord::make(ab, a1);
  EXPECT_EQ(w.period(), (Word{1, 0}));
  EXPECT_TRUE(w.preperiod().empty());
  EXPECT_EQ(EvPeriodicWord::make(Word{0, 0}), EvPeriodicWord::make(Word{0}));
  EXPECT_EQ(EvPeriodicWord::make(Word{0}, Word{0, 0, 1}), EvPeriodicWord::make(Word{0}, Word{1}));
  EXPECT_EQ(EvPeriodicWord::make(Word{0, 1, 0, 1}, Word{0, 1}), EvPeriodicWord::make(Word{0, 1}));
  EXPECT_THROW(EvPeriodicWord::make(Word{}), Error);
}

TEST(EvPeriodic, SuffixAndShift) {
  const auto a = load_fixture("example");
  const auto p = ev(a, "(a)^-w ba");
  EXPECT_EQ(a.alphabet().render(p.suffix(1)), "a");
  EXPECT_EQ(a.alphabet().render(p.suffix(4)), "aaba");
  EXPECT_TRUE(p.suffix(0).empty());
  EXPECT_EQ(a.alphabet().render(ev(a, "(b)^-w").suffix(3)), "bbb");
  EXPECT_EQ(p.shift(), ev(a, "(a)^-w b"));
  EXPECT_EQ(ev(a, "(ab)^-w").shift(), ev(a, "(ba)^-w"));
  EXPECT_EQ(p.last_letter(), a.alphabet().index("a"));
}

TEST(EvPeriodic, RenderParse) {
  const auto a = load_fixture("example");
  for (const char* s : {"(a)^-w ba", "(b)^-w", "(ab)^-w cd"}) {
    EXPECT_EQ(ev(a, s).render(a.alphabet()), s);
  }
  EXPECT_FALSE(parse_ev_periodic("ab", a.alphabet()));
  EXPECT_FALSE(parse_ev_periodic("()^-w a", a.alphabet()));
  EXPECT_FALSE(parse_ev_periodic("(z)^-w", a.alphabet()));
}

TEST(Circuit, MatchesCycleSearch) {
  for (const char* name : {"example", "adding_machine", "swap", "grigorchuk", "two_generator"}) {
    const auto a = minimize(load_fixture(name));
    EXPECT_EQ(state_names(circuit_part(a)), circuit_oracle(a)) << name;
  }
  EXPECT_EQ(state_names(circuit_part(load_fixture("example"))).size(), 7u);
  EXPECT_EQ(state_names(circuit_part(load_fixture("swap"))), (std::set<std::string>{"e"}));
  EXPECT_EQ(state_names(circuit_part(load_fixture("adding_machine"))),
            (std::set<std::string>{"a", "e"}));
}

TEST(Bounded, Examples) {
  EXPECT_TRUE(is_bounded(load_fixture("example")));
  EXPECT_TRUE(is_bounded(load_fixture("identity")));
  EXPECT_TRUE(is_bounded(load_fixture("grigorchuk")));
  EXPECT_FALSE(is_bounded(load_fixture("lamplighter")));
  EXPECT_THROW(is_bounded(parse_automaton("alphabet a b\nstate s\n  a|a -> s\n  b|a -> s\n")),
               Error);
}

TEST(Bounded, SectionCountsAgree) {
  // Bounded: the count of words with a non-trivial section stays below the
  // number of states.
  const auto p = load_fixture("example");
  for (StateId s = 0; s < p.num_states(); ++s) {
    for (std::size_t n = 0; n <= 10; ++n) {
      EXPECT_LE(oracle::nontrivial_section_count(p, s, n), p.num_states()) << p.name(s);
    }
  }
  // Not bounded: the count keeps growing.
  const auto l = load_fixture("lamplighter");
  std::size_t prev = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto c = oracle::nontrivial_section_count(l, l.state("p"), n);
    EXPECT_GT(c, prev);
    prev = c;
  }
}

TEST(PostCritical, ExampleSet) {
  const auto a = load_fixture("example");
  const auto pcs = post_critical_set(a);
  std::vector<EvPeriodicWord> want;
  for (const char* s : {"(a)^-w ba", "(a)^-w bc", "(a)^-w da", "(a)^-w dc", "(a)^-w b",
                        "(a)^-w d", "(a)^-w", "(b)^-w ac", "(b)^-w aa", "(b)^-w dc",
                        "(b)^-w da", "(b)^-w a", "(b)^-w d", "(b)^-w"}) {
    want.push_back(ev(a, s));
  }
  std::sort(want.begin(), want.end());
  EXPECT_EQ(pcs, want);
}

TEST(PostCritical, SmallCases) {
  const auto am = load_fixture("adding_machine");
  EXPECT_EQ(post_critical_set(am), (std::vector<EvPeriodicWord>{ev(am, "(0)^-w"), ev(am, "(1)^-w")}));
  EXPECT_TRUE(post_critical_set(load_fixture("swap")).empty());
  EXPECT_TRUE(post_critical_set(load_fixture("identity")).empty());
  EXPECT_THROW(post_critical_set(load_fixture("lamplighter")), Error);
}

TEST(PostCritical, ShiftClosed) {
  for (const char* name : {"example", "example_abc", "adding_machine", "grigorchuk"}) {
    const auto d = analyze_post_critical(load_fixture(name));
    for (const auto& p : d.elements) EXPECT_TRUE(d.index_of(p.shift())) << name;
    EXPECT_EQ(d.embedding().size(), d.size());
  }
}

TEST(PostCritical, SuffixMembershipMatchesSections) {
  for (const char* name : {"example", "adding_machine", "grigorchuk", "example_abc"}) {
    const auto a = load_fixture(name);
    const auto pcs = post_critical_set(a);
    const auto pm = circuit_part(union_with_inverse(a));
    const std::size_t k = a.alphabet_size();
    const std::size_t top = k == 2 ? 8 : 5;
    for (std::size_t n = 0; n <= top; ++n) {
      std::set<Word> suffixes;
      for (const auto& p : pcs) suffixes.insert(p.suffix(n));
      for (const auto& v : all_words(k, n)) {
        bool nontrivial = false;
        for (StateId s = 0; s < pm.num_states(); ++s) {
          nontrivial |= !pm.is_trivial(act(pm, s, v).section);
        }
        EXPECT_EQ(suffixes.count(v) == 1, nontrivial) << name << " " << a.alphabet().render(v);
      }
    }
  }
}

TEST(PathPairs, DomainChecks) {
  const auto a = load_fixture("example");
  EXPECT_THROW(path_pairs(a, a.state("e")), Error);
  EXPECT_THROW(path_pairs(a, 99), Error);
  for (const auto& pp : path_pairs(a, a.state("1"))) {
    EXPECT_EQ(pp.end, a.state("1"));
    EXPECT_EQ(pp.input_period.size(), pp.output_period.size());
    EXPECT_EQ(pp.input_tail.size(), pp.output_tail.size());
  }
}

TEST(MergePairs, ExampleE) {
  const auto a = load_fixture("example");
  const auto d = analyze_post_critical(a);
  const ExampleIndex idx(a, d.elements);
  std::set<std::set<int>> got;
  for (const auto& e : d.e_pairs) got.insert({idx.number(e.first), idx.number(e.second)});
  const std::set<std::set<int>> want{{1, 8}, {2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}};
  EXPECT_EQ(got, want);
}

TEST(MergePairs, ExampleEeContainsListedPairs) {
  const auto a = load_fixture("example");
  const auto d = analyze_post_critical(a);
  const ExampleIndex idx(a, d.elements);
  auto has = [&](int p, const char* x, int q, const char* y) {
    const auto c = CellPair::make({idx(p), a.alphabet().index(x)}, {idx(q), a.alphabet().index(y)});
    return std::find(d.ee_pairs.begin(), d.ee_pairs.end(), c) != d.ee_pairs.end();
  };
  EXPECT_TRUE(has(1, "a", 8, "b"));
  EXPECT_TRUE(has(12, "b", 12, "c"));
  EXPECT_TRUE(has(12, "c", 12, "b"));
  EXPECT_TRUE(has(6, "d", 13, "d"));
  EXPECT_TRUE(has(14, "d", 14, "d"));
  EXPECT_TRUE(has(12, "a", 12, "a"));
  // Path 3^w -d|d-> 2 -a|c-> 1 -a|b-> e.
  EXPECT_TRUE(has(3, "a", 10, "b"));
  EXPECT_TRUE(has(4, "c", 11, "c"));
}

TEST(MergePairs, MatchLongFinitePaths) {
  // A pair is in E^e (E) iff arbitrarily long finite paths carry its labels
  // into a state with an edge to e (a non-trivial state).
  for (const char* name : {"example", "adding_machine", "grigorchuk", "example_abc"}) {
    const auto a = load_fixture(name);
    const auto d = analyze_post_critical(a);
    const auto e = *find_identity_state(a);
    const std::set<CellPair> ee(d.ee_pairs.begin(), d.ee_pairs.end());
    const std::set<IndexPair> epairs(d.e_pairs.begin(), d.e_pairs.end());
    std::set<CellPair> ee_oracle;
    std::set<IndexPair> e_oracle;
    for (std::size_t p = 0; p < d.size(); ++p) {
      for (std::size_t q = 0; q < d.size(); ++q) {
        for (StateId t = 0; t < a.num_states(); ++t) {
          if (t == e || !long_path_exists(a, d.elements[p], d.elements[q], t, 16)) continue;
          if (p != q) e_oracle.insert(IndexPair::make(p, q));
          for (Letter x = 0; x < a.alphabet_size(); ++x) {
            const auto& tr = a.transition(t, x);
            if (tr.to == e) ee_oracle.insert(CellPair::make({p, x}, {q, tr.out}));
          }
        }
      }
    }
    EXPECT_EQ(ee, ee_oracle) << name;
    EXPECT_EQ(epairs, e_oracle) << name;
  }
}

TEST(MergePairs, SmallCases) {
  const auto am = load_fixture("adding_machine");
  const auto d = analyze_post_critical(am);
  ASSERT_EQ(d.size(), 2u);
  const auto zero = *d.index_of(ev(am, "(0)^-w"));
  const auto one = *d.index_of(ev(am, "(1)^-w"));
  EXPECT_EQ(d.ee_pairs, (std::vector<CellPair>{CellPair::make({one, 0}, {zero, 1})}));
  EXPECT_EQ(d.e_pairs, (std::vector<IndexPair>{IndexPair::make(0, 1)}));
  const auto id = analyze_post_critical(load_fixture("identity"));
  EXPECT_TRUE(id.ee_pairs.empty());
  EXPECT_TRUE(id.e_pairs.empty());
}
