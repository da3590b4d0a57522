#include <gtest/gtest.h>

#include "support.hpp"

using namespace autgroup;
using namespace autgroup::testing;

namespace {

struct Example {
  MealyAutomaton a = load_fixture("example");
  BoundedAnalysis an = analyze_bounded(a);
  ExampleIndex idx{a, an.post_critical.elements};
  const Recognizer& re = *an.re;
  const Recognizer& r = *an.r;

  // State of `m` whose part, in example numbering, is `part` at partition i.
  std::size_t find(const Recognizer& m, const std::set<int>& part, std::size_t i) const {
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      const auto& st = m.state(s);
      if (!st.sink && st.partition == i && idx.numbers(st.part) == part) return s;
    }
    ADD_FAILURE() << "no such state";
    return m.sink();
  }
  Letter x(const char* l) const { return a.alphabet().index(l); }
};

std::set<int> range(std::initializer_list<int> skip) {
  std::set<int> out;
  for (int i = 1; i <= 14; ++i) out.insert(i);
  for (int s : skip) out.erase(s);
  return out;
}

}  // namespace

TEST(Re, ExampleStates) {
  Example p;
  EXPECT_EQ(p.re.num_states(), 8u);
  EXPECT_TRUE(p.re.state(p.re.sink()).sink);
  EXPECT_EQ(p.idx.numbers(p.re.state(p.re.initial()).part), range({}));
  std::size_t accepting = 0;
  for (const auto& st : p.re.states()) accepting += st.accepting;
  EXPECT_EQ(accepting, 2u);
  EXPECT_TRUE(p.re.state(p.find(p.re, range({6, 13}), 1)).accepting);
  EXPECT_TRUE(p.re.state(p.find(p.re, {1, 2, 5, 7, 8, 9, 12, 14}, 2)).accepting);
}

TEST(Re, ExampleEdges) {
  Example p;
  const auto init = p.re.initial();
  const auto P = p.find(p.re, range({6, 13}), 1);
  const auto Q = p.find(p.re, {6, 13}, 1);
  const auto P2 = p.find(p.re, {1, 2, 5, 7, 8, 9, 12, 14}, 2);
  const auto Q2 = p.find(p.re, {6, 13}, 2);
  const auto R2 = p.find(p.re, {3, 11}, 2);
  const auto S2 = p.find(p.re, {4, 10}, 2);
  for (const char* l : {"a", "b", "c"}) {
    EXPECT_EQ(p.re.next(init, p.x(l)), P);
    EXPECT_TRUE(p.re.edge_accepting(init, p.x(l)));
    EXPECT_EQ(p.re.next(P, p.x(l)), P2);
    EXPECT_EQ(p.re.next(P2, p.x(l)), P2);
    EXPECT_TRUE(p.re.edge_accepting(P2, p.x(l)));
  }
  EXPECT_EQ(p.re.next(init, p.x("d")), Q);
  EXPECT_EQ(p.re.next(P, p.x("d")), Q2);
  EXPECT_EQ(p.re.next(P2, p.x("d")), Q2);
  EXPECT_FALSE(p.re.edge_accepting(P2, p.x("d")));
  // Q c is the cell holding 4 and 10.
  for (auto q : {Q, Q2}) {
    EXPECT_EQ(p.re.next(q, p.x("a")), R2);
    EXPECT_EQ(p.re.next(q, p.x("c")), S2);
    EXPECT_EQ(p.re.next(q, p.x("b")), p.re.sink());
    EXPECT_EQ(p.re.next(q, p.x("d")), p.re.sink());
  }
  for (Letter x = 0; x < 4; ++x) {
    EXPECT_EQ(p.re.next(R2, x), p.re.sink());
    EXPECT_EQ(p.re.next(S2, x), p.re.sink());
    EXPECT_EQ(p.re.next(p.re.sink(), x), p.re.sink());
    EXPECT_FALSE(p.re.edge_accepting(p.re.sink(), x));
  }
}

TEST(Re, StateMarksFollowInEdges) {
  for (const char* name : {"example", "example_abc", "adding_machine", "grigorchuk"}) {
    const auto an = analyze_bounded(load_fixture(name));
    const auto& m = *an.re;
    std::vector<bool> in(m.num_states(), false);
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      for (Letter x = 0; x < m.alphabet().size(); ++x) {
        if (m.edge_accepting(s, x)) in[m.next(s, x)] = true;
      }
    }
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      EXPECT_EQ(m.state(s).accepting, in[s]) << name << " " << s;
    }
  }
}

TEST(Re, AddingMachine) {
  const auto an = analyze_bounded(load_fixture("adding_machine"));
  const auto& m = *an.re;
  EXPECT_EQ(m.num_states(), 2u);
  EXPECT_EQ(m.next(0, 0), 0u);
  EXPECT_EQ(m.next(0, 1), 0u);
  EXPECT_TRUE(m.edge_accepting(0, 0));
  EXPECT_TRUE(m.edge_accepting(0, 1));
  EXPECT_TRUE(m.state(0).accepting);
}

TEST(Re, NoMergePairsNoAcceptance) {
  const auto a = load_fixture("adding_machine");
  auto d = analyze_post_critical(a);
  const auto emb = d.embedding();
  const auto chain = stabilize(std::span<const CellPair>{}, emb, 2);
  const auto m = build_re(chain, a.alphabet());
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    EXPECT_FALSE(m.state(s).accepting);
    for (Letter x = 0; x < 2; ++x) EXPECT_FALSE(m.edge_accepting(s, x));
  }
}

TEST(Run, ExampleWords) {
  Example p;
  const auto r = run(p.re, word(p.a, "ad"));
  ASSERT_EQ(r.trace.size(), 3u);
  EXPECT_EQ(r.trace[1], p.find(p.re, range({6, 13}), 1));
  EXPECT_EQ(p.idx.numbers(p.re.state(r.final_state).part), (std::set<int>{6, 13}));
  EXPECT_EQ(r.final_state, p.find(p.re, {6, 13}, 2));
  EXPECT_EQ(r.accepting_edges, 1u);
  EXPECT_EQ(run(p.re, word(p.a, "dd")).final_state, p.re.sink());
  const auto empty = run(p.re, Word{});
  EXPECT_EQ(empty.final_state, p.re.initial());
  EXPECT_EQ(empty.accepting_edges, 0u);
}

TEST(R, ExampleRelabeling) {
  Example p;
  ASSERT_EQ(p.r.num_states(), p.re.num_states());
  const auto R2 = p.find(p.r, {3, 11}, 2);
  const auto S2 = p.find(p.r, {4, 10}, 2);
  EXPECT_EQ(p.idx.numbers(p.r.state(R2).label), (std::set<int>{3, 4, 10, 11}));
  EXPECT_EQ(p.r.state(R2).label, p.r.state(S2).label);
  EXPECT_FALSE(p.r.state(R2).accepting);
  EXPECT_FALSE(p.r.state(S2).accepting);
  for (std::size_t s = 0; s < p.r.num_states(); ++s) {
    EXPECT_EQ(p.r.state(s).accepting, p.re.state(s).accepting) << s;
    for (Letter x = 0; x < 4; ++x) EXPECT_EQ(p.r.next(s, x), p.re.next(s, x));
  }
}

TEST(R, OrbitGrowthMarks) {
  // The orbit of d is {d}, the orbit of da is {da, dc}.
  Example p;
  const auto Q = p.find(p.r, {6, 13}, 1);
  EXPECT_TRUE(p.r.edge_accepting(Q, p.x("a")));
  EXPECT_TRUE(p.r.edge_accepting(Q, p.x("c")));
  EXPECT_FALSE(p.re.edge_accepting(Q, p.x("a")));
}

TEST(R, TrivialEKeepsRe) {
  const auto a = load_fixture("grigorchuk");
  const auto an = analyze_bounded(a);
  EXPECT_TRUE(an.post_critical.e_pairs.empty());
  for (std::size_t s = 0; s < an.re->num_states(); ++s) {
    EXPECT_EQ(an.r->state(s).label, an.re->state(s).label);
    EXPECT_EQ(an.r->state(s).accepting, an.re->state(s).accepting);
  }
}

TEST(Lasso, ExampleWitnessReplays) {
  Example p;
  const auto l = find_accepting_lasso(p.re);
  ASSERT_TRUE(l);
  const auto base = run(p.re, l->stem).final_state;
  Word both = l->stem;
  both.insert(both.end(), l->cycle.begin(), l->cycle.end());
  const auto after = run(p.re, both);
  EXPECT_EQ(after.final_state, base);
  EXPECT_GT(after.accepting_edges, run(p.re, l->stem).accepting_edges);
}

TEST(Export, ExampleDot) {
  Example p;
  const auto dot = export_machine(p.re, "dot");
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count(" [label=\"{") + count("[label=\"⊥\""), 8u);
  EXPECT_EQ(count("doublecircle"), 2u);
  EXPECT_EQ(export_dot(p.re, DotOptions{false, {}}).find("⊥"), std::string::npos);
  EXPECT_EQ(export_machine(p.re, "dot"), export_machine(p.re, "dot"));
}

TEST(Export, AddingMachineDot) {
  const auto an = analyze_bounded(load_fixture("adding_machine"));
  const auto dot = export_dot(*an.re, {false, {}});
  EXPECT_NE(dot.find("s0 -> s0 [label=\"0,1\", style=bold]"), std::string::npos);
}

TEST(Export, Errors) {
  Example p;
  EXPECT_THROW(export_machine(p.re, "svg"), Error);
  EXPECT_THROW(export_machine(Recognizer{}, "dot"), Error);
  EXPECT_THROW(run(Recognizer{}, Word{}), Error);
}

TEST(Recognizer, FlippedEdge) {
  Example p;
  const auto f = p.re.with_flipped_edge(0, 0);
  EXPECT_NE(f.edge_accepting(0, 0), p.re.edge_accepting(0, 0));
  EXPECT_FALSE(f == p.re);
}
