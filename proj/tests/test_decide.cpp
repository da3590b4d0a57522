#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace autgroup;
using namespace autgroup::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::size_t e_orbit_size(const MealyAutomaton& a, const Word& v) {
  const auto eo = oracle::e_orbits_level(a, v.size());
  return eo.size_of_class_containing(oracle::encode(v, a.alphabet_size()));
}

}  // namespace

TEST(Finite, Example) {
  const auto r = decide_finite(load_fixture("example"));
  EXPECT_FALSE(r.finite);
  ASSERT_TRUE(r.witness);
  EXPECT_FALSE(r.witness->cycle.empty());
}

TEST(Finite, SmallGroups) {
  for (const char* name : {"swap", "identity", "two_generator"}) {
    const auto r = decide_finite(load_fixture(name));
    EXPECT_TRUE(r.finite) << name;
    EXPECT_TRUE(r.trivial_circuit) << name;
  }
}

TEST(Finite, InfiniteBinaryGroups) {
  for (const char* name : {"adding_machine", "grigorchuk"}) {
    const auto a = load_fixture(name);
    EXPECT_FALSE(decide_finite(a).finite) << name;
    // Orbit sizes along 0^w or 1^w keep growing.
    std::size_t best = 0;
    for (const auto& period : {Word{0}, Word{1}}) {
      const auto g = oracle::orbit_growth(a, OmegaWordSpec{{}, period}, 12);
      best = std::max(best, g.back());
    }
    EXPECT_GE(best, 64u) << name;
  }
}

TEST(Finite, Preconditions) {
  EXPECT_EQ(kind_of([] { decide_finite(load_fixture("lamplighter")); }), ErrorKind::NotBounded);
  EXPECT_EQ(kind_of([] {
              decide_finite(parse_automaton("alphabet a b\nstate s\n  a|a -> s\n  b|a -> s\n"));
            }),
            ErrorKind::NotInvertible);
}

TEST(Finite, NonCircuitPartIsReduced) {
  // A transient state in front of the odometer: still infinite.
  const auto a = parse_automaton(
      "alphabet 0 1\nstate t\n  0|0 -> a\n  1|1 -> e\nstate a\n  0|1 -> e\n  1|0 -> a\n"
      "state e identity\n");
  const auto an = analyze_bounded(a);
  EXPECT_FALSE(an.is_circuit);
  EXPECT_FALSE(decide_finite(an).finite);
  EXPECT_EQ(kind_of([&] { decide_level_transitive(an); }), ErrorKind::Unsupported);
  EXPECT_EQ(kind_of([&] { classify_omega_orbit(an, {{}, Word{0}}); }), ErrorKind::Unsupported);
}

TEST(Transitive, Examples) {
  EXPECT_FALSE(decide_level_transitive(load_fixture("example")));
  EXPECT_TRUE(decide_level_transitive(load_fixture("example_abc")));
  EXPECT_TRUE(decide_level_transitive(load_fixture("adding_machine")));
  EXPECT_FALSE(decide_level_transitive(load_fixture("identity")));
}

TEST(Transitive, AgreesWithSingleOrbit) {
  for (const char* name : {"example", "example_abc", "adding_machine", "grigorchuk"}) {
    const auto a = load_fixture(name);
    const std::size_t top = a.alphabet_size() == 2 ? 12 : 8;
    bool single = true;
    for (std::size_t n = 0; n <= top; ++n) single &= oracle::orbits_level(a, n).num_classes() == 1;
    EXPECT_EQ(decide_level_transitive(a), single) << name;
  }
}

TEST(Orbit, ExamplePeriodA) {
  const auto a = load_fixture("example");
  const OmegaWordSpec w{{}, word(a, "a")};
  const auto v = classify_omega_orbit(a, w);
  EXPECT_FALSE(v.finite);
  EXPECT_GT(v.cycle_accepting_edges, 0u);
  const auto g = oracle::orbit_growth(a, w, 8);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_GT(g[n], g[n - 1]);
}

TEST(Orbit, ExamplePeriodD) {
  const auto a = load_fixture("example");
  const OmegaWordSpec w{{}, word(a, "d")};
  const auto v = classify_omega_orbit(a, w);
  EXPECT_TRUE(v.finite);
  const auto g = oracle::orbit_growth(a, w, 8);
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(g[n], g[2]);
}

TEST(Orbit, LassoShape) {
  const auto a = load_fixture("example");
  const OmegaWordSpec w{word(a, "bd"), word(a, "ca")};
  const auto v = classify_omega_orbit(a, w);
  const auto an = analyze_bounded(a);
  const auto& r = *an.r;
  const auto s = run(r, v.lasso.stem).final_state;
  Word loop = v.lasso.stem;
  loop.insert(loop.end(), v.lasso.cycle.begin(), v.lasso.cycle.end());
  EXPECT_EQ(run(r, loop).final_state, s);
  EXPECT_EQ(v.lasso.cycle.size() % 2, 0u);
}

TEST(Orbit, AllShortPeriodsAgreeWithGrowth) {
  // Finite iff the orbit sizes stop growing; checked on short lassos.
  for (const char* name : {"example", "example_abc", "adding_machine", "grigorchuk"}) {
    const auto a = load_fixture(name);
    const std::size_t k = a.alphabet_size();
    const std::size_t top = k == 2 ? 12 : 8;
    for (std::size_t pl = 0; pl <= 1; ++pl) {
      for (const auto& pre : all_words(k, pl)) {
        for (std::size_t len = 1; len <= 2; ++len) {
          for (const auto& per : all_words(k, len)) {
            const OmegaWordSpec w{pre, per};
            const auto v = classify_omega_orbit(a, w);
            const auto g = oracle::orbit_growth(a, w, top);
            const bool growing = g[top] > g[top / 2];
            EXPECT_EQ(v.finite, !growing)
                << name << " " << a.alphabet().render(pre) << "|" << a.alphabet().render(per);
          }
        }
      }
    }
  }
}

TEST(Orbit, IdentityWithExtraGenerator) {
  const auto a = parse_automaton("alphabet 0 1\nstate f identity\nstate e identity\n");
  EXPECT_TRUE(classify_omega_orbit(a, {{}, Word{1}}).finite);
}

TEST(Orbit, EmptyPeriod) {
  const auto a = load_fixture("example");
  EXPECT_EQ(kind_of([&] { classify_omega_orbit(a, {{}, {}}); }), ErrorKind::Domain);
}

TEST(PostCriticalClass, ExampleExamples) {
  const auto a = load_fixture("example");
  const auto an = analyze_bounded(a);
  const auto num = example_numbering(a);
  for (int n : {12, 6}) {
    const auto& p = num.at(n);
    EXPECT_EQ(classify_postcritical(an, p), PostCriticalClass::Unbounded) << n;
    EXPECT_GT(e_orbit_size(a, p.suffix(8)), e_orbit_size(a, p.suffix(5))) << n;
  }
  EXPECT_EQ(kind_of([&] { classify_postcritical(an, ev(a, "(c)^-w")); }), ErrorKind::Domain);
}

TEST(PostCriticalClass, AddingMachine) {
  const auto a = load_fixture("adding_machine");
  const auto p = ev(a, "(1)^-w");
  EXPECT_EQ(classify_postcritical(a, p), PostCriticalClass::Unbounded);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(e_orbit_size(a, p.suffix(n)), 1u << n);
}

TEST(PostCriticalClass, AgreesWithEOrbitGrowth) {
  for (const char* name : {"example", "example_abc", "grigorchuk"}) {
    const auto a = load_fixture(name);
    const auto an = analyze_bounded(a);
    const std::size_t top = a.alphabet_size() == 2 ? 12 : 8;
    for (const auto& p : an.post_critical.elements) {
      const bool grows = e_orbit_size(a, p.suffix(top)) > e_orbit_size(a, p.suffix(top - 2));
      EXPECT_EQ(classify_postcritical(an, p) == PostCriticalClass::Unbounded, grows)
          << name << " " << p.render(a.alphabet());
    }
  }
}
