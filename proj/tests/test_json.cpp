#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace autgroup;
using namespace autgroup::testing;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(AutomatonJson, RoundTripsFixtures) {
  for (const char* name : {"example", "swap", "identity", "grigorchuk", "lamplighter"}) {
    const auto a = load_fixture(name);
    const auto j = automaton_to_json(a);
    EXPECT_EQ(automaton_from_json(j), a) << name;
    EXPECT_EQ(automaton_from_json(json::parse(j.dump())), a) << name;
  }
}

TEST(AutomatonJson, Layout) {
  const auto j = automaton_to_json(load_fixture("swap"));
  EXPECT_EQ(j["alphabet"], json::array({"0", "1"}));
  EXPECT_EQ(j["states"][0]["name"], "s");
  EXPECT_EQ(j["states"][0]["transitions"][0], json({{"in", "0"}, {"out", "1"}, {"to", "e"}}));
  EXPECT_EQ(j["trivial"], "e");
}

TEST(AutomatonJson, SchemaErrors) {
  const auto good = automaton_to_json(load_fixture("swap"));
  auto missing = good;
  missing.erase("states");
  EXPECT_EQ(kind_of([&] { automaton_from_json(missing); }), ErrorKind::Validation);
  auto partial = good;
  partial["states"][0]["transitions"].erase(1);
  EXPECT_EQ(kind_of([&] { automaton_from_json(partial); }), ErrorKind::Validation);
  auto bad_target = good;
  bad_target["states"][0]["transitions"][0]["to"] = "nowhere";
  EXPECT_EQ(kind_of([&] { automaton_from_json(bad_target); }), ErrorKind::Validation);
  auto bad_letter = good;
  bad_letter["states"][0]["transitions"][0]["in"] = "7";
  EXPECT_EQ(kind_of([&] { automaton_from_json(bad_letter); }), ErrorKind::Validation);
  auto dup = good;
  dup["states"][1]["name"] = "s";
  EXPECT_EQ(kind_of([&] { automaton_from_json(dup); }), ErrorKind::Validation);
  EXPECT_EQ(kind_of([&] { automaton_from_json(json::array()); }), ErrorKind::Validation);
}

TEST(EvPeriodicJson, RoundTrip) {
  const auto a = load_fixture("example");
  for (const auto& p : post_critical_set(a)) {
    EXPECT_EQ(ev_periodic_from_json(ev_periodic_to_json(p, a.alphabet()), a.alphabet()), p);
  }
  EXPECT_EQ(kind_of([&] {
              ev_periodic_from_json(json{{"period", json::array()}, {"preperiod", json::array()}},
                                    a.alphabet());
            }),
            ErrorKind::Validation);
}

TEST(PostCriticalJson, Layout) {
  const auto a = load_fixture("example");
  const auto data = analyze_post_critical(a);
  const auto j = post_critical_to_json(data, a.alphabet());
  EXPECT_EQ(j["elements"].size(), 14u);
  EXPECT_EQ(j["e_pairs"].size(), 7u);
  EXPECT_EQ(j["ee_pairs"].size(), data.ee_pairs.size());
  EXPECT_EQ(j["elements"][0]["index"], 0);
  EXPECT_EQ(j["elements"][0]["word"], data.elements[0].render(a.alphabet()));
}

TEST(ChainJson, Layout) {
  const auto a = load_fixture("example");
  const auto data = analyze_post_critical(a);
  const auto chain = stabilize(data, 4);
  const auto j = chain_to_json(chain, a.alphabet());
  EXPECT_EQ(j["fixpoint"], 2);
  EXPECT_EQ(j["partitions"].size(), 3u);
  EXPECT_EQ(j["steps"].size(), 3u);
  EXPECT_TRUE(j["steps"][2]["merges"].is_array());
}

TEST(RecognizerJson, RoundTrip) {
  for (const char* name : {"example", "example_abc", "adding_machine", "grigorchuk"}) {
    const auto an = analyze_bounded(load_fixture(name));
    for (const auto* m : {&*an.re, &*an.r}) {
      const auto text = recognizer_to_json(*m).dump();
      const auto back = recognizer_from_json(json::parse(text));
      EXPECT_EQ(back, *m) << name;
      EXPECT_EQ(recognizer_to_json(back).dump(), text) << name;
    }
  }
}

TEST(RecognizerJson, SchemaErrors) {
  const auto an = analyze_bounded(load_fixture("example"));
  const auto good = recognizer_to_json(*an.re);
  auto flavor = good;
  flavor["flavor"] = "X";
  EXPECT_EQ(kind_of([&] { recognizer_from_json(flavor); }), ErrorKind::Validation);
  auto partial = good;
  partial["edges"].erase(0);
  EXPECT_EQ(kind_of([&] { recognizer_from_json(partial); }), ErrorKind::Validation);
  auto range = good;
  range["edges"][0]["to"] = 99;
  EXPECT_EQ(kind_of([&] { recognizer_from_json(range); }), ErrorKind::Validation);
  auto acc = good;
  acc["states"][0]["accepting"] = 1;
  EXPECT_EQ(kind_of([&] { recognizer_from_json(acc); }), ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { recognizer_to_json(Recognizer{}); }), ErrorKind::Domain);
}

TEST(Fingerprint, KnownValues) {
  EXPECT_EQ(fingerprint(""), "cbf29ce484222325");
  EXPECT_EQ(fingerprint("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fingerprint("abc").size(), 16u);
  EXPECT_NE(fingerprint("abc"), fingerprint("abd"));
}

TEST(Fingerprint, StableAcrossRuns) {
  const auto a = load_fixture("example");
  const auto first = fingerprint(export_json(*analyze_bounded(a).re));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(fingerprint(export_json(*analyze_bounded(a).re)), first);
}
