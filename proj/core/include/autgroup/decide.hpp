#pragma once

#include <optional>
#include <vector>

#include "autgroup/recognizer.hpp"

namespace autgroup {

/// Everything the deciders need, computed once from an input automaton.
struct BoundedAnalysis {
  MealyAutomaton input;
  MealyAutomaton minimal;     // minimized, with a trivial state
  MealyAutomaton circuit;     // minimized circuit part of `minimal`
  bool is_circuit = false;    // minimal has no states outside its circuit part
  PostCriticalData post_critical;
  std::optional<PartitionChain> chain;
  std::optional<Recognizer> re;
  std::optional<Recognizer> r;

  bool has_machines() const noexcept { return re.has_value(); }
};

/// Throws Error(NotInvertible) or Error(NotBounded).
BoundedAnalysis analyze_bounded(const MealyAutomaton& a);

struct FinitenessReport {
  bool finite = false;
  bool trivial_circuit = false;     // empty post-critical set
  std::optional<Lasso> witness;
};

FinitenessReport decide_finite(const BoundedAnalysis& analysis);
FinitenessReport decide_finite(const MealyAutomaton& a);

/// Throws Error(Unsupported) when the automaton is not its own circuit part.
bool decide_level_transitive(const BoundedAnalysis& analysis);
bool decide_level_transitive(const MealyAutomaton& a);

struct OrbitVerdict {
  bool finite = true;
  /// Run shape u v^i . (v^k)^omega with u v^i the stem and v^k the cycle.
  Lasso lasso;
  /// Infinite orbits: number of accepting edges on the cycle.
  std::size_t cycle_accepting_edges = 0;
  /// Finite orbits: position after which no accepting edge is traversed.
  std::size_t last_accepting_step = 0;
};

/// Throws Error(Unsupported) when the automaton is not its own circuit part.
OrbitVerdict classify_omega_orbit(const BoundedAnalysis& analysis, const OmegaWordSpec& w);
OrbitVerdict classify_omega_orbit(const MealyAutomaton& a, const OmegaWordSpec& w);

enum class PostCriticalClass { Bounded, Unbounded };

/// Throws Error(Domain) when p is not post-critical.
PostCriticalClass classify_postcritical(const BoundedAnalysis& analysis, const EvPeriodicWord& p);
PostCriticalClass classify_postcritical(const MealyAutomaton& a, const EvPeriodicWord& p);

}  // namespace autgroup
