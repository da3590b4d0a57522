#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autgroup/alphabet.hpp"

namespace autgroup {

using StateId = std::uint32_t;

struct Transition {
  Letter out;
  StateId to;

  bool operator==(const Transition&) const = default;
};

/// Complete deterministic transducer with identical input and output
/// alphabets. Values are immutable once constructed.
class MealyAutomaton {
 public:
  MealyAutomaton() = default;

  /// `table` is row-major: entry `s * |X| + x` is the image of (s, x).
  /// Throws Error(Validation) if the table is not total, a target is out of
  /// range, names repeat, or `trivial` does not act as the identity.
  MealyAutomaton(Alphabet alphabet, std::vector<std::string> names,
                 std::vector<Transition> table,
                 std::optional<StateId> trivial = std::nullopt);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }

  const std::string& name(StateId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws Error(Domain) for an unknown name.
  StateId state(std::string_view name) const;

  const Transition& transition(StateId s, Letter x) const {
    return table_[static_cast<std::size_t>(s) * alphabet_.size() + x];
  }
  Letter output(StateId s, Letter x) const { return transition(s, x).out; }
  StateId target(StateId s, Letter x) const { return transition(s, x).to; }
  const std::vector<Transition>& table() const noexcept { return table_; }

  std::optional<StateId> trivial() const noexcept { return trivial_; }
  bool is_trivial(StateId s) const noexcept { return trivial_ && *trivial_ == s; }

  /// True iff every letter is a self-loop x|x at s.
  bool is_identity_loop(StateId s) const;

  bool operator==(const MealyAutomaton&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<Transition> table_;
  std::optional<StateId> trivial_;
};

struct ActResult {
  Word output;
  StateId section;
};

/// Runs state s on v; the section is the state reached after reading v.
ActResult act(const MealyAutomaton& a, StateId s, std::span<const Letter> v);

bool is_invertible(const MealyAutomaton& a);

/// State s^-1 has y|x -> t^-1 for every s: x|y -> t. The trivial state keeps
/// its name, and inverting a name ending in "^-1" strips the suffix.
MealyAutomaton invert(const MealyAutomaton& a);

/// Collapses behaviourally equivalent states (Moore partition refinement).
/// Classes are ordered by their first member, named by their
/// lexicographically least member, and the identity class is marked trivial.
MealyAutomaton minimize(const MealyAutomaton& a);

/// Adds a fresh identity state if none of the states is one.
MealyAutomaton ensure_trivial_state(const MealyAutomaton& a);

/// Product automaton; state (s, t) acts as s after t.
MealyAutomaton compose(const MealyAutomaton& a, const MealyAutomaton& b);

/// States of A together with their inverses, minimized.
MealyAutomaton union_with_inverse(const MealyAutomaton& a);

/// Restriction to `keep`, which must be closed under transitions.
MealyAutomaton subautomaton(const MealyAutomaton& a, std::span<const StateId> keep);

/// Shortest word on which s and t produce different outputs, if any.
std::optional<Word> distinguishing_word(const MealyAutomaton& a, StateId s, StateId t);

/// The state acting as the identity, if some identity-loop state exists.
std::optional<StateId> find_identity_state(const MealyAutomaton& a);

}  // namespace autgroup
