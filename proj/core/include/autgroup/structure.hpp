#pragma once

#include <optional>
#include <span>
#include <vector>

#include "autgroup/ev_periodic.hpp"
#include "autgroup/mealy.hpp"

namespace autgroup {

/// Subautomaton spanned by the states lying on a directed cycle (the trivial
/// state's loops included) and everything reachable from them.
MealyAutomaton circuit_part(const MealyAutomaton& a);

/// True iff the cycles of the non-trivial part are pairwise disjoint simple
/// cycles with no directed path between two of them.
/// Throws Error(NotInvertible).
bool is_bounded(const MealyAutomaton& a);

/// Input and output labels of one left-infinite path ending at `end`. Both
/// words are kept in their raw aligned form: same period length and same
/// preperiod length.
struct PathPair {
  Word input_period;
  Word output_period;
  Word input_tail;
  Word output_tail;
  StateId end;

  EvPeriodicWord input() const { return EvPeriodicWord::make(input_period, input_tail); }
  EvPeriodicWord output() const { return EvPeriodicWord::make(output_period, output_tail); }
};

/// Every path pair of a bounded automaton, ordered by cycle, rotation, then
/// depth-first extension order. Throws Error(NotBounded).
std::vector<PathPair> all_path_pairs(const MealyAutomaton& a);

/// Path pairs ending at the non-trivial state t. Throws Error(Domain) when t
/// is trivial or not a state.
std::vector<PathPair> path_pairs(const MealyAutomaton& a, StateId t);

/// Post-critical set: sorted, duplicate-free, shift-closed. Only the marked
/// trivial state counts as trivial, so pass a minimized automaton.
/// Throws Error(NotBounded).
std::vector<EvPeriodicWord> post_critical_set(const MealyAutomaton& a);

/// One element of P x X.
struct CellRef {
  std::size_t index;
  Letter letter;

  auto operator<=>(const CellRef&) const = default;
};

/// Unordered pair {(p,x),(q,y)}; normalized so that first <= second.
struct CellPair {
  CellRef first;
  CellRef second;

  static CellPair make(CellRef a, CellRef b) {
    return b < a ? CellPair{b, a} : CellPair{a, b};
  }
  auto operator<=>(const CellPair&) const = default;
};

/// Unordered pair {p, q} with first < second.
struct IndexPair {
  std::size_t first;
  std::size_t second;

  static IndexPair make(std::size_t a, std::size_t b) {
    return b < a ? IndexPair{b, a} : IndexPair{a, b};
  }
  auto operator<=>(const IndexPair&) const = default;
};

/// Merge pairs from left-infinite paths that end at the trivial state.
/// Degenerate pairs {(p,x),(p,x)} are kept. Throws Error(Internal) if a
/// path label is missing from `elements`.
std::vector<CellPair> compute_ee_pairs(const MealyAutomaton& a,
                                       std::span<const EvPeriodicWord> elements);

/// Pairs {p, q}, p != q, labelling a path that ends at a non-trivial state.
std::vector<IndexPair> compute_e_pairs(const MealyAutomaton& a,
                                       std::span<const EvPeriodicWord> elements);

struct PostCriticalData {
  std::vector<EvPeriodicWord> elements;
  std::vector<CellPair> ee_pairs;
  std::vector<IndexPair> e_pairs;

  bool empty() const noexcept { return elements.empty(); }
  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const EvPeriodicWord& p) const;

  /// Element i written as (shift index, last letter); defined because the
  /// set is shift-closed.
  std::vector<CellRef> embedding() const;
};

/// Post-critical set plus both merge-pair sets, computed on the circuit part.
PostCriticalData analyze_post_critical(const MealyAutomaton& a);

}  // namespace autgroup
