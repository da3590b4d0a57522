#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autgroup/partitions.hpp"

namespace autgroup {

enum class Flavor { Re, R };

const char* to_string(Flavor f) noexcept;

struct RecognizerState {
  std::vector<std::size_t> part;    // block of Pi_partition; empty for the sink
  std::size_t partition = 0;        // index into the chain
  std::vector<std::size_t> label;   // equals part for Re; E-closure for R
  bool accepting = false;
  bool sink = false;

  bool operator==(const RecognizerState&) const = default;
};

/// Deterministic machine over X whose states are (part, partition) pairs
/// plus an absorbing sink. Acceptance lives on edges; state marks are
/// derived from them and kept for display.
class Recognizer {
 public:
  Recognizer() = default;
  Recognizer(Flavor flavor, Alphabet alphabet, std::vector<RecognizerState> states,
             std::size_t initial, std::size_t sink, std::vector<std::size_t> delta,
             std::vector<bool> edge_accepting);

  bool empty() const noexcept { return states_.empty(); }
  Flavor flavor() const noexcept { return flavor_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return states_.size(); }
  const RecognizerState& state(std::size_t id) const { return states_.at(id); }
  const std::vector<RecognizerState>& states() const noexcept { return states_; }
  std::size_t initial() const noexcept { return initial_; }
  std::size_t sink() const noexcept { return sink_; }

  std::size_t next(std::size_t s, Letter x) const { return delta_[s * alphabet_.size() + x]; }
  bool edge_accepting(std::size_t s, Letter x) const {
    return edge_accepting_[s * alphabet_.size() + x];
  }

  /// Copy with the acceptance bit of one edge flipped; used to exercise the
  /// cross-check harness.
  Recognizer with_flipped_edge(std::size_t s, Letter x) const;

  bool operator==(const Recognizer&) const = default;

 private:
  Flavor flavor_ = Flavor::Re;
  Alphabet alphabet_;
  std::vector<RecognizerState> states_;
  std::size_t initial_ = 0;
  std::size_t sink_ = 0;
  std::vector<std::size_t> delta_;
  std::vector<bool> edge_accepting_;
};

/// Machine tracking e-orbits. An edge ((P, Pi_k), x) is accepting iff the
/// Lambda block of cell P x (computed from Pi_k) holds at least two cells and
/// meets P; edges into the sink never accept. Unreachable states are pruned
/// after marking; states are numbered breadth-first, the sink last.
/// Throws Error(EmptyPostCritical) for an empty chain.
Recognizer build_re(const PartitionChain& chain, const Alphabet& alphabet);

/// Same transitions as R^e, states relabeled by the E-closure of their part.
/// An edge accepts iff the cells of the Lambda blocks making up the target
/// label are more than the blocks of the source label, which is exactly
/// when the orbit grows. A relabeled state accepts iff some accepting R^e
/// state of the same partition lies inside its label.
Recognizer build_r(const Recognizer& re, const PartitionChain& chain,
                   std::span<const IndexPair> e);

struct RunResult {
  std::size_t final_state = 0;
  std::size_t accepting_edges = 0;
  std::vector<std::size_t> trace;   // initial state first
};

RunResult run(const Recognizer& m, std::span<const Letter> v);

/// Stem followed by a cycle that contains an accepting edge.
struct Lasso {
  Word stem;
  Word cycle;
};

/// Reachable cycle through an accepting edge, found deterministically.
std::optional<Lasso> find_accepting_lasso(const Recognizer& m);

/// States lying on a reachable cycle that contains an accepting edge, plus
/// every state reachable from one.
std::vector<bool> reachable_from_accepting_cycles(const Recognizer& m);

struct DotOptions {
  bool include_sink = true;
  /// Display names for post-critical indices; indices are printed if empty.
  std::vector<std::string> element_names;
};

/// Throws Error(Domain) for a machine that was never built.
std::string export_dot(const Recognizer& m, const DotOptions& options = {});
std::string export_json(const Recognizer& m);

/// Throws Error(Domain) for an unknown format name ("dot" or "json").
std::string export_machine(const Recognizer& m, std::string_view format,
                           const DotOptions& options = {});

}  // namespace autgroup
