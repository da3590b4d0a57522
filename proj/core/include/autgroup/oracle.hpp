#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autgroup/decide.hpp"

namespace autgroup::oracle {

// Brute-force ground truth on the levels X^n. A word of length n is encoded
// as the integer whose base-|X| digits are its letters, first letter most
// significant, so the prefix of code c is c / |X|.

struct Limits {
  std::size_t max_words = 65536;
  /// Zero selects the default cap: 12 for binary alphabets, 8 otherwise.
  std::size_t max_level = 0;

  std::size_t level_cap(std::size_t alphabet_size) const;
};

/// Throws Error(CapExceeded) when level n is above the caps.
void check_level(std::size_t alphabet_size, std::size_t n, const Limits& limits);

std::size_t encode(std::span<const Letter> v, std::size_t alphabet_size);
Word decode(std::size_t code, std::size_t n, std::size_t alphabet_size);

/// Images and section triviality of every generator of A^{+-1} on X^n.
class LevelTable {
 public:
  /// Generators are the states of union_with_inverse(minimize(A)).
  LevelTable(const MealyAutomaton& a, std::size_t n, const Limits& limits = {});

  std::size_t level() const noexcept { return level_; }
  std::size_t num_generators() const noexcept { return generators_.num_states(); }
  std::size_t num_words() const noexcept { return num_words_; }
  const MealyAutomaton& generators() const noexcept { return generators_; }

  std::size_t image(std::size_t g, std::size_t word) const { return image_[g * num_words_ + word]; }
  bool section_trivial(std::size_t g, std::size_t word) const {
    return generators_.is_trivial(section_[g * num_words_ + word]);
  }
  StateId section(std::size_t g, std::size_t word) const { return section_[g * num_words_ + word]; }

 private:
  MealyAutomaton generators_;
  std::size_t level_;
  std::size_t num_words_;
  std::vector<std::size_t> image_;
  std::vector<StateId> section_;
};

/// Partition of X^n given as a class id per word code.
struct WordPartition {
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_size;

  std::size_t num_classes() const noexcept { return class_size.size(); }
  std::size_t size_of_class_containing(std::size_t word) const {
    return class_size[class_of[word]];
  }
};

WordPartition e_orbits_level(const MealyAutomaton& a, std::size_t n, const Limits& limits = {});
WordPartition orbits_level(const MealyAutomaton& a, std::size_t n, const Limits& limits = {});
WordPartition e_orbits_level(const LevelTable& table);
WordPartition orbits_level(const LevelTable& table);

/// Groups post-critical indices by the e-orbit of their length-n suffix.
Partition pcs_partition_level(const MealyAutomaton& a, std::span<const EvPeriodicWord> elements,
                              std::size_t n, const Limits& limits = {});

/// Orbit sizes |O(w_n)| for n = 0..N.
std::vector<std::size_t> orbit_growth(const MealyAutomaton& a, const OmegaWordSpec& w,
                                      std::size_t max_n, const Limits& limits = {});

/// Number of words v in X^n with a non-trivial section s|_v.
std::size_t nontrivial_section_count(const MealyAutomaton& a, StateId s, std::size_t n);

struct GroupOrder {
  std::optional<std::size_t> order;   // nullopt when the cap was hit
  std::size_t elements_seen = 0;
};

/// Breadth-first closure of the generators and their inverses; elements are
/// compared as canonical minimized pointed automata.
GroupOrder enumerate_group(const MealyAutomaton& a, std::size_t cap);

enum class CheckSet { All, Partitions, EOrbits, Orbits };

struct Check {
  std::string name;
  std::size_t level = 0;
  bool passed = true;
  std::string details;
};

struct CrossCheckReport {
  std::vector<Check> checks;

  std::size_t mismatches() const;
  bool ok() const { return mismatches() == 0; }
  std::string to_json() const;
};

struct CrossCheckOptions {
  CheckSet checks = CheckSet::All;
  Limits limits;
  /// Replacement machines, e.g. deliberately corrupted copies.
  const Recognizer* re_override = nullptr;
  const Recognizer* r_override = nullptr;
};

/// For every level n <= max_n compares machine parts/labels with direct
/// e-orbits/orbits, edge marks with orbit growth, and the partition chain
/// with pcs_partition_level. Throws Error(Unsupported) if the automaton is
/// not its own circuit part and Error(EmptyPostCritical) without machines.
CrossCheckReport cross_check(const BoundedAnalysis& analysis, std::size_t max_n,
                             const CrossCheckOptions& options = {});

/// CSV with header "n,orbit_size".
std::string orbit_growth_csv(std::span<const std::size_t> sizes);

}  // namespace autgroup::oracle
