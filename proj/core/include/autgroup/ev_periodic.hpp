#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "autgroup/alphabet.hpp"

namespace autgroup {

/// Left-infinite eventually periodic word period^{-omega} . preperiod.
///
/// Instances built through `make` are canonical: the period is primitive,
/// the preperiod is as short as possible, and the period is rotated so that
/// it ends exactly where the preperiod begins. Two canonical values are equal
/// iff they denote the same left-infinite sequence.
class EvPeriodicWord {
 public:
  EvPeriodicWord() = default;

  /// Throws Error(Domain) when the period is empty.
  static EvPeriodicWord make(Word period, Word preperiod = {});

  const Word& period() const noexcept { return period_; }
  const Word& preperiod() const noexcept { return preperiod_; }

  /// Length-n suffix, unrolling the period as needed.
  Word suffix(std::size_t n) const;
  Letter last_letter() const;
  /// The word with its last letter removed.
  EvPeriodicWord shift() const;

  std::string render(const Alphabet& alphabet) const;

  // Ordered by period, then preperiod; both lexicographic by letter index.
  auto operator<=>(const EvPeriodicWord&) const = default;

 private:
  Word period_;
  Word preperiod_;
};

/// Smallest p such that the word is a power of its length-p prefix.
std::size_t primitive_root_length(std::span<const Letter> w);

/// Parses the rendering `(w)^-w u`; returns nullopt on malformed text.
std::optional<EvPeriodicWord> parse_ev_periodic(std::string_view text,
                                                const Alphabet& alphabet);

}  // namespace autgroup
