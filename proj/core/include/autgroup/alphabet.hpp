#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autgroup {

/// Index of a letter in its alphabet.
using Letter = std::uint16_t;

/// A finite word, stored as letter indices.
using Word = std::vector<Letter>;

/// Ordered set of at least two distinct letter names. The order fixes every
/// deterministic iteration over X in the library.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& name(Letter x) const { return letters_.at(x); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }

  std::optional<Letter> find(std::string_view name) const;
  /// Throws Error(Domain) for an unknown letter.
  Letter index(std::string_view name) const;

  /// Letters are read one character at a time when every letter name is a
  /// single character; otherwise the text must be whitespace separated.
  Word parse_word(std::string_view text) const;
  std::string render(std::span<const Letter> word) const;

  bool single_char_letters() const noexcept;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> letters_;
};

/// Right-infinite eventually periodic word preperiod . period^omega.
struct OmegaWordSpec {
  Word preperiod;
  Word period;

  /// Throws Error(Domain) when the period is empty.
  void validate() const;
  /// Prefix of length n.
  Word prefix(std::size_t n) const;
};

}  // namespace autgroup
