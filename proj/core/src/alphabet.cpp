#include "autgroup/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "autgroup/error.hpp"

namespace autgroup {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::NotInvertible: return "not invertible";
    case ErrorKind::NotBounded: return "not bounded";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::EmptyPostCritical: return "empty post-critical set";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.size() < 2) {
    throw Error(ErrorKind::Validation, "alphabet needs at least two letters");
  }
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (l.empty()) throw Error(ErrorKind::Validation, "empty letter name");
    if (!seen.insert(l).second) throw Error(ErrorKind::Validation, "duplicate letter '" + l + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = std::find(letters_.begin(), letters_.end(), name);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<Letter>(it - letters_.begin());
}

Letter Alphabet::index(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorKind::Domain, "letter '" + std::string(name) + "' is not in the alphabet");
}

bool Alphabet::single_char_letters() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const std::string& l) { return l.size() == 1; });
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (single_char_letters()) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      w.push_back(index(std::string_view(&c, 1)));
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) w.push_back(index(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string Alphabet::render(std::span<const Letter> word) const {
  const bool compact = single_char_letters();
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += name(word[i]);
  }
  return out;
}

void OmegaWordSpec::validate() const {
  if (period.empty()) throw Error(ErrorKind::Domain, "period of an omega-word must be nonempty");
}

Word OmegaWordSpec::prefix(std::size_t n) const {
  validate();
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(i < preperiod.size() ? preperiod[i]
                                     : period[(i - preperiod.size()) % period.size()]);
  }
  return w;
}

}  // namespace autgroup
