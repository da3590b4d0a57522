#include "autgroup/ev_periodic.hpp"

#include <algorithm>

#include "autgroup/error.hpp"

namespace autgroup {

std::size_t primitive_root_length(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

EvPeriodicWord EvPeriodicWord::make(Word period, Word preperiod) {
  if (period.empty()) throw Error(ErrorKind::Domain, "left-infinite word needs a nonempty period");
  period.resize(primitive_root_length(period));
  // A leading preperiod letter equal to the letter one period to its left
  // belongs to the periodic part.
  std::size_t absorbed = 0;
  while (absorbed < preperiod.size() && preperiod[absorbed] == period.front()) {
    std::rotate(period.begin(), period.begin() + 1, period.end());
    ++absorbed;
  }
  preperiod.erase(preperiod.begin(), preperiod.begin() + static_cast<std::ptrdiff_t>(absorbed));
  EvPeriodicWord w;
  w.period_ = std::move(period);
  w.preperiod_ = std::move(preperiod);
  return w;
}

Word EvPeriodicWord::suffix(std::size_t n) const {
  Word out;
  out.reserve(n);
  if (n <= preperiod_.size()) {
    out.assign(preperiod_.end() - static_cast<std::ptrdiff_t>(n), preperiod_.end());
    return out;
  }
  const std::size_t k = n - preperiod_.size();
  const std::size_t len = period_.size();
  const std::size_t offset = (len - k % len) % len;
  for (std::size_t i = 0; i < k; ++i) out.push_back(period_[(offset + i) % len]);
  out.insert(out.end(), preperiod_.begin(), preperiod_.end());
  return out;
}

Letter EvPeriodicWord::last_letter() const {
  return preperiod_.empty() ? period_.back() : preperiod_.back();
}

EvPeriodicWord EvPeriodicWord::shift() const {
  if (!preperiod_.empty()) {
    return make(period_, Word(preperiod_.begin(), preperiod_.end() - 1));
  }
  Word rotated = period_;
  std::rotate(rotated.rbegin(), rotated.rbegin() + 1, rotated.rend());
  return make(std::move(rotated));
}

std::string EvPeriodicWord::render(const Alphabet& alphabet) const {
  std::string out = "(" + alphabet.render(period_) + ")^-w";
  if (!preperiod_.empty()) out += " " + alphabet.render(preperiod_);
  return out;
}

std::optional<EvPeriodicWord> parse_ev_periodic(std::string_view text, const Alphabet& alphabet) {
  auto ltrim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
  };
  text = ltrim(text);
  if (text.empty() || text.front() != '(') return std::nullopt;
  const auto close = text.find(")^-w");
  if (close == std::string_view::npos) return std::nullopt;
  try {
    Word period = alphabet.parse_word(text.substr(1, close - 1));
    Word pre = alphabet.parse_word(text.substr(close + 4));
    if (period.empty()) return std::nullopt;
    return EvPeriodicWord::make(std::move(period), std::move(pre));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace autgroup
