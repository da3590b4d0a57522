#include "autgroup/automaton_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "autgroup/error.hpp"

namespace autgroup {

namespace {

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct RawTransition {
  Located in, out, target;
};

struct RawState {
  Located name;
  bool identity = false;
  std::vector<RawTransition> transitions;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Whitespace-separated tokens with 1-based columns.
std::vector<Located> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Located> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail_at(const Located& where, const std::string& message) {
  throw Error(ErrorKind::Validation, "line " + std::to_string(where.line) + ", column " +
                                         std::to_string(where.column) + ": " + message);
}

Located trimmed(std::string_view line, std::size_t begin, std::size_t end, std::size_t line_no) {
  while (begin < end && is_space(line[begin])) ++begin;
  while (end > begin && is_space(line[end - 1])) --end;
  return {std::string(line.substr(begin, end - begin)), line_no, begin + 1};
}

RawTransition parse_transition(std::string_view line, std::size_t line_no) {
  const auto bar = line.find('|');
  const auto arrow = line.find("->");
  if (bar == std::string_view::npos || arrow == std::string_view::npos || arrow < bar) {
    std::size_t col = 1;
    while (col <= line.size() && is_space(line[col - 1])) ++col;
    throw ParseError(line_no, col, "expected '<in>|<out> -> <target>'");
  }
  RawTransition t{trimmed(line, 0, bar, line_no), trimmed(line, bar + 1, arrow, line_no),
                  trimmed(line, arrow + 2, line.size(), line_no)};
  for (const Located* part : {&t.in, &t.out, &t.target}) {
    if (part->text.empty()) throw ParseError(line_no, part->column, "missing field in transition");
    for (char c : part->text) {
      if (is_space(c) || c == '|') throw ParseError(line_no, part->column, "unexpected character in '" + part->text + "'");
    }
  }
  return t;
}

}  // namespace

MealyAutomaton parse_automaton(std::string_view text) {
  std::optional<std::vector<Located>> letters;
  std::vector<RawState> states;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    const auto& head = tokens.front();

    if (head.text == "alphabet") {
      if (letters) throw ParseError(line_no, head.column, "alphabet declared twice");
      if (!states.empty()) throw ParseError(line_no, head.column, "alphabet must precede states");
      letters.emplace(tokens.begin() + 1, tokens.end());
      if (letters->size() < 2) throw ParseError(line_no, head.column, "alphabet needs at least two letters");
      continue;
    }
    if (!letters) throw ParseError(line_no, head.column, "expected 'alphabet' declaration first");

    if (head.text == "state") {
      if (tokens.size() < 2) throw ParseError(line_no, head.column + 5, "expected state name");
      if (tokens.size() > 3 || (tokens.size() == 3 && tokens[2].text != "identity")) {
        const auto& bad = tokens[tokens.size() == 3 ? 2 : 3];
        throw ParseError(line_no, bad.column, "unexpected token '" + bad.text + "'");
      }
      for (const auto& s : states) {
        if (s.name.text == tokens[1].text) fail_at(tokens[1], "state '" + tokens[1].text + "' declared twice");
      }
      states.push_back({tokens[1], tokens.size() == 3, {}});
      continue;
    }

    if (states.empty()) throw ParseError(line_no, head.column, "transition outside a state block");
    if (states.back().identity) throw ParseError(line_no, head.column, "identity state takes no transitions");
    states.back().transitions.push_back(parse_transition(line, line_no));
  }

  if (!letters) throw ParseError(line_no, 1, "missing 'alphabet' declaration");
  if (states.empty()) throw ParseError(line_no, 1, "no states declared");

  std::vector<std::string> letter_names;
  for (const auto& l : *letters) {
    for (const auto& prev : letter_names) {
      if (prev == l.text) fail_at(l, "duplicate letter '" + l.text + "'");
    }
    if (l.text.find('|') != std::string::npos) fail_at(l, "letter names cannot contain '|'");
    letter_names.push_back(l.text);
  }
  Alphabet alphabet(letter_names);
  const std::size_t k = alphabet.size();

  std::vector<std::string> names;
  for (const auto& s : states) names.push_back(s.name.text);
  auto state_index = [&](const Located& where) -> StateId {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == where.text) return static_cast<StateId>(i);
    }
    fail_at(where, "undeclared state '" + where.text + "'");
  };
  auto letter_index = [&](const Located& where) -> Letter {
    if (auto x = alphabet.find(where.text)) return *x;
    fail_at(where, "undeclared letter '" + where.text + "'");
  };

  std::vector<std::optional<Transition>> table(names.size() * k);
  std::optional<StateId> trivial;
  for (StateId s = 0; s < states.size(); ++s) {
    if (states[s].identity) {
      if (!trivial) trivial = s;
      for (Letter x = 0; x < k; ++x) table[s * k + x] = Transition{x, s};
      continue;
    }
    for (const auto& t : states[s].transitions) {
      const Letter in = letter_index(t.in);
      const Letter out = letter_index(t.out);
      const StateId to = state_index(t.target);
      auto& slot = table[s * k + in];
      if (slot) fail_at(t.in, "duplicate transition for state '" + names[s] + "' on letter '" + t.in.text + "'");
      slot = Transition{out, to};
    }
  }

  std::vector<Transition> total;
  total.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      const auto& s = states[i / k];
      throw Error(ErrorKind::Validation, "line " + std::to_string(s.name.line) +
                                             ": table not total: state '" + s.name.text +
                                             "' has no transition on letter '" +
                                             alphabet.name(static_cast<Letter>(i % k)) + "'");
    }
    total.push_back(*table[i]);
  }
  return MealyAutomaton(std::move(alphabet), std::move(names), std::move(total), trivial);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Validation, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MealyAutomaton load_automaton(const std::filesystem::path& path) {
  return parse_automaton(read_text_file(path));
}

std::string format_automaton(const MealyAutomaton& a) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& l : a.alphabet().letters()) out << ' ' << l;
  out << '\n';
  for (StateId s = 0; s < a.num_states(); ++s) {
    out << "state " << a.name(s);
    if (a.is_identity_loop(s)) {
      out << " identity\n";
      continue;
    }
    out << '\n';
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const auto& t = a.transition(s, x);
      out << "  " << a.alphabet().name(x) << '|' << a.alphabet().name(t.out) << " -> "
          << a.name(t.to) << '\n';
    }
  }
  return out.str();
}

}  // namespace autgroup
