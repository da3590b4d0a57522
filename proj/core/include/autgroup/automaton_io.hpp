#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "autgroup/mealy.hpp"

namespace autgroup {

// Line-based automaton description:
//
//   # comment
//   alphabet a b c
//   state s
//     a|b -> t
//     ...
//   state e identity
//
// Letters and states are registered in declaration order.

/// Throws ParseError for syntax problems and Error(Validation) for undeclared
/// states or letters, duplicate transitions, and tables that are not total.
MealyAutomaton parse_automaton(std::string_view text);

MealyAutomaton load_automaton(const std::filesystem::path& path);

/// Inverse of parse_automaton; identity-loop states are written as
/// `state <name> identity`.
std::string format_automaton(const MealyAutomaton& a);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace autgroup
