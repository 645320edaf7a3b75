#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wdba/automaton.hpp"

namespace wdba {

// Line-oriented text format:
//
//   wdba v1
//   alphabet a b
//   states 2
//   initial 0
//   accepting 1
//   trans 0 a 1
//   ...
//
// '#' starts a comment, blank lines are ignored, and exactly one `trans`
// line is required per (state, letter). Errors throw ParseError.
Wdba parse_automaton(std::string_view text);
std::string serialize_automaton(const Wdba& a);

Wdba load_automaton(const std::filesystem::path& path);
void save_automaton(const std::filesystem::path& path, const Wdba& a);

}  // namespace wdba
