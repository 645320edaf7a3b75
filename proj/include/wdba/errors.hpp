#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wdba {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed automaton text. line() is 1-based; 0 when the problem is global
// (e.g. a missing transition detected after the whole file was read).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A nontrivial SCC mixes accepting and rejecting states.
class WeaknessError : public Error {
 public:
  using Error::Error;
};

// Parameters that no run can satisfy, e.g. a generator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("automata are defined over different alphabets") {}
};

}  // namespace wdba
