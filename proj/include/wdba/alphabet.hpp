#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wdba/word.hpp"

namespace wdba {

// Ordered set of letter tokens. Tokens may be longer than one character.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  // a, b, c, ... (then l26, l27, ... past z).
  static Alphabet letters(std::size_t count);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<Letter> find(std::string_view token) const;

  // Words print as concatenated tokens when every token is one character and
  // as '.'-joined tokens otherwise. ε prints as "ε".
  std::string format(WordView w) const;
  std::string format(const Decomposition& d) const;  // "u|v"

  // Accepts "", "ε" and "eps" for the empty word, '.'-separated tokens, and
  // unseparated strings for single-character alphabets. Throws wdba::Error.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
    return lhs.symbols_ == rhs.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Letter> index_;
  bool single_char_ = true;
};

}  // namespace wdba
