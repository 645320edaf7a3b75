#include "wdba/alphabet.hpp"

#include "wdba/errors.hpp"

namespace wdba {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw Error("alphabet must not be empty");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) {
      throw Error("alphabet symbols must be non-empty");
    }
    if (s.find_first_of(".|# \t") != std::string::npos || s == "eps" || s == "ε") {
      throw Error("invalid alphabet symbol '" + s + "'");
    }
    if (!index_.emplace(s, static_cast<Letter>(i)).second) {
      throw Error("duplicate alphabet symbol '" + s + "'");
    }
    single_char_ = single_char_ && s.size() == 1;
  }
}

Alphabet Alphabet::letters(std::size_t count) {
  std::vector<std::string> symbols;
  symbols.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    symbols.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                             : "l" + std::to_string(i));
  }
  return Alphabet(std::move(symbols));
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::string Alphabet::format(WordView w) const {
  if (w.empty()) {
    return "ε";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_) {
      out += '.';
    }
    out += symbols_.at(w[i]);
  }
  return out;
}

std::string Alphabet::format(const Decomposition& d) const {
  return format(d.prefix) + "|" + format(d.period);
}

Word Alphabet::parse_word(std::string_view text) const {
  Word out;
  if (text.empty() || text == "ε" || text == "eps") {
    return out;
  }
  auto push = [&](std::string_view token) {
    auto a = find(token);
    if (!a) {
      throw Error("unknown letter '" + std::string(token) + "'");
    }
    out.push_back(*a);
  };
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t dot = text.find('.', start);
      std::string_view token = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
      if (token.empty()) {
        throw Error("empty letter in word '" + std::string(text) + "'");
      }
      push(token);
      if (dot == std::string_view::npos) {
        break;
      }
      start = dot + 1;
    }
  } else if (single_char_) {
    for (char c : text) {
      push(std::string_view(&c, 1));
    }
  } else {
    push(text);
  }
  return out;
}

}  // namespace wdba
