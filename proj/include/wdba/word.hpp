#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wdba {

using Letter = std::uint32_t;
using StateId = std::uint32_t;

// A finite word over an alphabet, stored as letter indices. Empty means ε.
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

Word concat(WordView lhs, WordView rhs);
Word concat(WordView a, WordView b, WordView c);
Word power(WordView w, std::size_t times);
// Letters [from, to) of w; clamps to the word length.
Word slice(WordView w, std::size_t from, std::size_t to);
Word suffix_from(WordView w, std::size_t from);
void append(Word& dst, WordView src);

struct WordHash {
  std::size_t operator()(WordView w) const noexcept;
  std::size_t operator()(const Word& w) const noexcept { return (*this)(WordView{w}); }
};

// The ultimately periodic word prefix · period^ω.
struct Decomposition {
  Word prefix;
  Word period;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecompositionHash {
  std::size_t operator()(const Decomposition& d) const noexcept;
};

// Shortest word p with w = p^k.
Word primitive_root(WordView w);

// Unique representative of the ω-word: primitive period and the shortest
// prefix after which the word is periodic. Requires a non-empty period.
Decomposition canonical(Decomposition d);

// True iff both decompositions denote the same ω-word.
bool same_up_word(const Decomposition& lhs, const Decomposition& rhs);

}  // namespace wdba
