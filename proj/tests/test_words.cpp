#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wdba/errors.hpp"

using namespace wdba;
using fixtures::up;
using fixtures::w;

TEST_CASE("word helpers") {
  CHECK(concat(w("ab"), w("ba")) == w("abba"));
  CHECK(power(w("ab"), 3) == w("ababab"));
  CHECK(power(w("ab"), 0).empty());
  CHECK(slice(w("abba"), 1, 3) == w("bb"));
  CHECK(slice(w("abba"), 3, 10) == w("a"));
  CHECK(suffix_from(w("abba"), 4).empty());
  CHECK(primitive_root(w("abab")) == w("ab"));
  CHECK(primitive_root(w("aba")) == w("aba"));
  CHECK(primitive_root(w("aaaa")) == w("a"));
}

TEST_CASE("canonical folds the period out of the prefix") {
  CHECK(canonical(up("aa", "a")) == up("", "a"));
  CHECK(canonical(up("bbbaa", "a")) == up("bbb", "a"));
  CHECK(canonical(up("ab", "abab")) == up("", "ab"));
  CHECK(canonical(up("b", "ab")) == up("", "ba"));
  CHECK(canonical(up("bbb", "ba")) == up("bbb", "ba"));
  CHECK(canonical(up("bba", "ba")) == up("b", "ba"));
  CHECK(canonical(up("", "a")) == up("", "a"));
  CHECK_THROWS_AS(canonical(Decomposition{w("a"), Word{}}), std::invalid_argument);
}

TEST_CASE("same_up_word compares ω-words, not pairs") {
  CHECK(same_up_word(up("ab", "ab"), up("", "ab")));
  CHECK(same_up_word(up("a", "ba"), up("ab", "ab")));
  CHECK(same_up_word(up("", "aa"), up("a", "a")));
  CHECK_FALSE(same_up_word(up("", "ab"), up("", "ba")));
  CHECK_FALSE(same_up_word(up("b", "a"), up("", "a")));
}

// Independent check of canonical(): the first 40 letters agree with the
// unrolled original and the result is minimal under folding.
TEST_CASE("canonical agrees with letter-level unrolling") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 2000; ++round) {
    const Decomposition d{fixtures::random_word(rng, 2, 0, 6), fixtures::random_word(rng, 2, 1, 6)};
    const Decomposition c = canonical(d);
    auto letter = [](const Decomposition& x, std::size_t i) {
      return i < x.prefix.size() ? x.prefix[i] : x.period[(i - x.prefix.size()) % x.period.size()];
    };
    for (std::size_t i = 0; i < 40; ++i) {
      REQUIRE(letter(c, i) == letter(d, i));
    }
    CHECK(primitive_root(c.period) == c.period);
    if (!c.prefix.empty()) {
      CHECK(c.prefix.back() != c.period.back());
    }
    CHECK(canonical(c) == c);
  }
}

TEST_CASE("alphabet tokens") {
  const Alphabet ab({"a", "b"});
  CHECK(ab.size() == 2);
  CHECK(ab.parse_word("").empty());
  CHECK(ab.parse_word("ε").empty());
  CHECK(ab.parse_word("eps").empty());
  CHECK(ab.parse_word("b.b.a") == w("bba"));
  CHECK(ab.parse_word("bba") == w("bba"));
  CHECK(ab.format(w("")) == "ε");
  CHECK(ab.format(up("b", "ab")) == "b|ab");
  CHECK_THROWS_AS(ab.parse_word("abc"), Error);
  CHECK_THROWS_AS(ab.parse_word("a..b"), Error);

  const Alphabet long_tokens({"req", "ack"});
  CHECK(long_tokens.parse_word("req.ack") == Word{0, 1});
  CHECK(long_tokens.format(Word{0, 1, 1}) == "req.ack.ack");
  CHECK_THROWS_AS(long_tokens.parse_word("reqack"), Error);

  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);

  const Alphabet big = Alphabet::letters(28);
  CHECK(big.symbol(0) == "a");
  CHECK(big.symbol(25) == "z");
  CHECK(big.symbol(27) == "l27");
}
