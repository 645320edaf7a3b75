#pragma once

#include <iosfwd>
#include <string_view>

#include "wdba/alphabet.hpp"

namespace wdba {

// Line-per-event log of a learning session, e.g.
//
//   MQ bb.bba|a -> 1      (multi-letter alphabets join tokens with '.')
//   EQ -> cex bbbba|a
//   ADD-STATE bbb
//   ADD-EXP ba|a
//
// Words are printed with the alphabet's formatting; ε is the empty word.
class Trace {
 public:
  Trace(std::ostream& out, Alphabet alphabet) : out_(&out), alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  void membership(WordView prefix, WordView period, bool answer);
  void equivalence_ok();
  void equivalence_cex(const Decomposition& w);
  void add_state(WordView state);
  void add_experiment(WordView prefix, WordView period);
  void mark(WordView state, bool accepting, WordView loop);
  void mark_transient(WordView state);
  void conflict_c1(WordView u1, WordView u2, WordView x, WordView y);
  void conflict_c2(WordView u, WordView x, WordView y);
  void resolve_state(WordView u1, WordView u2, WordView z, WordView w);
  void resolve(WordView u, WordView x, WordView y, std::size_t k, std::size_t h);
  void valid_cex(WordView prefix, WordView period);
  void split(WordView left, WordView right, std::size_t index);
  void note(std::string_view text);

 private:
  std::ostream* out_;
  Alphabet alphabet_;
};

}  // namespace wdba
