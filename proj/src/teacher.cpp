#include "wdba/teacher.hpp"

#include <stdexcept>

#include "wdba/errors.hpp"
#include "wdba/trace.hpp"

namespace wdba {

Teacher::Teacher(Wdba target, TeacherOptions options)
    : target_(std::move(target)), options_(options) {
  if (!is_weak(target_)) {
    throw WeaknessError("teacher target is not weak");
  }
}

bool Teacher::mq(WordView prefix, WordView period) {
  if (period.empty()) {
    throw std::invalid_argument("membership query with empty period");
  }
  Decomposition d{Word(prefix.begin(), prefix.end()), Word(period.begin(), period.end())};
  bool answer;
  if (options_.cache) {
    Decomposition key = canonical(d);
    if (auto it = cache_.find(key); it != cache_.end()) {
      return it->second;
    }
    answer = member(target_, key);
    cache_.emplace(std::move(key), answer);
  } else {
    answer = member(target_, d);
  }
  ++counters_.membership;
  if (options_.trace != nullptr) {
    options_.trace->membership(prefix, period, answer);
  }
  return answer;
}

Witness Teacher::eq(const Wdba& conjecture) {
  if (!(conjecture.alphabet() == target_.alphabet())) {
    throw AlphabetMismatch();
  }
  if (!is_weak(conjecture)) {
    throw WeaknessError("conjecture is not weak");
  }
  ++counters_.equivalence;
  Witness w = product_witness(target_, conjecture, options_.witnesses);
  if (options_.trace != nullptr) {
    if (w) {
      options_.trace->equivalence_cex(*w);
    } else {
      options_.trace->equivalence_ok();
    }
  }
  return w;
}

}  // namespace wdba
