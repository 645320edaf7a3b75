#include "wdba/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdba {

Word concat(WordView lhs, WordView rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

Word concat(WordView a, WordView b, WordView c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

Word power(WordView w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

Word slice(WordView w, std::size_t from, std::size_t to) {
  to = std::min(to, w.size());
  if (from >= to) {
    return {};
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(to));
}

Word suffix_from(WordView w, std::size_t from) { return slice(w, from, w.size()); }

void append(Word& dst, WordView src) { dst.insert(dst.end(), src.begin(), src.end()); }

std::size_t WordHash::operator()(WordView w) const noexcept {
  // FNV-1a over the letter indices.
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter a : w) {
    h ^= static_cast<std::uint64_t>(a) + 0x9e3779b9U;
    h *= 1099511628211ULL;
  }
  h ^= w.size();
  return static_cast<std::size_t>(h);
}

std::size_t DecompositionHash::operator()(const Decomposition& d) const noexcept {
  WordHash hash;
  std::size_t h = hash(d.prefix);
  return h ^ (hash(d.period) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Word primitive_root(WordView w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = len; i < n && periodic; ++i) {
      periodic = w[i] == w[i - len];
    }
    if (periodic) {
      return slice(w, 0, len);
    }
  }
  return Word(w.begin(), w.end());
}

Decomposition canonical(Decomposition d) {
  if (d.period.empty()) {
    throw std::invalid_argument("decomposition with empty period");
  }
  d.period = primitive_root(d.period);
  // x·c·(v'c)^ω = x·(cv')^ω: fold letters of the prefix into the period.
  while (!d.prefix.empty() && d.prefix.back() == d.period.back()) {
    d.prefix.pop_back();
    std::rotate(d.period.rbegin(), d.period.rbegin() + 1, d.period.rend());
  }
  return d;
}

bool same_up_word(const Decomposition& lhs, const Decomposition& rhs) {
  return canonical(lhs) == canonical(rhs);
}

}  // namespace wdba
