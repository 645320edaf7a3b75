#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "wdba/automaton.hpp"

namespace wdba {

struct GenConfig {
  std::size_t states = 10;
  std::size_t alphabet = 2;
  // Accepted range for the number of SCCs with at least min_scc_size
  // states. With min_scc_size 1 every cyclic SCC counts, self-loops included.
  std::size_t scc_min = 2;
  std::size_t scc_max = 10;
  std::size_t min_scc_size = 2;
  // Chance, in percent, that a free transition of a non-final SCC leaves it.
  std::size_t exit_percent = 10;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 10000;
};

// splitmix64 step; used to derive independent seeds from one base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// mt19937_64 with a bounded draw that does not depend on the standard
// library's distribution implementation, so seeds reproduce across
// platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return uniform(0, denominator - 1) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

// Cyclic SCCs with at least min_size states.
std::size_t count_sccs(const TransitionSystem& ts, std::size_t min_size);

// Random minimal weak automaton with exactly cfg.states states, numbered in
// breadth-first order. Throws wdba::Error when the attempt budget runs out.
Wdba generate_minimal_wdba(const GenConfig& cfg);

}  // namespace wdba
