#include "wdba/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wdba/equivalence.hpp"
#include "wdba/errors.hpp"
#include "wdba/scc.hpp"

namespace wdba {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) {
    return engine_();
  }
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range) - 1;
  std::uint64_t draw = engine_();
  while (draw > limit) {
    draw = engine_();
  }
  return lo + draw % range;
}

std::size_t count_sccs(const TransitionSystem& ts, std::size_t min_size) {
  const SccDecomposition scc = scc_decompose(ts);
  return static_cast<std::size_t>(
      std::count_if(scc.components.begin(), scc.components.end(), [&](const auto& c) {
        return !c.trivial && c.states.size() >= min_size;
      }));
}

namespace {

// One candidate before minimization. States are laid out as transient
// states first, then SCC blocks in topological order; every transition
// points within its block or forward.
Wdba candidate(const GenConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = cfg.states;
  const std::size_t k_letters = cfg.alphabet;
  const std::size_t min_size = std::max<std::size_t>(cfg.min_scc_size, 1);
  const std::size_t hi = std::min(cfg.scc_max, n / min_size);
  const auto blocks = static_cast<std::size_t>(rng.uniform(cfg.scc_min, hi));
  // Bottom SCCs of a minimal weak automaton are single states, so the
  // blocks sit above one or two sinks.
  const std::size_t room = n - blocks * min_size;
  const auto sinks =
      room == 0 ? 0 : static_cast<std::size_t>(rng.uniform(1, std::min<std::size_t>(2, room)));
  const auto transient = static_cast<std::size_t>(rng.uniform(0, (room - sinks) / 4));

  // Block sizes: min_size each, the rest spread uniformly over the blocks.
  std::vector<std::size_t> sizes(blocks, min_size);
  for (std::size_t extra = room - sinks - transient; extra > 0; --extra) {
    ++sizes[rng.uniform(0, blocks - 1)];
  }
  sizes.insert(sizes.end(), sinks, 1);
  std::vector<std::size_t> start{transient};
  for (const std::size_t size : sizes) {
    start.push_back(start.back() + size);
  }

  std::vector<bool> block_accepting(blocks + sinks);
  block_accepting[0] = rng.chance(1, 2);
  for (std::size_t b = 1; b < blocks; ++b) {
    block_accepting[b] = rng.chance(7, 10) ? !block_accepting[b - 1] : block_accepting[b - 1];
  }
  if (sinks > 0) {
    block_accepting[blocks] = rng.chance(1, 2);
  }
  if (sinks == 2) {
    block_accepting[blocks + 1] = !block_accepting[blocks];
  }

  TransitionSystem ts(n, k_letters, 0);
  std::vector<bool> accepting(n, false);
  std::vector<bool> fixed(n * k_letters, false);
  const auto wire = [&](std::size_t q, Letter a, std::size_t target) {
    ts.set_successor(static_cast<StateId>(q), a, static_cast<StateId>(target));
    fixed[q * k_letters + a] = true;
  };
  const auto free_letter = [&](std::size_t q) -> std::optional<Letter> {
    std::vector<Letter> options;
    for (Letter a = 0; a < k_letters; ++a) {
      if (!fixed[q * k_letters + a]) {
        options.push_back(a);
      }
    }
    if (options.empty()) {
      return std::nullopt;
    }
    return options[rng.uniform(0, options.size() - 1)];
  };

  // Transient chain: each transient state feeds the next position.
  for (std::size_t q = 0; q < transient; ++q) {
    wire(q, static_cast<Letter>(rng.uniform(0, k_letters - 1)), q + 1);
  }

  // Random cycle through each block, then one forced exit to the next block.
  for (std::size_t b = 0; b < blocks + sinks; ++b) {
    const std::size_t lo = start[b];
    const std::size_t size = start[b + 1] - lo;
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), lo);
    for (std::size_t i = 0; i + 1 < size; ++i) {
      std::swap(order[i], order[rng.uniform(i, size - 1)]);
    }
    for (std::size_t i = 0; i < size; ++i) {
      accepting[order[i]] = block_accepting[b];
      wire(order[i], *free_letter(order[i]), order[(i + 1) % size]);
    }
    if (b + 1 < blocks + sinks && b < blocks) {
      const std::size_t from = order[rng.uniform(0, size - 1)];
      const auto letter = free_letter(from);
      if (!letter) {
        throw Error("generator: a block has no free transition for its exit");
      }
      wire(from, *letter, rng.uniform(start[b + 1], start[b + 2] - 1));
    }
  }

  // Chords inside the block, or forward exits.
  for (std::size_t q = 0; q < n; ++q) {
    const auto block = static_cast<std::size_t>(
        std::upper_bound(start.begin(), start.end(), q) - start.begin());
    for (Letter a = 0; a < k_letters; ++a) {
      if (fixed[q * k_letters + a]) {
        continue;
      }
      std::size_t target;
      if (q < transient) {
        target = rng.uniform(q + 1, n - 1);
      } else if (q >= start[blocks]) {
        target = q;
      } else if (start[block] < n && rng.chance(cfg.exit_percent, 100)) {
        target = rng.uniform(start[block], n - 1);
      } else {
        target = rng.uniform(start[block - 1], start[block] - 1);
      }
      ts.set_successor(static_cast<StateId>(q), a, static_cast<StateId>(target));
    }
  }
  return Wdba(Alphabet::letters(k_letters), std::move(ts), std::move(accepting));
}

}  // namespace

Wdba generate_minimal_wdba(const GenConfig& cfg) {
  if (cfg.states == 0 || cfg.alphabet == 0 || cfg.scc_min == 0 || cfg.scc_min > cfg.scc_max) {
    throw ConfigError("generator: invalid configuration");
  }
  if (cfg.scc_min * std::max<std::size_t>(cfg.min_scc_size, 1) > cfg.states) {
    throw ConfigError("generator: more SCCs requested than the states allow");
  }
  if (cfg.exit_percent > 100) {
    throw ConfigError("generator: exit_percent must be at most 100");
  }
  if (cfg.alphabet == 1 && cfg.scc_min > 1) {
    throw ConfigError("generator: a one-letter alphabet allows a single SCC only");
  }
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const Wdba raw = candidate(cfg, derive_seed(cfg.seed, attempt));
    Wdba minimal = minimize(raw);
    if (minimal.state_count() != cfg.states) {
      continue;
    }
    const std::size_t sccs = count_sccs(minimal.ts(), cfg.min_scc_size);
    if (sccs >= cfg.scc_min && sccs <= cfg.scc_max) {
      return minimal;
    }
  }
  throw Error("generator: no minimal automaton with " + std::to_string(cfg.states) +
              " states after " + std::to_string(cfg.max_attempts) + " attempts (seed " +
              std::to_string(cfg.seed) + ")");
}

}  // namespace wdba
