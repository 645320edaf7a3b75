#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wdba/generator.hpp"
#include "wdba/learner.hpp"

namespace wdba {

enum class Algorithm { table, tree, mp };

std::string_view algorithm_name(Algorithm a);
// Comma-separated list such as "table,tree,mp". Throws wdba::Error.
std::vector<Algorithm> parse_algorithms(std::string_view list);

struct BenchConfig {
  std::vector<std::size_t> sizes{10};
  std::size_t per_size = 1;
  std::size_t alphabet = 2;
  std::size_t scc_min = 2;
  std::size_t scc_max = 10;
  std::size_t min_scc_size = 2;
  std::size_t exit_percent = GenConfig{}.exit_percent;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms{Algorithm::table, Algorithm::tree, Algorithm::mp};
  SearchMode search = SearchMode::binary;
  std::size_t jobs = 1;
  // When false, wall_ms is written as 0 so reruns give identical files.
  bool timing = true;
};

struct BenchRecord {
  std::size_t size = 0;
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::tree;
  std::uint64_t eq_count = 0;
  std::uint64_t mq_count = 0;
  std::size_t learned_states = 0;
  std::size_t target_states = 0;
  bool equivalent = false;
  double wall_ms = 0.0;
  // Not part of the CSV: checked by the test suite.
  bool isomorphic = false;            // learned vs minimized target
  bool states_grow_per_round = true;  // |S| strictly increases across EQs
  std::uint64_t total() const { return eq_count + mq_count; }
};

// Seed of instance `instance` of size `size` under base seed `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t size, std::size_t instance);

// Learns one target with one algorithm using a fresh counting teacher.
BenchRecord run_instance(const Wdba& target, Algorithm algorithm, SearchMode search);

// Generates per_size targets for every size and learns each with every
// algorithm. Records come back in (size, instance, algorithm) order for any
// job count. Throws wdba::Error naming the seed if a learned automaton is
// not equivalent to its target.
std::vector<BenchRecord> run_benchmark(
    const BenchConfig& cfg, const std::function<void(const BenchRecord&)>& progress = {});

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
// Mean total queries per size, one column per algorithm (MP, Table, Tree
// order).
void write_summary(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace wdba
