#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "wdba/benchmark.hpp"
#include "wdba/errors.hpp"

using namespace wdba;

namespace {

std::string csv_of(const BenchConfig& cfg) {
  std::ostringstream out;
  write_csv(out, run_benchmark(cfg));
  return out.str();
}

}  // namespace

TEST_CASE("algorithm lists") {
  CHECK(parse_algorithms("table,tree,mp") ==
        std::vector<Algorithm>{Algorithm::table, Algorithm::tree, Algorithm::mp});
  CHECK(parse_algorithms("mp") == std::vector<Algorithm>{Algorithm::mp});
  CHECK_THROWS_AS(parse_algorithms("tree,"), Error);
  CHECK_THROWS_AS(parse_algorithms("lstar"), Error);
  CHECK(algorithm_name(Algorithm::tree) == "tree");
}

TEST_CASE("run_instance on D") {
  const Wdba d = fixtures::language_d();
  for (const auto algorithm : {Algorithm::table, Algorithm::tree, Algorithm::mp}) {
    const BenchRecord r = run_instance(d, algorithm, SearchMode::binary);
    CHECK(r.equivalent);
    CHECK(r.isomorphic);
    CHECK(r.learned_states == 5);
    CHECK(r.target_states == 5);
    CHECK(r.total() == r.eq_count + r.mq_count);
    if (algorithm != Algorithm::mp) {
      CHECK(r.eq_count <= 5);
      CHECK(r.states_grow_per_round);
    }
  }
}

TEST_CASE("size-1 smoke run") {
  BenchConfig cfg;
  cfg.sizes = {1};
  cfg.scc_min = 1;
  cfg.scc_max = 1;
  cfg.min_scc_size = 1;
  cfg.timing = false;
  const auto records = run_benchmark(cfg);
  REQUIRE(records.size() == 3);
  for (const auto& r : records) {
    CHECK(r.target_states == 1);
    CHECK(r.learned_states == 1);
    CHECK(r.equivalent);
  }
  CHECK(records[1].algorithm == Algorithm::tree);
  CHECK(records[1].total() == 2);
}

TEST_CASE("records are deterministic and ordered for any job count") {
  BenchConfig cfg;
  cfg.sizes = {10, 20};
  cfg.per_size = 3;
  cfg.seed = 5;
  cfg.timing = false;
  const std::string serial = csv_of(cfg);
  cfg.jobs = 4;
  CHECK(csv_of(cfg) == serial);
  CHECK(csv_of(cfg) == serial);

  const auto records = run_benchmark(cfg);
  REQUIRE(records.size() == 18);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    CHECK(r.size == cfg.sizes[i / 9]);
    CHECK(r.instance == (i / 3) % 3);
    CHECK(r.algorithm == cfg.algorithms[i % 3]);
    CHECK(r.seed == instance_seed(5, r.size, r.instance));
    CHECK(r.target_states == r.size);
    CHECK(r.wall_ms == 0.0);
    if (r.algorithm != Algorithm::mp) {
      CHECK(r.eq_count <= r.target_states);
      CHECK(r.learned_states == r.target_states);
    }
  }
  cfg.seed = 6;
  CHECK(csv_of(cfg) != serial);
}

TEST_CASE("CSV and summary layout") {
  BenchRecord a;
  a.size = 10;
  a.instance = 0;
  a.seed = 77;
  a.algorithm = Algorithm::tree;
  a.eq_count = 3;
  a.mq_count = 40;
  a.learned_states = 10;
  a.target_states = 10;
  a.equivalent = true;
  a.wall_ms = 1.23456;
  BenchRecord b = a;
  b.algorithm = Algorithm::mp;
  b.mq_count = 100;
  BenchRecord c = a;
  c.instance = 1;
  c.mq_count = 45;
  std::ostringstream csv;
  write_csv(csv, {a, b, c});
  CHECK(csv.str() ==
        "size,instance,seed,algorithm,eq_count,mq_count,total_queries,learned_states,"
        "target_states,equivalent,wall_ms\n"
        "10,0,77,tree,3,40,43,10,10,true,1.235\n"
        "10,0,77,mp,3,100,103,10,10,true,1.235\n"
        "10,1,77,tree,3,45,48,10,10,true,1.235\n");
  std::ostringstream summary;
  write_summary(summary, {a, b, c});
  CHECK(summary.str() == "size,mp,tree\n10,103.00,45.50\n");
}
