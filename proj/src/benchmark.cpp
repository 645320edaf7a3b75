#include "wdba/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "wdba/equivalence.hpp"
#include "wdba/errors.hpp"
#include "wdba/generator.hpp"
#include "wdba/mp_learner.hpp"

namespace wdba {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::table:
      return "table";
    case Algorithm::tree:
      return "tree";
    case Algorithm::mp:
      return "mp";
  }
  return "?";
}

std::vector<Algorithm> parse_algorithms(std::string_view list) {
  std::vector<Algorithm> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string_view item = list.substr(pos, comma - pos);
    if (item == "table") {
      out.push_back(Algorithm::table);
    } else if (item == "tree") {
      out.push_back(Algorithm::tree);
    } else if (item == "mp") {
      out.push_back(Algorithm::mp);
    } else {
      throw Error("unknown algorithm '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  return out;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t size, std::size_t instance) {
  return derive_seed(derive_seed(seed, size), instance);
}

BenchRecord run_instance(const Wdba& target, Algorithm algorithm, SearchMode search) {
  Teacher teacher(target);
  BenchRecord record;
  record.algorithm = algorithm;
  const auto started = std::chrono::steady_clock::now();
  Wdba learned;
  if (algorithm == Algorithm::mp) {
    learned = mp_learn(teacher);
  } else {
    LearnerOptions options;
    options.backend = algorithm == Algorithm::table ? BackendKind::table : BackendKind::tree;
    options.search = search;
    LearnerSession session(teacher, options);
    learned = session.run();
    const auto& sizes = session.stats().states_at_eq;
    record.states_grow_per_round = std::adjacent_find(sizes.begin(), sizes.end(),
                                                      std::greater_equal<>()) == sizes.end();
  }
  const auto finished = std::chrono::steady_clock::now();
  record.wall_ms = std::chrono::duration<double, std::milli>(finished - started).count();
  const QueryCounters counters = teacher.snapshot();
  record.eq_count = counters.equivalence;
  record.mq_count = counters.membership;
  record.learned_states = learned.state_count();
  record.target_states = target.state_count();
  record.equivalent = equivalent(learned, target);
  record.isomorphic = isomorphic(learned, minimize(target));
  return record;
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg,
                                       const std::function<void(const BenchRecord&)>& progress) {
  struct Job {
    std::size_t size;
    std::size_t instance;
  };
  std::vector<Job> jobs;
  for (const std::size_t size : cfg.sizes) {
    for (std::size_t i = 0; i < cfg.per_size; ++i) {
      jobs.push_back({size, i});
    }
  }
  const std::size_t per_job = cfg.algorithms.size();
  std::vector<BenchRecord> records(jobs.size() * per_job);
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;

  const auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) {
        return;
      }
      try {
        GenConfig gen;
        gen.states = jobs[j].size;
        gen.alphabet = cfg.alphabet;
        gen.scc_min = cfg.scc_min;
        gen.scc_max = cfg.scc_max;
        gen.min_scc_size = cfg.min_scc_size;
        gen.exit_percent = cfg.exit_percent;
        gen.seed = instance_seed(cfg.seed, jobs[j].size, jobs[j].instance);
        const Wdba target = generate_minimal_wdba(gen);
        for (std::size_t a = 0; a < per_job; ++a) {
          BenchRecord record = run_instance(target, cfg.algorithms[a], cfg.search);
          record.size = jobs[j].size;
          record.instance = jobs[j].instance;
          record.seed = gen.seed;
          if (!cfg.timing) {
            record.wall_ms = 0.0;
          }
          if (!record.equivalent) {
            throw Error("learned automaton differs from target (size " +
                        std::to_string(record.size) + ", seed " + std::to_string(gen.seed) +
                        ", algorithm " + std::string(algorithm_name(record.algorithm)) + ")");
          }
          if (progress) {
            const std::lock_guard lock(progress_mutex);
            progress(record);
          }
          records[j * per_job + a] = record;
        }
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.jobs, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }
  for (const auto& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "size,instance,seed,algorithm,eq_count,mq_count,total_queries,learned_states,"
         "target_states,equivalent,wall_ms\n";
  for (const auto& r : records) {
    std::ostringstream wall;
    wall << std::fixed << std::setprecision(3) << r.wall_ms;
    out << r.size << ',' << r.instance << ',' << r.seed << ',' << algorithm_name(r.algorithm)
        << ',' << r.eq_count << ',' << r.mq_count << ',' << r.total() << ',' << r.learned_states
        << ',' << r.target_states << ',' << (r.equivalent ? "true" : "false") << ','
        << wall.str() << '\n';
  }
}

void write_summary(std::ostream& out, const std::vector<BenchRecord>& records) {
  constexpr Algorithm order[] = {Algorithm::mp, Algorithm::table, Algorithm::tree};
  std::map<std::size_t, std::map<Algorithm, std::pair<double, std::size_t>>> sums;
  bool present[3] = {false, false, false};
  for (const auto& r : records) {
    auto& [sum, count] = sums[r.size][r.algorithm];
    sum += static_cast<double>(r.total());
    ++count;
    present[static_cast<int>(r.algorithm)] = true;
  }
  out << "size";
  for (const Algorithm a : order) {
    if (present[static_cast<int>(a)]) {
      out << ',' << algorithm_name(a);
    }
  }
  out << '\n';
  out << std::fixed << std::setprecision(2);
  for (const auto& [size, by_algorithm] : sums) {
    out << size;
    for (const Algorithm a : order) {
      if (!present[static_cast<int>(a)]) {
        continue;
      }
      const auto it = by_algorithm.find(a);
      out << ',';
      if (it != by_algorithm.end()) {
        out << it->second.first / static_cast<double>(it->second.second);
      }
    }
    out << '\n';
  }
}

}  // namespace wdba
