// Command-line front end: membership, equivalence, minimization, random
// generation, learning and the benchmark sweep.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wdba/benchmark.hpp"
#include "wdba/equivalence.hpp"
#include "wdba/errors.hpp"
#include "wdba/generator.hpp"
#include "wdba/io.hpp"
#include "wdba/learner.hpp"
#include "wdba/mp_learner.hpp"
#include "wdba/teacher.hpp"
#include "wdba/trace.hpp"

namespace {

using namespace wdba;

// Bad input from the user: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Wdba load(const std::string& path) {
  try {
    return load_automaton(path);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Word parse(const Alphabet& alphabet, const std::string& text) {
  try {
    return alphabet.parse_word(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> parts;
  std::size_t pos = 0;
  try {
    while (pos <= text.size()) {
      const std::size_t colon = std::min(text.find(':', pos), text.size());
      parts.push_back(std::stoul(text.substr(pos, colon - pos)));
      pos = colon + 1;
    }
  } catch (const std::logic_error&) {
    throw UsageError("--sizes expects LO:HI:STEP or a single size");
  }
  if (parts.size() == 1) {
    return parts;
  }
  if (parts.size() != 3 || parts[2] == 0 || parts[0] > parts[1] || parts[0] == 0) {
    throw UsageError("--sizes expects LO:HI:STEP with 0 < LO <= HI and STEP > 0");
  }
  std::vector<std::size_t> sizes;
  for (std::size_t s = parts[0]; s <= parts[1]; s += parts[2]) {
    sizes.push_back(s);
  }
  return sizes;
}

void write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw UsageError("cannot write " + path);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning weak deterministic Büchi automata"};
  app.require_subcommand(1);

  std::string automaton_path;
  std::string prefix_text;
  std::string period_text;
  auto* member_cmd = app.add_subcommand("member", "Is prefix·period^ω accepted?");
  member_cmd->add_option("--automaton", automaton_path, "Automaton file")->required();
  member_cmd->add_option("--prefix", prefix_text, "Prefix word (letters joined by '.')");
  member_cmd->add_option("--period", period_text, "Non-empty period word")->required();

  std::string lhs_path;
  std::string rhs_path;
  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two automata");
  equiv_cmd->add_option("lhs", lhs_path)->required();
  equiv_cmd->add_option("rhs", rhs_path)->required();

  std::string in_path;
  std::string out_path;
  auto* minimize_cmd = app.add_subcommand("minimize", "Write the minimal equivalent automaton");
  minimize_cmd->add_option("input", in_path)->required();
  minimize_cmd->add_option("output", out_path, "Output file ('-' for stdout)")->required();

  GenConfig gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random minimal weak automaton");
  gen_cmd->add_option("--states", gen.states)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--alphabet", gen.alphabet)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--scc-min", gen.scc_min)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--scc-max", gen.scc_max)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--min-scc-size", gen.min_scc_size, "Smallest SCC counted in the range")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--exit-percent", gen.exit_percent)->check(CLI::Range(0, 100));
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--max-attempts", gen.max_attempts)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  std::string target_path;
  std::string backend = "tree";
  std::string search = "binary";
  std::string trace_path;
  std::string learned_path;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a target automaton through queries");
  learn_cmd->add_option("--target", target_path)->required();
  learn_cmd->add_option("--backend", backend)
      ->check(CLI::IsMember({"table", "tree", "mp"}));
  learn_cmd->add_option("--search", search)->check(CLI::IsMember({"binary", "linear"}));
  learn_cmd->add_option("--trace", trace_path, "Write the query trace here");
  learn_cmd->add_option("--out", learned_path, "Write the learned automaton here");

  BenchConfig bench;
  std::string sizes_text = "10:100:10";
  std::string algorithms_text = "table,tree,mp";
  std::string csv_path;
  std::string summary_path;
  bool no_timing = false;
  bench.per_size = 50;
  auto* bench_cmd = app.add_subcommand("bench", "Run the random-target benchmark");
  bench_cmd->add_option("--sizes", sizes_text, "LO:HI:STEP");
  bench_cmd->add_option("--per-size", bench.per_size)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--alphabet", bench.alphabet)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--scc-min", bench.scc_min)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--scc-max", bench.scc_max)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min-scc-size", bench.min_scc_size)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--exit-percent", bench.exit_percent)->check(CLI::Range(0, 100));
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--algorithms", algorithms_text, "Comma-separated: table,tree,mp");
  bench_cmd->add_option("--search", search)->check(CLI::IsMember({"binary", "linear"}));
  bench_cmd->add_option("--out", csv_path, "CSV output (default stdout)");
  bench_cmd->add_option("--summary", summary_path, "Per-size mean total queries");
  bench_cmd->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", no_timing, "Write wall_ms as 0 for reproducible files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*member_cmd) {
      const Wdba a = load(automaton_path);
      const Word prefix = parse(a.alphabet(), prefix_text);
      const Word period = parse(a.alphabet(), period_text);
      if (period.empty()) {
        throw UsageError("--period must be non-empty");
      }
      std::cout << (member(a, Decomposition{prefix, period}) ? 1 : 0) << '\n';
    } else if (*equiv_cmd) {
      const Wdba lhs = load(lhs_path);
      const Wdba rhs = load(rhs_path);
      if (!(lhs.alphabet() == rhs.alphabet())) {
        throw UsageError("automata use different alphabets");
      }
      const Witness w = product_witness(lhs, rhs);
      if (w) {
        std::cout << "cex " << lhs.alphabet().format(*w) << '\n';
      } else {
        std::cout << "equivalent\n";
      }
    } else if (*minimize_cmd) {
      const Wdba a = load(in_path);
      if (!is_weak(a)) {
        throw UsageError(in_path + ": automaton is not weak");
      }
      write_to(out_path, serialize_automaton(minimize(a)));
    } else if (*gen_cmd) {
      write_to(gen_out, serialize_automaton(generate_minimal_wdba(gen)));
    } else if (*learn_cmd) {
      const Wdba target = load(target_path);
      if (!is_weak(target)) {
        throw UsageError(target_path + ": automaton is not weak");
      }
      std::ofstream trace_file;
      std::optional<Trace> trace;
      if (!trace_path.empty()) {
        trace_file.open(trace_path, std::ios::binary);
        if (!trace_file) {
          throw UsageError("cannot write " + trace_path);
        }
        trace.emplace(trace_file, target.alphabet());
      }
      Trace* trace_ptr = trace ? &*trace : nullptr;
      Teacher teacher(target, TeacherOptions{false, trace_ptr});
      Wdba learned;
      if (backend == "mp") {
        learned = mp_learn(teacher, MpOptions{trace_ptr, {}});
      } else {
        LearnerOptions options;
        options.backend = backend == "table" ? BackendKind::table : BackendKind::tree;
        options.search = search == "linear" ? SearchMode::linear : SearchMode::binary;
        options.trace = trace_ptr;
        learned = learn(teacher, options);
      }
      if (!learned_path.empty()) {
        write_to(learned_path, serialize_automaton(learned));
      }
      const QueryCounters counters = teacher.snapshot();
      std::cout << "states=" << learned.state_count() << " eq=" << counters.equivalence
                << " mq=" << counters.membership << '\n';
    } else if (*bench_cmd) {
      bench.sizes = parse_sizes(sizes_text);
      try {
        bench.algorithms = parse_algorithms(algorithms_text);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      if (bench.scc_min > bench.scc_max) {
        throw UsageError("--scc-min must not exceed --scc-max");
      }
      bench.search = search == "linear" ? SearchMode::linear : SearchMode::binary;
      bench.timing = !no_timing;
      const auto records = run_benchmark(bench);
      std::ostringstream csv;
      write_csv(csv, records);
      write_to(csv_path, csv.str());
      if (!summary_path.empty()) {
        std::ostringstream summary;
        write_summary(summary, records);
        write_to(summary_path, summary.str());
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "wdba: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "wdba: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wdba: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
