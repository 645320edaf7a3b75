#include "wdba/mp_learner.hpp"

#include <array>
#include <stdexcept>
#include <unordered_set>

#include "wdba/conflict.hpp"
#include "wdba/observation_table.hpp"
#include "wdba/scc.hpp"
#include "wdba/trace.hpp"

namespace wdba {

std::vector<Decomposition> suffixes(const Decomposition& d) {
  if (d.period.empty()) {
    throw std::invalid_argument("suffixes: empty period");
  }
  std::vector<Decomposition> out;
  std::unordered_set<Decomposition, DecompositionHash> seen;
  const auto add = [&](Decomposition candidate) {
    candidate = canonical(std::move(candidate));
    if (seen.insert(candidate).second) {
      out.push_back(std::move(candidate));
    }
  };
  for (std::size_t i = 0; i <= d.prefix.size(); ++i) {
    add(Decomposition{suffix_from(d.prefix, i), d.period});
  }
  for (std::size_t r = 0; r < d.period.size(); ++r) {
    add(Decomposition{{}, concat(suffix_from(d.period, r), slice(d.period, 0, r))});
  }
  return out;
}

namespace {

struct Evidence {
  bool found = false;
  std::size_t row = 0;
  std::size_t column = 0;

  void offer(std::size_t r, std::size_t c) {
    if (!found || r < row || (r == row && c < column)) {
      found = true;
      row = r;
      column = c;
    }
  }
};

class MpSession {
 public:
  MpSession(Oracle& oracle, const MpOptions& options, MpStats& stats)
      : oracle_(&oracle),
        options_(&options),
        stats_(&stats),
        table_(oracle, options.trace, initial_columns(oracle.alphabet().size())),
        resolver_(oracle, options.trace) {}

  Wdba run() {
    while (true) {
      table_.ensure_closed();
      const Hypothesis hyp = build();
      std::vector<bool> accepting;
      if (auto cex = mark(hyp, accepting)) {
        ++stats_->conflict_counterexamples;
        if (options_->trace != nullptr) {
          options_->trace->valid_cex(cex->prefix, cex->period);
        }
        add_counterexample(Decomposition{std::move(cex->prefix), std::move(cex->period)});
        continue;
      }
      Wdba candidate(oracle_->alphabet(), hyp.ts, std::move(accepting));
      if (options_->on_conjecture) {
        options_->on_conjecture(candidate);
      }
      ++stats_->equivalence_rounds;
      const Witness w = oracle_->eq(candidate);
      if (!w) {
        return candidate;
      }
      add_counterexample(*w);
    }
  }

 private:
  static std::vector<Experiment> initial_columns(std::size_t alphabet_size) {
    std::vector<Experiment> columns;
    for (Letter a = 0; a < alphabet_size; ++a) {
      columns.push_back(Experiment{{}, Word{a}});
    }
    return columns;
  }

  Hypothesis build() const {
    const auto states = table_.states();
    const std::size_t k = oracle_->alphabet().size();
    Hypothesis hyp{TransitionSystem(states.size(), k, 0), {states.begin(), states.end()}};
    for (StateId q = 0; q < states.size(); ++q) {
      for (Letter a = 0; a < k; ++a) {
        hyp.ts.set_successor(q, a, table_.successor(q, a));
      }
    }
    return hyp;
  }

  // Component containing the cycle that f eventually enters from each state.
  static std::vector<std::uint32_t> limit_components(const std::vector<StateId>& f,
                                                     const SccDecomposition& scc) {
    constexpr std::uint32_t kUnknown = static_cast<std::uint32_t>(-1);
    constexpr std::uint32_t kOnPath = static_cast<std::uint32_t>(-2);
    std::vector<std::uint32_t> result(f.size(), kUnknown);
    std::vector<StateId> path;
    for (StateId start = 0; start < f.size(); ++start) {
      if (result[start] != kUnknown) {
        continue;
      }
      path.clear();
      StateId q = start;
      while (result[q] == kUnknown) {
        result[q] = kOnPath;
        path.push_back(q);
        q = f[q];
      }
      const std::uint32_t component = result[q] == kOnPath ? scc.component_of[q] : result[q];
      for (const StateId p : path) {
        result[p] = component;
      }
    }
    return result;
  }

  Decomposition witness_word(const Hypothesis& hyp, const Evidence& e) const {
    const Experiment& column = table_.experiments()[e.column];
    return normalize(hyp.ts, Decomposition{concat(table_.row_word(e.row), column.prefix),
                                           column.period});
  }

  std::optional<ValidCex> mark(const Hypothesis& hyp, std::vector<bool>& accepting) {
    const TransitionSystem& ts = hyp.ts;
    const SccDecomposition scc = scc_decompose(ts);
    std::vector<std::array<Evidence, 2>> evidence(scc.components.size());
    std::vector<StateId> row_state(table_.row_count());
    for (std::size_t r = 0; r < row_state.size(); ++r) {
      row_state[r] = ts.run(table_.row_word(r));
    }
    std::vector<StateId> f(ts.state_count());
    const auto columns = table_.experiments();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (StateId q = 0; q < f.size(); ++q) {
        f[q] = ts.run(q, columns[c].period);
      }
      const auto limit = limit_components(f, scc);
      for (std::size_t r = 0; r < row_state.size(); ++r) {
        const StateId entry_state = ts.run(row_state[r], columns[c].prefix);
        evidence[limit[entry_state]][table_.entry(r, c) ? 1 : 0].offer(r, c);
      }
    }

    accepting.assign(ts.state_count(), false);
    for (std::uint32_t id = 0; id < scc.components.size(); ++id) {
      const auto& component = scc.components[id];
      const auto& [rejecting_evidence, accepting_evidence] = evidence[id];
      if (!component.trivial && accepting_evidence.found && rejecting_evidence.found) {
        return resolve(hyp, accepting_evidence, rejecting_evidence);
      }
      if (!component.trivial && accepting_evidence.found) {
        for (const StateId q : component.states) {
          accepting[q] = true;
        }
      }
    }
    return std::nullopt;
  }

  ValidCex resolve(const Hypothesis& hyp, const Evidence& accepted, const Evidence& rejected) {
    const Decomposition a = witness_word(hyp, accepted);
    const Decomposition b = witness_word(hyp, rejected);
    const StateId qa = hyp.ts.run(a.prefix);
    const StateId qb = hyp.ts.run(b.prefix);
    if (!oracle_->mq(hyp.representatives[qa], a.period)) {
      return ValidCex{a.prefix, a.period, true, a.prefix.size()};
    }
    if (oracle_->mq(hyp.representatives[qb], b.period)) {
      return ValidCex{b.prefix, b.period, false, b.prefix.size()};
    }
    if (qa == qb) {
      return resolver_.resolve_conflict(hyp, qa, a.period, b.period);
    }
    if (options_->trace != nullptr) {
      options_->trace->conflict_c1(hyp.representatives[qa], hyp.representatives[qb], a.period,
                                   b.period);
    }
    return resolver_.resolve_conflict_state(hyp, qa, qb, a.period, b.period);
  }

  void add_counterexample(const Decomposition& w) {
    std::size_t added = 0;
    for (const auto& column : suffixes(w)) {
      if (table_.add_experiment(column)) {
        ++added;
        if (options_->trace != nullptr) {
          options_->trace->add_experiment(column.prefix, column.period);
        }
      }
    }
    if (added == 0) {
      throw std::logic_error("mp_learn: counterexample adds no column");
    }
  }

  Oracle* oracle_;
  const MpOptions* options_;
  MpStats* stats_;
  ObservationTable table_;
  ConflictResolver resolver_;
};

}  // namespace

Wdba mp_learn(Oracle& oracle, MpOptions options, MpStats* stats) {
  MpStats local;
  if (options.trace != nullptr) {
    options.trace->note("algo=mp");
  }
  MpSession session(oracle, options, stats != nullptr ? *stats : local);
  return session.run();
}

}  // namespace wdba
