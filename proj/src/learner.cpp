#include "wdba/learner.hpp"

#include <stdexcept>
#include <string>

#include "wdba/classification_tree.hpp"
#include "wdba/observation_table.hpp"
#include "wdba/scc.hpp"
#include "wdba/trace.hpp"

namespace wdba {

std::unique_ptr<DiscriminationStructure> make_backend(BackendKind kind, Oracle& oracle,
                                                      Trace* trace) {
  if (kind == BackendKind::table) {
    return std::make_unique<ObservationTable>(oracle, trace);
  }
  return std::make_unique<ClassificationTree>(oracle);
}

LearnerSession::LearnerSession(Oracle& oracle, LearnerOptions options)
    : LearnerSession(oracle, make_backend(options.backend, oracle, options.trace), options) {}

LearnerSession::LearnerSession(Oracle& oracle, std::unique_ptr<DiscriminationStructure> backend,
                               LearnerOptions options)
    : oracle_(&oracle),
      options_(std::move(options)),
      backend_(std::move(backend)),
      resolver_(oracle, options_.trace, options_.verify) {}

Hypothesis LearnerSession::build_ts() {
  const std::size_t k = oracle_->alphabet().size();
  while (true) {
    backend_->ensure_closed();
    const auto states = backend_->states();
    Hypothesis hyp{TransitionSystem(states.size(), k, 0), {states.begin(), states.end()}};
    for (StateId q = 0; q < states.size(); ++q) {
      for (Letter a = 0; a < k; ++a) {
        hyp.ts.set_successor(q, a, backend_->successor(q, a));
      }
    }
    auto fix = backend_->self_consistency_cex(hyp);
    if (!fix) {
      return hyp;
    }
    ++stats_.consistency_fixes;
    if (options_.trace != nullptr) {
      options_.trace->note("representative leaves its own state");
    }
    refine(hyp, *fix);
  }
}

Marking LearnerSession::mark_acceptance(const Hypothesis& hyp) {
  const std::size_t n = hyp.ts.state_count();
  const SccDecomposition scc = scc_decompose(hyp.ts);
  Marking marking{std::vector<bool>(n, false), std::vector<Word>(n), std::nullopt};
  Trace* trace = options_.trace;
  for (const auto& component : scc.components) {
    if (component.trivial) {
      if (trace != nullptr) {
        trace->mark_transient(hyp.representatives[component.states.front()]);
      }
      continue;
    }
    std::optional<StateId> first_accepting;
    std::optional<StateId> first_rejecting;
    for (const StateId q : component.states) {
      Word loop = shortest_loop(hyp.ts, q);
      const bool accepting = oracle_->mq(hyp.representatives[q], loop);
      if (trace != nullptr) {
        trace->mark(hyp.representatives[q], accepting, loop);
      }
      marking.accepting[q] = accepting;
      marking.loops[q] = std::move(loop);
      auto& first = accepting ? first_accepting : first_rejecting;
      if (!first) {
        first = q;
      }
    }
    if (!marking.conflict && first_accepting && first_rejecting) {
      marking.conflict = StateConflict{*first_accepting, *first_rejecting,
                                       marking.loops[*first_accepting],
                                       marking.loops[*first_rejecting]};
    }
  }
  return marking;
}

Wdba LearnerSession::conjecture(const Hypothesis& hyp, const Marking& marking) const {
  return Wdba(oracle_->alphabet(), hyp.ts, marking.accepting);
}

ValidCex LearnerSession::analyze_cex(const Hypothesis& hyp, const Marking& marking,
                                     const Decomposition& w) {
  Decomposition normalized = normalize(hyp.ts, w);
  const StateId q = hyp.ts.run(normalized.prefix);
  if (marking.loops[q].empty()) {
    throw std::logic_error("analyze_cex: counterexample loops on a transient state");
  }
  const Word& u = hyp.representatives[q];
  const Word& v = marking.loops[q];
  const std::size_t bound = normalized.prefix.size();
  if (marking.accepting[q]) {
    // w is accepted by the conjecture but not in L.
    if (oracle_->mq(u, normalized.period)) {
      return ValidCex{std::move(normalized.prefix), std::move(normalized.period), false, bound};
    }
    return resolver_.resolve_conflict(hyp, q, v, normalized.period);
  }
  if (!oracle_->mq(u, normalized.period)) {
    return ValidCex{std::move(normalized.prefix), std::move(normalized.period), true, bound};
  }
  return resolver_.resolve_conflict(hyp, q, normalized.period, v);
}

bool LearnerSession::probe(const Hypothesis& hyp, const ValidCex& cex, std::size_t i) {
  if (i == 0) {
    return cex.prefix_member;
  }
  if (i == cex.split_bound) {
    return !cex.prefix_member;
  }
  const StateId x = hyp.ts.run(WordView(cex.prefix).first(i));
  return oracle_->mq(concat(hyp.representatives[x], WordView(cex.prefix).subspan(i)), cex.period);
}

Split LearnerSession::find_split(const Hypothesis& hyp, const ValidCex& cex) {
  const std::size_t k = cex.split_bound;
  if (k == 0 || k > cex.prefix.size() || cex.period.empty()) {
    throw std::logic_error("find_split: malformed counterexample");
  }
  std::size_t split = 0;
  if (options_.search == SearchMode::binary) {
    std::size_t lo = 0;
    std::size_t hi = k;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (probe(hyp, cex, mid) == cex.prefix_member) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    split = lo;
  } else {
    for (std::size_t i = 1; i <= k; ++i) {
      if (probe(hyp, cex, i) != cex.prefix_member) {
        split = i - 1;
        break;
      }
    }
  }
  const WordView u(cex.prefix);
  Split result;
  result.source = hyp.ts.run(u.first(split));
  result.letter = u[split];
  result.old_state = hyp.ts.successor(result.source, result.letter);
  result.new_state = hyp.representatives[result.source];
  result.new_state.push_back(result.letter);
  result.experiment = Experiment{suffix_from(u, split + 1), cex.period};
  result.new_outcome = cex.prefix_member;
  result.index = split;
  if (options_.trace != nullptr) {
    options_.trace->split(concat(hyp.representatives[result.source], u.subspan(split)),
                          concat(hyp.representatives[result.old_state], u.subspan(split + 1)),
                          split);
  }
  return result;
}

void LearnerSession::refine(const Hypothesis& hyp, const ValidCex& cex) {
  if (options_.verify) {
    const StateId target = hyp.ts.run(WordView(cex.prefix).first(cex.split_bound));
    const Word rewritten =
        concat(hyp.representatives[target], WordView(cex.prefix).subspan(cex.split_bound));
    if (oracle_->mq(cex.prefix, cex.period) != cex.prefix_member ||
        oracle_->mq(rewritten, cex.period) == cex.prefix_member) {
      throw std::logic_error("refine: counterexample is not valid");
    }
  }
  if (options_.trace != nullptr) {
    options_.trace->valid_cex(cex.prefix, cex.period);
  }
  if (options_.on_cex) {
    options_.on_cex(cex);
  }
  const Split split = find_split(hyp, cex);
  const std::size_t before = backend_->states().size();
  backend_->split(split);
  if (backend_->states().size() != before + 1) {
    throw std::logic_error("refine: split did not add exactly one state");
  }
  if (options_.trace != nullptr) {
    options_.trace->add_state(split.new_state);
    options_.trace->add_experiment(split.experiment.prefix, split.experiment.period);
  }
}

Wdba LearnerSession::run() {
  while (true) {
    Hypothesis hyp = build_ts();
    Marking marking = mark_acceptance(hyp);
    while (marking.conflict) {
      ++stats_.state_conflicts;
      const StateConflict& c = *marking.conflict;
      if (options_.trace != nullptr) {
        options_.trace->conflict_c1(hyp.representatives[c.u1], hyp.representatives[c.u2], c.x,
                                    c.y);
      }
      const ValidCex cex = resolver_.resolve_conflict_state(hyp, c.u1, c.u2, c.x, c.y);
      refine(hyp, cex);
      hyp = build_ts();
      marking = mark_acceptance(hyp);
    }
    Wdba candidate = conjecture(hyp, marking);
    if (options_.on_conjecture) {
      options_.on_conjecture(hyp, candidate);
    }
    ++stats_.equivalence_rounds;
    stats_.states_at_eq.push_back(hyp.ts.state_count());
    const Witness w = oracle_->eq(candidate);
    if (!w) {
      return candidate;
    }
    refine(hyp, analyze_cex(hyp, marking, *w));
  }
}

Wdba learn(Oracle& oracle, LearnerOptions options) {
  LearnerSession session(oracle, std::move(options));
  return session.run();
}

}  // namespace wdba
