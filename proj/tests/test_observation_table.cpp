#include <doctest.h>

#include <set>
#include <sstream>

#include "support.hpp"
#include "wdba/equivalence.hpp"
#include "wdba/learner.hpp"
#include "wdba/observation_table.hpp"
#include "wdba/trace.hpp"

using namespace wdba;
using fixtures::up;
using fixtures::w;

TEST_CASE("fresh table") {
  Teacher teacher(fixtures::language_d());
  ObservationTable table(teacher);
  table.ensure_closed();
  CHECK(table.states().size() == 1);
  CHECK(table.successor(0, 0) == 0);
  CHECK(table.successor(0, 1) == 0);
  CHECK(table.classify(w("")) == 0);
  CHECK(teacher.snapshot().membership == 0);
}

TEST_CASE("entries are membership queries") {
  Teacher teacher(fixtures::language_d());
  ObservationTable table(teacher, nullptr, {up("", "a")});
  CHECK(table.entry(table.state_row(0), 0));
  CHECK_FALSE(table.entry(table.extension_row(0, 1), 0));  // b·a^ω
}

TEST_CASE("experiment (ba, a) separates bbb from ε") {
  Teacher teacher(fixtures::language_d());
  ObservationTable table(teacher, nullptr, {up("", "a"), up("", "b")});
  CHECK(table.classify(w("bbb")) == 0);
  CHECK(table.add_experiment(up("ba", "a")));
  CHECK(table.classify(w("bbb")) != std::optional<StateId>(0));
}

TEST_CASE("a separating experiment set yields the transition system of D") {
  Teacher teacher(fixtures::language_d());
  ObservationTable table(teacher, nullptr, {up("", "a"), up("", "b"), up("ba", "a")});
  for (const char* u : {"b", "ba", "bb", "bbb"}) {
    table.add_state(w(u));
  }
  table.ensure_closed();
  REQUIRE(table.states().size() == 5);
  TransitionSystem ts(5, 2);
  for (StateId q = 0; q < 5; ++q) {
    for (Letter a = 0; a < 2; ++a) {
      ts.set_successor(q, a, table.successor(q, a));
    }
  }
  std::vector<bool> accepting(5);
  for (StateId q = 0; q < 5; ++q) {
    accepting[q] = table.entry(table.state_row(q), 0) || table.entry(table.state_row(q), 1);
  }
  CHECK(isomorphic(Wdba(fixtures::ab(), ts, accepting), fixtures::language_d()));
  CHECK(table.classify(w("bbba")) == 0);
  CHECK(table.classify(w("bb")) == 3);
  CHECK(table.classify(w("bbbbbba")) == 2);

  std::ostringstream out;
  table.dump(out);
  CHECK(out.str() ==
        "E ε|a ε|b ba|a\n"
        "ε 1 1 0\n"
        "b 0 1 0\n"
        "ba 0 0 0\n"
        "bb 0 1 1\n"
        "bbb 1 1 1\n"
        "--\n"
        "a 1 1 0\n"
        "baa 0 0 0\n"
        "bab 0 0 0\n"
        "bba 0 0 0\n"
        "bbba 1 1 0\n"
        "bbbb 1 1 0\n");
}

TEST_CASE("states must be separated and experiments are deduplicated") {
  Teacher teacher(fixtures::language_d());
  ObservationTable table(teacher, nullptr, {up("", "a")});
  CHECK_THROWS_AS(table.add_state(w("a")), std::logic_error);
  CHECK_FALSE(table.add_experiment(up("a", "a")));
  CHECK_FALSE(table.add_experiment(up("", "aa")));
  CHECK(table.experiments().size() == 1);
  CHECK_THROWS_AS(table.add_experiment(Experiment{w("a"), Word{}}), std::invalid_argument);
}

TEST_CASE("identical queries are asked once") {
  Teacher teacher(fixtures::language_d());
  ObservationTable table(teacher, nullptr, {up("", "a")});
  const auto before = teacher.snapshot().membership;
  CHECK(before == 3);  // rows ε, a, b
  CHECK(table.add_experiment(up("a", "b")));
  CHECK(teacher.snapshot().membership == before + 3);  // a|b, aa|b, ba|b
  // Row ε under (a, b) already asked a|b; only ε|b and b|b remain.
  CHECK(table.add_experiment(up("", "b")));
  CHECK(teacher.snapshot().membership == before + 3 + 2);
}

TEST_CASE("closing promotes the first unmatched row and traces it") {
  Teacher teacher(fixtures::language_d());
  std::ostringstream log;
  Trace trace(log, fixtures::ab());
  ObservationTable table(teacher, &trace, {up("", "a"), up("", "b")});
  CHECK(table.close_once());
  CHECK(table.states().back() == w("b"));
  table.ensure_closed();
  CHECK(log.str() == "ADD-STATE b\nADD-STATE ba\n");
  CHECK_FALSE(table.close_once());
}

TEST_CASE("table invariants after learning random targets") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 60; ++round) {
    const Wdba target = minimize(fixtures::random_weak(rng, 2 + rng() % 10, 2));
    Teacher teacher(target);
    auto owned = std::make_unique<ObservationTable>(teacher);
    ObservationTable& table = *owned;
    LearnerOptions options;
    options.backend = BackendKind::table;
    LearnerSession session(teacher, std::move(owned), options);
    const Wdba learned = session.run();
    CHECK(isomorphic(learned, target));

    // Entries equal fresh teacher answers.
    for (std::size_t row = 0; row < table.row_count(); ++row) {
      for (std::size_t c = 0; c < table.experiments().size(); ++c) {
        const Experiment& e = table.experiments()[c];
        CHECK(table.entry(row, c) ==
              member(target, Decomposition{concat(table.row_word(row), e.prefix), e.period}));
      }
    }
    // Distinct S rows, prefix-closed S, closed table.
    std::set<std::vector<bool>> seen;
    std::set<Word> states(table.states().begin(), table.states().end());
    for (StateId q = 0; q < table.states().size(); ++q) {
      CHECK(seen.insert(table.row_bits(table.state_row(q))).second);
      const Word& u = table.states()[q];
      if (!u.empty()) {
        CHECK(states.contains(Word(u.begin(), u.end() - 1)));
      }
      for (Letter a = 0; a < 2; ++a) {
        CHECK(table.state_with_row(table.row_bits(table.extension_row(q, a))).has_value());
      }
    }
  }
}
