#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "wdba/errors.hpp"
#include "wdba/learner.hpp"
#include "wdba/trace.hpp"

using namespace wdba;
using fixtures::w;

TEST_CASE("membership queries against D") {
  Teacher t(fixtures::language_d());
  CHECK(t.snapshot() == QueryCounters{0, 0});
  CHECK(t.mq(w("bbbba"), w("a")));
  CHECK(t.snapshot() == QueryCounters{1, 0});
  CHECK_FALSE(t.mq(w("ba"), w("a")));
  CHECK(t.mq(w("b"), w("bbab")));
  CHECK(t.mq(w(""), w("a")));
  CHECK(t.snapshot().membership == 4);
  CHECK_THROWS_AS(t.mq(w("a"), w("")), std::invalid_argument);
  CHECK(t.snapshot().membership == 4);
}

TEST_CASE("repeated queries are counted unless caching is on") {
  Teacher plain(fixtures::language_d());
  plain.mq(w("b"), w("a"));
  plain.mq(w("b"), w("a"));
  plain.mq(w("ba"), w("a"));
  CHECK(plain.snapshot().membership == 3);

  Teacher cached(fixtures::language_d(), TeacherOptions{true});
  // (b, a), (ba, a) and (b, aa) denote one ω-word.
  cached.mq(w("b"), w("a"));
  cached.mq(w("b"), w("a"));
  cached.mq(w("ba"), w("a"));
  cached.mq(w("b"), w("aa"));
  CHECK(cached.snapshot().membership == 1);
  cached.mq(w(""), w("a"));
  CHECK(cached.snapshot().membership == 2);
}

TEST_CASE("equivalence queries") {
  const Wdba d = fixtures::language_d();
  Teacher t(d);
  CHECK_FALSE(t.eq(d));
  CHECK(t.snapshot() == QueryCounters{0, 1});

  const auto hyp = fixtures::hypothesis_missing_bbb();
  const Wdba b(fixtures::ab(), hyp.ts, {true, true, false, true});
  const Witness cex = t.eq(b);
  REQUIRE(cex);
  CHECK(member(d, *cex) != member(b, *cex));
  CHECK(*cex == fixtures::up("bbbba", "a"));
  CHECK(t.snapshot().equivalence == 2);

  TransitionSystem two(2, 2);
  two.set_successor(0, 0, 1);
  two.set_successor(1, 0, 0);
  CHECK_THROWS_AS(t.eq(Wdba(fixtures::ab(), two, {true, false})), WeaknessError);
  CHECK_THROWS_AS(t.eq(Wdba(Alphabet({"x", "y"}), d.ts(), d.accepting())), AlphabetMismatch);
}

TEST_CASE("a conjecture with too few states is always refuted") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 100; ++round) {
    const Wdba target = minimize(fixtures::random_weak(rng, 2 + rng() % 6, 2));
    if (target.state_count() < 2) {
      continue;
    }
    Teacher t(target);
    const Wdba small = minimize(fixtures::random_weak(rng, 1 + rng() % (target.state_count() - 1), 2));
    CHECK(t.eq(small).has_value());
  }
}

TEST_CASE("counters match the session trace") {
  std::ostringstream log;
  Trace trace(log, fixtures::ab());
  Teacher t(fixtures::language_d(), TeacherOptions{false, &trace});
  learn(t);
  std::istringstream lines(log.str());
  std::string line;
  std::uint64_t mq = 0;
  std::uint64_t eq = 0;
  while (std::getline(lines, line)) {
    mq += line.rfind("MQ ", 0) == 0 ? 1 : 0;
    eq += line.rfind("EQ ", 0) == 0 ? 1 : 0;
  }
  CHECK(t.snapshot() == QueryCounters{mq, eq});
}

TEST_CASE("identical query sequences give identical answers") {
  std::mt19937_64 rng(37);
  const Wdba target = fixtures::random_weak(rng, 8, 2);
  Teacher a(target);
  Teacher b(target);
  for (int i = 0; i < 200; ++i) {
    const Word u = fixtures::random_word(rng, 2, 0, 6);
    const Word v = fixtures::random_word(rng, 2, 1, 4);
    CHECK(a.mq(u, v) == b.mq(u, v));
  }
  CHECK(a.snapshot() == b.snapshot());
}
