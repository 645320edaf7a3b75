#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "wdba/conflict.hpp"
#include "wdba/trace.hpp"

using namespace wdba;
using fixtures::up;
using fixtures::w;

namespace {

Wdba parse(const char* text) { return parse_automaton(text); }

// Words containing an a.
const char* kSomeA = R"(wdba v1
alphabet a b
states 2
initial 0
accepting 1
trans 0 a 1
trans 0 b 0
trans 1 a 1
trans 1 b 1
)";

// b·Σ^ω together with a^ω.
const char* kLeadingBOrAllA = R"(wdba v1
alphabet a b
states 4
initial 0
accepting 1 2
trans 0 a 1
trans 0 b 2
trans 1 a 1
trans 1 b 3
trans 2 a 2
trans 2 b 2
trans 3 a 3
trans 3 b 3
)";

}  // namespace

TEST_CASE("shortest loops and paths break ties by letter order") {
  const auto a = fixtures::hypothesis_missing_bbb();
  CHECK(shortest_loop(a.ts, 0) == w("a"));
  CHECK(shortest_loop(a.ts, 1) == w("bbb"));
  CHECK(shortest_loop(a.ts, 2) == w("a"));
  CHECK(shortest_loop(a.ts, 3) == w("bbb"));

  const auto b = fixtures::hypothesis_sink_folded();
  CHECK(shortest_path(b.ts, 0, 1) == w("b"));
  CHECK(shortest_path(b.ts, 1, 0) == w("bba"));
  CHECK(shortest_loop(b.ts, 2) == w("ab"));
  CHECK(shortest_loop(b.ts, 3) == w("abbb"));

  TransitionSystem chain(2, 1);
  chain.set_successor(0, 0, 1);
  CHECK(shortest_loop(chain, 0).empty());
  CHECK(shortest_path(chain, 1, 0).empty());
}

TEST_CASE("Example (b): resolve_conflict_state delegates to resolve_conflict") {
  Teacher teacher(fixtures::language_d());
  std::ostringstream log;
  Trace trace(log, fixtures::ab());
  teacher.set_trace(&trace);
  ConflictResolver resolver(teacher, &trace);
  const auto hyp = fixtures::hypothesis_sink_folded();

  const ValidCex cex = resolver.resolve_conflict_state(hyp, 0, 1, w("a"), w("a"));
  CHECK(cex.prefix == w("ba"));
  CHECK(cex.period == w("bbab"));
  CHECK_FALSE(cex.prefix_member);
  CHECK(cex.split_bound == 2);
  CHECK(resolver.global_k() == 1);
  CHECK(fixtures::is_valid_cex(fixtures::language_d(), hyp, cex));
  CHECK(log.str() ==
        "RESOLVE-STATE u1=ε u2=b z=b w=bba\n"
        "MQ ε|bbba -> 1\n"
        "MQ b|bbab -> 1\n"
        "CONFLICT C2 u=b x=bbab y=a\n"
        "MQ ba|bbab -> 0\n"
        "RESOLVE u=b x=bbab y=a k=1 h=1\n");
}

TEST_CASE("resolve_conflict returns on the second test") {
  // One-state hypothesis over a language where a^ω is in and b^ω is out.
  const Wdba target = parse(kSomeA);
  Teacher teacher(target);
  ConflictResolver resolver(teacher, nullptr, true);
  const Hypothesis hyp{TransitionSystem(1, 2), {Word{}}};
  const ValidCex cex = resolver.resolve_conflict(hyp, 0, w("a"), w("b"));
  // MQ(b, a) = 1, so u·z = ba is tested against y = b.
  CHECK(cex.prefix == w("ba"));
  CHECK(cex.period == w("b"));
  CHECK(cex.prefix_member);
  CHECK(fixtures::is_valid_cex(target, hyp, cex));
}

TEST_CASE("resolve_conflict_state returns directly when both guards fail") {
  const Wdba target = parse(kLeadingBOrAllA);
  Teacher teacher(target);
  ConflictResolver resolver(teacher, nullptr, true);
  TransitionSystem ts(2, 2);
  ts.set_successor(0, 1, 1);
  ts.set_successor(1, 1, 0);
  const Hypothesis hyp{ts, {w(""), w("ab")}};
  const ValidCex cex = resolver.resolve_conflict_state(hyp, 0, 1, w("a"), w("a"));
  CHECK(cex.prefix == w("b"));
  CHECK(cex.period == w("bb"));
  CHECK(cex.prefix_member);
  CHECK(fixtures::is_valid_cex(target, hyp, cex));
}

TEST_CASE("preconditions") {
  Teacher teacher(fixtures::language_d());
  ConflictResolver checked(teacher, nullptr, true);
  const auto hyp = fixtures::hypothesis_sink_folded();
  // b·a^ω is not in L, so (b, ε) with x = a violates u1·x^ω ∈ L.
  CHECK_THROWS_AS(checked.resolve_conflict_state(hyp, 1, 0, w("a"), w("a")), std::logic_error);
  CHECK_THROWS_AS(checked.resolve_conflict(hyp, 1, w("a"), w("bba")), std::logic_error);
  // x must loop on u regardless of verification.
  ConflictResolver unchecked(teacher, nullptr, false);
  CHECK_THROWS_AS(unchecked.resolve_conflict(hyp, 0, w("b"), w("a")), std::logic_error);
}

TEST_CASE("global k persists and grows across calls") {
  // Target over {a}: only two states, hypothesis merges them into one so the
  // inner loop may need k > 1 on some instances; k never decreases.
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    const Wdba target = fixtures::random_weak(rng, 2 + rng() % 5, 2);
    Teacher teacher(target);
    ConflictResolver resolver(teacher, nullptr);
    const Hypothesis hyp{TransitionSystem(1, 2), {Word{}}};
    std::size_t last_k = resolver.global_k();
    for (int call = 0; call < 3; ++call) {
      const Word x = fixtures::random_word(rng, 2, 1, 3);
      const Word y = fixtures::random_word(rng, 2, 1, 3);
      if (!member(target, Decomposition{{}, x}) || member(target, Decomposition{{}, y})) {
        continue;
      }
      const ValidCex cex = resolver.resolve_conflict(hyp, 0, x, y);
      CHECK(fixtures::is_valid_cex(target, hyp, cex));
      CHECK(resolver.global_k() >= last_k);
      CHECK(resolver.global_k() <= minimize(target).state_count());
      last_k = resolver.global_k();
    }
  }
}
