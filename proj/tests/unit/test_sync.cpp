#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "mtfa/error.hpp"
#include "mtfa/oracle.hpp"

using namespace mtfa;
using testing::GenParams;
using testing::Rng;

namespace {

// (x, xx) repeated: the regular relation {(x^n, x^2n)} is not regular, so
// use {(x^n, y^n)} instead.
SyncAutomaton equal_length_xy() {
  SyncAutomaton m(2, Alphabet({"x", "y"}));
  const State q = m.add_state("q", true, true);
  m.add_transition(q, {0, 1}, q);
  return m;
}

// Brute-force projection: the erased component never needs to be longer
// than the kept ones plus the number of states.
bool projected_oracle(const SyncAutomaton& m, int tape, const WordTuple& kept) {
  std::size_t longest = 0;
  for (const auto& w : kept) longest = std::max(longest, w.size());
  for (const auto& e : lenlex_stream(m.alphabet(), longest + m.num_states())) {
    WordTuple full = kept;
    full.insert(full.begin() + tape, e);
    if (oracle_accepts(m, full)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("padded alphabet size") {
  CHECK(padded_alphabet(1, 2).size() == 2);
  CHECK(padded_alphabet(2, 2).size() == 8);
  CHECK(padded_alphabet(3, 1).size() == 7);
  const auto syms = padded_alphabet(2, 1);
  CHECK(syms.front() == PaddedSymbol{kPad, 0});
  CHECK(std::find(syms.begin(), syms.end(), PaddedSymbol{kPad, kPad}) == syms.end());
}

TEST_CASE("hand-built machine") {
  const auto m = equal_length_xy();
  CHECK(accepts(m, {{0, 0}, {1, 1}}));
  CHECK(accepts(m, {{}, {}}));
  CHECK_FALSE(accepts(m, {{0}, {1, 1}}));
  CHECK_FALSE(accepts(m, {{1}, {1}}));
  CHECK_THROWS_AS(accepts(m, {{0}}), ArityError);
  CHECK(m.is_deterministic());
}

TEST_CASE("simulator agrees with oracle on random machines") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    GenParams p;
    p.tapes = 1 + trial % 3;
    p.letters = 1 + trial % 2;
    const auto m = testing::random_sync(rng, p);
    const BoundedDomain d(m.alphabet(), p.tapes, p.tapes == 3 ? 2 : 3);
    CHECK(language_set(m, d, Engine::Simulator) == language_set(m, d, Engine::Oracle));
  }
}

TEST_CASE("determinize and remove_epsilons keep the language") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    GenParams p;
    p.eps = 0.4;
    const auto m = testing::random_sync(rng, p);
    const auto d = determinize(m);
    CHECK(d.is_deterministic());
    const BoundedDomain dom(m.alphabet(), 2, 3);
    CHECK(languages_equal(m, d, dom).equal);
    const auto r = remove_epsilons(m);
    CHECK(r.num_states() == m.num_states());
    for (State s = 0; s < r.num_states(); ++s) CHECK(r.epsilon(s).empty());
    CHECK(languages_equal(m, r, dom).equal);
    CHECK(equivalent(m, d));
  }
}

TEST_CASE("padded validity accepts every tuple") {
  const auto v = padded_validity(2, Alphabet({"a", "b"}));
  for (const auto& t : BoundedDomain(v.alphabet(), 2, 3).tuples()) CHECK(accepts(v, t));
  CHECK_FALSE(accepts_padded(v, {{kPad, 0}, {0, 0}}));
  CHECK_FALSE(accepts_padded(v, {{0, kPad}, {0, 1}}));
}

TEST_CASE("boolean operations match set operations") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    GenParams p;
    p.tapes = 1 + trial % 2;
    const auto a = testing::random_sync(rng, p);
    const auto b = testing::random_sync(rng, p);
    const auto c = complement(a);
    const auto u = unite(a, b);
    const auto i = intersect(a, b);
    for (const auto& t : BoundedDomain(a.alphabet(), p.tapes, 3).tuples()) {
      const bool in_a = oracle_accepts(a, t);
      const bool in_b = oracle_accepts(b, t);
      CHECK(accepts(c, t) == !in_a);
      CHECK(accepts(u, t) == (in_a || in_b));
      CHECK(accepts(i, t) == (in_a && in_b));
    }
    CHECK(equivalent(a, complement(c)));
    CHECK(is_empty(intersect(a, c)));
  }
  SyncAutomaton one(1, Alphabet({"a"}));
  CHECK_THROWS_AS(unite(one, equal_length_xy()), ArityError);
}

TEST_CASE("projection matches brute force") {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    GenParams p;
    p.tapes = 2 + trial % 2;
    p.letters = 2;
    p.density = 0.4;
    const auto m = testing::random_sync(rng, p);
    const int tape = trial % p.tapes;
    const auto proj = project_exists(m, tape);
    CHECK(proj.tapes() == p.tapes - 1);
    for (const auto& kept : BoundedDomain(m.alphabet(), p.tapes - 1, 2).tuples()) {
      CHECK(accepts(proj, kept) == projected_oracle(m, tape, kept));
    }
  }
  CHECK_THROWS_AS(project_exists(equal_length_xy(), 2), ArityError);
}

TEST_CASE("projection ignores non-padded runs") {
  // Accepts (x, $)(x, y): not a padded string, so the projection is empty.
  SyncAutomaton m(2, Alphabet({"x", "y"}));
  const State a = m.add_state("a", true);
  const State b = m.add_state("b");
  const State c = m.add_state("c", false, true);
  m.add_transition(a, {0, kPad}, b);
  m.add_transition(b, {0, 1}, c);
  CHECK(is_empty(m));
  CHECK(is_empty(project_exists(m, 0)));
  CHECK(is_empty(project_exists(m, 1)));
}

TEST_CASE("least accepted and emptiness") {
  Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    GenParams p;
    p.tapes = 1;
    p.letters = 2;
    p.states = 4;
    p.density = 0.35;
    p.accept = 0.2;
    const auto m = testing::random_sync(rng, p);
    std::optional<Word> expect;
    for (const auto& w : lenlex_stream(m.alphabet(), m.num_states())) {
      if (oracle_accepts(m, {w})) {
        expect = w;
        break;
      }
    }
    const auto got = least_accepted(m);
    CHECK(got.has_value() == expect.has_value());
    CHECK(is_empty(m) == !expect.has_value());
    if (got && expect) CHECK((*got)[0] == *expect);
  }
}

TEST_CASE("least accepted orders columns for several tapes") {
  const auto m = equal_length_xy();
  CHECK(least_accepted(m) == WordTuple{{}, {}});
  SyncAutomaton n(2, Alphabet({"x", "y"}));
  const State s = n.add_state("s", true);
  const State t = n.add_state("t", false, true);
  n.add_transition(s, {1, kPad}, t);
  n.add_transition(s, {kPad, 0}, t);
  CHECK(least_accepted(n) == WordTuple{{}, {0}});
}

TEST_CASE("pumping on random accepted tuples") {
  Rng rng(16);
  int checked = 0;
  while (checked < 40) {
    GenParams p;
    p.tapes = 1 + checked % 2;
    p.states = 3;
    p.eps = 0.2;
    const auto m = restrict_to_padded(testing::random_sync(rng, p));
    const auto t = testing::random_accepted(rng, m, m.num_states());
    if (!t) continue;
    const auto d = pump(m, *t);
    CHECK(d.k >= 1);
    CHECK(d.pumped(1) == *t);
    for (std::size_t i = 0; i < d.middle.size(); ++i) CHECK((d.middle_is_pad(i) || d.middle_is_letters(i)));
    CHECK(accepts(m, d.pumped(2)));
    CHECK(accepts(m, d.pumped(3)));
    ++checked;
  }
  CHECK_THROWS_AS(pump(equal_length_xy(), {{0}, {0}}), PreconditionError);
}

TEST_CASE("pumping finds the leftmost loop") {
  SyncAutomaton m(1, Alphabet({"a"}));
  const State s = m.add_state("s", true);
  const State t = m.add_state("t", false, true);
  m.add_transition(s, {0}, t);
  m.add_transition(t, {0}, t);
  const auto d = pump(m, {{0, 0, 0}});
  CHECK(d.k == 2);
  CHECK(d.l == 0);
  CHECK(d.pumped(3) == WordTuple{{0, 0, 0, 0, 0}});
}

TEST_CASE("pumping needs a loop that keeps the strings padded") {
  // Accepts (aa, aba) along q0 q2 q1 q2; the only loop reads a then $ on tape 1.
  SyncAutomaton m(2, Alphabet({"a", "b"}));
  const State q0 = m.add_state("q0", true);
  const State q1 = m.add_state("q1");
  const State q2 = m.add_state("q2", false, true);
  m.add_transition(q0, {0, 0}, q2);
  m.add_transition(q2, {0, 1}, q1);
  m.add_transition(q1, {kPad, 0}, q2);
  CHECK_THROWS_AS(pump(m, {{0, 0}, {0, 1, 0}}), PreconditionError);
  const auto r = restrict_to_padded(m);
  CHECK(accepts(r, {{0, 0}, {0, 1, 0}}));
}
