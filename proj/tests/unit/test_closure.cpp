#include "doctest.h"
#include "generators.hpp"
#include "mtfa/closure.hpp"
#include "mtfa/error.hpp"
#include "mtfa/format.hpp"
#include "mtfa/oracle.hpp"

using namespace mtfa;
using testing::GenParams;
using testing::Rng;

namespace {

SemiSortedAsync doubling() {
  return sorted_to_semisorted(std::get<SortedAsync>(load_machine(std::string(MTFA_FIXTURE_DIR) + "/xn_x2n_sorted.mta")));
}

// One-tape DFA for words over {x} whose length is 0 mod `period`.
SyncAutomaton multiples(std::size_t period) {
  SyncAutomaton m(1, Alphabet({"x"}));
  for (std::size_t i = 0; i < period; ++i) m.add_state("r" + std::to_string(i), i == 0, i == 0);
  for (std::size_t i = 0; i < period; ++i) m.add_transition(static_cast<State>(i), {0}, static_cast<State>((i + 1) % period));
  return m;
}

// Pairs (w, v) with |w| even and v arbitrary.
SemiSortedAsync even_first() {
  SemiSortedAsync m(2, Alphabet({"x", "y"}));
  const State e = m.add_state("e", 0, true);
  const State o = m.add_state("o", 0);
  const State r = m.add_state("r", 1);
  const State acc = m.add_state("acc", 1, false, true);
  for (Letter l : {0, 1}) {
    m.add_transition(e, l, o);
    m.add_transition(o, l, e);
    m.add_transition(r, l, r);
  }
  m.add_transition(e, kPad, r);
  m.add_transition(r, kPad, acc);
  return m;
}

}  // namespace

TEST_CASE("existential projections of the fixture") {
  const auto m = doubling();
  CHECK(equivalent(exists_two_tape(m, 1), multiples(1)));
  CHECK(equivalent(exists_two_tape(m, 0), multiples(2)));
  CHECK_FALSE(equivalent(exists_two_tape(m, 0), multiples(1)));
  CHECK(to_saa_exists(m, 0).tapes() == 1);
}

TEST_CASE("universal projection") {
  const auto m = even_first();
  const auto forall = forall_two_tape(m, 1);
  for (const auto& w : lenlex_stream(m.alphabet(), 5)) CHECK(accepts(forall, {w}) == (w.size() % 2 == 0));
  CHECK(is_empty(forall_two_tape(doubling(), 1)));
  CHECK(is_empty(forall_two_tape(doubling(), 0)));
  CHECK_THROWS_AS(forall_two_tape(SemiSortedAsync(3, Alphabet({"x"})), 0), ArityError);
}

TEST_CASE("projections of random deterministic machines") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    GenParams p;
    p.tapes = 2;
    p.states = 4;
    p.density = 0.8;
    auto m = testing::random_semisorted(rng, p);
    const int tape = trial % 2;
    const auto ex = exists_two_tape(m, tape);
    const auto fa = forall_two_tape(m, tape);
    const auto neg = sorted_to_semisorted(complement_sorted(m));
    CHECK(equivalent(fa, complement(exists_two_tape(neg, tape))));
    for (const auto& w : lenlex_stream(m.alphabet(), 3)) {
      bool some = false, all = true;
      for (const auto& v : lenlex_stream(m.alphabet(), 6)) {
        const WordTuple t = tape == 1 ? WordTuple{w, v} : WordTuple{v, w};
        const bool in = oracle_accepts(m, t);
        some = some || in;
        all = all && in;
      }
      if (some) CHECK(accepts(ex, {w}));
      if (accepts(fa, {w})) CHECK(all);
      if (!all) CHECK_FALSE(accepts(fa, {w}));
    }
  }
}
