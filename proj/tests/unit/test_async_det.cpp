#include "doctest.h"
#include "generators.hpp"
#include "mtfa/error.hpp"
#include "mtfa/format.hpp"
#include "mtfa/oracle.hpp"

using namespace mtfa;
using testing::GenParams;
using testing::Rng;

namespace {

template <class M>
M fixture(const char* name) {
  return std::get<M>(load_machine(std::string(MTFA_FIXTURE_DIR) + "/" + name));
}

Word xs(std::size_t n) { return Word(n, 0); }

}  // namespace

TEST_CASE("fixture machine accepts (x^n, x^2n)") {
  const auto m = fixture<SortedAsync>("xn_x2n_sorted.mta");
  m.validate();
  for (std::size_t i = 0; i <= 6; ++i) {
    for (std::size_t j = 0; j <= 8; ++j) CHECK(accepts_sorted(m, {xs(i), xs(j)}) == (j == 2 * i));
  }
  const auto run = run_sorted(m, {xs(1), xs(2)});
  CHECK(run.accepted());
  CHECK(run.steps.size() == 5);
  CHECK(run.steps[1].tape == 1);
  CHECK(run_sorted(m, {xs(1), xs(1)}).status == RunStatus::RejectedStuck);
  CHECK(run_sorted(m, {xs(1), xs(3)}).status == RunStatus::RejectedStuck);
}

TEST_CASE("semisorted run statuses") {
  SemiSortedAsync m(2, Alphabet({"x"}));
  const State a = m.add_state("a", 0, true);
  const State b = m.add_state("b", 1);
  m.add_transition(a, kPad, b);
  m.add_transition(b, kPad, a);
  CHECK(run_semisorted(m, {{}, {}}).status == RunStatus::RejectedNonAccept);
  CHECK(run_semisorted(m, {{0}, {}}).status == RunStatus::RejectedStuck);
  m.set_accept(a);
  CHECK(run_semisorted(m, {{}, {}}).accepted());
  // After its $ the run comes back to class 0, whose tape is finished.
  m.add_transition(a, 0, a);
  CHECK_FALSE(accepts_semisorted(m, {{}, {0}}));
  CHECK_THROWS_AS(m.add_transition(a, kPad, a), ValidationError);
  CHECK_THROWS_AS(accepts_semisorted(m, {{}}), ArityError);
}

TEST_CASE("sort discipline is validated") {
  SortedAsync m(2, Alphabet({"x"}));
  const State s = m.add_state("s", Sort{0, 0, false}, true);
  const State t = m.add_state("t", Sort{1, 0, false});
  const State f = m.add_state("f", Sort::make_final());
  m.add_transition(s, kPad, t);
  CHECK_THROWS_AS(m.validate(), ValidationError);
  SortedAsync ok(2, Alphabet({"x"}));
  const State a = ok.add_state("a", Sort{0, 0, false}, true);
  const State b = ok.add_state("b", Sort{1, 1, false});
  const State g = ok.add_state("g", Sort::make_final());
  ok.add_transition(a, kPad, b);
  ok.add_transition(b, kPad, g);
  ok.validate();
  ok.add_transition(b, 0, a);
  CHECK_THROWS_AS(ok.validate(), ValidationError);
  CHECK_THROWS_AS(m.add_state("g2", Sort::make_final()), ValidationError);
  (void)f;
}

TEST_CASE("simulators agree with oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    GenParams p;
    p.tapes = 1 + trial % 3;
    p.letters = 1 + trial % 2;
    p.states = 4;
    p.density = 0.8;
    const std::size_t len = p.tapes == 3 ? 2 : 3;
    const auto semi = testing::random_semisorted(rng, p);
    BoundedDomain d(semi.alphabet(), p.tapes, len);
    CHECK(language_set(semi, d, Engine::Simulator) == language_set(semi, d, Engine::Oracle));
    p.states = 1;
    const auto sorted = testing::random_sorted(rng, p);
    CHECK(language_set(sorted, d, Engine::Simulator) == language_set(sorted, d, Engine::Oracle));
  }
}

TEST_CASE("sorted and semisorted conversions keep the language") {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    GenParams p;
    p.tapes = 2 + trial % 2;
    p.states = 4;
    p.density = 0.8;
    const auto semi = testing::random_semisorted(rng, p);
    const auto sorted = semisorted_to_sorted(semi);
    sorted.validate();
    const std::size_t n = semi.num_states();
    const std::size_t copies = (1u << p.tapes) - 1;
    CHECK(sorted.num_states() <= n * copies + 1);
    const BoundedDomain d(semi.alphabet(), p.tapes, p.tapes == 3 ? 2 : 3);
    CHECK(languages_equal(semi, sorted, d).equal);
    p.states = 1;
    const auto direct = testing::random_sorted(rng, p);
    const auto back = sorted_to_semisorted(direct);
    CHECK(back.num_states() == direct.num_states());
    CHECK(languages_equal(direct, back, d).equal);
  }
}

TEST_CASE("complement of a sorted machine") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    GenParams p;
    p.tapes = 2;
    p.states = 3;
    const auto semi = testing::random_semisorted(rng, p);
    const auto c = complement_sorted(semi);
    c.validate();
    for (const auto& t : BoundedDomain(semi.alphabet(), 2, 3).tuples()) {
      CHECK(accepts_sorted(c, t) == !oracle_accepts(semi, t));
    }
    const auto cc = complement_sorted(c);
    CHECK(languages_equal(semi, cc, BoundedDomain(semi.alphabet(), 2, 3)).equal);
  }
}

TEST_CASE("boundedness") {
  const auto doubling = fixture<SortedAsync>("xn_x2n_sorted.mta");
  const auto b = is_bounded(doubling);
  CHECK(b.bounded);
  CHECK(b.k == std::size_t{2});
  const auto loose = is_bounded(fixture<SemiSortedAsync>("xn_eps.mta"));
  CHECK_FALSE(loose.bounded);
  CHECK_FALSE(loose.k);

  // A same-class cycle that no accepting run can use does not count.
  SemiSortedAsync m(2, Alphabet({"x"}));
  const State s = m.add_state("s", 0, true);
  const State dead = m.add_state("dead", 0);
  const State r = m.add_state("r", 1);
  const State acc = m.add_state("acc", 1, false, true);
  m.add_transition(s, 0, dead);
  m.add_transition(dead, 0, dead);
  m.add_transition(s, kPad, r);
  m.add_transition(r, kPad, acc);
  CHECK(is_bounded(m).bounded);
  CHECK(is_bounded(m).k == std::size_t{0});
}
