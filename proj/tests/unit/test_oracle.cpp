#include "doctest.h"
#include "generators.hpp"
#include "mtfa/error.hpp"
#include "mtfa/format.hpp"
#include "mtfa/oracle.hpp"

using namespace mtfa;

TEST_CASE("bounded domains") {
  const BoundedDomain d(Alphabet({"a", "b"}), std::vector<std::size_t>{1, 2});
  const auto t = d.tuples();
  CHECK(t.size() == 3 * 7);
  CHECK(t.front() == WordTuple{{}, {}});
  CHECK(t[1] == WordTuple{{}, {0}});
  CHECK(t[7] == WordTuple{{0}, {}});
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(TupleLess{}(t[i - 1], t[i]));
}

TEST_CASE("oracle on hand-built machines") {
  const auto doubling = load_machine(std::string(MTFA_FIXTURE_DIR) + "/xn_x2n_sorted.mta");
  CHECK(oracle_accepts(doubling, {{0}, {0, 0}}));
  CHECK_FALSE(oracle_accepts(doubling, {{0}, {0}}));
  CHECK_THROWS_AS(oracle_accepts(doubling, {{0}}), ArityError);

  FAA both(2, Alphabet({"a"}));
  const State s = both.add_state("s", true, true);
  both.add_move(s, {0, 0}, {s}, {3});
  CHECK(oracle_accepts(both, {{0, 0}, {0, 0}}));
  CHECK_FALSE(oracle_accepts(both, {{0, 0}, {0}}));
}

TEST_CASE("language comparison reports the first difference") {
  const auto doubling = load_machine(std::string(MTFA_FIXTURE_DIR) + "/xn_x2n_sorted.mta");
  const auto loose = load_machine(std::string(MTFA_FIXTURE_DIR) + "/xn_eps.mta");
  const BoundedDomain d(Alphabet({"x"}), 2, 3);
  const auto diff = languages_equal(doubling, loose, d);
  CHECK_FALSE(diff.equal);
  CHECK(diff.first_difference == WordTuple{{0}, {}});
  CHECK_FALSE(diff.in_first);
  CHECK(languages_equal(doubling, doubling, d).equal);
  CHECK(language_set(doubling, d).size() == 2);
  CHECK_THROWS_AS(languages_equal(doubling, SyncAutomaton(1, Alphabet({"x"})), d), ArityError);
}

TEST_CASE("language sets") {
  const auto doubling = load_machine(std::string(MTFA_FIXTURE_DIR) + "/xn_x2n_sorted.mta");
  const auto set = language_set(doubling, BoundedDomain(Alphabet({"x"}), 2, 6));
  const TupleSet expect{{{}, {}}, {{0}, {0, 0}}, {{0, 0}, {0, 0, 0, 0}}, {{0, 0, 0}, {0, 0, 0, 0, 0, 0}}};
  CHECK(set == expect);
  CHECK(language_set(SemiSortedAsync(2, Alphabet({"x"})), BoundedDomain(Alphabet({"x"}), 2, 3)).empty());

  const auto mirror = load_machine(std::string(MTFA_FIXTURE_DIR) + "/x2n_xn.mta");
  const auto both = union_saa(as_saa(std::get<SortedAsync>(doubling)), as_saa(std::get<SemiSortedAsync>(mirror)));
  const BoundedDomain d(Alphabet({"x"}), 2, 4);
  TupleSet joined = language_set(doubling, d);
  const auto other = language_set(mirror, d);
  joined.insert(other.begin(), other.end());
  CHECK(language_set(both, d) == joined);
}

TEST_CASE("a machine and its complement differ first at the least tuple") {
  testing::Rng rng(61);
  testing::GenParams p;
  const auto m = testing::random_sync(rng, p);
  const BoundedDomain d(m.alphabet(), 2, 2);
  const auto diff = languages_equal(m, complement(m), d);
  CHECK_FALSE(diff.equal);
  CHECK(diff.first_difference == d.tuples().front());
  CHECK(languages_equal(m, complement(complement(m)), d).equal);
}
