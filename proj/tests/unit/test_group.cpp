#include "doctest.h"
#include "generators.hpp"
#include "mtfa/error.hpp"
#include "mtfa/format.hpp"
#include "mtfa/oracle.hpp"

using namespace mtfa;

namespace {

StructureCandidate bundle(const std::string& name) {
  return load_bundle(std::string(MTFA_FIXTURE_DIR) + "/groups/" + name + "/bundle.txt");
}

const std::vector<std::string> kBundles{"trivial", "empty", "nodiag", "asym", "z2", "leftout", "twisted", "zline"};

// Decidable axioms by enumeration of words up to length 5.
struct BruteForce {
  const StructureCandidate& c;
  std::vector<Word> words = lenlex_stream(c.alphabet, 5);
  // Partners of a length-5 word may be one letter longer.
  std::vector<Word> partners_of = lenlex_stream(c.alphabet, 6);

  bool in_l(const Word& w) const { return accepts(c.acceptor, {w}); }
  bool rel(std::optional<Letter> x, const Word& u, const Word& v) const {
    return accepts_semisorted(c.multiplier(x), {u, v});
  }
  std::vector<std::optional<Letter>> keys() const {
    std::vector<std::optional<Letter>> out{std::nullopt};
    for (Letter x = 0; x < static_cast<Letter>(c.alphabet.size()); ++x) out.push_back(x);
    return out;
  }
  bool axiom1() const {
    for (const auto& w : words) {
      if (in_l(w)) return true;
    }
    return false;
  }
  bool axiom2() const {
    for (auto x : keys()) {
      for (const auto& u : words) {
        for (const auto& v : words) {
          if (rel(x, u, v) && !(in_l(u) && in_l(v))) return false;
        }
      }
    }
    return true;
  }
  bool partners(bool right) const {
    for (Letter x = 0; x < static_cast<Letter>(c.alphabet.size()); ++x) {
      for (const auto& u : words) {
        if (!in_l(u)) continue;
        bool found = false;
        for (const auto& v : partners_of) found = found || (right ? rel(x, u, v) : rel(x, v, u));
        if (!found) return false;
      }
    }
    return true;
  }
};

}  // namespace

TEST_CASE("decidable axioms agree with enumeration") {
  for (const auto& name : kBundles) {
    CAPTURE(name);
    const auto c = bundle(name);
    StructureChecker checker(c);
    BruteForce brute{c};
    CHECK(!checker.check_axiom1().violated() == brute.axiom1());
    CHECK(!checker.check_axiom2().violated() == brute.axiom2());
    CHECK(!checker.check_axiom6().violated() == brute.partners(true));
    CHECK(!checker.check_axiom9().violated() == brute.partners(false));
  }
}

TEST_CASE("violation witnesses replay") {
  {
    const auto c = bundle("leftout");
    const auto v = StructureChecker(c).check_axiom2();
    REQUIRE(v.violated());
    REQUIRE(v.witness.size() == 2);
    CHECK(accepts_semisorted(c.multiplier(v.letter), {v.witness[0], v.witness[1]}));
    CHECK_FALSE(accepts(c.acceptor, {v.witness[0]}));
  }
  {
    const auto c = bundle("asym");
    const auto v = StructureChecker(c).check(4);
    REQUIRE(v.violated());
    CHECK(v.witness == std::vector<Word>{{0}, {1}});
    CHECK(accepts_semisorted(c.epsilon_multiplier, {{0}, {1}}));
    CHECK_FALSE(accepts_semisorted(c.epsilon_multiplier, {{1}, {0}}));
  }
  {
    const auto c = bundle("nodiag");
    const auto v = StructureChecker(c).check(3);
    REQUIRE(v.violated());
    CHECK(v.witness == std::vector<Word>{{}});
    CHECK(v.candidates == 1);
  }
}

TEST_CASE("trivial group passes") {
  const auto c = bundle("trivial");
  const auto params = bound_params(c);
  CHECK(params.k == 0);
  CHECK(params.axiom13_len == 2 * params.c + 2 * params.k);
  StructureChecker checker(c, Budget{6, 1'000'000, 0});
  const auto report = checker.run_all();
  CHECK_FALSE(report.not_a_structure());
  for (int a : {1, 2, 6, 9}) CHECK(report.verdicts[static_cast<std::size_t>(a - 1)].kind == VerdictKind::Holds);
  for (int a : {3, 4, 5, 7, 8, 10, 11, 12, 13}) {
    CHECK(report.verdicts[static_cast<std::size_t>(a - 1)].kind == VerdictKind::NoViolationWithinBudget);
  }
  CHECK(checker.phi_step({}, {0, false}) == Word{});
}

TEST_CASE("first violation in axiom order") {
  CHECK(*StructureChecker(bundle("empty")).run_all().first_violation == 0);
  CHECK(*StructureChecker(bundle("nodiag")).run_all().first_violation == 2);
  CHECK(*StructureChecker(bundle("leftout")).run_all().first_violation == 1);
  CHECK(*StructureChecker(bundle("asym")).run_all().first_violation == 3);
}

TEST_CASE("partner search and chains") {
  const auto c = bundle("zline");
  StructureChecker checker(c, Budget{3, 20000, 0});
  const Word a{0}, aa{0, 0}, b{1};
  CHECK(checker.phi_step(aa, {1, false}) == a);
  CHECK(checker.phi_step({}, {1, true}) == a);
  CHECK(checker.phi_step({}, {0, false}) == a);
  CHECK_THROWS_AS(checker.phi_step({0, 1}, {0, false}), PreconditionError);
  CHECK(checker.eval_phi_chain({}, {}, {}).status == ChainStatus::Equal);
  CHECK(checker.eval_phi_chain({}, positive({0, 1}), {}).status == ChainStatus::Equal);
  CHECK(checker.eval_phi_chain({}, positive({0}), b).status == ChainStatus::NotEqual);
  CHECK(checker.completion({0}) == Word{});
  CHECK_FALSE(checker.completion({0, 1}));
  CHECK(formal_inverse(positive({0, 1})) == SignedWord{{1, true}, {0, true}});
  CHECK(spell_signed(c.alphabet, formal_inverse(positive({0}))) == "a^-1");
}

TEST_CASE("axiom 12 and 13 violations") {
  const auto c = bundle("twisted");
  StructureChecker checker(c, Budget{3, 100000, 0});
  const auto v12 = checker.semidecide_axiom12();
  CHECK(v12.violated());
  const auto v13 = checker.semidecide_axiom13();
  REQUIRE(v13.violated());
  CHECK(v13.signed_word == SignedWord{{0, false}});
  // x fixes the class of eps and moves the class of x.
  CHECK(checker.eval_phi_chain({}, positive({0}), {}).status == ChainStatus::Equal);
  CHECK(checker.eval_phi_chain({0}, positive({0}), {0}).status == ChainStatus::NotEqual);
}

TEST_CASE("infinite cyclic group within budget") {
  StructureChecker checker(bundle("zline"), Budget{3, 20000, 0});
  CHECK_FALSE(checker.run_all().not_a_structure());
}

TEST_CASE("step limit cuts partner searches") {
  StructureChecker checker(bundle("z2"), Budget{4, 100000, 1});
  const auto v = checker.semidecide_axiom12();
  CHECK(v.kind == VerdictKind::NoViolationWithinBudget);
  CHECK(v.detail == "step limit reached");
}

TEST_CASE("candidates are validated") {
  const auto c = bundle("trivial");
  const auto loose = std::get<SemiSortedAsync>(load_machine(std::string(MTFA_FIXTURE_DIR) + "/xn_eps.mta"));
  CHECK_THROWS_AS(StructureCandidate::make(c.alphabet, c.acceptor, {loose}, c.epsilon_multiplier), ValidationError);
  Alphabet no_inverse({"x"});
  CHECK_THROWS_AS(StructureCandidate::make(no_inverse, c.acceptor, c.multipliers, c.epsilon_multiplier), ValidationError);
  CHECK_THROWS_AS(StructureCandidate::make(c.alphabet, c.acceptor, {}, c.epsilon_multiplier), ValidationError);
  SyncAutomaton two(2, c.alphabet);
  CHECK_THROWS_AS(StructureCandidate::make(c.alphabet, two, c.multipliers, c.epsilon_multiplier), ValidationError);
}
