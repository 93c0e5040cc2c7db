#include <numeric>

#include "doctest.h"
#include "generators.hpp"
#include "mtfa/error.hpp"
#include "mtfa/words.hpp"

using namespace mtfa;

namespace {

std::uint64_t multinomial(const std::vector<std::size_t>& parts) {
  std::uint64_t result = 1;
  std::size_t total = 0;
  for (std::size_t p : parts) {
    for (std::size_t k = 1; k <= p; ++k) {
      ++total;
      result = result * total / k;
    }
  }
  return result;
}

}  // namespace

TEST_CASE("alphabet tokens") {
  Alphabet a({"x", "y"});
  CHECK(a.size() == 2);
  CHECK(a.at("y") == 1);
  CHECK(a.token(kPad) == "$");
  CHECK_FALSE(a.find("z"));
  CHECK_THROWS_AS(Alphabet({"x", "x"}), ValidationError);
  CHECK_THROWS_AS(Alphabet({"$"}), ValidationError);
  CHECK_THROWS_AS(Alphabet({"eps"}), ValidationError);
  CHECK_THROWS_AS(Alphabet({"a,b"}), ValidationError);
  CHECK_THROWS_AS(a.token(5), ArityError);
}

TEST_CASE("inverse pairing") {
  Alphabet a({"a", "A", "t"});
  a.set_inverse(0, 1);
  CHECK_FALSE(a.inverse_total());
  a.set_inverse(2, 2);
  CHECK(a.inverse_total());
  CHECK(a.inverse(1) == Letter{0});
  CHECK_THROWS_AS(a.set_inverse(0, 2), ValidationError);
}

TEST_CASE("words spell and parse") {
  Alphabet single({"x", "y"});
  CHECK(single.spell({0, 1, 1}) == "xyy");
  CHECK(single.parse_word("xyy") == Word{0, 1, 1});
  CHECK(single.parse_word("eps").empty());
  CHECK(single.spell_tuple({{}, {0}}) == "(eps, x)");

  Alphabet multi({"ab", "a", "b"});
  CHECK(multi.needs_separator());
  CHECK(multi.spell({0, 1}) == "ab.a");
  CHECK(multi.parse_word("ab.a") == Word{0, 1});
  CHECK(multi.parse_word("aba") == Word{0, 1});
  CHECK_THROWS_AS(multi.parse_word("c"), ArityError);

  const auto fresh = multi.with_fresh_letters(2);
  CHECK(fresh.token(3) == "@1");
  CHECK(fresh.with_fresh_letters(1).token(5) == "@3");
}

TEST_CASE("pad and unpad") {
  const WordTuple t{{0, 1}, {}, {1, 1, 1}};
  const auto p = pad(t);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == PaddedSymbol{0, kPad, 1});
  CHECK(p[2] == PaddedSymbol{kPad, kPad, 1});
  CHECK(unpad(p, 3) == t);
  CHECK(pad({{}, {}}).empty());
  CHECK_THROWS_AS(unpad({{kPad, 0}, {0, 0}}, 2), PreconditionError);
  CHECK_THROWS_AS(unpad({{kPad, kPad}}, 2), PreconditionError);
}

TEST_CASE("pad round-trips on random tuples") {
  testing::Rng rng(7);
  std::uniform_int_distribution<int> len(0, 4), letter(0, 2), arity(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    WordTuple t(static_cast<std::size_t>(arity(rng)));
    for (auto& w : t) {
      for (int k = len(rng); k > 0; --k) w.push_back(letter(rng));
    }
    const auto p = pad(t);
    std::size_t longest = 0;
    for (const auto& w : t) longest = std::max(longest, w.size());
    CHECK(p.size() == longest);
    CHECK(unpad(p, t.size()) == t);
  }
}

TEST_CASE("shuffle counts are multinomial") {
  for (const WordTuple& t : std::vector<WordTuple>{{{0}, {0, 1}}, {{0, 0}, {}, {1}}, {{}, {}}, {{0, 1, 0}, {1, 1}}}) {
    std::vector<std::size_t> plain, terminated;
    for (const auto& w : t) {
      plain.push_back(w.size());
      terminated.push_back(w.size() + 1);
    }
    const auto without = enumerate_shuffles(t, false);
    const auto with = enumerate_shuffles(t, true);
    CHECK(without.size() == multinomial(plain));
    CHECK(with.size() == multinomial(terminated));
    for (const auto& sh : with) {
      // Projecting onto each tape gives back the word followed by $.
      std::vector<Word> seen(t.size());
      for (std::size_t k = 0; k < sh.letters.size(); ++k) seen[static_cast<std::size_t>(sh.tape_order[k])].push_back(sh.letters[k]);
      for (std::size_t i = 0; i < t.size(); ++i) {
        Word expect = t[i];
        expect.push_back(kPad);
        CHECK(seen[i] == expect);
      }
    }
    for (std::size_t k = 1; k < with.size(); ++k) CHECK(with[k - 1].tape_order < with[k].tape_order);
  }
}

TEST_CASE("length-lex stream and unrank agree") {
  Alphabet a({"a", "b", "c"});
  const auto stream = lenlex_stream(a, 3);
  CHECK(stream.size() == 1 + 3 + 9 + 27);
  CHECK(stream.front().empty());
  CHECK(stream[4] == Word{0, 0});
  for (std::size_t i = 0; i < stream.size(); ++i) {
    CHECK(lenlex_unrank(i, 3) == stream[i]);
    if (i > 0) CHECK(lenlex_less(stream[i - 1], stream[i]));
  }
  CHECK_FALSE(lenlex_less(Word{0}, Word{0}));
  CHECK(lenlex_less(Word{1}, Word{0, 0}));
}
