#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mtfa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MTFA_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("accept") {
  CHECK(run({"accept", fixture("xn_x2n_sorted.mta"), "x", "xx"}).code == 0);
  CHECK(run({"accept", fixture("xn_x2n_sorted.mta"), "(x,xxx)"}).code == 1);
  const auto traced = run({"accept", fixture("xn_x2n_semisorted.mta"), "x", "xx", "--trace"});
  CHECK(traced.out.find("R1 reads x from tape 2") != std::string::npos);
  const auto bad = run({"accept", fixture("xn_x2n_sorted.mta"), "x"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("expected 2 words") != std::string::npos);
}

TEST_CASE("bad input") {
  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  const auto missing = run({"bound", "/nonexistent.mta"});
  CHECK(missing.code == 3);
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"pump", fixture("xn_x2n_sorted.mta"), "x", "xx"}).code == 3);
}

TEST_CASE("bound") {
  const auto ok = run({"bound", fixture("xn_x2n_sorted.mta")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "bounded k=2\n");
  CHECK(run({"bound", fixture("xn_eps.mta")}).code == 1);
}

TEST_CASE("conversions round through the oracle") {
  const auto converted = run({"convert", fixture("xn_x2n_semisorted.mta"), "--to", "sorted"});
  REQUIRE(converted.code == 0);
  CHECK(converted.out.find("kind: sorted") == 0);
  CHECK(run({"convert", fixture("xn_x2n_sorted.mta"), "--to", "sync"}).code == 3);
  CHECK(run({"convert", fixture("xn_x2n_sorted.mta"), "--to", "dfaa"}).code == 0);
  CHECK(run({"oracle-compare", fixture("xn_x2n_semisorted.mta"), fixture("xn_x2n_sorted.mta"), "--max-len", "4"}).code == 0);
  const auto differ = run({"oracle-compare", fixture("xn_x2n_sorted.mta"), fixture("xn_eps.mta"), "--max-len", "2"});
  CHECK(differ.code == 1);
  CHECK(differ.out == "differ at (x, eps): accepted by second only\n");
}

TEST_CASE("enumerate and closure operations") {
  const auto listed = run({"enumerate", fixture("xn_x2n_sorted.mta"), "--max-len", "4"});
  CHECK(listed.out == "(eps, eps)\n(x, xx)\n(xx, xxxx)\n");
  CHECK(run({"complement", fixture("xn_x2n_sorted.mta")}).code == 0);
  CHECK(run({"union", fixture("xn_x2n_sorted.mta"), fixture("xn_eps.mta")}).out.find("kind: saa") == 0);
  CHECK(run({"intersect", fixture("xn_x2n_sorted.mta"), fixture("xn_eps.mta")}).code == 3);
  const auto proj = run({"project", fixture("xn_x2n_sorted.mta"), "--tape", "2", "--to", "regular"});
  CHECK(proj.code == 0);
  CHECK(proj.out.find("kind: sync\ntapes: 1") == 0);
  CHECK(run({"bridge", fixture("xn_x2n_sorted.mta")}).out.find("kind: semisorted") == 0);
}

TEST_CASE("check-structure") {
  const auto pass = run({"check-structure", fixture("groups/trivial/bundle.txt"), "--max-len", "6"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PassedWithinBudget") != std::string::npos);
  const auto fail = run({"check-structure", fixture("groups/nodiag/bundle.txt")});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("axiom 3: Violated witness (eps)") != std::string::npos);
  CHECK(fail.out.find("NotAStructure (axiom 3)") != std::string::npos);
}

TEST_CASE("broken fixtures exit 3") {
  for (const auto& entry : std::filesystem::directory_iterator(std::string(MTFA_FIXTURE_DIR) + "/broken")) {
    const auto r = run({"enumerate", entry.path().string(), "--max-len", "1"});
    CHECK(r.code == 3);
    CHECK(r.err.find(entry.path().string()) != std::string::npos);
  }
}

TEST_CASE("pump") {
  const auto r = run({"pump", fixture("groups/zline/word.mta"), "aaaa"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=") == 0);
  CHECK(r.out.find("r=2: (aaaaa) accepted") != std::string::npos);
}
