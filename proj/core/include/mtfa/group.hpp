#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

#include "mtfa/async_det.hpp"
#include "mtfa/sync.hpp"
#include "mtfa/words.hpp"

namespace mtfa {

/// Word acceptor plus one two-tape multiplier per letter and one for
/// equality. Built through `make`, which validates everything.
struct StructureCandidate {
  Alphabet alphabet;
  SyncAutomaton acceptor;
  std::vector<SemiSortedAsync> multipliers;  ///< indexed by letter
  SemiSortedAsync epsilon_multiplier;

  /// Throws ValidationError unless the inverse pairing is total, the
  /// acceptor has one tape, every multiplier has two tapes over the same
  /// letters, and every multiplier is bounded.
  static StructureCandidate make(Alphabet alphabet, SyncAutomaton acceptor, std::vector<SemiSortedAsync> multipliers,
                                 SemiSortedAsync epsilon_multiplier);

  /// Multiplier for a letter, or the equality multiplier for nullopt.
  const SemiSortedAsync& multiplier(std::optional<Letter> x) const {
    return x ? multipliers.at(static_cast<std::size_t>(*x)) : epsilon_multiplier;
  }
};

struct BoundParams {
  std::size_t c = 1;  ///< most states in any of the machines
  std::size_t k = 0;  ///< largest boundedness factor of the multipliers
  std::size_t axiom13_len = 2;
};

BoundParams bound_params(const StructureCandidate& c);

struct Budget {
  std::size_t max_word_len = 6;
  std::size_t max_candidates = 1'000'000;
  std::size_t step_limit = 0;  ///< partner searches allowed; 0 means unlimited
};

struct SignedLetter {
  Letter letter = 0;
  bool inverse = false;
  bool operator==(const SignedLetter&) const = default;
  auto operator<=>(const SignedLetter&) const = default;
};

using SignedWord = std::vector<SignedLetter>;

SignedWord positive(const Word& w);
/// Formal inverse: reversed, each letter flipped.
SignedWord formal_inverse(const SignedWord& w);
std::string spell_signed(const Alphabet& a, const SignedWord& w);

enum class VerdictKind { Holds, Violated, NoViolationWithinBudget };

const char* to_string(VerdictKind kind) noexcept;

struct Verdict {
  int axiom = 0;
  VerdictKind kind = VerdictKind::NoViolationWithinBudget;
  std::vector<Word> witness;
  std::optional<Letter> letter;  ///< multiplier involved, when the axiom is per letter
  SignedWord signed_word;        ///< axiom 13 only
  std::optional<int> via_axiom;  ///< a partner search got stuck, refuting this axiom instead
  std::size_t candidates = 0;
  std::string detail;

  bool violated() const noexcept { return kind == VerdictKind::Violated; }
};

struct AxiomReport {
  std::vector<Verdict> verdicts;  ///< axioms 1..13 in order
  std::optional<std::size_t> first_violation;  ///< index into verdicts

  bool not_a_structure() const noexcept { return first_violation.has_value(); }
};

enum class ChainStatus { Equal, NotEqual, Stuck };

struct ChainResult {
  ChainStatus status = ChainStatus::NotEqual;
  std::optional<Word> stuck_word;
  std::optional<int> axiom;  ///< 6 or 9 when no partner exists, 2 when a partner is outside L
  std::optional<SignedLetter> stuck_letter;
};

/// Runs the axiom checks for one candidate, caching membership and partner
/// searches between checks.
class StructureChecker {
 public:
  explicit StructureChecker(const StructureCandidate& candidate, Budget budget = {});

  const StructureCandidate& candidate() const noexcept { return c_; }
  const Budget& budget() const noexcept { return budget_; }

  Verdict check_axiom1();
  Verdict check_axiom2();
  Verdict check_axiom6();
  Verdict check_axiom9();
  /// axiom in {3, 4, 5, 7, 8, 10, 11}
  Verdict semidecide_simple_axiom(int axiom);
  Verdict semidecide_axiom12();
  Verdict semidecide_axiom13();
  Verdict check(int axiom);
  AxiomReport run_all();

  /// Length-lex least partner of v under x (or under x^-1 with the tapes
  /// swapped). Throws PreconditionError if v is not in L.
  std::optional<Word> phi_step(const Word& v, SignedLetter x);

  /// Follows phi_step along w from v and asks whether the end is
  /// L_eps-related to target.
  ChainResult eval_phi_chain(const Word& v, const SignedWord& w, const Word& target);

  /// Length-lex least z with uz in L, if u is a prefix of some word of L.
  std::optional<Word> completion(const Word& u);

  bool in_language(const Word& w);
  bool in_relation(std::optional<Letter> x, const Word& u, const Word& v);

 private:
  const SyncAutomaton& acceptor_dfa();
  bool charge_step();

  StructureCandidate c_;
  Budget budget_;
  std::size_t steps_ = 0;
  std::optional<SyncAutomaton> dfa_;
  std::map<Word, bool> language_memo_;
  std::map<std::tuple<int, Word, Word>, bool> relation_memo_;
  std::map<std::tuple<Letter, bool, Word>, std::optional<Word>> partner_memo_;
  std::map<Word, std::optional<Word>> completion_memo_;
};

}  // namespace mtfa
