#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "mtfa/async_det.hpp"
#include "mtfa/sync.hpp"
#include "mtfa/words.hpp"

namespace mtfa {

/// Nonempty set of tapes advanced together, as a bitmask over 0-based tapes.
using Filter = TapeSet;

/// Next states and the filters offered for one (state, head symbols) pair.
struct FaaMove {
  std::set<State> targets;
  std::set<Filter> filters;
};

/// Filter automaton: at each step the heads' symbols select a move, and the
/// run picks a next state and a filter naming the tapes to advance.
class FAA {
 public:
  FAA(int tapes, Alphabet alphabet);

  State add_state(std::string name, bool start = false, bool accept = false);
  void set_start(State s, bool value = true);
  void set_accept(State s, bool value = true);

  /// Throws ValidationError if (src, symbol) already has a move, if a filter
  /// is empty or out of range, or if a filter advances a tape whose head
  /// symbol is $.
  void add_move(State src, PaddedSymbol symbol, std::set<State> targets, std::set<Filter> filters);

  int tapes() const noexcept { return tapes_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  const std::string& name(State s) const { return names_.at(s); }
  std::optional<State> find_state(const std::string& name) const;
  bool is_start(State s) const { return starts_.count(s) != 0; }
  bool is_accept(State s) const { return accepts_.count(s) != 0; }
  const std::set<State>& starts() const noexcept { return starts_; }
  const std::set<State>& accepts() const noexcept { return accepts_; }
  const std::map<PaddedSymbol, FaaMove>& moves(State s) const { return moves_.at(s); }
  const FaaMove* move(State s, const PaddedSymbol& symbol) const;

  /// At most one filter per move.
  bool is_dfaa() const;

 private:
  int tapes_;
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, State> by_name_;
  std::set<State> starts_;
  std::set<State> accepts_;
  std::vector<std::map<PaddedSymbol, FaaMove>> moves_;
};

/// Nondeterministic asynchronous automaton with a tape class per state and
/// epsilon arrows. Labels are letters or kPad.
class SAA {
 public:
  SAA(int tapes, Alphabet alphabet);

  State add_state(std::string name, int cls, bool start = false, bool accept = false);
  void set_start(State s, bool value = true);
  void set_accept(State s, bool value = true);
  void add_transition(State src, Letter label, State dst);
  void add_epsilon(State src, State dst);

  int tapes() const noexcept { return tapes_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  const std::string& name(State s) const { return names_.at(s); }
  std::optional<State> find_state(const std::string& name) const;
  int class_of(State s) const { return class_.at(s); }
  bool is_start(State s) const { return starts_.count(s) != 0; }
  bool is_accept(State s) const { return accepts_.count(s) != 0; }
  const std::set<State>& starts() const noexcept { return starts_; }
  const std::set<State>& accepts() const noexcept { return accepts_; }
  const std::map<Letter, std::set<State>>& transitions(State s) const { return delta_.at(s); }
  const std::set<State>& epsilon(State s) const { return eps_.at(s); }

 private:
  int tapes_;
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, State> by_name_;
  std::vector<int> class_;
  std::set<State> starts_;
  std::set<State> accepts_;
  std::vector<std::map<Letter, std::set<State>>> delta_;
  std::vector<std::set<State>> eps_;
};

bool accepts_faa(const FAA& m, const WordTuple& t);
bool accepts_saa(const SAA& m, const WordTuple& t);

/// States (s, χ) for every state s and nonempty filter χ; χ is the filter the
/// run commits to when leaving s.
FAA faa_to_dfaa(const FAA& m);

/// Reads head symbols one tape at a time into a buffer held in the state,
/// then fires the move on the full buffer. Works for any FAA.
SAA dfaa_to_saa(const FAA& m);

/// Singleton filters. Epsilon arrows and $ arrows are folded into a closure
/// evaluated against the current head symbols.
FAA saa_to_dfaa(const SAA& m);

SAA as_saa(const SemiSortedAsync& m);
SAA as_saa(const SortedAsync& m);

/// Disjoint union; states are prefixed `1.` and `2.`.
SAA union_saa(const SAA& a, const SAA& b);

/// Existential projection erasing tape `tape` (0-based). Reads of the erased
/// tape become epsilon moves, and a flag makes sure its $ is read once.
SAA exists_saa(const SAA& m, int tape);

/// Restriction to tuples whose component `tape` equals `word`, with that
/// tape erased.
SAA fix_tape(const SAA& m, int tape, const Word& word);

/// Deterministic machine over n+1 tapes whose projection away from tape 0
/// is L(m). Tape 0 carries generated letters recording each choice.
SemiSortedAsync bridge(const SAA& m);

/// Regular automaton for a one-tape SAA.
SyncAutomaton saa_to_regular(const SAA& m);

}  // namespace mtfa
