#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "mtfa/words.hpp"

namespace mtfa {

using State = std::uint32_t;

/// n-tape synchronous automaton over the padded alphabet. Accepts a tuple
/// when some run over pad(tuple) ends in an accept state.
class SyncAutomaton {
 public:
  SyncAutomaton(int tapes, Alphabet alphabet);

  State add_state(std::string name, bool start = false, bool accept = false);
  void set_start(State s, bool value = true);
  void set_accept(State s, bool value = true);
  void add_transition(State src, PaddedSymbol symbol, State dst);
  void add_epsilon(State src, State dst);

  int tapes() const noexcept { return tapes_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  const std::string& name(State s) const { return names_.at(s); }
  std::optional<State> find_state(const std::string& name) const;

  bool is_start(State s) const { return starts_.count(s) != 0; }
  bool is_accept(State s) const { return accepts_.count(s) != 0; }
  const std::set<State>& starts() const noexcept { return starts_; }
  const std::set<State>& accepts() const noexcept { return accepts_; }

  const std::map<PaddedSymbol, std::set<State>>& transitions(State s) const { return delta_.at(s); }
  const std::set<State>& epsilon(State s) const { return eps_.at(s); }

  /// Single start, no epsilon arrows, at most one successor per symbol.
  bool is_deterministic() const;

  /// Whether `symbol` belongs to this machine's padded alphabet.
  bool is_symbol(const PaddedSymbol& symbol) const;

 private:
  int tapes_;
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, State> by_name_;
  std::set<State> starts_;
  std::set<State> accepts_;
  std::vector<std::map<PaddedSymbol, std::set<State>>> delta_;
  std::vector<std::set<State>> eps_;
};

/// Every symbol of the n-tape padded alphabet, PAD ordered first in each
/// coordinate.
std::vector<PaddedSymbol> padded_alphabet(int tapes, std::size_t alphabet_size);

/// Epsilon closure of a state set.
std::set<State> epsilon_closure(const SyncAutomaton& m, std::set<State> states);

bool accepts(const SyncAutomaton& m, const WordTuple& tuple);
bool accepts_padded(const SyncAutomaton& m, const PaddedString& padded);

/// Subset construction. States are named by their sorted member names.
SyncAutomaton determinize(const SyncAutomaton& m);

/// Same language, same states, no epsilon arrows.
SyncAutomaton remove_epsilons(const SyncAutomaton& m);

/// Machine accepting exactly the padded strings (every tuple).
SyncAutomaton padded_validity(int tapes, const Alphabet& alphabet);

SyncAutomaton complement(const SyncAutomaton& m);
SyncAutomaton unite(const SyncAutomaton& a, const SyncAutomaton& b);
SyncAutomaton intersect(const SyncAutomaton& a, const SyncAutomaton& b);

/// Existential projection erasing tape `tape` (0-based).
SyncAutomaton project_exists(const SyncAutomaton& m, int tape);

bool is_empty(const SyncAutomaton& m);
bool equivalent(const SyncAutomaton& a, const SyncAutomaton& b);

/// Least accepted tuple, ordered by length of the padded string and then
/// lexicographically by column (for one tape: length-lex least word).
std::optional<WordTuple> least_accepted(const SyncAutomaton& m);

/// Machine that, restricted to the padded strings, accepts what `m` does and
/// rejects everything else.
SyncAutomaton restrict_to_padded(const SyncAutomaton& m);

/// Loop found on an accepting run: columns k..k+l (1-based) repeat.
struct PumpDecomposition {
  std::size_t k = 0;
  std::size_t l = 0;
  /// Per-tape coordinate sequences (letters or kPad) before, inside and after the loop.
  std::vector<std::vector<Letter>> prefix;
  std::vector<std::vector<Letter>> middle;
  std::vector<std::vector<Letter>> suffix;

  bool middle_is_pad(std::size_t tape) const;
  bool middle_is_letters(std::size_t tape) const;
  /// The tuple obtained by repeating the loop r times (r >= 1).
  WordTuple pumped(std::size_t r) const;
};

/// Pumping decomposition of an accepted tuple whose longest component has at
/// least num_states() letters. Uses the leftmost repeated state on the run.
PumpDecomposition pump(const SyncAutomaton& m, const WordTuple& tuple);

}  // namespace mtfa
