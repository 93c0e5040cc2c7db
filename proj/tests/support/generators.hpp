#pragma once

#include <random>
#include <utility>
#include <vector>

#include "mtfa/machine.hpp"

namespace mtfa::testing {

using Rng = std::mt19937_64;

struct GenParams {
  int tapes = 2;
  std::size_t letters = 2;
  std::size_t states = 3;
  double density = 0.6;  // chance that a (state, label) pair gets an arrow
  double accept = 0.4;
  double eps = 0.1;      // chance of an epsilon arrow between two states
};

/// Alphabet a, b, c, ... of the given size.
Alphabet letters(std::size_t count);

SyncAutomaton random_sync(Rng& rng, const GenParams& p);
SemiSortedAsync random_semisorted(Rng& rng, const GenParams& p);
/// `states` copies of each (tape, consumed set) sort, plus the final state.
SortedAsync random_sorted(Rng& rng, const GenParams& p);
FAA random_faa(Rng& rng, const GenParams& p);
SAA random_saa(Rng& rng, const GenParams& p);

/// Accepted tuple of padded length >= min_len found by a random walk, if
/// the walk finds one. `m` should accept padded strings only.
std::optional<WordTuple> random_accepted(Rng& rng, const SyncAutomaton& m, std::size_t min_len);

/// Deterministic machine for a finite set of pairs: reads all of the first
/// word, then all of the second.
SemiSortedAsync finite_relation(const Alphabet& a, const std::vector<std::pair<Word, Word>>& pairs);

/// One-tape DFA for a finite language.
SyncAutomaton finite_language(const Alphabet& a, const std::vector<Word>& words);

}  // namespace mtfa::testing
