#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mtfa/machine.hpp"

namespace mtfa {

// Brute-force acceptance straight from the definitions. Exponential in the
// tuple length; meant for cross-checking the simulators on small inputs.

bool oracle_accepts(const SyncAutomaton& m, const WordTuple& t);
bool oracle_accepts(const SemiSortedAsync& m, const WordTuple& t);
bool oracle_accepts(const SortedAsync& m, const WordTuple& t);
bool oracle_accepts(const FAA& m, const WordTuple& t);
bool oracle_accepts(const SAA& m, const WordTuple& t);
bool oracle_accepts(const AnyMachine& m, const WordTuple& t);

/// All tuples whose component i has length <= max_len[i].
struct BoundedDomain {
  Alphabet alphabet;
  std::vector<std::size_t> max_len;

  BoundedDomain(Alphabet a, int arity, std::size_t len)
      : alphabet(std::move(a)), max_len(static_cast<std::size_t>(arity), len) {}
  BoundedDomain(Alphabet a, std::vector<std::size_t> lens) : alphabet(std::move(a)), max_len(std::move(lens)) {}

  int arity() const noexcept { return static_cast<int>(max_len.size()); }

  /// Product of length-lex streams, first component varying slowest.
  std::vector<WordTuple> tuples() const;
};

enum class Engine { Oracle, Simulator };

/// Lexicographic comparison of tuples by length-lex components.
struct TupleLess {
  bool operator()(const WordTuple& a, const WordTuple& b) const;
};

using TupleSet = std::set<WordTuple, TupleLess>;

TupleSet language_set(const AnyMachine& m, const BoundedDomain& d, Engine engine = Engine::Oracle);

struct LanguageDiff {
  bool equal = true;
  std::optional<WordTuple> first_difference;
  bool in_first = false;  ///< which machine accepts the differing tuple
};

LanguageDiff languages_equal(const AnyMachine& a, const AnyMachine& b, const BoundedDomain& d,
                             Engine engine = Engine::Oracle);

}  // namespace mtfa
