#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "mtfa/sync.hpp"
#include "mtfa/words.hpp"

namespace mtfa {

/// Bitmask over 0-based tape indices.
using TapeSet = std::uint32_t;

namespace detail {

// States, names and a partial deterministic transition map over A ∪ {$}.
class DetGraph {
 public:
  int tapes() const noexcept { return tapes_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  const std::string& name(State s) const { return names_.at(s); }
  std::optional<State> find_state(const std::string& name) const;

  std::optional<State> start() const noexcept { return start_; }
  void set_start(State s);

  /// Adds s --label--> t. `label` is a letter or kPad. Throws
  /// ValidationError if s already has a different successor on `label`.
  void add_transition(State src, Letter label, State dst);
  std::optional<State> next(State s, Letter label) const;
  const std::map<Letter, State>& transitions(State s) const { return delta_.at(s); }

 protected:
  DetGraph(int tapes, Alphabet alphabet);
  State push_state(std::string name);

  int tapes_;
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, State> by_name_;
  std::optional<State> start_;
  std::vector<std::map<Letter, State>> delta_;
};

}  // namespace detail

/// Deterministic asynchronous automaton with states partitioned into tape
/// classes. A class-i state reads the next symbol of tape i.
class SemiSortedAsync : public detail::DetGraph {
 public:
  SemiSortedAsync(int tapes, Alphabet alphabet);

  /// `cls` is a 0-based tape index.
  State add_state(std::string name, int cls, bool start = false, bool accept = false);
  void set_accept(State s, bool value = true);

  int class_of(State s) const { return class_.at(s); }
  bool is_accept(State s) const { return accepts_.count(s) != 0; }
  const std::set<State>& accepts() const noexcept { return accepts_; }

  /// Throws ValidationError when there is no start state.
  void validate() const;

 private:
  std::vector<int> class_;
  std::set<State> accepts_;
};

/// Tape being read plus tapes whose terminator was already consumed.
struct Sort {
  int tape = 0;
  TapeSet consumed = 0;
  bool final = false;

  static Sort make_final() { return Sort{0, 0, true}; }
  bool operator==(const Sort&) const = default;
  auto operator<=>(const Sort&) const = default;
};

/// Deterministic asynchronous automaton whose states also record which tapes
/// are finished. The unique final state is the only accept state.
class SortedAsync : public detail::DetGraph {
 public:
  SortedAsync(int tapes, Alphabet alphabet);

  State add_state(std::string name, Sort sort, bool start = false);

  const Sort& sort_of(State s) const { return sort_.at(s); }
  std::optional<State> final_state() const noexcept { return final_; }
  bool is_accept(State s) const { return final_ && *final_ == s; }

  /// Checks the sort discipline of start, $ arrows, letter arrows and the
  /// final state. Throws ValidationError naming the offending state.
  void validate() const;

 private:
  std::vector<Sort> sort_;
  std::optional<State> final_;
};

enum class RunStatus { Accepted, RejectedStuck, RejectedNonAccept, RejectedIncomplete };

const char* to_string(RunStatus status) noexcept;

struct RunStep {
  State state = 0;
  int tape = 0;
  Letter symbol = kPad;
};

struct RunTrace {
  std::vector<RunStep> steps;
  RunStatus status = RunStatus::RejectedStuck;
  std::optional<State> last;

  bool accepted() const noexcept { return status == RunStatus::Accepted; }
};

RunTrace run_semisorted(const SemiSortedAsync& m, const WordTuple& t);
RunTrace run_sorted(const SortedAsync& m, const WordTuple& t);
bool accepts_semisorted(const SemiSortedAsync& m, const WordTuple& t);
bool accepts_sorted(const SortedAsync& m, const WordTuple& t);

/// Same states; the final state joins the last tape's class.
SemiSortedAsync sorted_to_semisorted(const SortedAsync& m);

/// One copy of each state per consumed-set that excludes its own tape, plus a
/// fresh final state.
SortedAsync semisorted_to_sorted(const SemiSortedAsync& m);

/// Completes with dead states d@(i,{V}) and swaps acceptance.
SortedAsync complement_sorted(const SortedAsync& m);
SortedAsync complement_sorted(const SemiSortedAsync& m);

struct Boundedness {
  bool bounded = false;
  std::optional<std::size_t> k;
};

/// Bounded iff no cycle of letter arrows stays inside one class, after
/// trimming to states that are reachable and co-reachable. k is the longest
/// run of consecutive letter reads from a single tape.
Boundedness is_bounded(const SemiSortedAsync& m);
Boundedness is_bounded(const SortedAsync& m);

}  // namespace mtfa
