#include "mtfa/async_det.hpp"

#include <algorithm>
#include <functional>

#include "mtfa/error.hpp"
#include "naming.hpp"

namespace mtfa {

namespace detail {

DetGraph::DetGraph(int tapes, Alphabet alphabet) : tapes_(tapes), alphabet_(std::move(alphabet)) {
  if (tapes < 1 || tapes > 30) throw ArityError("tape count must be between 1 and 30");
}

std::optional<State> DetGraph::find_state(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void DetGraph::set_start(State s) {
  if (s >= num_states()) throw ValidationError("start names an unknown state");
  start_ = s;
}

State DetGraph::push_state(std::string name) {
  if (by_name_.count(name) != 0) throw ValidationError("duplicate state '" + name + "'");
  const auto s = static_cast<State>(names_.size());
  by_name_.emplace(name, s);
  names_.push_back(std::move(name));
  delta_.emplace_back();
  return s;
}

void DetGraph::add_transition(State src, Letter label, State dst) {
  if (src >= num_states() || dst >= num_states()) throw ValidationError("transition names an unknown state");
  if (label != kPad && !alphabet_.contains(label)) throw ArityError("transition label is not in the alphabet");
  auto [it, inserted] = delta_[src].emplace(label, dst);
  if (!inserted && it->second != dst) {
    throw ValidationError("state '" + names_[src] + "' has two successors on '" + alphabet_.token(label) + "'");
  }
}

std::optional<State> DetGraph::next(State s, Letter label) const {
  const auto& tr = delta_.at(s);
  auto it = tr.find(label);
  if (it == tr.end()) return std::nullopt;
  return it->second;
}

}  // namespace detail

SemiSortedAsync::SemiSortedAsync(int tapes, Alphabet alphabet) : DetGraph(tapes, std::move(alphabet)) {}

State SemiSortedAsync::add_state(std::string name, int cls, bool start, bool accept) {
  if (cls < 0 || cls >= tapes_) throw ValidationError("class of state '" + name + "' is out of range");
  State s = push_state(std::move(name));
  class_.push_back(cls);
  if (start) {
    if (start_) throw ValidationError("a deterministic machine has a single start state");
    start_ = s;
  }
  if (accept) accepts_.insert(s);
  return s;
}

void SemiSortedAsync::set_accept(State s, bool value) {
  if (value) accepts_.insert(s); else accepts_.erase(s);
}

void SemiSortedAsync::validate() const {
  if (!start_) throw ValidationError("no start state");
}

SortedAsync::SortedAsync(int tapes, Alphabet alphabet) : DetGraph(tapes, std::move(alphabet)) {}

State SortedAsync::add_state(std::string name, Sort sort, bool start) {
  const TapeSet full = (1u << tapes_) - 1;
  if (sort.final) {
    if (final_) throw ValidationError("second final state '" + name + "'");
    sort = Sort::make_final();
  } else if (sort.tape < 0 || sort.tape >= tapes_ || (sort.consumed & ~full) != 0 ||
             (sort.consumed & (1u << sort.tape)) != 0) {
    throw ValidationError("state '" + name + "' has an invalid sort");
  }
  State s = push_state(std::move(name));
  sort_.push_back(sort);
  if (sort.final) final_ = s;
  if (start) {
    if (start_) throw ValidationError("a deterministic machine has a single start state");
    start_ = s;
  }
  return s;
}

void SortedAsync::validate() const {
  const TapeSet full = (1u << tapes_) - 1;
  if (!start_) throw ValidationError("no start state");
  if (!final_) throw ValidationError("no final state");
  const Sort& start_sort = sort_[*start_];
  if (start_sort.final || start_sort.consumed != 0) {
    throw ValidationError("start state '" + names_[*start_] + "' must have an empty consumed set");
  }
  for (State s = 0; s < num_states(); ++s) {
    const Sort& from = sort_[s];
    if (from.final) {
      if (!delta_[s].empty()) throw ValidationError("final state '" + names_[s] + "' has outgoing arrows");
      continue;
    }
    for (const auto& [label, t] : delta_[s]) {
      const Sort& to = sort_[t];
      const std::string arrow = "arrow " + names_[s] + " --" + alphabet_.token(label) + "--> " + names_[t];
      if (label == kPad) {
        const TapeSet next = from.consumed | (1u << from.tape);
        if (next == full) {
          if (!to.final) throw ValidationError(arrow + " must end in the final state");
        } else if (to.final || to.consumed != next) {
          throw ValidationError(arrow + " must add tape " + std::to_string(from.tape + 1) + " to the consumed set");
        }
      } else if (to.final || to.consumed != from.consumed) {
        throw ValidationError(arrow + " must keep the consumed set");
      }
    }
  }
}

const char* to_string(RunStatus status) noexcept {
  switch (status) {
    case RunStatus::Accepted: return "accepted";
    case RunStatus::RejectedStuck: return "rejected_stuck";
    case RunStatus::RejectedNonAccept: return "rejected_nonaccept";
    case RunStatus::RejectedIncomplete: return "rejected_incomplete";
  }
  return "?";
}

namespace {

void check_tuple(const detail::DetGraph& m, const WordTuple& t) {
  if (t.size() != static_cast<std::size_t>(m.tapes())) throw ArityError("tuple arity does not match machine");
  for (const auto& w : t) {
    for (Letter l : w) {
      if (!m.alphabet().contains(l)) throw ArityError("tuple uses a letter outside the machine alphabet");
    }
  }
}

template <class ClassOf, class IsAccept>
RunTrace simulate(const detail::DetGraph& m, const WordTuple& t, ClassOf class_of, IsAccept is_accept) {
  check_tuple(m, t);
  RunTrace trace;
  if (!m.start()) return trace;
  const std::size_t n = t.size();
  std::vector<std::size_t> pos(n, 0);
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  State s = *m.start();
  trace.last = s;
  while (remaining > 0) {
    auto tape = class_of(s);
    if (!tape || done[static_cast<std::size_t>(*tape)]) {
      trace.status = RunStatus::RejectedIncomplete;
      return trace;
    }
    const auto i = static_cast<std::size_t>(*tape);
    const Letter symbol = pos[i] < t[i].size() ? t[i][pos[i]] : kPad;
    auto next = m.next(s, symbol);
    if (!next) {
      trace.status = RunStatus::RejectedStuck;
      return trace;
    }
    trace.steps.push_back({s, *tape, symbol});
    if (symbol == kPad) {
      done[i] = true;
      --remaining;
    } else {
      ++pos[i];
    }
    s = *next;
    trace.last = s;
  }
  trace.status = is_accept(s) ? RunStatus::Accepted : RunStatus::RejectedNonAccept;
  return trace;
}

std::string copy_name(const std::string& base, TapeSet consumed, int tapes) {
  return base + detail::tape_set_name(consumed, tapes);
}

}  // namespace

RunTrace run_semisorted(const SemiSortedAsync& m, const WordTuple& t) {
  return simulate(
      m, t, [&](State s) { return std::optional<int>(m.class_of(s)); }, [&](State s) { return m.is_accept(s); });
}

RunTrace run_sorted(const SortedAsync& m, const WordTuple& t) {
  return simulate(
      m, t,
      [&](State s) {
        const Sort& sort = m.sort_of(s);
        return sort.final ? std::nullopt : std::optional<int>(sort.tape);
      },
      [&](State s) { return m.is_accept(s); });
}

bool accepts_semisorted(const SemiSortedAsync& m, const WordTuple& t) { return run_semisorted(m, t).accepted(); }

bool accepts_sorted(const SortedAsync& m, const WordTuple& t) { return run_sorted(m, t).accepted(); }

SemiSortedAsync sorted_to_semisorted(const SortedAsync& m) {
  m.validate();
  SemiSortedAsync out(m.tapes(), m.alphabet());
  for (State s = 0; s < m.num_states(); ++s) {
    const Sort& sort = m.sort_of(s);
    out.add_state(m.name(s), sort.final ? m.tapes() - 1 : sort.tape, m.start() == s, m.is_accept(s));
  }
  for (State s = 0; s < m.num_states(); ++s) {
    for (const auto& [label, t] : m.transitions(s)) out.add_transition(s, label, t);
  }
  return out;
}

SortedAsync semisorted_to_sorted(const SemiSortedAsync& m) {
  m.validate();
  const int n = m.tapes();
  const TapeSet full = (1u << n) - 1;
  SortedAsync out(n, m.alphabet());
  // copies[s][V] for every V not containing class_of(s)
  std::vector<std::map<TapeSet, State>> copies(m.num_states());
  for (State s = 0; s < m.num_states(); ++s) {
    const int i = m.class_of(s);
    for (TapeSet v = 0; v <= full; ++v) {
      if (v & (1u << i)) continue;
      copies[s][v] = out.add_state(copy_name(m.name(s), v, n), Sort{i, v, false}, v == 0 && m.start() == s);
    }
  }
  const State fin = out.add_state(detail::fresh_name(out, "fin"), Sort::make_final());
  for (State s = 0; s < m.num_states(); ++s) {
    const int i = m.class_of(s);
    for (const auto& [label, t] : m.transitions(s)) {
      const int j = m.class_of(t);
      for (const auto& [v, src] : copies[s]) {
        if (label != kPad) {
          if (!(v & (1u << j))) out.add_transition(src, label, copies[t].at(v));
          continue;
        }
        const TapeSet next = v | (1u << i);
        if (next == full) {
          if (m.is_accept(t)) out.add_transition(src, kPad, fin);
        } else if (!(next & (1u << j))) {
          out.add_transition(src, kPad, copies[t].at(next));
        }
      }
    }
  }
  return out;
}

SortedAsync complement_sorted(const SortedAsync& m) {
  m.validate();
  const int n = m.tapes();
  const TapeSet full = (1u << n) - 1;
  const State old_final = *m.final_state();
  SortedAsync out(n, m.alphabet());
  std::vector<std::optional<State>> map(m.num_states());
  for (State s = 0; s < m.num_states(); ++s) {
    if (s == old_final) continue;
    map[s] = out.add_state(m.name(s), m.sort_of(s), m.start() == s);
  }
  std::map<std::pair<int, TapeSet>, State> dead;
  for (TapeSet v = 0; v < full; ++v) {
    for (int i = 0; i < n; ++i) {
      if (v & (1u << i)) continue;
      std::string name = "d@(" + std::to_string(i + 1) + "," + detail::tape_set_name(v, n) + ")";
      dead[{i, v}] = out.add_state(detail::fresh_name(out, std::move(name)), Sort{i, v, false});
    }
  }
  const State dead_final = out.add_state(detail::fresh_name(out, "d@final"), Sort::make_final());
  auto pad_target = [&](int i, TapeSet v) {
    const TapeSet next = v | (1u << i);
    if (next == full) return dead_final;
    int j = 0;
    while (next & (1u << j)) ++j;
    return dead.at({j, next});
  };
  for (const auto& [key, d] : dead) {
    for (Letter a = 0; a < static_cast<Letter>(m.alphabet().size()); ++a) out.add_transition(d, a, d);
    out.add_transition(d, kPad, pad_target(key.first, key.second));
  }
  for (State s = 0; s < m.num_states(); ++s) {
    if (!map[s]) continue;
    const Sort& sort = m.sort_of(s);
    for (Letter a = kPad; a < static_cast<Letter>(m.alphabet().size()); ++a) {
      auto t = m.next(s, a);
      if (t && *t == old_final) continue;  // formerly accepting runs now get stuck
      if (t) {
        out.add_transition(*map[s], a, *map[*t]);
      } else if (a == kPad) {
        out.add_transition(*map[s], a, pad_target(sort.tape, sort.consumed));
      } else {
        out.add_transition(*map[s], a, dead.at({sort.tape, sort.consumed}));
      }
    }
  }
  return out;
}

SortedAsync complement_sorted(const SemiSortedAsync& m) { return complement_sorted(semisorted_to_sorted(m)); }

Boundedness is_bounded(const SemiSortedAsync& m) {
  m.validate();
  const std::size_t count = m.num_states();
  std::vector<std::vector<State>> reverse(count);
  std::vector<bool> reach(count, false);
  std::vector<State> stack{*m.start()};
  reach[*m.start()] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& [label, t] : m.transitions(s)) {
      reverse[t].push_back(s);
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::vector<bool> coreach(count, false);
  for (State s : m.accepts()) {
    if (reach[s]) {
      coreach[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : reverse[s]) {
      if (reach[p] && !coreach[p]) {
        coreach[p] = true;
        stack.push_back(p);
      }
    }
  }
  auto live = [&](State s) { return reach[s] && coreach[s]; };

  // longest[s]: most consecutive letters the run can read from class_of(s)
  // starting at s. 0 = unvisited, colour tracks the DFS stack.
  std::vector<std::size_t> longest(count, 0);
  std::vector<int> colour(count, 0);
  bool cycle = false;
  std::function<std::size_t(State)> visit = [&](State s) -> std::size_t {
    if (colour[s] == 2) return longest[s];
    if (colour[s] == 1) {
      cycle = true;
      return 0;
    }
    colour[s] = 1;
    std::size_t best = 0;
    for (const auto& [label, t] : m.transitions(s)) {
      if (label == kPad || !live(t)) continue;
      const bool same = m.class_of(t) == m.class_of(s);
      best = std::max(best, 1 + (same ? visit(t) : 0));
      if (cycle) return 0;
    }
    colour[s] = 2;
    longest[s] = best;
    return best;
  };
  std::size_t k = 0;
  for (State s = 0; s < count && !cycle; ++s) {
    if (live(s)) k = std::max(k, visit(s));
  }
  if (cycle) return {false, std::nullopt};
  return {true, k};
}

Boundedness is_bounded(const SortedAsync& m) { return is_bounded(sorted_to_semisorted(m)); }

}  // namespace mtfa
