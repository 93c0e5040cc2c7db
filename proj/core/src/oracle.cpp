#include "mtfa/oracle.hpp"

#include <functional>

#include "mtfa/error.hpp"

namespace mtfa {

namespace {

void require_arity(int tapes, const WordTuple& t) {
  if (t.size() != static_cast<std::size_t>(tapes)) throw ArityError("tuple arity does not match machine");
}

}  // namespace

bool oracle_accepts(const SyncAutomaton& m, const WordTuple& t) {
  require_arity(m.tapes(), t);
  const PaddedString word = pad(t);
  // Depth-first over every path; the epsilon-visited set is per position.
  std::function<bool(State, std::size_t, std::set<State>&)> walk = [&](State s, std::size_t i,
                                                                        std::set<State>& eps_seen) -> bool {
    if (i == word.size() && m.accepts().count(s)) return true;
    for (State t : m.epsilon(s)) {
      if (eps_seen.insert(t).second && walk(t, i, eps_seen)) return true;
    }
    if (i == word.size()) return false;
    auto it = m.transitions(s).find(word[i]);
    if (it == m.transitions(s).end()) return false;
    for (State t : it->second) {
      std::set<State> fresh{t};
      if (walk(t, i + 1, fresh)) return true;
    }
    return false;
  };
  for (State s : m.starts()) {
    std::set<State> seen{s};
    if (walk(s, 0, seen)) return true;
  }
  return false;
}

namespace {

// Walks every interleaving of the tapes (each word followed by one $), one
// symbol at a time. `step` gives the successors of a state on the next
// symbol of a tape; a prefix with no successor is abandoned.
template <class Step, class Eps, class Accept>
bool walk_interleavings(const WordTuple& t, const std::set<State>& starts, Step step, Eps eps, Accept accept) {
  const std::size_t n = t.size();
  std::vector<std::size_t> pos(n, 0);
  std::function<bool(State, std::set<State>&)> walk = [&](State s, std::set<State>& eps_seen) -> bool {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) done = done && pos[i] > t[i].size();
    if (done && accept(s)) return true;
    for (State e : eps(s)) {
      if (eps_seen.insert(e).second && walk(e, eps_seen)) return true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (pos[i] > t[i].size()) continue;
      const Letter symbol = pos[i] < t[i].size() ? t[i][pos[i]] : kPad;
      for (State next : step(s, static_cast<int>(i), symbol)) {
        ++pos[i];
        std::set<State> fresh{next};
        const bool ok = walk(next, fresh);
        --pos[i];
        if (ok) return true;
      }
    }
    return false;
  };
  for (State s : starts) {
    std::set<State> seen{s};
    if (walk(s, seen)) return true;
  }
  return false;
}

const std::set<State> kNoStates;

}  // namespace

bool oracle_accepts(const SemiSortedAsync& m, const WordTuple& t) {
  require_arity(m.tapes(), t);
  if (!m.start()) return false;
  return walk_interleavings(
      t, {*m.start()},
      [&](State s, int tape, Letter symbol) {
        std::vector<State> out;
        if (m.class_of(s) != tape) return out;
        auto it = m.transitions(s).find(symbol);
        if (it != m.transitions(s).end()) out.push_back(it->second);
        return out;
      },
      [&](State) -> const std::set<State>& { return kNoStates; }, [&](State s) { return m.is_accept(s); });
}

bool oracle_accepts(const SortedAsync& m, const WordTuple& t) {
  require_arity(m.tapes(), t);
  if (!m.start()) return false;
  return walk_interleavings(
      t, {*m.start()},
      [&](State s, int tape, Letter symbol) {
        std::vector<State> out;
        const Sort& sort = m.sort_of(s);
        if (sort.final || sort.tape != tape) return out;
        auto it = m.transitions(s).find(symbol);
        if (it != m.transitions(s).end()) out.push_back(it->second);
        return out;
      },
      [&](State) -> const std::set<State>& { return kNoStates; }, [&](State s) { return m.final_state() == s; });
}

bool oracle_accepts(const SAA& m, const WordTuple& t) {
  require_arity(m.tapes(), t);
  return walk_interleavings(
      t, m.starts(),
      [&](State s, int tape, Letter symbol) {
        std::vector<State> out;
        if (m.class_of(s) != tape) return out;
        auto it = m.transitions(s).find(symbol);
        if (it != m.transitions(s).end()) out.assign(it->second.begin(), it->second.end());
        return out;
      },
      [&](State s) -> const std::set<State>& { return m.epsilon(s); }, [&](State s) { return m.is_accept(s); });
}

bool oracle_accepts(const FAA& m, const WordTuple& t) {
  require_arity(m.tapes(), t);
  const std::size_t n = t.size();
  // Filters always advance at least one head, so every branch terminates.
  std::set<std::pair<State, std::vector<std::size_t>>> failed;
  std::function<bool(State, std::vector<std::size_t>&)> explore = [&](State s, std::vector<std::size_t>& pos) -> bool {
    if (failed.count({s, pos})) return false;
    PaddedSymbol head;
    bool finished = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (pos[i] < t[i].size()) {
        head.push_back(t[i][pos[i]]);
        finished = false;
      } else {
        head.push_back(kPad);
      }
    }
    if (finished) return m.accepts().count(s) != 0;
    auto it = m.moves(s).find(head);
    if (it != m.moves(s).end()) {
      for (Filter f : it->second.filters) {
        for (State next : it->second.targets) {
          auto moved = pos;
          for (std::size_t i = 0; i < n; ++i) {
            if (f & (1u << i)) ++moved[i];
          }
          if (explore(next, moved)) return true;
        }
      }
    }
    failed.insert({s, pos});
    return false;
  };
  for (State s : m.starts()) {
    std::vector<std::size_t> pos(n, 0);
    if (explore(s, pos)) return true;
  }
  return false;
}

bool oracle_accepts(const AnyMachine& m, const WordTuple& t) {
  return std::visit([&](const auto& x) { return oracle_accepts(x, t); }, m);
}

std::vector<WordTuple> BoundedDomain::tuples() const {
  std::vector<std::vector<Word>> streams;
  for (std::size_t len : max_len) streams.push_back(lenlex_stream(alphabet, len));
  std::vector<WordTuple> out;
  WordTuple current(max_len.size());
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == streams.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& w : streams[i]) {
      current[i] = w;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

bool TupleLess::operator()(const WordTuple& a, const WordTuple& b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lenlex_less(a[i], b[i])) return true;
    if (lenlex_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

namespace {

bool evaluate(const AnyMachine& m, const WordTuple& t, Engine engine) {
  return engine == Engine::Oracle ? oracle_accepts(m, t) : accepts_any(m, t);
}

}  // namespace

TupleSet language_set(const AnyMachine& m, const BoundedDomain& d, Engine engine) {
  if (tapes_of(m) != d.arity()) throw ArityError("domain arity does not match machine");
  TupleSet out;
  for (const auto& t : d.tuples()) {
    if (evaluate(m, t, engine)) out.insert(t);
  }
  return out;
}

LanguageDiff languages_equal(const AnyMachine& a, const AnyMachine& b, const BoundedDomain& d, Engine engine) {
  if (tapes_of(a) != tapes_of(b) || tapes_of(a) != d.arity()) throw ArityError("machines have different tape counts");
  if (!alphabet_of(a).same_letters(alphabet_of(b))) throw ArityError("machines have different alphabets");
  for (const auto& t : d.tuples()) {
    const bool in_a = evaluate(a, t, engine);
    if (in_a != evaluate(b, t, engine)) return {false, t, in_a};
  }
  return {};
}

}  // namespace mtfa
