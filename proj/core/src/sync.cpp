#include "mtfa/sync.hpp"

#include <algorithm>
#include <deque>

#include "mtfa/error.hpp"

namespace mtfa {

SyncAutomaton::SyncAutomaton(int tapes, Alphabet alphabet) : tapes_(tapes), alphabet_(std::move(alphabet)) {
  if (tapes < 1) throw ArityError("a synchronous automaton needs at least one tape");
}

State SyncAutomaton::add_state(std::string name, bool start, bool accept) {
  if (by_name_.count(name) != 0) throw ValidationError("duplicate state '" + name + "'");
  const auto s = static_cast<State>(names_.size());
  by_name_.emplace(name, s);
  names_.push_back(std::move(name));
  delta_.emplace_back();
  eps_.emplace_back();
  if (start) starts_.insert(s);
  if (accept) accepts_.insert(s);
  return s;
}

void SyncAutomaton::set_start(State s, bool value) {
  if (value) starts_.insert(s); else starts_.erase(s);
}

void SyncAutomaton::set_accept(State s, bool value) {
  if (value) accepts_.insert(s); else accepts_.erase(s);
}

void SyncAutomaton::add_transition(State src, PaddedSymbol symbol, State dst) {
  if (src >= num_states() || dst >= num_states()) throw ValidationError("transition names an unknown state");
  if (!is_symbol(symbol)) throw ArityError("symbol is not in the " + std::to_string(tapes_) + "-tape padded alphabet");
  delta_[src][std::move(symbol)].insert(dst);
}

void SyncAutomaton::add_epsilon(State src, State dst) {
  if (src >= num_states() || dst >= num_states()) throw ValidationError("transition names an unknown state");
  eps_[src].insert(dst);
}

std::optional<State> SyncAutomaton::find_state(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool SyncAutomaton::is_deterministic() const {
  if (starts_.size() != 1) return false;
  for (State s = 0; s < num_states(); ++s) {
    if (!eps_[s].empty()) return false;
    for (const auto& [sym, targets] : delta_[s]) {
      if (targets.size() > 1) return false;
    }
  }
  return true;
}

bool SyncAutomaton::is_symbol(const PaddedSymbol& symbol) const {
  if (symbol.size() != static_cast<std::size_t>(tapes_)) return false;
  bool any_letter = false;
  for (Letter l : symbol) {
    if (l == kPad) continue;
    if (!alphabet_.contains(l)) return false;
    any_letter = true;
  }
  return any_letter;
}

namespace {

std::string unique_name(const SyncAutomaton& m, std::string base) {
  while (m.find_state(base)) base += '\'';
  return base;
}

void require_compatible(const SyncAutomaton& a, const SyncAutomaton& b) {
  if (a.tapes() != b.tapes()) throw ArityError("machines have different tape counts");
  if (!a.alphabet().same_letters(b.alphabet())) throw ArityError("machines have different alphabets");
}

std::set<State> step(const SyncAutomaton& m, const std::set<State>& from, const PaddedSymbol& sym) {
  std::set<State> out;
  for (State s : from) {
    const auto& tr = m.transitions(s);
    auto it = tr.find(sym);
    if (it != tr.end()) out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

std::string subset_name(const SyncAutomaton& m, const std::set<State>& subset) {
  std::vector<std::string> names;
  for (State s : subset) names.push_back(m.name(s));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ',';
    out += names[i];
  }
  return out + "}";
}

}  // namespace

std::vector<PaddedSymbol> padded_alphabet(int tapes, std::size_t alphabet_size) {
  std::vector<PaddedSymbol> out;
  PaddedSymbol current(static_cast<std::size_t>(tapes), kPad);
  const auto top = static_cast<Letter>(alphabet_size);
  while (true) {
    if (std::any_of(current.begin(), current.end(), [](Letter l) { return l != kPad; })) out.push_back(current);
    std::size_t i = current.size();
    while (i > 0) {
      --i;
      if (current[i] + 1 < top) {
        ++current[i];
        break;
      }
      current[i] = kPad;
      if (i == 0) return out;
    }
    if (current.empty()) return out;
  }
}

std::set<State> epsilon_closure(const SyncAutomaton& m, std::set<State> states) {
  std::vector<State> stack(states.begin(), states.end());
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State t : m.epsilon(s)) {
      if (states.insert(t).second) stack.push_back(t);
    }
  }
  return states;
}

bool accepts_padded(const SyncAutomaton& m, const PaddedString& padded) {
  auto current = epsilon_closure(m, m.starts());
  for (const auto& sym : padded) {
    if (current.empty()) return false;
    current = epsilon_closure(m, step(m, current, sym));
  }
  return std::any_of(current.begin(), current.end(), [&](State s) { return m.is_accept(s); });
}

bool accepts(const SyncAutomaton& m, const WordTuple& tuple) {
  if (tuple.size() != static_cast<std::size_t>(m.tapes())) throw ArityError("tuple arity does not match machine");
  for (const auto& w : tuple) {
    for (Letter l : w) {
      if (!m.alphabet().contains(l)) throw ArityError("tuple uses a letter outside the machine alphabet");
    }
  }
  return accepts_padded(m, pad(tuple));
}

SyncAutomaton determinize(const SyncAutomaton& m) {
  std::set<PaddedSymbol> symbols;
  for (State s = 0; s < m.num_states(); ++s) {
    for (const auto& [sym, targets] : m.transitions(s)) symbols.insert(sym);
  }
  SyncAutomaton out(m.tapes(), m.alphabet());
  std::map<std::set<State>, State> ids;
  std::deque<std::set<State>> queue;
  auto intern = [&](const std::set<State>& subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    bool acc = std::any_of(subset.begin(), subset.end(), [&](State s) { return m.is_accept(s); });
    State id = out.add_state(unique_name(out, subset_name(m, subset)), false, acc);
    ids.emplace(subset, id);
    queue.push_back(subset);
    return id;
  };
  out.set_start(intern(epsilon_closure(m, m.starts())));
  while (!queue.empty()) {
    auto subset = queue.front();
    queue.pop_front();
    State src = ids.at(subset);
    for (const auto& sym : symbols) {
      auto next = epsilon_closure(m, step(m, subset, sym));
      if (next.empty()) continue;
      out.add_transition(src, sym, intern(next));
    }
  }
  return out;
}

SyncAutomaton remove_epsilons(const SyncAutomaton& m) {
  SyncAutomaton out(m.tapes(), m.alphabet());
  for (State s = 0; s < m.num_states(); ++s) out.add_state(m.name(s), m.is_start(s), false);
  for (State s = 0; s < m.num_states(); ++s) {
    auto closure = epsilon_closure(m, {s});
    for (State c : closure) {
      if (m.is_accept(c)) out.set_accept(s);
      for (const auto& [sym, targets] : m.transitions(c)) {
        for (State t : targets) out.add_transition(s, sym, t);
      }
    }
  }
  return out;
}

SyncAutomaton padded_validity(int tapes, const Alphabet& alphabet) {
  SyncAutomaton out(tapes, alphabet);
  const std::uint32_t masks = 1u << tapes;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::string name = "pad{";
    bool first = true;
    for (int i = 0; i < tapes; ++i) {
      if (!(mask & (1u << i))) continue;
      if (!first) name += ',';
      name += std::to_string(i + 1);
      first = false;
    }
    out.add_state(name + "}", mask == 0, true);
  }
  const auto symbols = padded_alphabet(tapes, alphabet.size());
  for (std::uint32_t mask = 0; mask + 1 < masks; ++mask) {
    for (const auto& sym : symbols) {
      std::uint32_t next = mask;
      bool ok = true;
      for (int i = 0; i < tapes; ++i) {
        if (sym[static_cast<std::size_t>(i)] == kPad) {
          next |= 1u << i;
        } else if (mask & (1u << i)) {
          ok = false;
        }
      }
      if (ok) out.add_transition(mask, sym, next);
    }
  }
  return out;
}

SyncAutomaton intersect(const SyncAutomaton& a, const SyncAutomaton& b) {
  require_compatible(a, b);
  SyncAutomaton out(a.tapes(), a.alphabet());
  std::map<std::pair<State, State>, State> ids;
  std::deque<std::pair<State, State>> queue;
  auto intern = [&](State p, State q) {
    auto key = std::make_pair(p, q);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    State id = out.add_state(unique_name(out, "(" + a.name(p) + "," + b.name(q) + ")"), false,
                             a.is_accept(p) && b.is_accept(q));
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  for (State p : a.starts()) {
    for (State q : b.starts()) out.set_start(intern(p, q));
  }
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    State src = ids.at({p, q});
    for (const auto& [sym, targets] : a.transitions(p)) {
      auto it = b.transitions(q).find(sym);
      if (it == b.transitions(q).end()) continue;
      for (State p2 : targets) {
        for (State q2 : it->second) out.add_transition(src, sym, intern(p2, q2));
      }
    }
    for (State p2 : a.epsilon(p)) out.add_epsilon(src, intern(p2, q));
    for (State q2 : b.epsilon(q)) out.add_epsilon(src, intern(p, q2));
  }
  return out;
}

SyncAutomaton unite(const SyncAutomaton& a, const SyncAutomaton& b) {
  require_compatible(a, b);
  SyncAutomaton out(a.tapes(), a.alphabet());
  auto copy_in = [&out](const SyncAutomaton& m, const std::string& tag) {
    const auto offset = static_cast<State>(out.num_states());
    for (State s = 0; s < m.num_states(); ++s) out.add_state(tag + m.name(s), m.is_start(s), m.is_accept(s));
    for (State s = 0; s < m.num_states(); ++s) {
      for (const auto& [sym, targets] : m.transitions(s)) {
        for (State t : targets) out.add_transition(offset + s, sym, offset + t);
      }
      for (State t : m.epsilon(s)) out.add_epsilon(offset + s, offset + t);
    }
  };
  copy_in(a, "1.");
  copy_in(b, "2.");
  return out;
}

SyncAutomaton restrict_to_padded(const SyncAutomaton& m) {
  return intersect(m, padded_validity(m.tapes(), m.alphabet()));
}

SyncAutomaton complement(const SyncAutomaton& m) {
  auto det = determinize(m);
  const auto symbols = padded_alphabet(det.tapes(), det.alphabet().size());
  const State sink = det.add_state(unique_name(det, "sink"));
  for (State s = 0; s < det.num_states(); ++s) {
    for (const auto& sym : symbols) {
      if (det.transitions(s).count(sym) == 0) det.add_transition(s, sym, sink);
    }
  }
  for (State s = 0; s < det.num_states(); ++s) det.set_accept(s, !det.is_accept(s));
  return restrict_to_padded(det);
}

SyncAutomaton project_exists(const SyncAutomaton& m, int tape) {
  if (m.tapes() < 2) throw PreconditionError("projection needs at least two tapes");
  if (tape < 0 || tape >= m.tapes()) throw ArityError("projection tape out of range");
  // Only genuine padded strings may contribute; after erasing the tape, the
  // all-$ columns are exactly the trailing ones and become epsilon moves.
  auto valid = restrict_to_padded(m);
  SyncAutomaton out(m.tapes() - 1, m.alphabet());
  for (State s = 0; s < valid.num_states(); ++s) out.add_state(valid.name(s), valid.is_start(s), valid.is_accept(s));
  for (State s = 0; s < valid.num_states(); ++s) {
    for (const auto& [sym, targets] : valid.transitions(s)) {
      PaddedSymbol reduced;
      for (int i = 0; i < m.tapes(); ++i) {
        if (i != tape) reduced.push_back(sym[static_cast<std::size_t>(i)]);
      }
      const bool all_pad = std::all_of(reduced.begin(), reduced.end(), [](Letter l) { return l == kPad; });
      for (State t : targets) {
        if (all_pad) out.add_epsilon(s, t); else out.add_transition(s, reduced, t);
      }
    }
    for (State t : valid.epsilon(s)) out.add_epsilon(s, t);
  }
  return out;
}

bool is_empty(const SyncAutomaton& machine) {
  // Only padded strings encode tuples; a run over anything else does not count.
  const SyncAutomaton m = machine.tapes() == 1 ? machine : intersect(machine, padded_validity(machine.tapes(), machine.alphabet()));
  std::vector<bool> seen(m.num_states(), false);
  std::vector<State> stack(m.starts().begin(), m.starts().end());
  for (State s : stack) seen[s] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    if (m.is_accept(s)) return false;
    auto visit = [&](State t) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    };
    for (const auto& [sym, targets] : m.transitions(s)) {
      for (State t : targets) visit(t);
    }
    for (State t : m.epsilon(s)) visit(t);
  }
  return true;
}

bool equivalent(const SyncAutomaton& a, const SyncAutomaton& b) {
  require_compatible(a, b);
  return is_empty(intersect(a, complement(b))) && is_empty(intersect(b, complement(a)));
}

std::optional<WordTuple> least_accepted(const SyncAutomaton& m) {
  const auto det = determinize(restrict_to_padded(m));
  const State start = *det.starts().begin();
  std::vector<std::optional<std::pair<State, PaddedSymbol>>> parent(det.num_states());
  std::vector<bool> seen(det.num_states(), false);
  std::deque<State> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (det.is_accept(s)) {
      PaddedString path;
      for (State cur = s; parent[cur]; cur = parent[cur]->first) path.push_back(parent[cur]->second);
      std::reverse(path.begin(), path.end());
      return unpad(path, static_cast<std::size_t>(det.tapes()));
    }
    for (const auto& [sym, targets] : det.transitions(s)) {
      State t = *targets.begin();
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = std::make_pair(s, sym);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

bool PumpDecomposition::middle_is_pad(std::size_t tape) const {
  const auto& mid = middle.at(tape);
  return std::all_of(mid.begin(), mid.end(), [](Letter l) { return l == kPad; });
}

bool PumpDecomposition::middle_is_letters(std::size_t tape) const {
  const auto& mid = middle.at(tape);
  return std::none_of(mid.begin(), mid.end(), [](Letter l) { return l == kPad; });
}

WordTuple PumpDecomposition::pumped(std::size_t r) const {
  WordTuple out(middle.size());
  for (std::size_t i = 0; i < middle.size(); ++i) {
    auto append = [&](const std::vector<Letter>& part) {
      for (Letter l : part) {
        if (l != kPad) out[i].push_back(l);
      }
    };
    append(prefix[i]);
    for (std::size_t rep = 0; rep < r; ++rep) append(middle[i]);
    append(suffix[i]);
  }
  return out;
}

PumpDecomposition pump(const SyncAutomaton& m, const WordTuple& tuple) {
  if (!accepts(m, tuple)) throw PreconditionError("pump: tuple is not accepted");
  std::size_t longest = 0;
  for (const auto& w : tuple) longest = std::max(longest, w.size());
  if (longest < m.num_states()) {
    throw PreconditionError("pump: longest component (" + std::to_string(longest) + ") is shorter than the state count (" +
                            std::to_string(m.num_states()) + ")");
  }
  const auto plain = remove_epsilons(m);
  const auto padded = pad(tuple);
  const std::size_t len = padded.size();

  std::vector<std::set<State>> forward(len + 1);
  forward[0] = plain.starts();
  for (std::size_t j = 0; j < len; ++j) forward[j + 1] = step(plain, forward[j], padded[j]);

  std::vector<State> run(len + 1);
  bool found = false;
  for (State s : forward[len]) {
    if (plain.is_accept(s)) {
      run[len] = s;
      found = true;
      break;
    }
  }
  if (!found) throw Error("pump: no accepting run after epsilon removal");
  for (std::size_t j = len; j > 0; --j) {
    for (State p : forward[j - 1]) {
      const auto& tr = plain.transitions(p);
      auto it = tr.find(padded[j - 1]);
      if (it != tr.end() && it->second.count(run[j])) {
        run[j - 1] = p;
        break;
      }
    }
  }

  // Leftmost loop whose columns share one PAD pattern, so that every block
  // is all letters or all PAD.
  auto pattern = [&](std::size_t col) {
    std::vector<bool> out;
    for (Letter l : padded[col]) out.push_back(l == kPad);
    return out;
  };
  std::size_t loop_begin = 0;
  std::size_t loop_end = 0;
  for (std::size_t j = 1; j <= len && loop_end == 0; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (run[i] == run[j] && pattern(i) == pattern(j - 1)) {
        loop_begin = i;
        loop_end = j;
        break;
      }
    }
  }
  if (loop_end == 0) {
    throw PreconditionError("pump: every loop on the run mixes letters and $ on some tape; the machine accepts strings that are not padded");
  }

  PumpDecomposition out;
  out.k = loop_begin + 1;
  out.l = loop_end - loop_begin - 1;
  const auto tapes = static_cast<std::size_t>(m.tapes());
  out.prefix.assign(tapes, {});
  out.middle.assign(tapes, {});
  out.suffix.assign(tapes, {});
  for (std::size_t col = 0; col < len; ++col) {
    for (std::size_t i = 0; i < tapes; ++i) {
      auto& part = col < loop_begin ? out.prefix : (col < loop_end ? out.middle : out.suffix);
      part[i].push_back(padded[col][i]);
    }
  }
  return out;
}

}  // namespace mtfa
