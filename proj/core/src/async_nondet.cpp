#include "mtfa/async_nondet.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <tuple>

#include "mtfa/error.hpp"
#include "naming.hpp"

namespace mtfa {

namespace {

constexpr Letter kUnread = -2;

void check_tuple(int tapes, const Alphabet& alphabet, const WordTuple& t) {
  if (t.size() != static_cast<std::size_t>(tapes)) throw ArityError("tuple arity does not match machine");
  for (const auto& w : t) {
    for (Letter l : w) {
      if (!alphabet.contains(l)) throw ArityError("tuple uses a letter outside the machine alphabet");
    }
  }
}

State register_name(std::vector<std::string>& names, std::unordered_map<std::string, State>& by_name,
                    std::string name) {
  if (by_name.count(name) != 0) throw ValidationError("duplicate state '" + name + "'");
  const auto s = static_cast<State>(names.size());
  by_name.emplace(name, s);
  names.push_back(std::move(name));
  return s;
}

}  // namespace

FAA::FAA(int tapes, Alphabet alphabet) : tapes_(tapes), alphabet_(std::move(alphabet)) {
  if (tapes < 1 || tapes > 30) throw ArityError("tape count must be between 1 and 30");
}

State FAA::add_state(std::string name, bool start, bool accept) {
  State s = register_name(names_, by_name_, std::move(name));
  moves_.emplace_back();
  if (start) starts_.insert(s);
  if (accept) accepts_.insert(s);
  return s;
}

void FAA::set_start(State s, bool value) {
  if (value) starts_.insert(s); else starts_.erase(s);
}

void FAA::set_accept(State s, bool value) {
  if (value) accepts_.insert(s); else accepts_.erase(s);
}

std::optional<State> FAA::find_state(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void FAA::add_move(State src, PaddedSymbol symbol, std::set<State> targets, std::set<Filter> filters) {
  if (src >= num_states()) throw ValidationError("move names an unknown state");
  for (State t : targets) {
    if (t >= num_states()) throw ValidationError("move names an unknown state");
  }
  if (symbol.size() != static_cast<std::size_t>(tapes_)) throw ArityError("move symbol has the wrong arity");
  TapeSet pads = 0;
  bool letter = false;
  for (int i = 0; i < tapes_; ++i) {
    const Letter l = symbol[static_cast<std::size_t>(i)];
    if (l == kPad) {
      pads |= 1u << i;
    } else if (alphabet_.contains(l)) {
      letter = true;
    } else {
      throw ArityError("move symbol uses a letter outside the alphabet");
    }
  }
  if (!letter) throw ValidationError("the all-$ symbol cannot label a move");
  const Filter full = (1u << tapes_) - 1;
  const std::string where = "move of '" + names_[src] + "' on " + alphabet_.spell_symbol(symbol);
  for (Filter f : filters) {
    if (f == 0 || (f & ~full) != 0) throw ValidationError(where + " has an empty or out-of-range filter");
    if (f & pads) throw ValidationError(where + " offers a filter that advances a $ head");
  }
  if (!targets.empty() && filters.empty()) throw ValidationError(where + " offers no filter");
  auto [it, inserted] = moves_[src].emplace(std::move(symbol), FaaMove{std::move(targets), std::move(filters)});
  if (!inserted) throw ValidationError(where + " is defined twice");
}

const FaaMove* FAA::move(State s, const PaddedSymbol& symbol) const {
  const auto& mv = moves_.at(s);
  auto it = mv.find(symbol);
  return it == mv.end() ? nullptr : &it->second;
}

bool FAA::is_dfaa() const {
  for (const auto& mv : moves_) {
    for (const auto& [sym, move] : mv) {
      if (move.filters.size() > 1) return false;
    }
  }
  return true;
}

SAA::SAA(int tapes, Alphabet alphabet) : tapes_(tapes), alphabet_(std::move(alphabet)) {
  if (tapes < 1 || tapes > 30) throw ArityError("tape count must be between 1 and 30");
}

State SAA::add_state(std::string name, int cls, bool start, bool accept) {
  if (cls < 0 || cls >= tapes_) throw ValidationError("class of state '" + name + "' is out of range");
  State s = register_name(names_, by_name_, std::move(name));
  class_.push_back(cls);
  delta_.emplace_back();
  eps_.emplace_back();
  if (start) starts_.insert(s);
  if (accept) accepts_.insert(s);
  return s;
}

void SAA::set_start(State s, bool value) {
  if (value) starts_.insert(s); else starts_.erase(s);
}

void SAA::set_accept(State s, bool value) {
  if (value) accepts_.insert(s); else accepts_.erase(s);
}

void SAA::add_transition(State src, Letter label, State dst) {
  if (src >= num_states() || dst >= num_states()) throw ValidationError("transition names an unknown state");
  if (label != kPad && !alphabet_.contains(label)) throw ArityError("transition label is not in the alphabet");
  delta_[src][label].insert(dst);
}

void SAA::add_epsilon(State src, State dst) {
  if (src >= num_states() || dst >= num_states()) throw ValidationError("transition names an unknown state");
  eps_[src].insert(dst);
}

std::optional<State> SAA::find_state(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool accepts_faa(const FAA& m, const WordTuple& t) {
  check_tuple(m.tapes(), m.alphabet(), t);
  const auto n = t.size();
  using Config = std::pair<State, std::vector<std::size_t>>;
  std::set<Config> seen;
  std::deque<Config> queue;
  for (State s : m.starts()) {
    Config c{s, std::vector<std::size_t>(n, 0)};
    if (seen.insert(c).second) queue.push_back(std::move(c));
  }
  while (!queue.empty()) {
    auto [s, pos] = std::move(queue.front());
    queue.pop_front();
    PaddedSymbol head(n);
    bool all_pad = true;
    for (std::size_t i = 0; i < n; ++i) {
      head[i] = pos[i] < t[i].size() ? t[i][pos[i]] : kPad;
      all_pad = all_pad && head[i] == kPad;
    }
    if (all_pad) {
      if (m.is_accept(s)) return true;
      continue;
    }
    const FaaMove* mv = m.move(s, head);
    if (mv == nullptr) continue;
    for (Filter f : mv->filters) {
      auto next = pos;
      for (std::size_t i = 0; i < n; ++i) {
        if (f & (1u << i)) ++next[i];
      }
      for (State target : mv->targets) {
        Config c{target, next};
        if (seen.insert(c).second) queue.push_back(std::move(c));
      }
    }
  }
  return false;
}

bool accepts_saa(const SAA& m, const WordTuple& t) {
  check_tuple(m.tapes(), m.alphabet(), t);
  const auto n = t.size();
  // position |w_i| + 1 means the terminator of tape i was read
  using Config = std::pair<State, std::vector<std::size_t>>;
  std::set<Config> seen;
  std::deque<Config> queue;
  for (State s : m.starts()) {
    Config c{s, std::vector<std::size_t>(n, 0)};
    if (seen.insert(c).second) queue.push_back(std::move(c));
  }
  auto push = [&](State s, const std::vector<std::size_t>& pos) {
    Config c{s, pos};
    if (seen.insert(c).second) queue.push_back(std::move(c));
  };
  while (!queue.empty()) {
    auto [s, pos] = std::move(queue.front());
    queue.pop_front();
    bool finished = true;
    for (std::size_t i = 0; i < n; ++i) finished = finished && pos[i] == t[i].size() + 1;
    if (finished && m.is_accept(s)) return true;
    for (State next : m.epsilon(s)) push(next, pos);
    const auto i = static_cast<std::size_t>(m.class_of(s));
    if (pos[i] > t[i].size()) continue;
    const Letter symbol = pos[i] < t[i].size() ? t[i][pos[i]] : kPad;
    auto it = m.transitions(s).find(symbol);
    if (it == m.transitions(s).end()) continue;
    auto advanced = pos;
    ++advanced[i];
    for (State next : it->second) push(next, advanced);
  }
  return false;
}

FAA faa_to_dfaa(const FAA& m) {
  const int n = m.tapes();
  const Filter full = (1u << n) - 1;
  FAA out(n, m.alphabet());
  auto id = [&](State s, Filter f) { return static_cast<State>(s * full + (f - 1)); };
  for (State s = 0; s < m.num_states(); ++s) {
    for (Filter f = 1; f <= full; ++f) {
      out.add_state(m.name(s) + "|" + detail::tape_set_name(f, n), m.is_start(s), m.is_accept(s));
    }
  }
  for (State s = 0; s < m.num_states(); ++s) {
    for (const auto& [sym, mv] : m.moves(s)) {
      std::set<State> targets;
      for (State t : mv.targets) {
        for (Filter f = 1; f <= full; ++f) targets.insert(id(t, f));
      }
      for (Filter f : mv.filters) out.add_move(id(s, f), sym, targets, {f});
    }
  }
  return out;
}

SAA dfaa_to_saa(const FAA& m) {
  const int n = m.tapes();
  const auto letters = static_cast<Letter>(m.alphabet().size());
  SAA out(n, m.alphabet());
  using Key = std::pair<State, std::vector<Letter>>;
  std::map<Key, State> ids;
  std::deque<Key> queue;
  auto intern = [&](State s, const std::vector<Letter>& buffer) {
    Key key{s, buffer};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::string name = m.name(s) + "[";
    int cls = 0;
    bool full = true;
    bool all_pad = true;
    for (int i = 0; i < n; ++i) {
      const Letter l = buffer[static_cast<std::size_t>(i)];
      if (i > 0) name += ',';
      name += l == kUnread ? "_" : m.alphabet().token(l);
      if (l == kUnread && full) {
        cls = i;
        full = false;
      }
      all_pad = all_pad && l == kPad;
    }
    name += "]";
    State id = out.add_state(detail::fresh_name(out, std::move(name)), cls, false, all_pad && m.is_accept(s));
    ids.emplace(key, id);
    queue.push_back(std::move(key));
    return id;
  };
  const std::vector<Letter> empty(static_cast<std::size_t>(n), kUnread);
  for (State s : m.starts()) out.set_start(intern(s, empty));
  while (!queue.empty()) {
    auto [s, buffer] = queue.front();
    queue.pop_front();
    const State src = ids.at({s, buffer});
    auto unread = std::find(buffer.begin(), buffer.end(), kUnread);
    if (unread != buffer.end()) {
      for (Letter a = kPad; a < letters; ++a) {
        auto next = buffer;
        next[static_cast<std::size_t>(unread - buffer.begin())] = a;
        out.add_transition(src, a, intern(s, next));
      }
      continue;
    }
    if (std::all_of(buffer.begin(), buffer.end(), [](Letter l) { return l == kPad; })) continue;
    const FaaMove* mv = m.move(s, buffer);
    if (mv == nullptr) continue;
    for (Filter f : mv->filters) {
      auto next = buffer;
      for (int i = 0; i < n; ++i) {
        if (f & (1u << i)) next[static_cast<std::size_t>(i)] = kUnread;
      }
      for (State t : mv->targets) out.add_epsilon(src, intern(t, next));
    }
  }
  return out;
}

namespace {

// States of m reachable from `from` by epsilon arrows and by $ arrows on
// tapes whose head shows $, tracking the tapes whose $ was read.
std::set<std::pair<State, TapeSet>> pad_closure(const SAA& m, std::set<std::pair<State, TapeSet>> from,
                                                TapeSet pad_heads) {
  std::vector<std::pair<State, TapeSet>> stack(from.begin(), from.end());
  while (!stack.empty()) {
    auto [s, consumed] = stack.back();
    stack.pop_back();
    for (State t : m.epsilon(s)) {
      if (from.emplace(t, consumed).second) stack.emplace_back(t, consumed);
    }
    const TapeSet bit = 1u << m.class_of(s);
    if ((pad_heads & bit) && !(consumed & bit)) {
      auto it = m.transitions(s).find(kPad);
      if (it != m.transitions(s).end()) {
        for (State t : it->second) {
          if (from.emplace(t, consumed | bit).second) stack.emplace_back(t, consumed | bit);
        }
      }
    }
  }
  return from;
}

}  // namespace

FAA saa_to_dfaa(const SAA& m) {
  const int n = m.tapes();
  const TapeSet full = (1u << n) - 1;
  const auto symbols = padded_alphabet(n, m.alphabet().size());
  FAA out(n, m.alphabet());
  using Key = std::tuple<State, TapeSet, int>;
  std::map<Key, State> ids;
  std::deque<Key> queue;
  auto intern = [&](State s, TapeSet consumed, int tape) {
    Key key{s, consumed, tape};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    bool accept = false;
    for (const auto& [q, done] : pad_closure(m, {{s, consumed}}, full)) {
      if (done == full && m.is_accept(q)) accept = true;
    }
    std::string name = m.name(s) + "|" + detail::tape_set_name(consumed, n) + "|" + std::to_string(tape + 1);
    State id = out.add_state(detail::fresh_name(out, std::move(name)), false, accept);
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  for (State s : m.starts()) {
    for (int j = 0; j < n; ++j) out.set_start(intern(s, 0, j));
  }
  while (!queue.empty()) {
    auto [s, consumed, tape] = queue.front();
    queue.pop_front();
    const State src = ids.at({s, consumed, tape});
    for (const auto& sym : symbols) {
      TapeSet pads = 0;
      for (int i = 0; i < n; ++i) {
        if (sym[static_cast<std::size_t>(i)] == kPad) pads |= 1u << i;
      }
      if ((consumed & ~pads) != 0 || (pads & (1u << tape))) continue;
      const Letter read = sym[static_cast<std::size_t>(tape)];
      std::set<State> targets;
      for (const auto& [q, done] : pad_closure(m, {{s, consumed}}, pads)) {
        if (m.class_of(q) != tape) continue;
        auto it = m.transitions(q).find(read);
        if (it == m.transitions(q).end()) continue;
        for (State t : it->second) {
          for (int j = 0; j < n; ++j) targets.insert(intern(t, done, j));
        }
      }
      if (!targets.empty()) out.add_move(src, sym, std::move(targets), {Filter{1u << tape}});
    }
  }
  return out;
}

SAA as_saa(const SemiSortedAsync& m) {
  SAA out(m.tapes(), m.alphabet());
  for (State s = 0; s < m.num_states(); ++s) out.add_state(m.name(s), m.class_of(s), m.start() == s, m.is_accept(s));
  for (State s = 0; s < m.num_states(); ++s) {
    for (const auto& [label, t] : m.transitions(s)) out.add_transition(s, label, t);
  }
  return out;
}

SAA as_saa(const SortedAsync& m) { return as_saa(sorted_to_semisorted(m)); }

SAA union_saa(const SAA& a, const SAA& b) {
  if (a.tapes() != b.tapes()) throw ArityError("machines have different tape counts");
  if (!a.alphabet().same_letters(b.alphabet())) throw ArityError("machines have different alphabets");
  SAA out(a.tapes(), a.alphabet());
  auto copy_in = [&out](const SAA& m, const std::string& tag) {
    const auto offset = static_cast<State>(out.num_states());
    for (State s = 0; s < m.num_states(); ++s) {
      out.add_state(tag + m.name(s), m.class_of(s), m.is_start(s), m.is_accept(s));
    }
    for (State s = 0; s < m.num_states(); ++s) {
      for (const auto& [label, targets] : m.transitions(s)) {
        for (State t : targets) out.add_transition(offset + s, label, offset + t);
      }
      for (State t : m.epsilon(s)) out.add_epsilon(offset + s, offset + t);
    }
  };
  copy_in(a, "1.");
  copy_in(b, "2.");
  return out;
}

namespace {

// Erases `tape`, replacing its reads by epsilon moves guarded by a counter.
// `advance(counter, label)` gives the counter after reading `label` there, or
// nothing when the read is not allowed; runs must end at `final_counter`.
SAA erase_tape(const SAA& m, int tape, const std::function<std::optional<int>(int, Letter)>& advance,
               int final_counter) {
  if (m.tapes() < 2) throw PreconditionError("projection needs at least two tapes");
  if (tape < 0 || tape >= m.tapes()) throw ArityError("projection tape out of range");
  auto remap = [tape](int cls) {
    if (cls < tape) return cls;
    if (cls > tape) return cls - 1;
    return tape > 0 ? tape - 1 : 0;
  };
  SAA out(m.tapes() - 1, m.alphabet());
  std::map<std::pair<State, int>, State> ids;
  std::deque<std::pair<State, int>> queue;
  auto intern = [&](State s, int counter) {
    auto key = std::make_pair(s, counter);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    State id = out.add_state(detail::fresh_name(out, m.name(s) + "|" + std::to_string(counter)),
                             remap(m.class_of(s)), false, counter == final_counter && m.is_accept(s));
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  for (State s : m.starts()) out.set_start(intern(s, 0));
  while (!queue.empty()) {
    auto [s, counter] = queue.front();
    queue.pop_front();
    const State src = ids.at({s, counter});
    for (State t : m.epsilon(s)) out.add_epsilon(src, intern(t, counter));
    const bool erased = m.class_of(s) == tape;
    for (const auto& [label, targets] : m.transitions(s)) {
      if (!erased) {
        for (State t : targets) out.add_transition(src, label, intern(t, counter));
        continue;
      }
      auto next = advance(counter, label);
      if (!next) continue;
      for (State t : targets) out.add_epsilon(src, intern(t, *next));
    }
  }
  return out;
}

}  // namespace

SAA exists_saa(const SAA& m, int tape) {
  return erase_tape(
      m, tape,
      [](int done, Letter label) -> std::optional<int> {
        if (done != 0) return std::nullopt;
        return label == kPad ? 1 : 0;
      },
      1);
}

SAA fix_tape(const SAA& m, int tape, const Word& word) {
  const int len = static_cast<int>(word.size());
  return erase_tape(
      m, tape,
      [&word, len](int pos, Letter label) -> std::optional<int> {
        if (pos < len && word[static_cast<std::size_t>(pos)] == label) return pos + 1;
        if (pos == len && label == kPad) return pos + 1;
        return std::nullopt;
      },
      len + 1);
}

SyncAutomaton saa_to_regular(const SAA& m) {
  if (m.tapes() != 1) throw ArityError("only one-tape machines are regular languages directly");
  SyncAutomaton out(1, m.alphabet());
  for (State s = 0; s < m.num_states(); ++s) out.add_state(m.name(s), m.is_start(s), false);
  for (State s = 0; s < m.num_states(); ++s) {
    for (State t : m.epsilon(s)) out.add_epsilon(s, t);
    for (const auto& [label, targets] : m.transitions(s)) {
      if (label == kPad) continue;
      for (State t : targets) out.add_transition(s, {label}, t);
    }
  }
  // the run may end after reading $ and then following epsilon arrows
  for (State s = 0; s < m.num_states(); ++s) {
    auto it = m.transitions(s).find(kPad);
    if (it == m.transitions(s).end()) continue;
    auto after = epsilon_closure(out, it->second);
    if (std::any_of(after.begin(), after.end(), [&](State q) { return m.is_accept(q); })) out.set_accept(s);
  }
  return out;
}

SemiSortedAsync bridge(const SAA& m) {
  const int n = m.tapes();
  const auto base = static_cast<Letter>(m.alphabet().size());
  constexpr Letter kEps = -3;

  struct Node {
    std::string name;
    int cls;
    bool start;
    bool accept;
  };
  std::vector<Node> nodes;
  std::map<std::string, State> by_name;
  auto add_node = [&](std::string name, int cls, bool start, bool accept) {
    while (by_name.count(name) != 0) name += '\'';
    const auto id = static_cast<State>(nodes.size());
    by_name.emplace(name, id);
    nodes.push_back({std::move(name), cls, start, accept});
    return id;
  };
  using Arrow = std::tuple<State, Letter, State>;
  std::set<Arrow> arrows;
  for (State s = 0; s < m.num_states(); ++s) add_node(m.name(s), m.class_of(s) + 1, m.is_start(s), m.is_accept(s));
  for (State s = 0; s < m.num_states(); ++s) {
    for (const auto& [label, targets] : m.transitions(s)) {
      for (State t : targets) arrows.emplace(s, label, t);
    }
    for (State t : m.epsilon(s)) arrows.emplace(s, kEps, t);
  }
  auto arrow_less = [&](const Arrow& a, const Arrow& b) {
    const auto& [as, al, at] = a;
    const auto& [bs, bl, bt] = b;
    return std::tie(nodes[as].name, al, nodes[at].name) < std::tie(nodes[bs].name, bl, nodes[bt].name);
  };
  Letter fresh = 0;
  auto next_letter = [&]() { return base + fresh++; };

  // Each epsilon arrow r1 -> r2 becomes a class-0 state entered like r1 and
  // left to r2 on a generated letter.
  std::vector<Arrow> eps;
  for (const auto& a : arrows) {
    if (std::get<1>(a) == kEps) eps.push_back(a);
  }
  std::sort(eps.begin(), eps.end(), arrow_less);
  std::vector<State> eps_node(eps.size());
  std::vector<Letter> eps_letter(eps.size());
  for (std::size_t e = 0; e < eps.size(); ++e) {
    const auto& [r1, label, r2] = eps[e];
    eps_letter[e] = next_letter();
    eps_node[e] = add_node("e" + std::to_string(e + 1), 0, nodes[r1].start, nodes[r1].accept);
  }
  std::set<Arrow> rerouted;
  for (const auto& a : arrows) {
    if (std::get<1>(a) != kEps) rerouted.insert(a);
  }
  for (std::size_t e = 0; e < eps.size(); ++e) {
    const auto& [r1, label, r2] = eps[e];
    rerouted.emplace(eps_node[e], eps_letter[e], r2);
    for (const auto& [src, l, dst] : arrows) {
      if (dst == r1 && l != kEps) rerouted.emplace(src, l, eps_node[e]);
    }
    for (std::size_t f = 0; f < eps.size(); ++f) {
      if (std::get<2>(eps[f]) == r1) rerouted.emplace(eps_node[f], eps_letter[f], eps_node[e]);
    }
  }
  arrows = std::move(rerouted);

  // Tape 0 must also end with its terminator: every accept state gets a
  // class-0 twin that reads $ into a single new accept state.
  std::vector<State> accepting;
  for (State s = 0; s < nodes.size(); ++s) {
    if (nodes[s].accept) accepting.push_back(s);
  }
  std::sort(accepting.begin(), accepting.end(), [&](State a, State b) { return nodes[a].name < nodes[b].name; });
  const State fin = add_node("fin", 0, false, true);
  for (State q : accepting) {
    const State twin = add_node(nodes[q].name + "^", 0, false, false);
    std::vector<Arrow> incoming;
    for (const auto& [src, l, dst] : arrows) {
      if (dst == q) incoming.emplace_back(src, l, twin);
    }
    arrows.insert(incoming.begin(), incoming.end());
    arrows.emplace(twin, kPad, fin);
    nodes[q].accept = false;
  }

  // Bundles of equal labels leaving one state go through a class-0 state
  // that picks the target by a generated letter.
  std::map<std::pair<State, Letter>, std::vector<State>> bundles;
  for (const auto& [src, l, dst] : arrows) bundles[{src, l}].push_back(dst);
  std::vector<std::pair<State, Letter>> keys;
  for (const auto& [key, targets] : bundles) {
    if (targets.size() > 1) keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    return std::tie(nodes[a.first].name, a.second) < std::tie(nodes[b.first].name, b.second);
  });
  for (const auto& [src, label] : keys) {
    auto targets = bundles.at({src, label});
    std::sort(targets.begin(), targets.end(), [&](State a, State b) { return nodes[a].name < nodes[b].name; });
    const std::string token = label == kPad  ? std::string(kPadToken)
                              : label < base ? m.alphabet().token(label)
                                             : "@" + std::to_string(label - base + 1);
    const State hub = add_node(nodes[src].name + "~" + token, 0, false, false);
    for (State t : targets) {
      arrows.erase({src, label, t});
      arrows.emplace(hub, next_letter(), t);
    }
    arrows.emplace(src, label, hub);
  }

  std::vector<State> starts;
  for (State s = 0; s < nodes.size(); ++s) {
    if (nodes[s].start) starts.push_back(s);
  }
  if (starts.size() != 1) {
    std::sort(starts.begin(), starts.end(), [&](State a, State b) { return nodes[a].name < nodes[b].name; });
    const State root = add_node("start", 0, false, false);
    for (State t : starts) {
      nodes[t].start = false;
      arrows.emplace(root, next_letter(), t);
    }
    nodes[root].start = true;
  }

  SemiSortedAsync out(n + 1, m.alphabet().with_fresh_letters(static_cast<std::size_t>(fresh)));
  for (const auto& node : nodes) out.add_state(node.name, node.cls, node.start, node.accept);
  for (const auto& [src, l, dst] : arrows) out.add_transition(src, l, dst);
  out.validate();
  return out;
}

}  // namespace mtfa
