#pragma once

#include <string_view>
#include <variant>

#include "mtfa/async_det.hpp"
#include "mtfa/async_nondet.hpp"
#include "mtfa/sync.hpp"

namespace mtfa {

/// Any of the five machine models.
using AnyMachine = std::variant<SyncAutomaton, SemiSortedAsync, SortedAsync, FAA, SAA>;

inline int tapes_of(const AnyMachine& m) {
  return std::visit([](const auto& x) { return x.tapes(); }, m);
}

inline const Alphabet& alphabet_of(const AnyMachine& m) {
  return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, m);
}

inline std::size_t states_of(const AnyMachine& m) {
  return std::visit([](const auto& x) { return x.num_states(); }, m);
}

/// File spelling of the model: sync, semisorted, sorted, faa or saa.
inline std::string_view kind_of(const AnyMachine& m) {
  switch (m.index()) {
    case 0: return "sync";
    case 1: return "semisorted";
    case 2: return "sorted";
    case 3: return "faa";
    default: return "saa";
  }
}

/// Acceptance through the model's own simulator.
inline bool accepts_any(const AnyMachine& m, const WordTuple& t) {
  struct Visitor {
    const WordTuple& t;
    bool operator()(const SyncAutomaton& x) const { return accepts(x, t); }
    bool operator()(const SemiSortedAsync& x) const { return accepts_semisorted(x, t); }
    bool operator()(const SortedAsync& x) const { return accepts_sorted(x, t); }
    bool operator()(const FAA& x) const { return accepts_faa(x, t); }
    bool operator()(const SAA& x) const { return accepts_saa(x, t); }
  };
  return std::visit(Visitor{t}, m);
}

}  // namespace mtfa
