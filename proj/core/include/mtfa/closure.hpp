#pragma once

#include "mtfa/async_det.hpp"
#include "mtfa/async_nondet.hpp"
#include "mtfa/sync.hpp"

namespace mtfa {

/// Existential projection of a deterministic machine (tape 0-based). The
/// result is in general only nondeterministic.
SAA to_saa_exists(const SemiSortedAsync& m, int tape);

/// { w : some pair with w on the kept tape is in L(m) } for a two-tape
/// machine, as a one-tape regular automaton. `tape` is the erased tape.
SyncAutomaton exists_two_tape(const SemiSortedAsync& m, int tape);

/// { w : every pair with w on the kept tape is in L(m) }.
SyncAutomaton forall_two_tape(const SemiSortedAsync& m, int tape);

}  // namespace mtfa
