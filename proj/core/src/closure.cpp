#include "mtfa/closure.hpp"

#include "mtfa/error.hpp"

namespace mtfa {

SAA to_saa_exists(const SemiSortedAsync& m, int tape) { return exists_saa(as_saa(m), tape); }

SyncAutomaton exists_two_tape(const SemiSortedAsync& m, int tape) {
  if (m.tapes() != 2) throw ArityError("expected a two-tape machine");
  return saa_to_regular(to_saa_exists(m, tape));
}

SyncAutomaton forall_two_tape(const SemiSortedAsync& m, int tape) {
  if (m.tapes() != 2) throw ArityError("expected a two-tape machine");
  const auto negated = sorted_to_semisorted(complement_sorted(m));
  return complement(exists_two_tape(negated, tape));
}

}  // namespace mtfa
