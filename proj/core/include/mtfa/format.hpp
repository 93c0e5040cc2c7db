#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mtfa/group.hpp"
#include "mtfa/machine.hpp"

namespace mtfa {

// Line-oriented machine files:
//
//   kind: semisorted          # sync | fsa | semisorted | sorted | faa | saa
//   tapes: 2
//   alphabet: x y
//   inv: x y
//   state L0 start class=1
//   state F accept class=2
//   trans L0 x F
//
// Sorted states carry sort=<i>:{v,...} or sort=final. Sync and FAA labels
// are tuples such as (a,$); FAA lines end in filters={{1},{1,2}} -> {t1,t2}.
// Tapes and classes are 1-based in files.

/// Throws FormatError with a line number on malformed or invalid input.
AnyMachine parse_machine(std::string_view text);
AnyMachine load_machine(const std::filesystem::path& path);

/// Canonical text: states sorted by name, transitions by (source, label,
/// target).
std::string print_machine(const AnyMachine& m);

/// Parses "(w1,w2,...)", or a single word for one tape. Words as in
/// Alphabet::parse_word.
WordTuple parse_tuple(const Alphabet& alphabet, std::string_view text);

// Bundle manifests list the candidate's files relative to the manifest:
//
//   alphabet: a b
//   inv: a b
//   acceptor: word.mta
//   multiplier a: ma.mta
//   multiplier b: mb.mta
//   multiplier eps: meps.mta

StructureCandidate parse_bundle(std::string_view text, const std::filesystem::path& base_dir);
StructureCandidate load_bundle(const std::filesystem::path& path);

}  // namespace mtfa
