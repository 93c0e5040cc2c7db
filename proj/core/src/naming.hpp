#pragma once

#include <string>

#include "mtfa/words.hpp"

namespace mtfa::detail {

template <class Machine>
std::string fresh_name(const Machine& m, std::string base) {
  while (m.find_state(base)) base += '\'';
  return base;
}

// "{1,3}" for a 0-based tape mask, printed 1-based.
inline std::string tape_set_name(std::uint32_t mask, int tapes) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < tapes; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace mtfa::detail
