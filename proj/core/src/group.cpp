#include "mtfa/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "mtfa/async_nondet.hpp"
#include "mtfa/closure.hpp"
#include "mtfa/error.hpp"

namespace mtfa {

StructureCandidate StructureCandidate::make(Alphabet alphabet, SyncAutomaton acceptor,
                                            std::vector<SemiSortedAsync> multipliers,
                                            SemiSortedAsync epsilon_multiplier) {
  if (!alphabet.inverse_total()) throw ValidationError("every letter needs a declared inverse");
  if (acceptor.tapes() != 1) throw ValidationError("the word acceptor must have one tape");
  if (!acceptor.alphabet().same_letters(alphabet)) throw ValidationError("the word acceptor uses a different alphabet");
  if (multipliers.size() != alphabet.size()) throw ValidationError("need exactly one multiplier per letter");
  auto check = [&](const SemiSortedAsync& m, const std::string& label) {
    if (m.tapes() != 2) throw ValidationError("multiplier " + label + " must have two tapes");
    if (!m.alphabet().same_letters(alphabet)) throw ValidationError("multiplier " + label + " uses a different alphabet");
    m.validate();
    if (!is_bounded(m).bounded) {
      throw ValidationError("multiplier " + label +
                            " is not bounded: a cycle of letter arrows stays inside one tape class");
    }
  };
  for (std::size_t i = 0; i < multipliers.size(); ++i) check(multipliers[i], alphabet.token(static_cast<Letter>(i)));
  check(epsilon_multiplier, std::string(kEpsToken));
  return StructureCandidate{std::move(alphabet), std::move(acceptor), std::move(multipliers),
                            std::move(epsilon_multiplier)};
}

BoundParams bound_params(const StructureCandidate& c) {
  BoundParams p;
  p.c = std::max<std::size_t>(1, c.acceptor.num_states());
  auto absorb = [&p](const SemiSortedAsync& m) {
    p.c = std::max(p.c, m.num_states());
    p.k = std::max(p.k, is_bounded(m).k.value_or(0));
  };
  for (const auto& m : c.multipliers) absorb(m);
  absorb(c.epsilon_multiplier);
  p.axiom13_len = 2 * p.c + 2 * p.k;
  return p;
}

SignedWord positive(const Word& w) {
  SignedWord out;
  for (Letter l : w) out.push_back({l, false});
  return out;
}

SignedWord formal_inverse(const SignedWord& w) {
  SignedWord out(w.rbegin(), w.rend());
  for (auto& s : out) s.inverse = !s.inverse;
  return out;
}

std::string spell_signed(const Alphabet& a, const SignedWord& w) {
  if (w.empty()) return std::string(kEpsToken);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '.';
    out += a.token(w[i].letter);
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

const char* to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Holds: return "Holds";
    case VerdictKind::Violated: return "Violated";
    case VerdictKind::NoViolationWithinBudget: return "NoViolationWithinBudget";
  }
  return "?";
}

namespace {

struct StepLimitReached {};

// Visits index tuples over [0, sizes[i]) ordered by their largest entry and
// then lexicographically, so every bounded search is a prefix of a larger one.
// Stops when `visit` returns false.
void shell_order(const std::vector<std::uint64_t>& sizes, const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  const std::size_t d = sizes.size();
  if (d == 0) return;
  for (auto s : sizes) {
    if (s == 0) return;
  }
  const std::uint64_t top = *std::max_element(sizes.begin(), sizes.end());
  std::vector<std::uint64_t> cur(d);
  bool stop = false;
  for (std::uint64_t m = 0; m < top && !stop; ++m) {
    std::function<void(std::size_t, bool)> fill = [&](std::size_t i, bool hit) {
      if (stop) return;
      if (i == d) {
        if (hit && !visit(cur)) stop = true;
        return;
      }
      bool reachable = hit;
      for (std::size_t j = i; j < d && !reachable; ++j) reachable = sizes[j] > m;
      if (!reachable) return;
      const std::uint64_t hi = std::min(m, sizes[i] - 1);
      for (std::uint64_t v = 0; v <= hi && !stop; ++v) {
        cur[i] = v;
        fill(i + 1, hit || v == m);
      }
    };
    fill(0, false);
  }
}

std::uint64_t count_words(std::size_t symbols, std::size_t max_len) {
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total = std::min(kCap, total + layer);
    layer = std::min(kCap, layer * symbols);
  }
  return total;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Verdict holds(int axiom) {
  Verdict v;
  v.axiom = axiom;
  v.kind = VerdictKind::Holds;
  return v;
}

Verdict violated(int axiom, std::vector<Word> witness, std::optional<Letter> letter, std::string detail) {
  Verdict v;
  v.axiom = axiom;
  v.kind = VerdictKind::Violated;
  v.witness = std::move(witness);
  v.letter = letter;
  v.detail = std::move(detail);
  return v;
}

Verdict from_stuck(int axiom, const ChainResult& r, std::vector<Word> witness, std::size_t candidates) {
  Verdict v = violated(axiom, std::move(witness), std::nullopt, "");
  v.via_axiom = r.axiom;
  if (r.stuck_letter) v.letter = r.stuck_letter->letter;
  v.candidates = candidates;
  v.detail = r.axiom == 2 ? "a partner word lies outside L" : "a partner search found no partner";
  if (r.stuck_word) v.witness.push_back(*r.stuck_word);
  return v;
}

}  // namespace

StructureChecker::StructureChecker(const StructureCandidate& candidate, Budget budget)
    : c_(candidate), budget_(budget) {}

const SyncAutomaton& StructureChecker::acceptor_dfa() {
  if (!dfa_) dfa_ = determinize(c_.acceptor);
  return *dfa_;
}

bool StructureChecker::charge_step() {
  ++steps_;
  return budget_.step_limit == 0 || steps_ <= budget_.step_limit;
}

bool StructureChecker::in_language(const Word& w) {
  auto it = language_memo_.find(w);
  if (it != language_memo_.end()) return it->second;
  const bool in = accepts(c_.acceptor, {w});
  language_memo_.emplace(w, in);
  return in;
}

bool StructureChecker::in_relation(std::optional<Letter> x, const Word& u, const Word& v) {
  auto key = std::make_tuple(x ? *x : -1, u, v);
  auto it = relation_memo_.find(key);
  if (it != relation_memo_.end()) return it->second;
  const bool in = accepts_semisorted(c_.multiplier(x), {u, v});
  relation_memo_.emplace(std::move(key), in);
  return in;
}

std::optional<Word> StructureChecker::completion(const Word& u) {
  auto it = completion_memo_.find(u);
  if (it != completion_memo_.end()) return it->second;
  const auto& dfa = acceptor_dfa();
  std::optional<State> cur = *dfa.starts().begin();
  for (Letter l : u) {
    const auto& tr = dfa.transitions(*cur);
    auto next = tr.find(PaddedSymbol{l});
    if (next == tr.end()) {
      cur.reset();
      break;
    }
    cur = *next->second.begin();
  }
  std::optional<Word> result;
  if (cur) {
    std::vector<std::optional<std::pair<State, Letter>>> parent(dfa.num_states());
    std::vector<bool> seen(dfa.num_states(), false);
    std::deque<State> queue{*cur};
    seen[*cur] = true;
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      if (dfa.is_accept(s)) {
        Word z;
        for (State p = s; parent[p]; p = parent[p]->first) z.push_back(parent[p]->second);
        std::reverse(z.begin(), z.end());
        result = std::move(z);
        break;
      }
      for (const auto& [sym, targets] : dfa.transitions(s)) {
        State t = *targets.begin();
        if (seen[t]) continue;
        seen[t] = true;
        parent[t] = std::make_pair(s, sym[0]);
        queue.push_back(t);
      }
    }
  }
  completion_memo_.emplace(u, result);
  return result;
}

std::optional<Word> StructureChecker::phi_step(const Word& v, SignedLetter x) {
  if (!in_language(v)) throw PreconditionError("phi_step: '" + c_.alphabet.spell(v) + "' is not in L");
  auto key = std::make_tuple(x.letter, x.inverse, v);
  auto it = partner_memo_.find(key);
  if (it != partner_memo_.end()) return it->second;
  if (!charge_step()) throw StepLimitReached{};
  const SAA fixed = fix_tape(as_saa(c_.multiplier(x.letter)), x.inverse ? 1 : 0, v);
  std::optional<Word> partner;
  if (auto least = least_accepted(saa_to_regular(fixed))) partner = (*least)[0];
  partner_memo_.emplace(std::move(key), partner);
  return partner;
}

ChainResult StructureChecker::eval_phi_chain(const Word& v, const SignedWord& w, const Word& target) {
  if (!in_language(v) || !in_language(target)) throw PreconditionError("eval_phi_chain: endpoints must be in L");
  Word cur = v;
  for (const auto& x : w) {
    auto next = phi_step(cur, x);
    if (!next) return {ChainStatus::Stuck, cur, x.inverse ? 9 : 6, x};
    if (!in_language(*next)) return {ChainStatus::Stuck, *next, 2, x};
    cur = std::move(*next);
  }
  return {in_relation(std::nullopt, cur, target) ? ChainStatus::Equal : ChainStatus::NotEqual, {}, {}, {}};
}

Verdict StructureChecker::check_axiom1() {
  if (!is_empty(c_.acceptor)) return holds(1);
  return violated(1, {}, std::nullopt, "the word acceptor accepts nothing");
}

Verdict StructureChecker::check_axiom2() {
  const SyncAutomaton outside = complement(c_.acceptor);
  for (int xi = -1; xi < static_cast<int>(c_.alphabet.size()); ++xi) {
    const std::optional<Letter> x = xi < 0 ? std::nullopt : std::optional<Letter>(xi);
    const auto& m = c_.multiplier(x);
    for (int kept = 0; kept < 2; ++kept) {
      const auto bad = least_accepted(intersect(exists_two_tape(m, 1 - kept), outside));
      if (!bad) continue;
      const Word word = (*bad)[0];
      const SAA partners = fix_tape(as_saa(m), kept, word);
      const Word other = (*least_accepted(saa_to_regular(partners)))[0];
      std::vector<Word> pair = kept == 0 ? std::vector<Word>{word, other} : std::vector<Word>{other, word};
      return violated(2, std::move(pair), x,
                      std::string(kept == 0 ? "left" : "right") + " word of a related pair is not in L");
    }
  }
  return holds(2);
}

Verdict StructureChecker::check_axiom6() {
  for (Letter x = 0; x < static_cast<Letter>(c_.alphabet.size()); ++x) {
    const auto missing = least_accepted(intersect(c_.acceptor, complement(exists_two_tape(c_.multipliers[x], 1))));
    if (missing) return violated(6, {(*missing)[0]}, x, "word of L has no right partner");
  }
  return holds(6);
}

Verdict StructureChecker::check_axiom9() {
  for (Letter x = 0; x < static_cast<Letter>(c_.alphabet.size()); ++x) {
    const auto missing = least_accepted(intersect(c_.acceptor, complement(exists_two_tape(c_.multipliers[x], 0))));
    if (missing) return violated(9, {(*missing)[0]}, x, "word of L has no left partner");
  }
  return holds(9);
}

Verdict StructureChecker::semidecide_simple_axiom(int axiom) {
  const auto words = lenlex_stream(c_.alphabet, budget_.max_word_len);
  const auto n_words = static_cast<std::uint64_t>(words.size());
  const bool per_letter = axiom >= 7;
  int dims = 0;
  switch (axiom) {
    case 3: dims = 1; break;
    case 4: dims = 2; break;
    case 5: case 7: case 8: case 10: case 11: dims = 3; break;
    default: throw PreconditionError("axiom " + std::to_string(axiom) + " is not a simple enumeration axiom");
  }
  const std::nullopt_t eps = std::nullopt;
  Verdict result;
  result.axiom = axiom;
  std::size_t seen = 0;
  shell_order(std::vector<std::uint64_t>(static_cast<std::size_t>(dims), n_words), [&](const auto& idx) {
    const Word& u = words[idx[0]];
    const Word& v = dims > 1 ? words[idx[1]] : u;
    const Word& w = dims > 2 ? words[idx[2]] : u;
    const Letter letters = per_letter ? static_cast<Letter>(c_.alphabet.size()) : 1;
    for (Letter x = 0; x < letters; ++x) {
      if (seen >= budget_.max_candidates) return false;
      ++seen;
      bool bad = false;
      switch (axiom) {
        case 3: bad = in_language(u) && !in_relation(eps, u, u); break;
        case 4: bad = in_relation(eps, u, v) && !in_relation(eps, v, u); break;
        case 5: bad = in_relation(eps, u, v) && in_relation(eps, v, w) && !in_relation(eps, u, w); break;
        case 7: bad = in_relation(x, u, v) && in_relation(eps, v, w) && !in_relation(x, u, w); break;
        case 8: bad = in_relation(eps, u, v) && in_relation(x, u, w) && !in_relation(x, v, w); break;
        case 10: bad = in_relation(x, u, v) && in_relation(eps, u, w) && !in_relation(x, w, v); break;
        case 11: bad = in_relation(eps, u, v) && in_relation(x, w, u) && !in_relation(x, w, v); break;
        default: break;
      }
      if (bad) {
        std::vector<Word> witness;
        for (int i = 0; i < dims; ++i) witness.push_back(words[idx[static_cast<std::size_t>(i)]]);
        result = violated(axiom, std::move(witness), per_letter ? std::optional<Letter>(x) : std::nullopt, "");
        return false;
      }
    }
    return true;
  });
  result.candidates = seen;
  return result;
}

Verdict StructureChecker::semidecide_axiom12() {
  const auto words = lenlex_stream(c_.alphabet, budget_.max_word_len);
  const auto n_words = static_cast<std::uint64_t>(words.size());
  Verdict result;
  result.axiom = 12;
  std::size_t seen = 0;
  try {
    shell_order(std::vector<std::uint64_t>(4, n_words), [&](const auto& idx) {
      if (seen >= budget_.max_candidates) return false;
      ++seen;
      const Word& u = words[idx[0]];
      const Word& w = words[idx[1]];
      const Word& w2 = words[idx[2]];
      const Word& v = words[idx[3]];
      const Word uw = concat(u, w);
      const Word uw2 = concat(u, w2);
      if (!in_language(uw) || !in_language(uw2) || !in_language(v)) return true;
      const auto a = eval_phi_chain(v, positive(w), uw);
      const auto b = a.status == ChainStatus::Stuck ? a : eval_phi_chain(v, positive(w2), uw2);
      if (b.status == ChainStatus::Stuck) {
        result = from_stuck(12, b, {u, w, w2, v}, seen);
        return false;
      }
      if (a.status != b.status) {
        result = violated(12, {u, w, w2, v}, std::nullopt,
                          a.status == ChainStatus::Equal ? "[v]phi_w = [uw] but [v]phi_w' != [uw']"
                                                         : "[v]phi_w != [uw] but [v]phi_w' = [uw']");
        return false;
      }
      return true;
    });
  } catch (const StepLimitReached&) {
    result.detail = "step limit reached";
  }
  result.candidates = seen;
  return result;
}

Verdict StructureChecker::semidecide_axiom13() {
  const BoundParams params = bound_params(c_);
  const std::size_t symbols = 2 * c_.alphabet.size();
  const std::uint64_t n_signed = count_words(symbols, params.axiom13_len);
  std::vector<Word> prefixes;
  for (auto& u : lenlex_stream(c_.alphabet, budget_.max_word_len)) {
    if (completion(u)) prefixes.push_back(std::move(u));
  }
  struct Seen {
    std::optional<Word> fixed;
    std::optional<Word> moved;
  };
  std::map<std::uint64_t, Seen> by_word;
  Verdict result;
  result.axiom = 13;
  std::size_t seen = 0;
  try {
    shell_order({n_signed, static_cast<std::uint64_t>(prefixes.size())}, [&](const auto& idx) {
      if (seen >= budget_.max_candidates) return false;
      ++seen;
      SignedWord w;
      for (Letter code : lenlex_unrank(idx[0], symbols)) w.push_back({code / 2, code % 2 == 1});
      const Word& u = prefixes[idx[1]];
      const Word z = *completion(u);
      const Word uz = concat(u, z);
      SignedWord chain = formal_inverse(positive(z));
      chain.insert(chain.end(), w.begin(), w.end());
      const SignedWord tail = positive(z);
      chain.insert(chain.end(), tail.begin(), tail.end());
      const auto r = eval_phi_chain(uz, chain, uz);
      if (r.status == ChainStatus::Stuck) {
        result = from_stuck(13, r, {u}, seen);
        result.signed_word = w;
        return false;
      }
      auto& entry = by_word[idx[0]];
      (r.status == ChainStatus::Equal ? entry.fixed : entry.moved) = u;
      if (entry.fixed && entry.moved) {
        result = violated(13, {*entry.fixed, *entry.moved}, std::nullopt, "phi_w fixes the first class but moves the second");
        result.signed_word = w;
        return false;
      }
      return true;
    });
  } catch (const StepLimitReached&) {
    result.detail = "step limit reached";
  }
  result.candidates = seen;
  return result;
}

Verdict StructureChecker::check(int axiom) {
  switch (axiom) {
    case 1: return check_axiom1();
    case 2: return check_axiom2();
    case 6: return check_axiom6();
    case 9: return check_axiom9();
    case 12: return semidecide_axiom12();
    case 13: return semidecide_axiom13();
    default: return semidecide_simple_axiom(axiom);
  }
}

AxiomReport StructureChecker::run_all() {
  AxiomReport report;
  report.verdicts.resize(13);
  for (int axiom : {1, 2, 6, 9, 3, 4, 5, 7, 8, 10, 11, 12, 13}) {
    report.verdicts[static_cast<std::size_t>(axiom - 1)] = check(axiom);
  }
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    if (report.verdicts[i].violated()) {
      report.first_violation = i;
      break;
    }
  }
  return report;
}

}  // namespace mtfa
