#include "mtfa/words.hpp"

#include <algorithm>
#include <charconv>

#include "mtfa/error.hpp"

namespace mtfa {

namespace {

const std::string kPadString{kPadToken};

constexpr std::string_view kReservedChars = "(){},=#.";

}  // namespace

bool Alphabet::is_valid_token(std::string_view token) noexcept {
  if (token.empty() || token == kPadToken || token == kEpsToken) return false;
  for (char ch : token) {
    if (static_cast<unsigned char>(ch) <= ' ') return false;
    if (kReservedChars.find(ch) != std::string_view::npos) return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& tok = letters_[i];
    if (!is_valid_token(tok)) throw ValidationError("invalid alphabet letter '" + tok + "'");
    if (!index_.emplace(tok, static_cast<Letter>(i)).second) {
      throw ValidationError("duplicate alphabet letter '" + tok + "'");
    }
  }
  inverse_.assign(letters_.size(), kPad);
}

const std::string& Alphabet::token(Letter letter) const {
  if (letter == kPad) return kPadString;
  if (!contains(letter)) throw ArityError("letter index " + std::to_string(letter) + " outside alphabet");
  return letters_[static_cast<std::size_t>(letter)];
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view token) const {
  if (auto found = find(token)) return *found;
  throw ArityError("unknown letter '" + std::string(token) + "'");
}

void Alphabet::set_inverse(Letter a, Letter b) {
  if (!contains(a) || !contains(b)) throw ValidationError("inverse pairing names a letter outside the alphabet");
  auto& ia = inverse_[static_cast<std::size_t>(a)];
  auto& ib = inverse_[static_cast<std::size_t>(b)];
  if ((ia != kPad && ia != b) || (ib != kPad && ib != a)) {
    throw ValidationError("inverse pairing of '" + token(a) + "' and '" + token(b) + "' is not an involution");
  }
  ia = b;
  ib = a;
}

bool Alphabet::has_inverse() const noexcept {
  return std::any_of(inverse_.begin(), inverse_.end(), [](Letter l) { return l != kPad; });
}

bool Alphabet::inverse_total() const noexcept {
  return std::all_of(inverse_.begin(), inverse_.end(), [](Letter l) { return l != kPad; });
}

std::optional<Letter> Alphabet::inverse(Letter letter) const {
  if (!contains(letter)) return std::nullopt;
  Letter inv = inverse_[static_cast<std::size_t>(letter)];
  if (inv == kPad) return std::nullopt;
  return inv;
}

Alphabet Alphabet::with_fresh_letters(std::size_t count) const {
  std::size_t next = 1;
  for (const auto& tok : letters_) {
    if (tok.size() < 2 || tok[0] != '@') continue;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), value);
    if (ec == std::errc() && ptr == tok.data() + tok.size()) next = std::max(next, value + 1);
  }
  auto letters = letters_;
  for (std::size_t i = 0; i < count; ++i) letters.push_back("@" + std::to_string(next + i));
  Alphabet result(std::move(letters));
  for (std::size_t i = 0; i < inverse_.size(); ++i) result.inverse_[i] = inverse_[i];
  return result;
}

bool Alphabet::needs_separator() const noexcept {
  return std::any_of(letters_.begin(), letters_.end(), [](const std::string& t) { return t.size() > 1; });
}

std::string Alphabet::spell(const Word& word) const {
  std::string out;
  const bool sep = needs_separator();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (sep && i > 0) out += '.';
    out += token(word[i]);
  }
  return out;
}

std::string Alphabet::spell_symbol(const PaddedSymbol& symbol) const {
  std::string out = "(";
  for (std::size_t i = 0; i < symbol.size(); ++i) {
    if (i > 0) out += ',';
    out += token(symbol[i]);
  }
  out += ')';
  return out;
}

std::string Alphabet::spell_tuple(const WordTuple& tuple) const {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple[i].empty() ? std::string("eps") : spell(tuple[i]);
  }
  out += ')';
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word word;
  if (text.empty() || text == kEpsToken) return word;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('.', start);
      if (end == std::string_view::npos) end = text.size();
      word.push_back(at(text.substr(start, end - start)));
      start = end + 1;
    }
    return word;
  }
  // Greedy longest match against the declared tokens.
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best_len = 0;
    Letter best = kPad;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      const auto& tok = letters_[i];
      if (tok.size() > best_len && text.substr(pos, tok.size()) == tok) {
        best_len = tok.size();
        best = static_cast<Letter>(i);
      }
    }
    if (best_len == 0) throw ArityError("cannot split '" + std::string(text) + "' into alphabet letters");
    word.push_back(best);
    pos += best_len;
  }
  return word;
}

PaddedString pad(const WordTuple& tuple) {
  std::size_t longest = 0;
  for (const auto& w : tuple) longest = std::max(longest, w.size());
  PaddedString out(longest, PaddedSymbol(tuple.size(), kPad));
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t k = 0; k < tuple[i].size(); ++k) out[k][i] = tuple[i][k];
  }
  return out;
}

WordTuple unpad(const PaddedString& padded, std::size_t tapes) {
  WordTuple out(tapes);
  std::vector<bool> ended(tapes, false);
  for (const auto& column : padded) {
    if (column.size() != tapes) throw ArityError("padded symbol has wrong arity");
    bool all_pad = true;
    for (std::size_t i = 0; i < tapes; ++i) {
      if (column[i] == kPad) {
        ended[i] = true;
      } else {
        all_pad = false;
        if (ended[i]) throw PreconditionError("not a padded string: letter after $ on tape " + std::to_string(i + 1));
        out[i].push_back(column[i]);
      }
    }
    if (all_pad) throw PreconditionError("not a padded string: all-$ column");
  }
  return out;
}

namespace {

void shuffle_rec(const WordTuple& tuple, const std::vector<std::size_t>& lengths, std::vector<std::size_t>& pos,
                 Shuffle& current, std::vector<Shuffle>& out) {
  bool done = true;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (pos[i] >= lengths[i]) continue;
    done = false;
    current.tape_order.push_back(static_cast<int>(i));
    current.letters.push_back(pos[i] < tuple[i].size() ? tuple[i][pos[i]] : kPad);
    ++pos[i];
    shuffle_rec(tuple, lengths, pos, current, out);
    --pos[i];
    current.tape_order.pop_back();
    current.letters.pop_back();
  }
  if (done) out.push_back(current);
}

}  // namespace

std::vector<Shuffle> enumerate_shuffles(const WordTuple& tuple, bool with_terminators) {
  std::vector<std::size_t> lengths;
  for (const auto& w : tuple) lengths.push_back(w.size() + (with_terminators ? 1 : 0));
  std::vector<std::size_t> pos(tuple.size(), 0);
  std::vector<Shuffle> out;
  Shuffle current;
  shuffle_rec(tuple, lengths, pos, current, out);
  return out;
}

std::vector<Word> lenlex_stream(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len && alphabet.size() > 0; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        Word next = out[i];
        next.push_back(static_cast<Letter>(a));
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

bool lenlex_less(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word lenlex_unrank(std::uint64_t rank, std::size_t alphabet_size) {
  if (alphabet_size == 0) return {};
  std::size_t len = 0;
  std::uint64_t level = 1;
  while (rank >= level) {
    rank -= level;
    level *= alphabet_size;
    ++len;
  }
  Word word(len);
  for (std::size_t i = len; i-- > 0;) {
    word[i] = static_cast<Letter>(rank % alphabet_size);
    rank /= alphabet_size;
  }
  return word;
}

}  // namespace mtfa
