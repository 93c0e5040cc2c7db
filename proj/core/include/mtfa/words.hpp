#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mtfa {

/// Index into an Alphabet's declaration order. Negative values are sentinels.
using Letter = std::int32_t;

/// End-of-tape padding symbol, spelled `$` in files.
inline constexpr Letter kPad = -1;

using Word = std::vector<Letter>;
using WordTuple = std::vector<Word>;

/// One column of a padded string: entry i is a letter of tape i or kPad.
using PaddedSymbol = std::vector<Letter>;
using PaddedString = std::vector<PaddedSymbol>;

inline constexpr std::string_view kPadToken = "$";
inline constexpr std::string_view kEpsToken = "eps";

/// Finite ordered alphabet with an optional inverse pairing.
///
/// Letter order is declaration order; length-lex enumeration follows it.
/// Tokens are compared byte-wise.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }

  /// Token for a letter; kPad spells as `$`.
  const std::string& token(Letter letter) const;
  std::optional<Letter> find(std::string_view token) const;
  Letter at(std::string_view token) const;
  bool contains(Letter letter) const noexcept {
    return letter >= 0 && static_cast<std::size_t>(letter) < letters_.size();
  }

  /// Pairs a and b as mutual inverses. A letter may be its own inverse.
  void set_inverse(Letter a, Letter b);
  bool has_inverse() const noexcept;
  bool inverse_total() const noexcept;
  std::optional<Letter> inverse(Letter letter) const;

  /// Copy of this alphabet with `count` generated letters `@i` appended.
  /// Numbering continues past any `@i` already present.
  Alphabet with_fresh_letters(std::size_t count) const;

  /// True when at least one token is longer than one character; words are
  /// then spelled with `.` between letters.
  bool needs_separator() const noexcept;

  std::string spell(const Word& word) const;
  std::string spell_symbol(const PaddedSymbol& symbol) const;
  std::string spell_tuple(const WordTuple& tuple) const;

  /// Parses a word written as in `spell`. `eps` and the empty string denote ε.
  Word parse_word(std::string_view text) const;

  bool operator==(const Alphabet& other) const {
    return letters_ == other.letters_ && inverse_ == other.inverse_;
  }
  /// Same letters in the same order, ignoring the inverse pairing.
  bool same_letters(const Alphabet& other) const { return letters_ == other.letters_; }

  static bool is_valid_token(std::string_view token) noexcept;

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, Letter> index_;
  std::vector<Letter> inverse_;
};

/// $-padded synchronous encoding of a tuple.
PaddedString pad(const WordTuple& tuple);

/// Inverse of pad. Throws PreconditionError if some coordinate has a letter
/// after a PAD, or if a column is entirely PAD.
WordTuple unpad(const PaddedString& padded, std::size_t tapes);

/// Interleaving of a tuple's letters that preserves each component's order.
struct Shuffle {
  std::vector<int> tape_order;  ///< tape index read at each position
  std::vector<Letter> letters;  ///< letter read at each position (kPad for terminators)
};

/// Every shuffle of `tuple`, in lexicographic order of tape_order. With
/// `with_terminators`, component i is read as w_i followed by one PAD.
std::vector<Shuffle> enumerate_shuffles(const WordTuple& tuple, bool with_terminators);

/// All words of length <= max_len, by length and then by letter order.
std::vector<Word> lenlex_stream(const Alphabet& alphabet, std::size_t max_len);

/// Length-lexicographic comparison of words.
bool lenlex_less(const Word& a, const Word& b) noexcept;

/// The word at position `rank` (0-based) of the infinite length-lex stream
/// over an alphabet of `alphabet_size` letters.
Word lenlex_unrank(std::uint64_t rank, std::size_t alphabet_size);

}  // namespace mtfa
