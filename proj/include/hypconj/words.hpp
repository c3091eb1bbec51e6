#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypconj/errors.hpp"

namespace hypconj {

using Letter = std::uint8_t;

/// An ordered, inverse-closed alphabet. Letters are small indices into the
/// declaration order, which is also the total order used by shortlex.
/// Self-inverse letters (order-2 generators) are stored once and print as
/// their lowercase symbol.
class Alphabet {
 public:
  Alphabet(std::string symbols, std::vector<Letter> inverses, int gen_count);

  // a A b B ... with uppercase inverses.
  static Alphabet free_group(int rank);
  // One letter per order-2 factor, a lowercase/uppercase pair otherwise.
  // `gens` optionally names the generator letter of each factor.
  static Alphabet free_product(const std::vector<int>& orders,
                               std::string_view gens = {});

  int size() const { return static_cast<int>(symbols_.size()); }
  int gen_count() const { return gen_count_; }
  Letter inverse(Letter x) const { return inverses_[x]; }
  char symbol(Letter x) const { return symbols_[x]; }
  std::optional<Letter> index_of(char c) const;

  bool operator==(const Alphabet&) const;

 private:
  std::string symbols_;
  std::vector<Letter> inverses_;
  int gen_count_ = 0;
  std::array<std::int16_t, 256> lookup_{};
};

/// A finite (possibly empty) sequence of letters over some alphabet.
/// Values are immutable in spirit: every operation returns a new word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// First `n` letters, w(n).
  Word prefix(std::size_t n) const;
  /// Letters a..b, w(a:b); requires 0 <= a <= b <= size().
  Word subword(std::size_t a, std::size_t b) const;

  /// w_L: the first floor(|w|/2) letters.
  Word left_half() const { return prefix(size() / 2); }
  /// w_R: the remaining letters.
  Word right_half() const { return subword(size() / 2, size()); }
  /// w_C = w_R w_L.
  Word half_cyclic() const;
  /// w(k:|w|) w(k): the rotation starting at position k.
  Word rotated(std::size_t k) const;

  /// The word repeated n times; n must be >= 0.
  Word repeated(long long n) const;

  Word& push_back(Letter l) {
    letters_.push_back(l);
    return *this;
  }
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Shortlex order: shorter first, then letter indices lexicographically.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a, b);
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

/// Reversed word with every letter inverted; invert(invert(w)) == w.
Word invert(const Word& w, const Alphabet& alphabet);

/// Lowercase letters are generators, uppercase their inverses. Rejects
/// symbols outside the alphabet, citing the 1-based position.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

/// One word per line; '#' starts a comment; blank lines ignored.
std::vector<Word> parse_word_list(std::istream& in, const Alphabet& alphabet,
                                  const std::string& source_name = "<input>");
std::vector<Word> load_word_list(const std::filesystem::path& path,
                                 const Alphabet& alphabet);

}  // namespace hypconj
