#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace amalgam {

// A signed generator index: +i is the i-th free generator (1-based), -i its
// inverse.
using Letter = int;

constexpr int generator_of(Letter l) { return l < 0 ? -l : l; }

// Position of a letter in the fixed edge order a, a^-1, b, b^-1, ...
// Used for graph adjacency slots, BFS order and shortlex comparison.
constexpr int slot_of(Letter l) { return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0); }

constexpr Letter letter_of_slot(int slot) {
  return (slot % 2 == 0) ? slot / 2 + 1 : -(slot / 2 + 1);
}

class Alphabet {
 public:
  explicit Alphabet(int rank);

  int rank() const { return rank_; }
  bool contains(Letter l) const { return l != 0 && generator_of(l) <= rank_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
};

// A freely reduced word in the free group of a given rank. The empty word is
// the identity. Words only remember their rank, which is checked whenever two
// words are combined.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : rank_(alphabet.rank()) {}

  static Word generator(Alphabet alphabet, int index);
  // The one-letter word; negative letters give inverse generators.
  static Word letter(Alphabet alphabet, Letter l);

  int rank() const { return rank_; }
  Alphabet alphabet() const { return Alphabet(rank_); }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  // Sub-word of a reduced word; always reduced.
  Word slice(std::size_t begin, std::size_t end) const;

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex with letter order a < A < b < B < ...
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  friend Word reduce(std::span<const Letter> raw, Alphabet alphabet);
  friend Word mul(const Word& u, const Word& v);
  friend Word inv(const Word& u);

  Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 0;
  std::vector<Letter> letters_;
};

// Free reduction. Throws DomainError on a letter outside the alphabet.
Word reduce(std::span<const Letter> raw, Alphabet alphabet);

// Reduced concatenation. Throws DomainError if the ranks differ.
Word mul(const Word& u, const Word& v);

Word inv(const Word& u);

// [u, v] = u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

// g^-1 w g
Word conjugate(const Word& w, const Word& g);

Word power(const Word& w, long exponent);

// Image of w under the homomorphism sending generator i to images[i-1].
// The result lives in the alphabet of the images.
Word substitute(const Word& w, std::span<const Word> images, Alphabet target);

// Text form: "abA" is a b a^-1, "a^3", "b^-2", "A^2" (= a^-2) are powers,
// whitespace is ignored and "1" (or nothing) is the identity.
Word parse_word(std::string_view text, Alphabet alphabet);

// Letters a, b, c, ... for generators, uppercase for inverses; "1" for the
// identity.
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

// Every reduced word of length <= max_length, in shortlex order.
std::vector<Word> all_reduced_words(Alphabet alphabet, std::size_t max_length);

}  // namespace amalgam

template <>
struct std::hash<amalgam::Word> {
  std::size_t operator()(const amalgam::Word& w) const noexcept;
};
