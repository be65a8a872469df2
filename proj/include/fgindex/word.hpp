#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fgx {

// A letter of a free group F_N: +i stands for the i-th generator (1-based),
// -i for its inverse. Rank is carried by the containing word.
using Letter = std::int16_t;

constexpr Letter inverse(Letter x) { return static_cast<Letter>(-x); }

// 1-based generator index regardless of sign.
constexpr int generator_index(Letter x) { return x > 0 ? x : -x; }

// Slot in the fixed letter order a < a^-1 < b < b^-1 < ...; 0-based.
constexpr int letter_slot(Letter x)
{
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}

constexpr Letter slot_letter(int slot)
{
  int gen = slot / 2 + 1;
  return static_cast<Letter>(slot % 2 == 0 ? gen : -gen);
}

// Freely reduced word over a fixed rank. The letter sequence is reduced on
// construction and stays reduced under every operation.
class Word {
public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}
  // Reduces the given letters; throws std::invalid_argument on a letter
  // outside [1, rank] in absolute value or on rank < 1.
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters);

  int rank() const { return rank_; }
  // |w|_A, the freely reduced length.
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  // Concatenation followed by free reduction. Ranks must agree.
  Word operator*(const Word& rhs) const;
  Word pow(long e) const;

  bool is_cyclically_reduced() const;
  // ||w||_A, the cyclically reduced length.
  std::size_t cyclic_length() const;

  // Occurrences of generator g (1-based), counting both signs.
  std::size_t occurrences(int g) const;
  // True if generator g does not occur at all.
  bool omits(int g) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

private:
  int rank_ = 0;
  std::vector<Letter> letters_;

  friend Word unsafe_reduced(int rank, std::vector<Letter> letters);
};

// Wraps an already-reduced letter sequence without revalidating. Internal.
Word unsafe_reduced(int rank, std::vector<Letter> letters);

// A conjugacy class representative: cyclically reduced word. Canonical form
// is the lexicographically least rotation.
class CyclicWord {
public:
  CyclicWord() = default;
  // Requires w cyclically reduced; throws std::invalid_argument otherwise.
  explicit CyclicWord(const Word& w);

  const Word& rep() const { return rep_; }
  int rank() const { return rep_.rank(); }
  std::size_t length() const { return rep_.size(); }

  // Least rotation of the representative.
  Word canonical() const;
  // Least over all rotations of the representative and of its inverse.
  // Identifies w with w^-1; used for orbit dedup and memo keys.
  Word canonical_with_inversion() const;

  bool operator==(const CyclicWord& o) const
  {
    return canonical() == o.canonical();
  }

private:
  Word rep_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  // w == conjugator * cyclic.rep() * conjugator^-1
  Word conjugator;
};

// Validates letters against the rank and reduces.
Word free_reduce(int rank, std::span<const Letter> letters);

CyclicReduction cyclic_reduce(const Word& w);

// a^n b^t in rank 2. Negative exponents give inverse letters.
Word power_word(long n, long t);

// Homomorphic image of w under generator -> images[generator-1]; all images
// must share one rank, which becomes the rank of the result.
Word apply_letter_map(const Word& w, std::span<const Word> images);

// Text format: 'a'/'A' and 'b'/'B' name generators 1 and 2; 'x3'/'X3' name
// higher generators (uppercase = inverse). '^' takes an integer exponent,
// possibly negative. Whitespace separates factors. parse_word throws
// std::invalid_argument on malformed text or letters beyond the rank.
Word parse_word(const std::string& text, int rank);
std::string print_word(const Word& w);

}  // namespace fgx
