#include "fgindex/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fgx {

namespace {

void check_rank(int rank)
{
  if (rank < 1) throw std::invalid_argument("word rank must be >= 1");
  if (rank > 127) throw std::invalid_argument("word rank must be <= 127");
}

void push_reduced(std::vector<Letter>& out, Letter x)
{
  if (!out.empty() && out.back() == inverse(x))
    out.pop_back();
  else
    out.push_back(x);
}

std::vector<Letter> reduce_letters(int rank, std::span<const Letter> in)
{
  check_rank(rank);
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter x : in) {
    int g = generator_index(x);
    if (g < 1 || g > rank)
      throw std::invalid_argument("letter outside rank");
    push_reduced(out, x);
  }
  return out;
}

}  // namespace

Word::Word(int rank, std::span<const Letter> letters)
    : rank_(rank), letters_(reduce_letters(rank, letters))
{
}

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(rank, std::span<const Letter>(letters.begin(), letters.size()))
{
}

Word unsafe_reduced(int rank, std::vector<Letter> letters)
{
  Word w;
  w.rank_ = rank;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const
{
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& x : rev) x = fgx::inverse(x);
  return unsafe_reduced(rank_, std::move(rev));
}

Word Word::operator*(const Word& rhs) const
{
  if (rank_ != rhs.rank_)
    throw std::invalid_argument("rank mismatch in concatenation");
  std::vector<Letter> out = letters_;
  out.reserve(out.size() + rhs.letters_.size());
  for (Letter x : rhs.letters_) push_reduced(out, x);
  return unsafe_reduced(rank_, std::move(out));
}

Word Word::pow(long e) const
{
  Word base = e < 0 ? inverse() : *this;
  long reps = e < 0 ? -e : e;
  Word acc(rank_);
  for (long i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

bool Word::is_cyclically_reduced() const
{
  if (letters_.size() < 2) return true;
  return letters_.front() != fgx::inverse(letters_.back());
}

std::size_t Word::cyclic_length() const
{
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == fgx::inverse(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  return hi - lo;
}

std::size_t Word::occurrences(int g) const
{
  std::size_t n = 0;
  for (Letter x : letters_)
    if (generator_index(x) == g) ++n;
  return n;
}

bool Word::omits(int g) const { return occurrences(g) == 0; }

CyclicWord::CyclicWord(const Word& w) : rep_(w)
{
  if (!w.is_cyclically_reduced())
    throw std::invalid_argument("cyclic word requires cyclic reduction");
}

namespace {

Word least_rotation(const Word& w)
{
  std::size_t n = w.size();
  if (n < 2) return w;
  const auto& v = w.letters();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = v[(best + i) % n];
      Letter b = v[(cand + i) % n];
      if (a != b) {
        if (b < a) best = cand;
        break;
      }
    }
  }
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[(best + i) % n];
  return unsafe_reduced(w.rank(), std::move(out));
}

}  // namespace

Word CyclicWord::canonical() const { return least_rotation(rep_); }

Word CyclicWord::canonical_with_inversion() const
{
  Word a = least_rotation(rep_);
  Word b = least_rotation(rep_.inverse());
  return std::min(a, b);
}

Word free_reduce(int rank, std::span<const Letter> letters)
{
  return Word(rank, letters);
}

CyclicReduction cyclic_reduce(const Word& w)
{
  const auto& v = w.letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == inverse(v[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(v.begin() + lo, v.begin() + hi);
  std::vector<Letter> conj(v.begin(), v.begin() + lo);
  CyclicReduction out;
  out.cyclic = CyclicWord(unsafe_reduced(w.rank(), std::move(core)));
  out.conjugator = unsafe_reduced(w.rank(), std::move(conj));
  return out;
}

Word power_word(long n, long t)
{
  Word a = Word(2, {1}).pow(n);
  Word b = Word(2, {2}).pow(t);
  return a * b;
}

Word apply_letter_map(const Word& w, std::span<const Word> images)
{
  if (static_cast<int>(images.size()) != w.rank())
    throw std::invalid_argument("letter map must cover every generator");
  int target_rank = images.empty() ? 1 : images[0].rank();
  for (const Word& im : images)
    if (im.rank() != target_rank)
      throw std::invalid_argument("letter map images must share one rank");
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter x : w.letters()) {
    const Word& im = images[generator_index(x) - 1];
    if (x > 0) {
      for (Letter y : im.letters()) push_reduced(out, y);
    } else {
      const auto& v = im.letters();
      for (auto it = v.rbegin(); it != v.rend(); ++it)
        push_reduced(out, inverse(*it));
    }
  }
  return unsafe_reduced(target_rank, std::move(out));
}

namespace {

void print_run(std::ostringstream& os, int rank, Letter x, long count)
{
  int g = generator_index(x);
  if (rank <= 2) {
    char c = static_cast<char>('a' + g - 1);
    os << (x > 0 ? c : static_cast<char>(std::toupper(c)));
  } else {
    os << (x > 0 ? 'x' : 'X') << g;
  }
  if (count > 1) os << '^' << count;
}

}  // namespace

std::string print_word(const Word& w)
{
  std::ostringstream os;
  const auto& v = w.letters();
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    print_run(os, w.rank(), v[i], static_cast<long>(j - i));
    i = j;
  }
  return os.str();
}

Word parse_word(const std::string& text, int rank)
{
  check_rank(rank);
  std::vector<Letter> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) +
                                ": " + what);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Letter base = 0;
    if (c == 'a' || c == 'A' || c == 'b' || c == 'B') {
      int g = (c == 'a' || c == 'A') ? 1 : 2;
      base = static_cast<Letter>(std::isupper(static_cast<unsigned char>(c))
                                     ? -g
                                     : g);
      ++i;
    } else if (c == 'x' || c == 'X') {
      bool inv = c == 'X';
      ++i;
      if (i >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("generator number expected after 'x'");
      long g = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        g = g * 10 + (text[i] - '0');
        if (g > 127) fail("generator number too large");
        ++i;
      }
      if (g < 1) fail("generator numbers start at 1");
      base = static_cast<Letter>(inv ? -g : g);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (generator_index(base) > rank) fail("letter outside rank");
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("exponent expected after '^'");
      exp = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1000000) fail("exponent too large");
        ++i;
      }
      if (neg) exp = -exp;
    }
    Letter x = exp < 0 ? inverse(base) : base;
    long reps = exp < 0 ? -exp : exp;
    for (long r = 0; r < reps; ++r) push_reduced(out, x);
  }
  return unsafe_reduced(rank, std::move(out));
}

}  // namespace fgx
