#include "fgindex/constructions.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fgindex/stallings.hpp"
#include "fgindex/whitehead.hpp"
#include "fgindex/word.hpp"

using namespace fgx;

namespace {

Word rw(const std::string& s, int rank) { return parse_word(s, rank); }

Word substitute(const Word& coords, const std::vector<Word>& basis)
{
  return apply_letter_map(coords, basis);
}

Word random_coord_word(std::mt19937& rng, int rank, int len)
{
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    ls.push_back(static_cast<Letter>(sign(rng) ? g : -g));
  }
  return Word(rank, ls);
}

}  // namespace

TEST_CASE("nielsen moves update the basis and the coordinate map")
{
  std::vector<Word> basis = {rw("a", 2), rw("b", 2)};

  SUBCASE("right multiplication")
  {
    BasisChange c = apply_nielsen_moves(basis, {{NielsenMove::Side::Right, 0, 1}});
    CHECK(c.final_basis[0] == rw("ab", 2));
    CHECK(c.final_basis[1] == rw("b", 2));
    CHECK(c.old_to_new[0] == rw("x1X2", 2));
    CHECK(c.old_to_new[1] == rw("x2", 2));
  }

  SUBCASE("left multiplication")
  {
    BasisChange c = apply_nielsen_moves(basis, {{NielsenMove::Side::Left, 0, 1}});
    CHECK(c.final_basis[0] == rw("ba", 2));
    CHECK(c.old_to_new[0] == rw("X2x1", 2));
  }

  SUBCASE("rewrite preserves the group element")
  {
    std::vector<NielsenMove> moves = {{NielsenMove::Side::Right, 0, 1},
                                      {NielsenMove::Side::Left, 1, 0}};
    BasisChange c = apply_nielsen_moves(basis, moves);
    Word coords = rw("x1x2X1", 2);
    CHECK(substitute(c.rewrite(coords), c.final_basis) ==
          substitute(coords, basis));
  }

  SUBCASE("bad indices throw")
  {
    CHECK_THROWS_AS(
        apply_nielsen_moves(basis, {{NielsenMove::Side::Right, 0, 0}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        apply_nielsen_moves(basis, {{NielsenMove::Side::Right, 0, 2}}),
        std::invalid_argument);
  }
}

TEST_CASE("random nielsen chains keep substitution consistent")
{
  std::mt19937 rng(0xbedf);
  std::vector<Word> basis = {rw("ab", 2), rw("aB", 2), rw("a", 2)};
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> side(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<NielsenMove> moves;
    for (int i = 0; i < 6; ++i) {
      int t = pick(rng), o = pick(rng);
      if (t == o) continue;
      moves.push_back({side(rng) ? NielsenMove::Side::Left
                                 : NielsenMove::Side::Right,
                       t, o});
    }
    BasisChange c = apply_nielsen_moves(basis, moves);
    for (int i = 0; i < 4; ++i) {
      Word coords = random_coord_word(rng, 3, 8);
      CHECK(substitute(c.rewrite(coords), c.final_basis) ==
            substitute(coords, basis));
    }
  }
}

TEST_CASE("double cycle and kernel covers agree")
{
  for (int d = 1; d <= 6; ++d) {
    AGraph g = double_cycle_cover(d);
    AGraph h = kernel_phi_cover(d);
    CHECK(g.is_cover());
    CHECK(g.vertex_count() == d);
    CHECK(canonical_key(g) == canonical_key(h));
  }
  CHECK_THROWS_AS(double_cycle_cover(0), std::invalid_argument);
}

TEST_CASE("kernel cover membership is the exponent-sum criterion")
{
  std::mt19937 rng(4242);
  for (int d = 2; d <= 5; ++d) {
    AGraph g = kernel_phi_cover(d);
    for (int trial = 0; trial < 50; ++trial) {
      Word w = random_coord_word(rng, 2, 9);
      long phi = 0;
      for (Letter x : w.letters())
        phi += (std::abs(x) == 1 ? 1 : -1) * (x > 0 ? 1 : -1);
      CHECK((g.trace(0, w) == 0) == (phi % d == 0));
    }
  }
}

TEST_CASE("cycle basis at d = 2")
{
  SubgroupBasis b = lemma_one_basis(2);
  REQUIRE(b.dual.words.size() == 3);
  CHECK(b.dual.words[0] == rw("a^2", 2));
  CHECK(b.dual.words[1] == rw("ab", 2));
  CHECK(b.dual.words[2] == rw("bA", 2));
  REQUIRE(b.change.has_value());
  CHECK(b.words()[0] == rw("a^2", 2));
  CHECK(b.words()[1] == rw("ab", 2));
  CHECK(b.words()[2] == rw("b^2", 2));
  std::vector<Word> y = {rw("a^2", 2), rw("ab", 2), rw("b^2", 2)};
  CHECK(canonical_key(subgroup_graph(y)) == canonical_key(double_cycle_cover(2)));
}

TEST_CASE("cycle basis at d = 3")
{
  SubgroupBasis b = lemma_one_basis(3);
  REQUIRE(b.dual.words.size() == 4);
  CHECK(b.dual.words[0] == rw("a^3", 2));
  CHECK(b.dual.words[1] == rw("ab", 2));
  CHECK(b.dual.words[2] == rw("a^2bA", 2));
  CHECK(b.dual.words[3] == rw("bA^2", 2));
  CHECK(b.words()[2] == rw("a^2b^2", 2));
  CHECK(b.words()[3] == rw("b^3", 2));
  CHECK(b.change->moves.size() == 2);
  CHECK_THROWS_AS(lemma_one_basis(1), std::invalid_argument);
}

TEST_CASE("power word rewrites into the y coordinates")
{
  SUBCASE("pinned shapes")
  {
    CHECK(rewrite_power_word(lemma_one_basis(2), 3) == Word(3, {1, 2, 3}));
    CHECK(rewrite_power_word(lemma_one_basis(3), 7) ==
          Word(4, {1, 1, 2, 4, 4}));
    CHECK(rewrite_power_word(lemma_one_basis(3), 5) == Word(4, {1, 3, 4}));
    CHECK(rewrite_power_word(lemma_one_basis(2), 4) == Word(3, {1, 1, 3, 3}));
  }

  SUBCASE("substitution recovers a^n b^n and the middle letter is single")
  {
    for (int d = 2; d <= 5; ++d) {
      SubgroupBasis b = lemma_one_basis(d);
      for (long n = 2; n <= 12; ++n) {
        Word z = rewrite_power_word(b, n);
        CHECK(substitute(z, b.words()) == power_word(n, n));
        long r = n % d;
        if (r != 0) {
          long K = n / d;
          Word expect = Word(d + 1, {1}).pow(K) *
                        Word(d + 1, {static_cast<Letter>(r + 1)}) *
                        Word(d + 1, {static_cast<Letter>(d + 1)}).pow(K);
          CHECK(z == expect);
          CHECK(z.occurrences(static_cast<int>(r) + 1) == 1);
        }
      }
    }
  }
}

TEST_CASE("glued cycles at the smallest size")
{
  GluedCyclesCertificate c = glued_cycles_cover(3, 3, 2, 2);
  CHECK(c.bound == 2);
  CHECK(c.k == 1);
  CHECK(c.kp == 1);
  CHECK(c.r == 1);
  CHECK(c.rp == 1);
  CHECK(c.partial.is_cover());
  CHECK(c.cover.vertex_count() == 2);
  CHECK(c.x == rw("a^2", 2));
  CHECK(c.y1 == rw("bA", 2));
  CHECK(c.y2 == rw("ab", 2));
  CHECK(c.eta == Word(3, {1, 3, 2, 3}));
  CHECK(c.eta_image == Word(3, {1, 2, 3}));
  CHECK(c.rewritten == Word(3, {1, 3, 2, 3}));
  CHECK(c.substitution_ok);
  CHECK(c.image_ok);
  CHECK(c.single_occurrence_ok);
  CHECK(c.contains_ok);
  CHECK(c.primitive_checked);
  CHECK(c.primitive_ok);
}

TEST_CASE("glued cycles with a completion edge")
{
  GluedCyclesCertificate c = glued_cycles_cover(5, 5, 3, 2);
  CHECK(c.bound == 3);
  CHECK(c.k == 1);
  CHECK(c.kp == 2);
  CHECK(c.r == 2);
  CHECK(c.rp == 1);
  CHECK_FALSE(c.partial.is_cover());
  CHECK(c.cover.is_cover());
  CHECK(c.cover.vertex_count() == 3);
  CHECK(c.x == rw("a^3", 2));
  CHECK(c.y1 == rw("bA^2", 2));
  CHECK(c.y2 == rw("a^2b", 2));
  REQUIRE(c.basis.dual.words.size() == 4);
  CHECK(c.basis.dual.words[3] == rw("abA", 2));
  CHECK(c.eta == Word(3, {1, 3, 2, 3, 2, 3}));
  CHECK(c.rewritten == Word(4, {1, 3, 2, 3, 2, 3}));
  CHECK(c.substitution_ok);
  CHECK(c.image_ok);
  CHECK(c.single_occurrence_ok);
  CHECK(c.contains_ok);
  CHECK(c.primitive_checked);
  CHECK(c.primitive_ok);
}

TEST_CASE("glued cycles hypothesis checks")
{
  CHECK_THROWS_AS(glued_cycles_cover(4, 4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(glued_cycles_cover(6, 4, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(glued_cycles_cover(3, 3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(glued_cycles_cover(3, 3, 2, 4), std::invalid_argument);
}

TEST_CASE("glued cycles sweep")
{
  for (long n = 2; n <= 8; ++n)
    for (long t = 2; t <= 8; ++t)
      for (int d = 2; d <= n; ++d)
        for (int dp = 2; dp <= t; ++dp) {
          if (n % d == 0 || t % dp == 0) continue;
          if (d + dp > 9) continue;
          GluedCyclesCertificate c = glued_cycles_cover(n, t, d, dp);
          CHECK(c.bound == d + dp - 2);
          CHECK(c.cover.is_cover());
          CHECK(c.cover.vertex_count() == c.bound);
          CHECK(c.substitution_ok);
          CHECK(c.image_ok);
          CHECK(c.single_occurrence_ok);
          CHECK(c.contains_ok);
          CHECK(c.primitive_checked);
          CHECK(c.primitive_ok);
          CHECK(substitute(c.rewritten, c.basis.words()) == power_word(n, t));
        }
}

TEST_CASE("power basis, orbits sharing only the basepoint")
{
  CoverPermutations c;
  c.rank = 2;
  c.degree = 3;
  c.perm = {{1, 0, 2}, {2, 1, 0}};
  PowerBasis p = power_basis(c);
  CHECK(p.proof_case == 1);
  CHECK(p.k == 2);
  CHECK(p.l == 2);
  CHECK(p.a_index == 0);
  CHECK(p.b_index == 1);
  REQUIRE(p.basis.words().size() == 4);
  CHECK(p.basis.words()[0] == rw("a^2", 2));
  CHECK(p.basis.words()[1] == rw("b^2", 2));
  CHECK(p.basis.words()[2] == rw("abA", 2));
  CHECK(p.basis.words()[3] == rw("baB", 2));
  CHECK_FALSE(p.basis.change.has_value());
}

TEST_CASE("power basis, orbits sharing two vertices")
{
  CoverPermutations c;
  c.rank = 2;
  c.degree = 3;
  c.perm = {{1, 0, 2}, {2, 0, 1}};
  PowerBasis p = power_basis(c);
  CHECK(p.proof_case == 2);
  CHECK(p.k == 2);
  CHECK(p.l == 3);
  REQUIRE(p.basis.dual.words.size() == 4);
  CHECK(p.basis.dual.words[0] == rw("a^2", 2));
  CHECK(p.basis.dual.words[1] == rw("b^2A", 2));
  CHECK(p.basis.dual.words[2] == rw("ab", 2));
  CHECK(p.basis.dual.words[3] == rw("baB", 2));
  REQUIRE(p.basis.change.has_value());
  CHECK(p.basis.words()[2] == rw("b^3", 2));
  CHECK(p.a_index == 0);
  CHECK(p.b_index == 2);
}

TEST_CASE("power basis on the identical double cycle")
{
  CoverPermutations c = graph_to_cover(double_cycle_cover(3));
  PowerBasis p = power_basis(c);
  CHECK(p.k == 3);
  CHECK(p.l == 3);
  CHECK(p.proof_case == 2);
  CHECK(p.b_index == 3);
  CHECK(p.basis.words()[0] == rw("a^3", 2));
  CHECK(p.basis.words()[3] == rw("b^3", 2));
}

TEST_CASE("power basis across all small covers")
{
  for (std::int32_t deg = 1; deg <= 4; ++deg) {
    enumerate_covers(2, deg, [&](const CoverPermutations& c) {
      PowerBasis p = power_basis(c);
      SmallestPowers sp = smallest_powers(c);
      CHECK(p.k == sp.a_power);
      CHECK(p.l == sp.b_power);
      CHECK(p.basis.words()[p.a_index] == Word(2, {1}).pow(p.k));
      CHECK(p.basis.words()[p.b_index] == Word(2, {2}).pow(p.l));
      CHECK(p.basis.graph.trace(0, Word(2, {1}).pow(p.k)) == 0);
      CHECK((p.proof_case == 1 || p.proof_case == 2));
      return true;
    });
  }
  CoverPermutations bad;
  bad.rank = 3;
  bad.degree = 1;
  bad.perm = {{0}, {0}, {0}};
  CHECK_THROWS_AS(power_basis(bad), std::invalid_argument);
}

TEST_CASE("subgroup basis rewrite round trip")
{
  std::mt19937 rng(0x5ca1e);
  SubgroupBasis b = lemma_one_basis(4);
  for (int trial = 0; trial < 30; ++trial) {
    Word coords = random_coord_word(rng, 5, 7);
    Word member = substitute(coords, b.words());
    Word back = b.rewrite(member);
    CHECK(substitute(back, b.words()) == member);
  }
  CHECK_THROWS_AS(b.rewrite(rw("a", 2)), std::invalid_argument);
}
