#pragma once

#include <optional>
#include <vector>

#include "fgindex/stallings.hpp"
#include "fgindex/word.hpp"

namespace fgx {

// Elementary Nielsen transformation on an ordered basis: replace
// basis[target] by basis[other]*basis[target] (Left) or
// basis[target]*basis[other] (Right). target != other.
struct NielsenMove {
  enum class Side : int { Left, Right };
  Side side = Side::Right;
  int target = 0;
  int other = 0;
};

// A chain of Nielsen moves from one ordered basis to another, together
// with the induced rewriting of coordinates: a word expressed in the
// initial basis letters maps to the same group element expressed in the
// final basis letters via old_to_new.
struct BasisChange {
  std::vector<Word> initial;
  std::vector<NielsenMove> moves;
  std::vector<Word> final_basis;
  std::vector<Word> old_to_new;  // letter i+1 of the initial coords

  Word rewrite(const Word& initial_coords) const;
};

BasisChange apply_nielsen_moves(std::vector<Word> basis,
                                const std::vector<NielsenMove>& moves);

// A subgroup with a chosen spanning tree, an ordered dual basis, and an
// optional Nielsen change of basis on top of it. rewrite() takes a member
// of the ambient free group to its expression in words().
struct SubgroupBasis {
  AGraph graph;
  SpanningTree tree;
  DualBasis dual;
  std::optional<BasisChange> change;

  const std::vector<Word>& words() const
  {
    return change ? change->final_basis : dual.words;
  }
  Word rewrite(const Word& w) const;
};

// Degree-d cover with the a-edges one d-cycle (i -> i+1) and the b-edges
// the reverse d-cycle (i -> i-1), basepoint 0. Same subgroup as
// kernel_phi_cover(d).
AGraph double_cycle_cover(int d);

// Schreier coset graph of the kernel of F_2 -> Z_d sending a to +1 and b
// to -1; vertices are residues, basepoint 0.
AGraph kernel_phi_cover(int d);

// Basis package for the double-cycle subgroup. The dual basis of the
// a-path tree is z_0 = a^d, z_i = a^i b a^-(i-1) for 1 <= i <= d-1,
// z_d = b a^-(d-1); the Nielsen chain turns it into
// y_0 = a^d, y_i = a^i b^i for 1 <= i <= d-1, y_d = b^d.
// Every stated word equality is checked by free reduction, and the final
// basis refolds to the same cover. Requires d >= 2.
SubgroupBasis lemma_one_basis(int d);

// Rewrites a^n b^n in the lemma_one_basis(d) coordinates; for d not
// dividing n and n = kd + r this is y_0^k y_r y_d^k, with y_r occurring
// exactly once.
Word rewrite_power_word(const SubgroupBasis& lemma_basis, long n);

// Two glued cycles: an a-cycle of length d and a b-cycle of length d',
// glued at two vertices, completed to a cover of degree d + d' - 2 whose
// subgroup contains a^n b^t as a primitive element. Requires d | n false,
// d' | t false, 2 <= d <= n, 2 <= d' <= t.
struct GluedCyclesCertificate {
  long n = 0, t = 0;
  int d = 0, dp = 0;
  long k = 0, kp = 0;
  int r = 0, rp = 0;
  int bound = 0;  // d + dp - 2, the covering degree

  AGraph partial;  // the glued cycles, before completion
  AGraph cover;    // completed cover
  SubgroupBasis basis;  // full dual basis; the partial-graph edges first
  // pi_1 of the partial graph is free of rank 3 on
  //   x = a^d, y1 = b^(d'-r') a^-r, y2 = a^r b^r'
  // and a^n b^t reads as eta = x^k (y2 y1)^k' y2 in those coordinates.
  // The automorphism y1 -> y2^-1 y1 carries eta to x^k y1^k' y2, where y2
  // occurs exactly once, so eta is primitive there; membership in a free
  // factor of the cover subgroup transfers primitivity upward.
  Word x, y1, y2;      // in rank 2
  Word eta;            // in rank 3
  Word eta_image;      // x^k y1^k' y2, in rank 3
  Word rewritten;      // a^n b^t in the full dual basis

  bool substitution_ok = false;   // eta(x, y1, y2) == a^n b^t
  bool image_ok = false;          // eta_image == automorphism applied
  bool single_occurrence_ok = false;
  bool contains_ok = false;       // cover subgroup contains a^n b^t
  bool primitive_checked = false; // full-rank primitivity re-check ran
  bool primitive_ok = false;
};

GluedCyclesCertificate glued_cycles_cover(long n, long t, int d, int dp);

// Basis of a rank-2 cover subgroup containing the smallest powers a^k and
// b^l as basis elements. Case 1: the a- and b-orbits of the basepoint
// share only the basepoint, and both power words are dual-basis elements
// outright. Case 2: the orbits share more vertices; the dual elements
// along the b-circuit have the form a^s b^t a^-s' and one Nielsen chain
// multiplies them into b^l.
struct PowerBasis {
  CoverPermutations cover;
  SubgroupBasis basis;
  long k = 0, l = 0;
  int a_index = -1;  // position of a^k in basis.words()
  int b_index = -1;  // position of b^l in basis.words()
  int proof_case = 0;
};

PowerBasis power_basis(const CoverPermutations& cover);

}  // namespace fgx
