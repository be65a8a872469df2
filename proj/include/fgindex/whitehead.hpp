#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgindex/word.hpp"

namespace fgx {

// Simple undirected graph on the 2N letters of F_N, in slot order
// a < a^-1 < b < b^-1 < ... For a cyclically reduced w and c its first
// letter, every two-letter subword xy of wc contributes the edge
// {x^-1, y}. Free reduction guarantees x^-1 != y, so there are no loops.
struct WhiteheadGraph {
  int rank = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor slots per vertex
  std::size_t edge_count = 0;

  bool has_edge(int u, int v) const;
};

WhiteheadGraph whitehead_graph(const CyclicWord& w);

// Cut vertex criterion. A disconnected graph with at least one edge counts
// as having a cut vertex (any endpoint of an edge qualifies); otherwise a
// vertex whose removal increases the component count. Articulation points
// are found by lowlink DFS.
bool has_cut_vertex(const WhiteheadGraph& g);

// True when the graph is a single cycle through all 2N vertices.
bool is_circle_graph(const WhiteheadGraph& g);

std::string to_dot(const WhiteheadGraph& g);

// A Whitehead automorphism of F_N. LetterPermutation (type I) permutes the
// letters compatibly with inversion and is stored by generator images.
// Multiplier (type II) is the pair (A, x): the letter x with a set A of
// letters containing x but not x^-1; it fixes x and sends every other
// letter y to y x^e / x^-e y / x^-e y x^e according to membership of y and
// y^-1 in A. The set is stored as a bitmask over letter slots.
struct WhiteheadAutomorphism {
  enum class Kind : std::uint8_t { LetterPermutation, Multiplier };

  Kind kind = Kind::LetterPermutation;
  int rank = 0;
  std::vector<Letter> images;     // type I: image of each positive generator
  Letter multiplier = 0;          // type II
  std::uint32_t set_mask = 0;     // type II: bit i = slot i in A

  Word apply(const Word& w) const;
  // Image of the conjugacy class: apply to a representative, then
  // cyclically reduce.
  CyclicWord apply(const CyclicWord& w) const;
  WhiteheadAutomorphism inverted() const;
  // Identity action on every letter (type II with empty side set, or the
  // trivial permutation).
  bool acts_trivially() const;
};

// All 2r * 2^(2r-2) type II automorphisms, multiplier slot ascending and
// side-set bitmask ascending, followed by a generating set for the type I
// subgroup (adjacent generator swaps and inversion of the first generator).
// Requires rank >= 2.
std::vector<WhiteheadAutomorphism> whitehead_generators(int rank);
std::vector<WhiteheadAutomorphism> type_two_automorphisms(int rank);
std::vector<WhiteheadAutomorphism> type_one_generators(int rank);

enum class TieBreak { Canonical, Reversed };

struct MinimizationResult {
  CyclicWord minimal;
  std::vector<WhiteheadAutomorphism> trace;  // accepted moves in order
  std::vector<std::size_t> lengths;          // length after each move
};

// Greedy descent: repeatedly apply the first type II automorphism (in
// TieBreak order) that strictly shortens the cyclic length. A word with no
// shortening move has globally minimal length in its automorphism orbit.
MinimizationResult whitehead_minimize(const CyclicWord& w,
                                      TieBreak tb = TieBreak::Canonical);

struct PrimitivityWitness {
  enum class How : std::uint8_t {
    TrivialLetter,     // cyclic length 1
    SingleOccurrence,  // some generator occurs exactly once
    NoCutVertex,       // cut-vertex-free Whitehead graph: not primitive
    Minimization,      // decided by minimal orbit length
  };
  bool primitive = false;
  How how = How::Minimization;
  int generator = 0;  // SingleOccurrence: which one
  MinimizationResult minimization;
};

// w must be nontrivial. Primitive iff the cyclic reduction minimizes to
// length 1.
PrimitivityWitness decide_primitive(const Word& w);
bool is_primitive(const Word& w);

struct SimplicityWitness {
  bool simple = false;
  // When simple: an orbit element omitting a generator, with the move
  // chain from the cyclic reduction of the input.
  Word image;
  std::vector<WhiteheadAutomorphism> trace;
  int omitted_generator = 0;
  // When not simple: size of the exhausted minimal level set, or 0 if the
  // cut vertex criterion decided early.
  std::size_t level_set_size = 0;
};

// w must be nontrivial, rank >= 2. Simple iff some element of the
// automorphism orbit omits a generator. Decision procedure: minimize, then
// search the length-preserving orbit of the minimum (type II moves that
// keep the length, plus type I moves); by peak reduction that level set is
// connected and it contains a generator-omitting word whenever one exists
// anywhere in the orbit. A cut-vertex-free Whitehead graph rejects early.
SimplicityWitness decide_simple(const Word& w);
bool is_simple(const Word& w);

}  // namespace fgx
