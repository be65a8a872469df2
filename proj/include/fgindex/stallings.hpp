#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgindex/word.hpp"

namespace fgx {

// One geometric edge of a labeled graph, stored in its positive
// orientation: from --label--> to with label a positive letter. The reverse
// traversal reads the inverse letter.
struct AGraphEdge {
  std::int32_t from = 0;
  std::int32_t to = 0;
  Letter label = 0;

  bool operator==(const AGraphEdge&) const = default;
  auto operator<=>(const AGraphEdge&) const = default;
};

// Basepointed graph with edges labeled by generators of F_N. Vertices are
// 0..vertex_count-1. Folded graphs additionally expose a transition table:
// step(v, letter) is the unique neighbor or -1.
class AGraph {
public:
  AGraph() = default;
  AGraph(int rank, std::int32_t vertex_count, std::int32_t basepoint,
         std::vector<AGraphEdge> edges);

  int rank() const { return rank_; }
  std::int32_t vertex_count() const { return vertex_count_; }
  std::int32_t basepoint() const { return basepoint_; }
  const std::vector<AGraphEdge>& edges() const { return edges_; }

  bool folded() const { return folded_; }
  // Requires folded(): unique target of the letter-labeled edge at v, or -1.
  std::int32_t step(std::int32_t v, Letter x) const
  {
    return table_[static_cast<std::size_t>(v) * 2 * rank_ + letter_slot(x)];
  }
  // Endpoint of the w-labeled path from v, or -1 where the path dies.
  std::int32_t trace(std::int32_t v, const Word& w) const;

  // Degree of v counting both orientations.
  int degree(std::int32_t v) const;
  bool connected() const;
  // Every vertex has exactly one edge per letter: a finite cover of the
  // rose R_N. The covering degree is the vertex count.
  bool is_cover() const;

private:
  int rank_ = 0;
  std::int32_t vertex_count_ = 0;
  std::int32_t basepoint_ = 0;
  std::vector<AGraphEdge> edges_;
  bool folded_ = false;
  std::vector<std::int32_t> table_;  // folded only: V x 2N transitions

  void build_table();
};

bool is_folded(const AGraph& g);

// Stallings folding: identifies targets of equal-label edges at a common
// vertex until none remain, via union-find with a merge worklist. Keeps the
// basepoint and drops unreachable vertices and duplicate edges.
AGraph fold(const AGraph& g);

// Folded subgroup graph of <generators>: wedge of subdivided loops at the
// basepoint, folded. All generators must share one rank; empty words are
// allowed and contribute nothing.
AGraph subgroup_graph(std::span<const Word> generators);

// Membership of w in the subgroup represented by folded g: the w-path from
// the basepoint exists and closes up.
bool contains(const AGraph& g, const Word& w);

// A degree-d cover of the rose as one permutation of {0..d-1} per
// generator: perm[i][v] is the endpoint of the generator-(i+1) edge at v.
struct CoverPermutations {
  int rank = 0;
  std::int32_t degree = 0;
  std::vector<std::vector<std::int32_t>> perm;

  std::int32_t act(std::int32_t v, Letter x) const;
  std::int32_t trace(std::int32_t v, const Word& w) const;
  bool contains(const Word& w) const { return trace(0, w) == 0; }

  bool operator==(const CoverPermutations&) const = default;
};

// BFS relabeling from vertex 0 in letter order a < a^-1 < b < b^-1 < ...
// Isomorphic basepointed covers canonicalize to equal tuples.
CoverPermutations canonicalize(const CoverPermutations& c);

// Streams every canonically labeled transitive tuple exactly once, in
// lexicographic order of the scanned transition table: one representative
// per index-degree subgroup. The callback returns false to stop early.
// Degree-by-degree counts follow the Hall recursion.
void enumerate_covers(int rank, std::int32_t degree,
                      const std::function<bool(const CoverPermutations&)>& yield);

AGraph cover_to_graph(const CoverPermutations& c);
// Inverse of cover_to_graph; requires a cover (2N-regular folded graph).
// Vertex labels are preserved, with the basepoint moved to 0 by a swap.
CoverPermutations graph_to_cover(const AGraph& g);

// BFS normal form of the reachable part of a folded graph: vertex count,
// then the relabeled transition table with -1 gaps. Equal keys == equal
// basepointed labeled graphs up to isomorphism.
std::vector<std::int32_t> canonical_key(const AGraph& g);

enum class TreePolicy {
  BreadthFirst,  // BFS in letter order; the canonical choice
  PreferLabel,   // depth-first, following the preferred label while it
                 // reaches new vertices; yields a-path trees on covers
};

struct SpanningTree {
  std::int32_t root = 0;
  std::vector<std::int32_t> parent;  // -1 at the root
  std::vector<Letter> parent_label;  // label of parent -> vertex edge
  std::vector<std::int32_t> order;   // discovery order, root first

  bool contains_edge(std::int32_t from, Letter label, std::int32_t to) const;
};

SpanningTree spanning_tree(const AGraph& g,
                           TreePolicy policy = TreePolicy::BreadthFirst,
                           Letter prefer = 0);

// Word labeling the tree path basepoint -> v.
Word tree_path_from_root(const AGraph& g, const SpanningTree& t,
                         std::int32_t v);

struct DualBasis {
  std::vector<AGraphEdge> nontree_edges;
  std::vector<Word> words;  // words[i] in the ambient rank, one per edge
};

// Free basis of the subgroup dual to the non-tree edges: for edge e from u
// to v, the word [base->u]_T * label * [v->base]_T. Edges in ascending
// (from, label, to) order; basis size = positive edges - vertices + 1.
DualBasis dual_basis(const AGraph& g, const SpanningTree& t);
// Same with a caller-chosen edge order; edges must be exactly the non-tree
// edges of t in g.
DualBasis dual_basis_for_edges(const AGraph& g, const SpanningTree& t,
                               std::span<const AGraphEdge> edges);

// Expresses a member w as a word in the dual basis: trace the w-path from
// the basepoint and emit one letter per non-tree edge crossed. Throws
// std::invalid_argument when w is not in the subgroup. Substituting the
// basis words back recovers w.
Word rewrite_in_basis(const AGraph& g, const SpanningTree& t,
                      const DualBasis& b, const Word& w);

// Completes a folded graph to a cover on the same vertex set: per label,
// the missing sources and targets are matched in ascending vertex order.
// Deterministic; the input graph embeds as a subgraph.
AGraph hall_completion(const AGraph& g);

struct SmallestPowers {
  long a_power = 0;  // least k >= 1 with a^k in the subgroup
  long b_power = 0;  // least l >= 1 with b^l in the subgroup
};

// Orbit lengths of the basepoint under the two generator permutations of a
// rank-2 cover.
SmallestPowers smallest_powers(const CoverPermutations& c);

std::string to_dot(const AGraph& g);

}  // namespace fgx
