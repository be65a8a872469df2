#include "fgindex/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgx {

namespace {

std::string letter_name(int rank, int slot)
{
  Letter x = slot_letter(slot);
  int g = generator_index(x);
  if (rank <= 2) {
    char c = static_cast<char>('a' + g - 1);
    return std::string(1, x > 0 ? c : static_cast<char>(c - 'a' + 'A'));
  }
  return (x > 0 ? "x" : "X") + std::to_string(g);
}

}  // namespace

bool WhiteheadGraph::has_edge(int u, int v) const
{
  const auto& n = adj[u];
  return std::binary_search(n.begin(), n.end(), v);
}

WhiteheadGraph whitehead_graph(const CyclicWord& w)
{
  WhiteheadGraph g;
  g.rank = w.rank();
  g.adj.assign(2 * w.rank(), {});
  const auto& v = w.rep().letters();
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Letter p = v[i];
    Letter q = v[(i + 1) % v.size()];
    int a = letter_slot(inverse(p));
    int b = letter_slot(q);
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  g.edge_count = edges.size();
  for (auto [a, b] : edges) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& n : g.adj) std::sort(n.begin(), n.end());
  return g;
}

namespace {

int component_count(const WhiteheadGraph& g)
{
  int n = static_cast<int>(g.adj.size());
  std::vector<int> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

}  // namespace

bool has_cut_vertex(const WhiteheadGraph& g)
{
  if (g.edge_count == 0) return false;
  if (component_count(g) > 1) return true;

  int n = static_cast<int>(g.adj.size());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  int timer = 0;
  // Iterative lowlink DFS from vertex 0; the graph is connected here.
  std::vector<std::pair<int, std::size_t>> stack;
  stack.push_back({0, 0});
  disc[0] = low[0] = timer++;
  int root_children = 0;
  bool found = false;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    if (next < g.adj[u].size()) {
      int v = g.adj[u][next++];
      if (disc[v] == -1) {
        parent[v] = u;
        if (u == 0) ++root_children;
        disc[v] = low[v] = timer++;
        stack.push_back({v, 0});
      } else if (v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().first;
        low[p] = std::min(low[p], low[u]);
        if (p != 0 && low[u] >= disc[p]) found = true;
      }
    }
  }
  return found || root_children > 1;
}

bool is_circle_graph(const WhiteheadGraph& g)
{
  if (g.edge_count != g.adj.size()) return false;
  for (const auto& n : g.adj)
    if (n.size() != 2) return false;
  return component_count(g) == 1;
}

std::string to_dot(const WhiteheadGraph& g)
{
  std::ostringstream os;
  os << "graph whitehead {\n";
  for (std::size_t s = 0; s < g.adj.size(); ++s)
    os << "  v" << s << " [label=\"" << letter_name(g.rank, static_cast<int>(s))
       << "\"];\n";
  for (std::size_t u = 0; u < g.adj.size(); ++u)
    for (int v : g.adj[u])
      if (static_cast<std::size_t>(v) > u)
        os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

Word WhiteheadAutomorphism::apply(const Word& w) const
{
  if (w.rank() != rank) throw std::invalid_argument("rank mismatch");
  std::vector<Letter> out;
  out.reserve(w.size() * 3);
  if (kind == Kind::LetterPermutation) {
    for (Letter x : w.letters())
      out.push_back(x > 0 ? images[x - 1] : inverse(images[-x - 1]));
  } else {
    Letter m = multiplier;
    Letter mi = inverse(m);
    for (Letter x : w.letters()) {
      if (x == m || x == mi) {
        out.push_back(x);
        continue;
      }
      bool in = set_mask >> letter_slot(x) & 1u;
      bool inv_in = set_mask >> letter_slot(inverse(x)) & 1u;
      if (inv_in) out.push_back(mi);
      out.push_back(x);
      if (in) out.push_back(m);
    }
  }
  return Word(rank, out);
}

CyclicWord WhiteheadAutomorphism::apply(const CyclicWord& w) const
{
  return cyclic_reduce(apply(w.rep())).cyclic;
}

WhiteheadAutomorphism WhiteheadAutomorphism::inverted() const
{
  WhiteheadAutomorphism out = *this;
  if (kind == Kind::LetterPermutation) {
    for (int g = 1; g <= rank; ++g) {
      Letter y = images[g - 1];
      if (y > 0)
        out.images[y - 1] = static_cast<Letter>(g);
      else
        out.images[-y - 1] = static_cast<Letter>(-g);
    }
  } else {
    out.multiplier = inverse(multiplier);
    out.set_mask = set_mask & ~(1u << letter_slot(multiplier));
    out.set_mask |= 1u << letter_slot(out.multiplier);
  }
  return out;
}

bool WhiteheadAutomorphism::acts_trivially() const
{
  if (kind == Kind::LetterPermutation) {
    for (int g = 1; g <= rank; ++g)
      if (images[g - 1] != g) return false;
    return true;
  }
  return set_mask == 1u << letter_slot(multiplier);
}

std::vector<WhiteheadAutomorphism> type_two_automorphisms(int rank)
{
  if (rank < 1 || rank > 15)
    throw std::invalid_argument("type II enumeration requires rank in 1..15");
  std::vector<WhiteheadAutomorphism> out;
  int slots = 2 * rank;
  out.reserve(static_cast<std::size_t>(slots) << (slots - 2 > 0 ? slots - 2 : 0));
  for (int ms = 0; ms < slots; ++ms) {
    Letter m = slot_letter(ms);
    int mis = letter_slot(inverse(m));
    std::vector<int> free_slots;
    for (int s = 0; s < slots; ++s)
      if (s != ms && s != mis) free_slots.push_back(s);
    std::uint32_t count = 1u << free_slots.size();
    for (std::uint32_t sub = 0; sub < count; ++sub) {
      WhiteheadAutomorphism a;
      a.kind = WhiteheadAutomorphism::Kind::Multiplier;
      a.rank = rank;
      a.multiplier = m;
      a.set_mask = 1u << ms;
      for (std::size_t i = 0; i < free_slots.size(); ++i)
        if (sub >> i & 1u) a.set_mask |= 1u << free_slots[i];
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<WhiteheadAutomorphism> type_one_generators(int rank)
{
  std::vector<WhiteheadAutomorphism> out;
  auto identity = [&] {
    WhiteheadAutomorphism a;
    a.kind = WhiteheadAutomorphism::Kind::LetterPermutation;
    a.rank = rank;
    for (int g = 1; g <= rank; ++g) a.images.push_back(static_cast<Letter>(g));
    return a;
  };
  for (int g = 1; g < rank; ++g) {
    WhiteheadAutomorphism a = identity();
    std::swap(a.images[g - 1], a.images[g]);
    out.push_back(std::move(a));
  }
  WhiteheadAutomorphism inv = identity();
  inv.images[0] = -1;
  out.push_back(std::move(inv));
  return out;
}

std::vector<WhiteheadAutomorphism> whitehead_generators(int rank)
{
  if (rank < 2) throw std::invalid_argument("whitehead generators need rank >= 2");
  auto out = type_two_automorphisms(rank);
  auto ones = type_one_generators(rank);
  out.insert(out.end(), ones.begin(), ones.end());
  return out;
}

namespace {

// Shared per-rank cache; minimization at rank r scans all type II moves and
// the table is large at high rank.
const std::vector<WhiteheadAutomorphism>& type_two_cache(int rank)
{
  static std::mutex mu;
  static std::map<int, std::vector<WhiteheadAutomorphism>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(rank);
  if (it == cache.end())
    it = cache.emplace(rank, type_two_automorphisms(rank)).first;
  return it->second;
}

}  // namespace

MinimizationResult whitehead_minimize(const CyclicWord& w, TieBreak tb)
{
  MinimizationResult res;
  res.minimal = w;
  const auto& gens = type_two_cache(w.rank());
  bool improved = true;
  while (improved && res.minimal.length() > 1) {
    improved = false;
    std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& g = gens[tb == TieBreak::Canonical ? i : n - 1 - i];
      CyclicWord img = g.apply(res.minimal);
      if (img.length() < res.minimal.length()) {
        res.minimal = img;
        res.trace.push_back(g);
        res.lengths.push_back(img.length());
        improved = true;
        break;
      }
    }
  }
  return res;
}

namespace {

int single_occurrence_generator(const Word& w)
{
  for (int g = 1; g <= w.rank(); ++g)
    if (w.occurrences(g) == 1) return g;
  return 0;
}

int omitted_generator_of(const Word& w)
{
  for (int g = 1; g <= w.rank(); ++g)
    if (w.omits(g)) return g;
  return 0;
}

}  // namespace

PrimitivityWitness decide_primitive(const Word& w)
{
  auto cr = cyclic_reduce(w);
  if (cr.cyclic.length() == 0)
    throw std::invalid_argument("primitivity is undefined for the identity");
  PrimitivityWitness out;
  if (cr.cyclic.length() == 1) {
    out.primitive = true;
    out.how = PrimitivityWitness::How::TrivialLetter;
    return out;
  }
  if (int g = single_occurrence_generator(cr.cyclic.rep()); g != 0) {
    out.primitive = true;
    out.how = PrimitivityWitness::How::SingleOccurrence;
    out.generator = g;
    return out;
  }
  if (!has_cut_vertex(whitehead_graph(cr.cyclic))) {
    out.primitive = false;
    out.how = PrimitivityWitness::How::NoCutVertex;
    return out;
  }
  out.minimization = whitehead_minimize(cr.cyclic);
  out.primitive = out.minimization.minimal.length() == 1;
  out.how = PrimitivityWitness::How::Minimization;
  return out;
}

bool is_primitive(const Word& w) { return decide_primitive(w).primitive; }

SimplicityWitness decide_simple(const Word& w)
{
  if (w.rank() < 2)
    throw std::invalid_argument("simplicity search needs rank >= 2");
  auto cr = cyclic_reduce(w);
  if (cr.cyclic.length() == 0)
    throw std::invalid_argument("simplicity is undefined for the identity");

  SimplicityWitness out;
  if (int g = omitted_generator_of(cr.cyclic.rep()); g != 0) {
    out.simple = true;
    out.image = cr.cyclic.rep();
    out.omitted_generator = g;
    return out;
  }
  if (!has_cut_vertex(whitehead_graph(cr.cyclic))) return out;

  auto min = whitehead_minimize(cr.cyclic);
  if (int g = omitted_generator_of(min.minimal.rep()); g != 0) {
    out.simple = true;
    out.image = min.minimal.rep();
    out.trace = min.trace;
    out.omitted_generator = g;
    return out;
  }
  if (!has_cut_vertex(whitehead_graph(min.minimal))) return out;

  // Search the level set of minimal representatives. Type II moves that
  // keep the length plus letter permutations connect it, so an omitting
  // orbit element is found whenever one exists.
  std::vector<WhiteheadAutomorphism> moves = type_two_cache(w.rank());
  auto ones = type_one_generators(w.rank());
  moves.insert(moves.end(), ones.begin(), ones.end());

  struct Node {
    CyclicWord word;
    std::size_t parent;
    std::size_t move;
  };
  std::vector<Node> nodes;
  std::set<Word> seen;
  std::size_t len = min.minimal.length();
  nodes.push_back({min.minimal, SIZE_MAX, SIZE_MAX});
  seen.insert(min.minimal.canonical_with_inversion());
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t mi = 0; mi < moves.size(); ++mi) {
      CyclicWord img = moves[mi].apply(nodes[head].word);
      if (img.length() != len) continue;
      if (!seen.insert(img.canonical_with_inversion()).second) continue;
      nodes.push_back({img, head, mi});
      if (int g = omitted_generator_of(img.rep()); g != 0) {
        out.simple = true;
        out.image = img.rep();
        out.omitted_generator = g;
        std::vector<WhiteheadAutomorphism> chain;
        for (std::size_t at = nodes.size() - 1; at != 0; at = nodes[at].parent)
          chain.push_back(moves[nodes[at].move]);
        out.trace = min.trace;
        out.trace.insert(out.trace.end(), chain.rbegin(), chain.rend());
        out.level_set_size = seen.size();
        return out;
      }
    }
  }
  out.level_set_size = seen.size();
  return out;
}

bool is_simple(const Word& w) { return decide_simple(w).simple; }

}  // namespace fgx
