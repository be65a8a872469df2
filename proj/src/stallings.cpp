#include "fgindex/stallings.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgx {

namespace {

std::string letter_name(int rank, Letter x)
{
  int g = generator_index(x);
  if (rank <= 2) {
    char c = static_cast<char>('a' + g - 1);
    return std::string(1, x > 0 ? c : static_cast<char>(c - 'a' + 'A'));
  }
  return (x > 0 ? "x" : "X") + std::to_string(g);
}

bool edge_order(const AGraphEdge& a, const AGraphEdge& b)
{
  return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
}

}  // namespace

AGraph::AGraph(int rank, std::int32_t vertex_count, std::int32_t basepoint,
               std::vector<AGraphEdge> edges)
    : rank_(rank),
      vertex_count_(vertex_count),
      basepoint_(basepoint),
      edges_(std::move(edges))
{
  if (rank < 1) throw std::invalid_argument("graph rank must be >= 1");
  if (vertex_count < 1) throw std::invalid_argument("graph needs a vertex");
  if (basepoint < 0 || basepoint >= vertex_count)
    throw std::invalid_argument("basepoint out of range");
  for (const auto& e : edges_) {
    if (e.from < 0 || e.from >= vertex_count || e.to < 0 || e.to >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.label < 1 || e.label > rank)
      throw std::invalid_argument("edge label out of range");
  }
  build_table();
}

void AGraph::build_table()
{
  folded_ = true;
  table_.assign(static_cast<std::size_t>(vertex_count_) * 2 * rank_, -1);
  auto set = [&](std::int32_t v, Letter x, std::int32_t t) {
    auto& cell = table_[static_cast<std::size_t>(v) * 2 * rank_ + letter_slot(x)];
    if (cell != -1) folded_ = false;
    cell = t;
  };
  for (const auto& e : edges_) {
    set(e.from, e.label, e.to);
    set(e.to, inverse(e.label), e.from);
  }
  if (!folded_) table_.clear();
}

std::int32_t AGraph::trace(std::int32_t v, const Word& w) const
{
  if (!folded_) throw std::logic_error("trace requires a folded graph");
  for (Letter x : w.letters()) {
    v = step(v, x);
    if (v == -1) return -1;
  }
  return v;
}

int AGraph::degree(std::int32_t v) const
{
  int d = 0;
  for (const auto& e : edges_) {
    if (e.from == v) ++d;
    if (e.to == v) ++d;
  }
  return d;
}

bool AGraph::connected() const
{
  std::vector<std::vector<std::int32_t>> adj(vertex_count_);
  for (const auto& e : edges_) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> seen(vertex_count_, 0);
  std::vector<std::int32_t> stack = {0};
  seen[0] = 1;
  std::int32_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == vertex_count_;
}

bool AGraph::is_cover() const
{
  if (!folded_) return false;
  return std::find(table_.begin(), table_.end(), -1) == table_.end();
}

bool is_folded(const AGraph& g) { return g.folded(); }

AGraph fold(const AGraph& g)
{
  std::int32_t n = g.vertex_count();
  std::vector<std::int32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  // trans[root]: letter slot -> a target vertex id, resolved through find()
  // on read. A slot collision queues the two targets for identification.
  std::vector<std::map<int, std::int32_t>> trans(n);
  std::vector<std::pair<std::int32_t, std::int32_t>> pending;
  auto add = [&](std::int32_t v, Letter x, std::int32_t t) {
    v = find(v);
    auto [it, fresh] = trans[v].try_emplace(letter_slot(x), t);
    if (!fresh) pending.push_back({it->second, t});
  };
  for (const auto& e : g.edges()) {
    add(e.from, e.label, e.to);
    add(e.to, inverse(e.label), e.from);
  }
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    x = find(x);
    y = find(y);
    if (x == y) continue;
    if (trans[x].size() < trans[y].size()) std::swap(x, y);
    parent[y] = x;
    for (auto [slot, t] : trans[y]) {
      auto [it, fresh] = trans[x].try_emplace(slot, t);
      if (!fresh) pending.push_back({it->second, t});
    }
    trans[y].clear();
  }

  // BFS renumbering from the basepoint class in letter order.
  std::vector<std::int32_t> label(n, -1);
  std::vector<std::int32_t> order;
  std::int32_t base = find(g.basepoint());
  label[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int slot = 0; slot < 2 * g.rank(); ++slot) {
      auto it = trans[order[i]].find(slot);
      if (it == trans[order[i]].end()) continue;
      std::int32_t t = find(it->second);
      if (label[t] == -1) {
        label[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
      }
    }
  }

  std::vector<AGraphEdge> edges;
  for (std::int32_t v : order)
    for (auto [slot, t] : trans[v]) {
      if (slot % 2 != 0) continue;
      edges.push_back({label[v], label[find(t)], slot_letter(slot)});
    }
  std::sort(edges.begin(), edges.end(), edge_order);
  AGraph out(g.rank(), static_cast<std::int32_t>(order.size()), 0,
             std::move(edges));
  if (!out.folded()) throw std::logic_error("folding left a slot collision");
  return out;
}

AGraph subgroup_graph(std::span<const Word> generators)
{
  if (generators.empty())
    throw std::invalid_argument("subgroup needs at least one generator word");
  int rank = generators[0].rank();
  for (const Word& w : generators)
    if (w.rank() != rank)
      throw std::invalid_argument("subgroup generators must share one rank");

  std::vector<AGraphEdge> edges;
  std::int32_t next = 1;
  for (const Word& w : generators) {
    if (w.empty()) continue;
    std::int32_t at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::int32_t to = i + 1 == w.size() ? 0 : next++;
      Letter x = w[i];
      if (x > 0)
        edges.push_back({at, to, x});
      else
        edges.push_back({to, at, inverse(x)});
      at = to;
    }
  }
  return fold(AGraph(rank, std::max<std::int32_t>(next, 1), 0, std::move(edges)));
}

bool contains(const AGraph& g, const Word& w)
{
  if (!g.folded()) throw std::invalid_argument("membership needs a folded graph");
  return g.trace(g.basepoint(), w) == g.basepoint();
}

std::int32_t CoverPermutations::act(std::int32_t v, Letter x) const
{
  int g = generator_index(x) - 1;
  if (x > 0) return perm[g][v];
  for (std::int32_t u = 0; u < degree; ++u)
    if (perm[g][u] == v) return u;
  return -1;
}

std::int32_t CoverPermutations::trace(std::int32_t v, const Word& w) const
{
  for (Letter x : w.letters()) v = act(v, x);
  return v;
}

CoverPermutations canonicalize(const CoverPermutations& c)
{
  std::vector<std::int32_t> label(c.degree, -1);
  std::vector<std::int32_t> order;
  label[0] = 0;
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int slot = 0; slot < 2 * c.rank; ++slot) {
      std::int32_t t = c.act(order[i], slot_letter(slot));
      if (label[t] == -1) {
        label[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
      }
    }
  if (static_cast<std::int32_t>(order.size()) != c.degree)
    throw std::invalid_argument("canonicalize requires a transitive tuple");
  CoverPermutations out;
  out.rank = c.rank;
  out.degree = c.degree;
  out.perm.assign(c.rank, std::vector<std::int32_t>(c.degree, -1));
  for (int g = 0; g < c.rank; ++g)
    for (std::int32_t v = 0; v < c.degree; ++v)
      out.perm[g][label[v]] = label[c.perm[g][v]];
  return out;
}

namespace {

struct CoverScan {
  int rank = 0;
  std::int32_t degree = 0;
  const std::function<bool(const CoverPermutations&)>* yield = nullptr;
  std::vector<std::vector<std::int32_t>> fwd, bwd;

  // Positions scan the transition table row by row in letter order; a new
  // vertex must receive the next unused label at its first appearance, which
  // pins the BFS-canonical representative of each isomorphism class.
  bool run(int pos, std::int32_t max_seen)
  {
    int slots = 2 * rank;
    if (pos == degree * slots) {
      CoverPermutations c;
      c.rank = rank;
      c.degree = degree;
      c.perm = fwd;
      return (*yield)(c);
    }
    std::int32_t v = pos / slots;
    int slot = pos % slots;
    int j = slot / 2;
    if (v > max_seen) return true;
    auto& head = slot % 2 == 0 ? fwd : bwd;
    auto& tail = slot % 2 == 0 ? bwd : fwd;
    if (head[j][v] != -1) return run(pos + 1, max_seen);
    std::int32_t cap = std::min<std::int32_t>(max_seen + 1, degree - 1);
    for (std::int32_t t = 0; t <= cap; ++t) {
      if (tail[j][t] != -1) continue;
      head[j][v] = t;
      tail[j][t] = v;
      bool go = run(pos + 1, std::max(max_seen, t));
      head[j][v] = -1;
      tail[j][t] = -1;
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

void enumerate_covers(int rank, std::int32_t degree,
                      const std::function<bool(const CoverPermutations&)>& yield)
{
  if (rank < 1) throw std::invalid_argument("cover rank must be >= 1");
  if (degree < 1) throw std::invalid_argument("cover degree must be >= 1");
  CoverScan scan;
  scan.rank = rank;
  scan.degree = degree;
  scan.yield = &yield;
  scan.fwd.assign(rank, std::vector<std::int32_t>(degree, -1));
  scan.bwd.assign(rank, std::vector<std::int32_t>(degree, -1));
  scan.run(0, 0);
}

AGraph cover_to_graph(const CoverPermutations& c)
{
  std::vector<AGraphEdge> edges;
  edges.reserve(static_cast<std::size_t>(c.rank) * c.degree);
  for (std::int32_t v = 0; v < c.degree; ++v)
    for (int g = 0; g < c.rank; ++g)
      edges.push_back({v, c.perm[g][v], static_cast<Letter>(g + 1)});
  return AGraph(c.rank, c.degree, 0, std::move(edges));
}

CoverPermutations graph_to_cover(const AGraph& g)
{
  if (!g.is_cover()) throw std::invalid_argument("graph is not a cover");
  auto swap_base = [&](std::int32_t v) {
    if (v == g.basepoint()) return std::int32_t{0};
    if (v == 0) return g.basepoint();
    return v;
  };
  CoverPermutations c;
  c.rank = g.rank();
  c.degree = g.vertex_count();
  c.perm.assign(c.rank, std::vector<std::int32_t>(c.degree));
  for (int j = 0; j < c.rank; ++j)
    for (std::int32_t v = 0; v < c.degree; ++v)
      c.perm[j][swap_base(v)] =
          swap_base(g.step(v, static_cast<Letter>(j + 1)));
  return c;
}

std::vector<std::int32_t> canonical_key(const AGraph& g)
{
  if (!g.folded()) throw std::invalid_argument("canonical key needs a folded graph");
  std::vector<std::int32_t> label(g.vertex_count(), -1);
  std::vector<std::int32_t> order;
  label[g.basepoint()] = 0;
  order.push_back(g.basepoint());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int slot = 0; slot < 2 * g.rank(); ++slot) {
      std::int32_t t = g.step(order[i], slot_letter(slot));
      if (t != -1 && label[t] == -1) {
        label[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
      }
    }
  std::vector<std::int32_t> key;
  key.push_back(static_cast<std::int32_t>(order.size()));
  for (std::int32_t v : order)
    for (int slot = 0; slot < 2 * g.rank(); ++slot) {
      std::int32_t t = g.step(v, slot_letter(slot));
      key.push_back(t == -1 ? -1 : label[t]);
    }
  return key;
}

bool SpanningTree::contains_edge(std::int32_t from, Letter label,
                                 std::int32_t to) const
{
  if (parent[to] == from && parent_label[to] == label) return true;
  return parent[from] == to && parent_label[from] == inverse(label);
}

SpanningTree spanning_tree(const AGraph& g, TreePolicy policy, Letter prefer)
{
  if (!g.folded()) throw std::invalid_argument("spanning tree needs a folded graph");
  SpanningTree t;
  t.root = g.basepoint();
  t.parent.assign(g.vertex_count(), -1);
  t.parent_label.assign(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  seen[t.root] = 1;
  t.order.push_back(t.root);

  std::vector<Letter> letters;
  if (policy == TreePolicy::PreferLabel && prefer != 0) letters.push_back(prefer);
  for (int slot = 0; slot < 2 * g.rank(); ++slot)
    if (slot_letter(slot) != prefer || policy != TreePolicy::PreferLabel)
      letters.push_back(slot_letter(slot));

  if (policy == TreePolicy::BreadthFirst) {
    for (std::size_t i = 0; i < t.order.size(); ++i) {
      std::int32_t v = t.order[i];
      for (Letter x : letters) {
        std::int32_t u = g.step(v, x);
        if (u == -1 || seen[u]) continue;
        seen[u] = 1;
        t.parent[u] = v;
        t.parent_label[u] = x;
        t.order.push_back(u);
      }
    }
  } else {
    std::vector<std::pair<std::int32_t, std::size_t>> stack = {{t.root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == letters.size()) {
        stack.pop_back();
        continue;
      }
      Letter x = letters[next++];
      std::int32_t u = g.step(v, x);
      if (u == -1 || seen[u]) continue;
      seen[u] = 1;
      t.parent[u] = v;
      t.parent_label[u] = x;
      t.order.push_back(u);
      stack.push_back({u, 0});
    }
  }
  return t;
}

Word tree_path_from_root(const AGraph& g, const SpanningTree& t, std::int32_t v)
{
  std::vector<Letter> rev;
  while (v != t.root) {
    if (t.parent[v] == -1)
      throw std::invalid_argument("vertex not reached by the spanning tree");
    rev.push_back(t.parent_label[v]);
    v = t.parent[v];
  }
  std::reverse(rev.begin(), rev.end());
  return Word(g.rank(), rev);
}

namespace {

std::vector<AGraphEdge> nontree_edges_of(const AGraph& g, const SpanningTree& t)
{
  std::vector<AGraphEdge> out;
  for (const auto& e : g.edges())
    if (!t.contains_edge(e.from, e.label, e.to)) out.push_back(e);
  std::sort(out.begin(), out.end(), edge_order);
  return out;
}

DualBasis build_dual(const AGraph& g, const SpanningTree& t,
                     std::vector<AGraphEdge> edges)
{
  DualBasis b;
  b.nontree_edges = std::move(edges);
  for (const auto& e : b.nontree_edges) {
    Word head = tree_path_from_root(g, t, e.from);
    Word tail = tree_path_from_root(g, t, e.to);
    b.words.push_back(head * Word(g.rank(), {e.label}) * tail.inverse());
  }
  return b;
}

}  // namespace

DualBasis dual_basis(const AGraph& g, const SpanningTree& t)
{
  return build_dual(g, t, nontree_edges_of(g, t));
}

DualBasis dual_basis_for_edges(const AGraph& g, const SpanningTree& t,
                               std::span<const AGraphEdge> edges)
{
  auto expected = nontree_edges_of(g, t);
  std::vector<AGraphEdge> given(edges.begin(), edges.end());
  auto sorted = given;
  std::sort(sorted.begin(), sorted.end(), edge_order);
  if (sorted != expected)
    throw std::invalid_argument("edge list must be exactly the non-tree edges");
  return build_dual(g, t, std::move(given));
}

Word rewrite_in_basis(const AGraph& g, const SpanningTree& t,
                      const DualBasis& b, const Word& w)
{
  std::map<std::tuple<std::int32_t, Letter, std::int32_t>, int> index;
  for (std::size_t i = 0; i < b.nontree_edges.size(); ++i) {
    const auto& e = b.nontree_edges[i];
    index[{e.from, e.label, e.to}] = static_cast<int>(i);
  }
  int out_rank = static_cast<int>(b.words.size());
  if (out_rank == 0) {
    if (!w.empty()) throw std::invalid_argument("word is not in the subgroup");
    return Word(1);
  }
  std::vector<Letter> out;
  std::int32_t at = g.basepoint();
  for (Letter x : w.letters()) {
    std::int32_t to = g.step(at, x);
    if (to == -1) throw std::invalid_argument("word is not in the subgroup");
    AGraphEdge e = x > 0 ? AGraphEdge{at, to, x} : AGraphEdge{to, at, inverse(x)};
    if (!t.contains_edge(e.from, e.label, e.to)) {
      auto it = index.find({e.from, e.label, e.to});
      if (it == index.end())
        throw std::logic_error("edge missing from the dual basis");
      Letter y = static_cast<Letter>(it->second + 1);
      out.push_back(x > 0 ? y : inverse(y));
    }
    at = to;
  }
  if (at != g.basepoint())
    throw std::invalid_argument("word is not in the subgroup");
  return Word(out_rank, out);
}

AGraph hall_completion(const AGraph& g)
{
  if (!g.folded()) throw std::invalid_argument("completion needs a folded graph");
  std::vector<AGraphEdge> edges = g.edges();
  for (int j = 1; j <= g.rank(); ++j) {
    std::vector<std::int32_t> sources, targets;
    for (std::int32_t v = 0; v < g.vertex_count(); ++v) {
      if (g.step(v, static_cast<Letter>(j)) == -1) sources.push_back(v);
      if (g.step(v, static_cast<Letter>(-j)) == -1) targets.push_back(v);
    }
    for (std::size_t i = 0; i < sources.size(); ++i)
      edges.push_back({sources[i], targets[i], static_cast<Letter>(j)});
  }
  std::sort(edges.begin(), edges.end(), edge_order);
  AGraph out(g.rank(), g.vertex_count(), g.basepoint(), std::move(edges));
  if (!out.is_cover()) throw std::logic_error("completion failed to close");
  return out;
}

SmallestPowers smallest_powers(const CoverPermutations& c)
{
  if (c.rank < 2) throw std::invalid_argument("power orbits need rank >= 2");
  SmallestPowers out;
  for (int j = 0; j < 2; ++j) {
    long k = 1;
    std::int32_t v = c.perm[j][0];
    while (v != 0) {
      v = c.perm[j][v];
      ++k;
    }
    (j == 0 ? out.a_power : out.b_power) = k;
  }
  return out;
}

std::string to_dot(const AGraph& g)
{
  std::ostringstream os;
  os << "digraph stallings {\n  rankdir=LR;\n";
  for (std::int32_t v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << v << "\", shape="
       << (v == g.basepoint() ? "doublecircle" : "circle") << "];\n";
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), edge_order);
  for (const auto& e : edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\""
       << letter_name(g.rank(), e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace fgx
