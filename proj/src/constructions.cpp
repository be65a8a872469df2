#include "fgindex/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fgindex/whitehead.hpp"

namespace fgx {

namespace {

Word gen_word(int rank, int g) { return Word(rank, {static_cast<Letter>(g)}); }

std::vector<Word> identity_coords(int rank)
{
  std::vector<Word> out;
  for (int g = 1; g <= rank; ++g) out.push_back(gen_word(rank, g));
  return out;
}

}  // namespace

Word BasisChange::rewrite(const Word& initial_coords) const
{
  return apply_letter_map(initial_coords, old_to_new);
}

BasisChange apply_nielsen_moves(std::vector<Word> basis,
                                const std::vector<NielsenMove>& moves)
{
  int m = static_cast<int>(basis.size());
  if (m == 0) throw std::invalid_argument("empty basis");
  BasisChange out;
  out.initial = basis;
  out.moves = moves;
  out.old_to_new = identity_coords(m);

  for (const auto& mv : moves) {
    if (mv.target < 0 || mv.target >= m || mv.other < 0 || mv.other >= m ||
        mv.target == mv.other)
      throw std::invalid_argument("nielsen move indices out of range");
    // Replacing b_t by b_o b_t (or b_t b_o) rewrites the old coordinate
    // letter t as o^-1 t (or t o^-1) in the new coordinates.
    std::vector<Word> step = identity_coords(m);
    if (mv.side == NielsenMove::Side::Left) {
      basis[mv.target] = basis[mv.other] * basis[mv.target];
      step[mv.target] = gen_word(m, mv.other + 1).inverse() *
                        gen_word(m, mv.target + 1);
    } else {
      basis[mv.target] = basis[mv.target] * basis[mv.other];
      step[mv.target] =
          gen_word(m, mv.target + 1) * gen_word(m, mv.other + 1).inverse();
    }
    for (Word& w : out.old_to_new) w = apply_letter_map(w, step);
  }
  out.final_basis = std::move(basis);

  for (int i = 0; i < m; ++i)
    if (apply_letter_map(out.old_to_new[i], out.final_basis) != out.initial[i])
      throw std::logic_error("coordinate map does not invert the moves");
  return out;
}

Word SubgroupBasis::rewrite(const Word& w) const
{
  Word z = rewrite_in_basis(graph, tree, dual, w);
  return change ? change->rewrite(z) : z;
}

AGraph double_cycle_cover(int d)
{
  if (d < 1) throw std::invalid_argument("cycle cover needs d >= 1");
  std::vector<AGraphEdge> edges;
  for (int i = 0; i < d; ++i) edges.push_back({i, (i + 1) % d, 1});
  for (int i = 0; i < d; ++i) edges.push_back({i, (i - 1 + d) % d, 2});
  return AGraph(2, d, 0, std::move(edges));
}

AGraph kernel_phi_cover(int d)
{
  if (d < 1) throw std::invalid_argument("kernel cover needs d >= 1");
  CoverPermutations c;
  c.rank = 2;
  c.degree = d;
  c.perm.assign(2, std::vector<std::int32_t>(d));
  for (int v = 0; v < d; ++v) {
    c.perm[0][v] = (v + 1) % d;
    c.perm[1][v] = (v - 1 + d) % d;
  }
  return cover_to_graph(c);
}

SubgroupBasis lemma_one_basis(int d)
{
  if (d < 2) throw std::invalid_argument("cycle basis needs d >= 2");
  SubgroupBasis out;
  out.graph = double_cycle_cover(d);
  out.tree = spanning_tree(out.graph, TreePolicy::PreferLabel, 1);
  for (int i = 0; i < d; ++i)
    if (out.tree.order[i] != i)
      throw std::logic_error("preferred-label tree is not the a-path");

  // Duals in the bespoke order: the a-cycle closure first, the b-edges by
  // origin distance, the b-edge at the basepoint last.
  std::vector<AGraphEdge> order;
  order.push_back({d - 1, 0, 1});
  for (int i = 1; i <= d - 1; ++i) order.push_back({i, i - 1, 2});
  order.push_back({0, d - 1, 2});
  out.dual = dual_basis_for_edges(out.graph, out.tree, order);

  Word a = gen_word(2, 1), b = gen_word(2, 2);
  if (out.dual.words[0] != a.pow(d))
    throw std::logic_error("a-cycle dual is not a^d");
  for (int i = 1; i <= d - 1; ++i)
    if (out.dual.words[i] != a.pow(i) * b * a.pow(1 - i))
      throw std::logic_error("b-edge dual has the wrong shape");
  if (out.dual.words[d] != b * a.pow(1 - d))
    throw std::logic_error("basepoint b-edge dual has the wrong shape");

  std::vector<NielsenMove> moves;
  for (int i = 2; i <= d; ++i)
    moves.push_back({NielsenMove::Side::Right, i, i - 1});
  out.change = apply_nielsen_moves(out.dual.words, moves);

  const auto& y = out.change->final_basis;
  if (y[0] != a.pow(d)) throw std::logic_error("y_0 is not a^d");
  for (int i = 1; i <= d - 1; ++i)
    if (y[i] != a.pow(i) * b.pow(i))
      throw std::logic_error("y_i is not a^i b^i");
  if (y[d] != b.pow(d)) throw std::logic_error("y_d is not b^d");

  if (canonical_key(subgroup_graph(y)) != canonical_key(out.graph))
    throw std::logic_error("final basis does not refold to the cover");
  return out;
}

Word rewrite_power_word(const SubgroupBasis& lemma_basis, long n)
{
  return lemma_basis.rewrite(power_word(n, n));
}

GluedCyclesCertificate glued_cycles_cover(long n, long t, int d, int dp)
{
  if (d < 2 || dp < 2 || d > n || dp > t)
    throw std::invalid_argument("glued cycles need 2 <= d <= n and 2 <= d' <= t");
  if (n % d == 0 || t % dp == 0)
    throw std::invalid_argument("glued cycles need d and d' to be nondivisors");

  GluedCyclesCertificate c;
  c.n = n;
  c.t = t;
  c.d = d;
  c.dp = dp;
  c.k = n / d;
  c.kp = t / dp;
  c.r = static_cast<int>(n % d);
  c.rp = static_cast<int>(t % dp);
  c.bound = d + dp - 2;

  // Vertices: the a-cycle is 0..d-1; b-cycle slot j maps to the glue points
  // at j = 0 and j = dp-rp and to fresh ids d.. otherwise.
  int glue = dp - c.rp;
  auto mv = [&](int j) -> std::int32_t {
    if (j == 0) return 0;
    if (j == glue) return c.r;
    return d + j - 1 - (j > glue ? 1 : 0);
  };
  std::vector<AGraphEdge> pe;
  for (int i = 0; i < d; ++i) pe.push_back({i, (i + 1) % d, 1});
  for (int j = 0; j < dp; ++j) pe.push_back({mv(j), mv((j + 1) % dp), 2});
  c.partial = AGraph(2, c.bound, 0, pe);
  c.cover = hall_completion(c.partial);

  SpanningTree tree;
  tree.root = 0;
  tree.parent.assign(c.bound, -1);
  tree.parent_label.assign(c.bound, 0);
  tree.order.push_back(0);
  for (int i = 1; i <= d - 1; ++i) {
    tree.parent[i] = i - 1;
    tree.parent_label[i] = 1;
    tree.order.push_back(i);
  }
  for (int j = 1; j <= glue - 1; ++j) {
    tree.parent[mv(j)] = mv(j - 1);
    tree.parent_label[mv(j)] = 2;
    tree.order.push_back(mv(j));
  }
  for (int j = glue + 1; j <= dp - 1; ++j) {
    tree.parent[mv(j)] = mv(j - 1);
    tree.parent_label[mv(j)] = 2;
    tree.order.push_back(mv(j));
  }

  std::vector<AGraphEdge> order = {{d - 1, 0, 1},
                                   {mv(glue - 1), mv(glue), 2},
                                   {mv(dp - 1), 0, 2}};
  std::set<std::tuple<std::int32_t, std::int32_t, Letter>> partial_set;
  for (const auto& e : pe) partial_set.insert({e.from, e.to, e.label});
  std::vector<AGraphEdge> completion;
  for (const auto& e : c.cover.edges())
    if (!partial_set.count({e.from, e.to, e.label})) completion.push_back(e);
  std::sort(completion.begin(), completion.end(),
            [](const AGraphEdge& a, const AGraphEdge& b) {
              return std::tie(a.from, a.label, a.to) <
                     std::tie(b.from, b.label, b.to);
            });
  order.insert(order.end(), completion.begin(), completion.end());

  c.basis.graph = c.cover;
  c.basis.tree = tree;
  c.basis.dual = dual_basis_for_edges(c.cover, tree, order);

  c.x = c.basis.dual.words[0];
  c.y1 = c.basis.dual.words[1];
  c.y2 = c.basis.dual.words[2];

  Word x1 = gen_word(3, 1), x2 = gen_word(3, 2), x3 = gen_word(3, 3);
  c.eta = x1.pow(c.k) * (x3 * x2).pow(c.kp) * x3;
  c.eta_image = x1.pow(c.k) * x2.pow(c.kp) * x3;

  Word target = power_word(n, t);
  std::vector<Word> images = {c.x, c.y1, c.y2};
  c.substitution_ok = apply_letter_map(c.eta, images) == target;

  // y1 -> y2^-1 y1 carries eta to the single-occurrence form.
  std::vector<Word> twist = {x1, x3.inverse() * x2, x3};
  c.image_ok = apply_letter_map(c.eta, twist) == c.eta_image;
  c.single_occurrence_ok = c.eta_image.occurrences(3) == 1;

  c.contains_ok = c.cover.trace(0, target) == 0;
  c.rewritten = c.basis.rewrite(target);

  int subgroup_rank = c.bound + 1;
  if (subgroup_rank <= 8) {
    c.primitive_checked = true;
    c.primitive_ok = is_primitive(c.rewritten);
  }
  return c;
}

PowerBasis power_basis(const CoverPermutations& cover)
{
  if (cover.rank != 2)
    throw std::invalid_argument("power basis is defined for rank 2 covers");
  PowerBasis out;
  out.cover = cover;
  AGraph g = cover_to_graph(cover);
  std::int32_t deg = cover.degree;

  std::vector<std::int32_t> a_orbit, b_orbit;
  std::vector<std::int32_t> a_pos(deg, -1), b_pos(deg, -1);
  for (std::int32_t v = 0; a_pos[v] == -1; v = cover.perm[0][v]) {
    a_pos[v] = static_cast<std::int32_t>(a_orbit.size());
    a_orbit.push_back(v);
  }
  for (std::int32_t v = 0; b_pos[v] == -1; v = cover.perm[1][v]) {
    b_pos[v] = static_cast<std::int32_t>(b_orbit.size());
    b_orbit.push_back(v);
  }
  out.k = static_cast<long>(a_orbit.size());
  out.l = static_cast<long>(b_orbit.size());

  SpanningTree tree;
  tree.root = 0;
  tree.parent.assign(deg, -1);
  tree.parent_label.assign(deg, 0);
  tree.order.push_back(0);
  for (std::size_t i = 1; i < a_orbit.size(); ++i) {
    tree.parent[a_orbit[i]] = a_orbit[i - 1];
    tree.parent_label[a_orbit[i]] = 1;
    tree.order.push_back(a_orbit[i]);
  }
  // Under each b-arc between consecutive shared vertices, every interior
  // vertex hangs on its b-predecessor; the arc's last edge stays dual.
  for (std::size_t j = 1; j < b_orbit.size(); ++j)
    if (a_pos[b_orbit[j]] == -1) {
      tree.parent[b_orbit[j]] = b_orbit[j - 1];
      tree.parent_label[b_orbit[j]] = 2;
      tree.order.push_back(b_orbit[j]);
    }
  for (std::size_t i = 0; i < tree.order.size(); ++i) {
    std::int32_t v = tree.order[i];
    for (int slot = 0; slot < 4; ++slot) {
      std::int32_t u = g.step(v, slot_letter(slot));
      if (tree.parent[u] != -1 || u == 0) continue;
      tree.parent[u] = v;
      tree.parent_label[u] = slot_letter(slot);
      tree.order.push_back(u);
    }
  }
  if (tree.order.size() != static_cast<std::size_t>(deg))
    throw std::logic_error("power basis tree missed a vertex");

  // Shared vertices in b-orbit order; arc i ends at shared position q_i.
  std::vector<std::int32_t> q;
  for (std::size_t j = 0; j < b_orbit.size(); ++j)
    if (a_pos[b_orbit[j]] != -1) q.push_back(static_cast<std::int32_t>(j));
  int m = static_cast<int>(q.size());

  std::vector<AGraphEdge> order;
  order.push_back({a_orbit.back(), 0, 1});
  for (int i = 1; i <= m; ++i) {
    std::int32_t end = i < m ? q[i] : static_cast<std::int32_t>(b_orbit.size());
    order.push_back({b_orbit[end - 1], b_orbit[end % b_orbit.size()], 2});
  }
  std::set<std::tuple<std::int32_t, std::int32_t, Letter>> listed;
  for (const auto& e : order) listed.insert({e.from, e.to, e.label});
  std::vector<AGraphEdge> rest;
  for (const auto& e : g.edges())
    if (!tree.contains_edge(e.from, e.label, e.to) &&
        !listed.count({e.from, e.to, e.label}))
      rest.push_back(e);
  std::sort(rest.begin(), rest.end(),
            [](const AGraphEdge& a, const AGraphEdge& b) {
              return std::tie(a.from, a.label, a.to) <
                     std::tie(b.from, b.label, b.to);
            });
  order.insert(order.end(), rest.begin(), rest.end());

  out.basis.graph = g;
  out.basis.tree = tree;
  out.basis.dual = dual_basis_for_edges(g, tree, order);

  Word a = gen_word(2, 1), b = gen_word(2, 2);
  if (out.basis.dual.words[0] != a.pow(out.k))
    throw std::logic_error("a-orbit dual is not a^k");
  for (int i = 1; i <= m; ++i) {
    long s_prev = a_pos[b_orbit[q[i - 1]]];
    long s_here = i < m ? a_pos[b_orbit[q[i]]] : 0;
    long arc = (i < m ? q[i] : static_cast<long>(b_orbit.size())) - q[i - 1];
    if (out.basis.dual.words[i] != a.pow(s_prev) * b.pow(arc) * a.pow(-s_here))
      throw std::logic_error("b-arc dual has the wrong shape");
  }

  if (m >= 2) {
    std::vector<NielsenMove> moves;
    for (int j = m - 1; j >= 1; --j)
      moves.push_back({NielsenMove::Side::Left, m, j});
    out.basis.change = apply_nielsen_moves(out.basis.dual.words, moves);
  }
  if (out.basis.words()[m] != b.pow(out.l))
    throw std::logic_error("b-power basis element is not b^l");
  if (canonical_key(subgroup_graph(out.basis.words())) != canonical_key(g))
    throw std::logic_error("power basis does not refold to the cover");

  out.a_index = 0;
  out.b_index = m;
  out.proof_case = m == 1 ? 1 : 2;
  return out;
}

}  // namespace fgx
