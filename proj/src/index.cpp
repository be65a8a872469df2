#include "fgindex/index.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fgindex/numtheory.hpp"

namespace fgx {

namespace {

int read_workers(int requested)
{
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("FGINDEX_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(std::min(v, 64L));
  }
  return 1;
}

int subgroup_rank(int rank, std::int32_t degree)
{
  return 1 + degree * (rank - 1);
}

Word memo_key(const Word& w) { return cyclic_reduce(w).cyclic.canonical_with_inversion(); }

struct DecisionCache {
  std::mutex mu;
  std::map<Word, bool> decided;
};

DecisionCache& cache_for(IndexKind kind)
{
  static DecisionCache primitive, simple;
  return kind == IndexKind::Primitivity ? primitive : simple;
}

bool decide_cached(IndexKind kind, const Word& w)
{
  Word key = memo_key(w);
  DecisionCache& cache = cache_for(kind);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.decided.find(key);
    if (it != cache.decided.end()) return it->second;
  }
  bool value =
      kind == IndexKind::Primitivity ? is_primitive(w) : is_simple(w);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.decided.emplace(std::move(key), value);
  return value;
}

struct RewrittenCover {
  CoverPermutations cover;
  AGraph graph;
  SpanningTree tree;
  DualBasis dual;
  Word rewritten;
};

RewrittenCover rewrite_under(const CoverPermutations& c, const Word& w)
{
  RewrittenCover r;
  r.cover = c;
  r.graph = cover_to_graph(c);
  r.tree = spanning_tree(r.graph);
  r.dual = dual_basis(r.graph, r.tree);
  r.rewritten = rewrite_in_basis(r.graph, r.tree, r.dual, w);
  return r;
}

IndexResult run_index(IndexKind kind, const Word& input,
                      const IndexOptions& opt)
{
  Word w = input;
  if (w.letters().empty())
    throw std::invalid_argument("the trivial word has no index");
  if (kind == IndexKind::Simplicity && w.rank() < 2)
    throw std::invalid_argument("simplicity needs rank >= 2");

  std::int32_t cap =
      opt.cap > 0 ? opt.cap
                  : std::max<std::int32_t>(
                        1, static_cast<std::int32_t>(w.cyclic_length()) - 1);
  int workers = read_workers(opt.workers);

  IndexResult res;
  for (std::int32_t deg = 1; deg <= cap; ++deg) {
    if (subgroup_rank(w.rank(), deg) > opt.degree_guard + 1) {
      res.status = IndexResult::Status::GuardRefused;
      res.stopped_at = deg - 1;
      return res;
    }

    if (deg == 1) {
      if (decide_cached(kind, w)) {
        IndexCertificate cert;
        cert.kind = kind;
        cert.word = w;
        cert.index = 1;
        cert.rewritten = w;
        if (kind == IndexKind::Primitivity)
          cert.primitivity = decide_primitive(w);
        else
          cert.simplicity = decide_simple(w);
        res.status = IndexResult::Status::Computed;
        res.value = 1;
        res.certificate = std::move(cert);
        res.stopped_at = 0;
        return res;
      }
      res.exhaustion.push_back({1, 1, 1, 1});
      continue;
    }

    long enumerated = 0;
    std::vector<CoverPermutations> containing;
    enumerate_covers(w.rank(), deg, [&](const CoverPermutations& c) {
      ++enumerated;
      if (c.trace(0, w) == 0) containing.push_back(c);
      return true;
    });

    // Deterministic winner: blocks are decided in parallel but scanned in
    // canonical order, so the earliest successful cover wins whatever the
    // worker count.
    std::optional<std::size_t> winner;
    std::size_t n = containing.size();
    for (std::size_t base = 0; base < n && !winner; base += workers) {
      std::size_t hi = std::min(n, base + static_cast<std::size_t>(workers));
      std::vector<char> good(hi - base, 0);
      auto job = [&](std::size_t i) {
        RewrittenCover rc = rewrite_under(containing[i], w);
        good[i - base] = decide_cached(kind, rc.rewritten) ? 1 : 0;
      };
      if (hi - base == 1 || workers == 1) {
        for (std::size_t i = base; i < hi; ++i) job(i);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t i = base; i < hi; ++i) pool.emplace_back(job, i);
        for (auto& t : pool) t.join();
      }
      for (std::size_t i = base; i < hi; ++i)
        if (good[i - base]) {
          winner = i;
          break;
        }
    }

    if (winner) {
      RewrittenCover rc = rewrite_under(containing[*winner], w);
      IndexCertificate cert;
      cert.kind = kind;
      cert.word = w;
      cert.index = deg;
      cert.cover = rc.cover;
      cert.tree = rc.tree;
      cert.basis = rc.dual.words;
      cert.rewritten = rc.rewritten;
      if (kind == IndexKind::Primitivity)
        cert.primitivity = decide_primitive(rc.rewritten);
      else
        cert.simplicity = decide_simple(rc.rewritten);
      cert.exhaustion = res.exhaustion;
      res.status = IndexResult::Status::Computed;
      res.value = deg;
      res.certificate = std::move(cert);
      res.stopped_at = deg - 1;
      return res;
    }

    res.exhaustion.push_back(
        {deg, enumerated, static_cast<long>(n), static_cast<long>(n)});
  }

  res.status = IndexResult::Status::CapExhausted;
  res.stopped_at = cap;
  return res;
}

std::string format_double(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Word power_of_letter(int rank, int g, long e)
{
  return Word(rank, {static_cast<Letter>(g)}).pow(e);
}

}  // namespace

IndexResult primitivity_index(const Word& w, const IndexOptions& opt)
{
  return run_index(IndexKind::Primitivity, w, opt);
}

IndexResult simplicity_index(const Word& w, const IndexOptions& opt)
{
  return run_index(IndexKind::Simplicity, w, opt);
}

void VerifyReport::add(VerifyCase c)
{
  if (c.pass)
    ++passed;
  else
    ++failed;
  if (c.discrepancy) ++discrepancies;
  cases.push_back(std::move(c));
}

VerifyReport verify_upper_bound(long n_from, long n_to)
{
  if (n_from < 1 || n_to < n_from)
    throw std::invalid_argument("upper bound range needs 1 <= from <= to");
  VerifyReport report;
  report.selector = "thm1";
  std::map<int, SubgroupBasis> bases;
  for (long n = n_from; n <= n_to; ++n) {
    VerifyCase c;
    c.name = "n=" + std::to_string(n);
    if (n == 1) {
      c.pass = is_primitive(power_word(1, 1));
      c.detail = "ab is primitive at index 1";
      report.add(std::move(c));
      continue;
    }
    int d = smallest_nondivisor(static_cast<unsigned long>(n));
    auto it = bases.find(d);
    if (it == bases.end()) it = bases.emplace(d, lemma_one_basis(d)).first;
    const SubgroupBasis& basis = it->second;
    Word z = rewrite_power_word(basis, n);
    long k = n / d, r = n % d;
    Word expect = power_of_letter(d + 1, 1, k) *
                  power_of_letter(d + 1, static_cast<int>(r) + 1, 1) *
                  power_of_letter(d + 1, d + 1, k);
    bool shape = z == expect;
    bool single = z.occurrences(static_cast<int>(r) + 1) == 1;
    bool substitutes =
        apply_letter_map(z, basis.words()) == power_word(n, n);
    bool primitive = is_primitive(z);
    c.pass = shape && single && substitutes && primitive;
    c.detail = "d(n)=" + std::to_string(d) + "; margin d(n)-log n=" +
               format_double(d - std::log(static_cast<double>(n)));
    if (!c.pass) c.detail += "; rewrite failed the single-occurrence shape";
    report.add(std::move(c));
  }
  return report;
}

VerifyReport verify_lower_bound(int i_from, int i_to,
                                std::int32_t degree_guard)
{
  if (i_from < 3 || i_to < i_from)
    throw std::invalid_argument("lower bound range needs 3 <= from <= to");
  VerifyReport report;
  report.selector = "thm2";
  for (int i = i_from; i <= i_to; ++i) {
    VerifyCase c;
    c.name = "i=" + std::to_string(i);
    BigNat big_n = lcm_upto(static_cast<unsigned long>(i));
    if (!big_n.fits_ulong_p()) {
      c.pass = false;
      c.detail = "refused: n_i does not fit machine integers";
      report.add(std::move(c));
      continue;
    }
    unsigned long n = big_n.get_ui();
    int d = smallest_nondivisor(n);
    if (d - 1 > degree_guard) {
      c.pass = false;
      c.detail = "refused: exhausting degrees up to " + std::to_string(d - 1) +
                 " exceeds guard " + std::to_string(degree_guard);
      report.add(std::move(c));
      continue;
    }
    Word w = power_word(static_cast<long>(n), static_cast<long>(n));
    long covers_seen = 0;
    bool ok = true;
    std::string fail_detail;
    for (std::int32_t deg = 1; deg <= d - 1 && ok; ++deg) {
      enumerate_covers(2, deg, [&](const CoverPermutations& cover) {
        ++covers_seen;
        if (cover.trace(0, w) != 0) {
          ok = false;
          fail_detail = "a cover of degree " + std::to_string(deg) +
                        " does not contain the word";
          return false;
        }
        PowerBasis pb = power_basis(cover);
        bool divides = n % static_cast<unsigned long>(pb.k) == 0 &&
                       n % static_cast<unsigned long>(pb.l) == 0;
        long p = divides ? static_cast<long>(n) / pb.k : 0;
        long q = divides ? static_cast<long>(n) / pb.l : 0;
        Word rew = pb.basis.rewrite(w);
        int m = static_cast<int>(pb.basis.words().size());
        Word expect = power_of_letter(m, pb.a_index + 1, p) *
                      power_of_letter(m, pb.b_index + 1, q);
        bool theory_reject = divides && p >= 2 && q >= 2 && rew == expect;
        bool brute_reject = !is_primitive(rew);
        if (!theory_reject || !brute_reject) {
          ok = false;
          fail_detail = "degree " + std::to_string(deg) +
                        " cover escaped rejection (theory " +
                        (theory_reject ? "reject" : "accept") + ", brute " +
                        (brute_reject ? "reject" : "accept") + ")";
          return false;
        }
        return true;
      });
    }
    c.pass = ok;
    c.detail = ok ? "n_i=" + std::to_string(n) + "; d(n_i)=" +
                        std::to_string(d) + "; all " +
                        std::to_string(covers_seen) +
                        " covers of degree < d(n_i) reject (theory and brute agree)"
                  : fail_detail;
    report.add(std::move(c));
  }
  return report;
}

VerifyReport verify_simplicity_two(long n_from, long n_to)
{
  if (n_from < 2 || n_to < n_from)
    throw std::invalid_argument("simplicity range needs 2 <= from <= to");
  VerifyReport report;
  report.selector = "thm4";
  SubgroupBasis basis = lemma_one_basis(2);
  for (long n = n_from; n <= n_to; ++n) {
    VerifyCase c;
    c.name = "n=" + std::to_string(n);
    Word w = power_word(n, n);

    WhiteheadGraph g = whitehead_graph(cyclic_reduce(w).cyclic);
    SimplicityWitness ambient = decide_simple(w);
    bool not_simple_ambient = is_circle_graph(g) && !has_cut_vertex(g) &&
                              !ambient.simple &&
                              ambient.level_set_size == 0;

    Word z = rewrite_power_word(basis, n);
    long k = n / 2;
    bool witness_ok;
    std::string parity;
    if (n % 2 == 0) {
      witness_ok = z == power_of_letter(3, 1, k) * power_of_letter(3, 3, k) &&
                   z.omits(2) && is_simple(z);
      parity = "even: omits the middle basis letter";
    } else {
      witness_ok = z == power_of_letter(3, 1, k) * power_of_letter(3, 2, 1) *
                            power_of_letter(3, 3, k) &&
                   z.occurrences(2) == 1 && is_primitive(z);
      parity = "odd: primitive via the single middle letter";
    }

    IndexResult generic = simplicity_index(w);
    bool driver_ok = generic.status == IndexResult::Status::Computed &&
                     generic.value == 2 && generic.certificate.has_value();

    c.pass = not_simple_ambient && witness_ok && driver_ok;
    c.detail = c.pass ? "not simple at index 1 (circle graph); index-2 witness " +
                            parity + "; generic driver agrees"
                      : "witness chain broke";
    report.add(std::move(c));
  }
  return report;
}

VerifyReport verify_glued(long n, long t, int d, int dp)
{
  VerifyReport report;
  report.selector = "prop4";

  VerifyCase hyp;
  hyp.name = "hypotheses";
  std::string violation;
  if (d < 2 || dp < 2)
    violation = "d and d' must be at least 2";
  else if (d > n || dp > t)
    violation = "d <= n and d' <= t required";
  else if (n % d == 0)
    violation = "d divides n";
  else if (t % dp == 0)
    violation = "d' divides t";
  if (!violation.empty()) {
    hyp.pass = false;
    hyp.detail = violation;
    report.add(std::move(hyp));
    return report;
  }
  hyp.pass = true;
  hyp.detail = "d does not divide n, d' does not divide t, sizes in range";
  report.add(std::move(hyp));

  GluedCyclesCertificate cert = glued_cycles_cover(n, t, d, dp);

  VerifyCase body;
  body.name = "certificate";
  body.pass = cert.substitution_ok && cert.image_ok &&
              cert.single_occurrence_ok && cert.contains_ok &&
              cert.cover.is_cover() && cert.cover.vertex_count() == cert.bound &&
              (!cert.primitive_checked || cert.primitive_ok);
  body.detail = std::string("substitution ") +
                (cert.substitution_ok ? "ok" : "BROKEN") + ", image " +
                (cert.image_ok ? "ok" : "BROKEN") + ", single occurrence " +
                (cert.single_occurrence_ok ? "ok" : "BROKEN") +
                ", containment " + (cert.contains_ok ? "ok" : "BROKEN") +
                (cert.primitive_checked
                     ? std::string(", full-rank recheck ") +
                           (cert.primitive_ok ? "ok" : "BROKEN")
                     : ", full-rank recheck skipped");
  bool cert_ok = body.pass;
  report.add(std::move(body));

  VerifyCase bound;
  bound.name = "bound";
  bound.pass = cert_ok;
  bound.detail = "d_prim(a^" + std::to_string(n) + " b^" + std::to_string(t) +
                 ") <= " + std::to_string(cert.bound);
  for (const RecordedValue& rec : recorded_prim_values()) {
    if (rec.n != n || rec.t != t) continue;
    if (cert.bound < rec.computed) {
      bound.pass = false;
      bound.detail += "; bound undercuts the exhaustively computed value " +
                      std::to_string(rec.computed);
    }
    if (rec.published && cert.bound < *rec.published) {
      bound.discrepancy = true;
      bound.detail += "; contradicts the published exact value " +
                      std::to_string(*rec.published) +
                      " (exhaustive search here computed " +
                      std::to_string(rec.computed) + ")";
    }
  }
  report.add(std::move(bound));
  return report;
}

VerifyReport verify_lemma_one(int d_from, int d_to)
{
  if (d_from < 2 || d_to < d_from)
    throw std::invalid_argument("cycle basis range needs 2 <= from <= to");
  VerifyReport report;
  report.selector = "lemma1";
  Word a = Word(2, {1}), b = Word(2, {2});
  for (int d = d_from; d <= d_to; ++d) {
    VerifyCase c;
    c.name = "d=" + std::to_string(d);
    try {
      SubgroupBasis basis = lemma_one_basis(d);
      const auto& z = basis.dual.words;
      const auto& y = basis.words();
      bool ok = z[0] == a.pow(d) && z[d] == b * a.pow(1 - d) &&
                y[0] == a.pow(d) && y[d] == b.pow(d) &&
                basis.change->moves.size() == static_cast<std::size_t>(d - 1);
      for (int i = 1; i <= d - 1 && ok; ++i)
        ok = z[i] == a.pow(i) * b * a.pow(1 - i) &&
             y[i] == a.pow(i) * b.pow(i);
      ok = ok && canonical_key(subgroup_graph(y)) ==
                     canonical_key(double_cycle_cover(d));
      ok = ok && canonical_key(double_cycle_cover(d)) ==
                     canonical_key(kernel_phi_cover(d));
      c.pass = ok;
      c.detail = ok ? "duals, chain, refold, and kernel-cover match"
                    : "a stated identity failed";
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    report.add(std::move(c));
  }
  return report;
}

VerifyReport verify_power_bases(std::int32_t deg_from, std::int32_t deg_to)
{
  if (deg_from < 1 || deg_to < deg_from)
    throw std::invalid_argument("power basis range needs 1 <= from <= to");
  VerifyReport report;
  report.selector = "power";
  for (std::int32_t deg = deg_from; deg <= deg_to; ++deg) {
    VerifyCase c;
    c.name = "degree=" + std::to_string(deg);
    long count = 0;
    bool ok = true;
    std::string fail_detail;
    enumerate_covers(2, deg, [&](const CoverPermutations& cover) {
      ++count;
      try {
        PowerBasis pb = power_basis(cover);
        SmallestPowers sp = smallest_powers(cover);
        bool good =
            pb.k == sp.a_power && pb.l == sp.b_power &&
            pb.basis.words()[pb.a_index] == power_of_letter(2, 1, pb.k) &&
            pb.basis.words()[pb.b_index] == power_of_letter(2, 2, pb.l) &&
            canonical_key(subgroup_graph(pb.basis.words())) ==
                canonical_key(cover_to_graph(cover));
        if (!good) {
          ok = false;
          fail_detail = "cover " + std::to_string(count) +
                        " produced a bad basis";
        }
      } catch (const std::exception& e) {
        ok = false;
        fail_detail = e.what();
      }
      return ok;
    });
    c.pass = ok;
    c.detail = ok ? std::to_string(count) +
                        " covers: power elements present, refold exact"
                  : fail_detail;
    report.add(std::move(c));
  }
  return report;
}

VerifyReport verify_bounds(unsigned long m_max, int i_max,
                           unsigned long lcm_cap)
{
  VerifyReport report;
  report.selector = "bounds";

  RosserSchoenfeldReport rs = rosser_schoenfeld_check(m_max);
  VerifyCase envelope;
  envelope.name = "envelope";
  envelope.pass = rs.lower_ok && rs.upper_ok;
  envelope.detail = "effective bounds hold for 2 <= m <= " +
                    std::to_string(m_max) + "; violations: " +
                    std::to_string(rs.violations.size());
  report.add(std::move(envelope));

  VerifyCase ratio;
  ratio.name = "psi-ratio";
  ratio.pass = rs.ratio_cap_ok && rs.argmax_ok && rs.max_ratio < 1.03883;
  ratio.detail = "max psi(m)/m = " + format_double(rs.max_ratio) +
                 " at m = " + std::to_string(rs.argmax);
  report.add(std::move(ratio));

  ChebyshevTable tbl = chebyshev_table(m_max, lcm_cap);
  bool exact = true;
  for (unsigned long m = 1; m <= tbl.lcm_cap && exact; ++m)
    exact = std::abs(tbl.psi[m] - tbl.log_lcm[m]) <=
            1e-9 * std::max(1.0, tbl.log_lcm[m]);
  VerifyCase lcm_case;
  lcm_case.name = "exact-lcm";
  lcm_case.pass = exact;
  lcm_case.detail = "psi agrees with exact log lcm(1..m) to 1e-9 for m <= " +
                    std::to_string(tbl.lcm_cap);
  report.add(std::move(lcm_case));

  BoundsScan scan = lemma2_bounds_check(m_max, i_max);
  VerifyCase growth;
  growth.name = "nondivisor-growth";
  growth.pass = scan.exact_ok;
  growth.detail = "d(n_i) >= i+1 for i = 2.." + std::to_string(i_max) +
                  "; max d(n)-log n = " + format_double(scan.c_hat) +
                  " at n = " + std::to_string(scan.c_hat_argmax);
  report.add(std::move(growth));
  return report;
}

const std::vector<RecordedValue>& recorded_prim_values()
{
  static const std::vector<RecordedValue> values = {
      {2, 2, 2, std::nullopt},
      {3, 3, 2, 3},
      {5, 5, 2, std::nullopt},
      {6, 6, 4, std::nullopt},
      {12, 12, 5, std::nullopt},
  };
  return values;
}

}  // namespace fgx
