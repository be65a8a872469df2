// Acceptance gate: each criterion prints exactly one pass/fail line and
// the process exits nonzero if any requested criterion fails. Budgets and
// tolerances are pinned here, not in flags.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgindex/constructions.hpp"
#include "fgindex/index.hpp"
#include "fgindex/json_io.hpp"
#include "fgindex/numtheory.hpp"
#include "fgindex/stallings.hpp"
#include "fgindex/whitehead.hpp"
#include "fgindex/word.hpp"

using namespace fgx;

namespace {

struct outcome {
  bool pass = false;
  std::string summary;
};

outcome fail(const std::string& why) { return {false, why}; }
outcome pass(const std::string& what) { return {true, what}; }

Word rw(const std::string& s) { return parse_word(s, 2); }

std::string format_seconds(double s)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

outcome criterion1()
{
  IndexResult r = primitivity_index(rw("a^3 b^3"));
  if (r.status != IndexResult::Status::Computed)
    return fail("search did not complete");
  if (r.value == 3) return pass("d_prim(a^3 b^3) = 3, exact published value");
  if (r.value != 2)
    return fail("computed d_prim(a^3 b^3) = " + std::to_string(r.value));

  if (r.exhaustion.size() != 1 || r.exhaustion[0].degree != 1 ||
      r.exhaustion[0].enumerated != 1 || r.exhaustion[0].rejected != 1)
    return fail("degree-1 exhaustion log incomplete");

  GluedCyclesCertificate glued = glued_cycles_cover(3, 3, 2, 2);
  if (!glued.substitution_ok || !glued.image_ok ||
      !glued.single_occurrence_ok || !glued.contains_ok)
    return fail("constructive degree-2 certificate failed its checks");

  bool recorded = false;
  for (const RecordedValue& v : recorded_prim_values())
    if (v.n == 3 && v.t == 3 && v.computed == 2 && v.published &&
        *v.published == 3)
      recorded = true;
  if (!recorded) return fail("computed value 2 not recorded against 3");

  jsonio::json record = jsonio::discrepancy_record(
      "a^3 b^3", 3, 2,
      jsonio::json::array({jsonio::certificate_to_json(*r.certificate),
                           jsonio::glued_certificate_to_json(glued)}),
      "exhaustive search over all canonical degree-2 covers finds a "
      "primitive rewriting; the constructive glued-cycles certificate "
      "agrees at degree 2");
  std::ifstream schema_in(std::string(FGX_SCHEMA_DIR) + "/discrepancy.json");
  if (!schema_in.good()) return fail("discrepancy schema missing");
  std::string error;
  if (!jsonio::validate_schema(record, jsonio::json::parse(schema_in),
                               &error))
    return fail("discrepancy record invalid: " + error);
  std::ofstream out("criterion1_discrepancy.json", std::ios::binary);
  out << record.dump(2) << "\n";
  if (!out.good()) return fail("could not write criterion1_discrepancy.json");

  return pass(
      "computed d_prim(a^3 b^3) = 2, contradicting the published 3; "
      "flagged-discrepancy record with the exhaustive and constructive "
      "certificates written to criterion1_discrepancy.json");
}

outcome criterion2()
{
  VerifyReport rep = verify_simplicity_two(2, 8);
  if (!rep.all_passed() || rep.cases.size() != 7)
    return fail("simplicity verifier: " + std::to_string(rep.failed) +
                " of " + std::to_string(rep.cases.size()) + " cases failed");
  for (long n = 2; n <= 8; ++n) {
    IndexResult r = simplicity_index(rw("a^" + std::to_string(n) + " b^" +
                                        std::to_string(n)));
    if (r.status != IndexResult::Status::Computed || r.value != 2)
      return fail("d_simp(a^n b^n) != 2 at n = " + std::to_string(n));
  }
  return pass("d_simp(a^n b^n) = 2 for n = 2..8, each with a cut-vertex "
              "rejection at index 1 and an index-2 omission witness");
}

outcome criterion3()
{
  VerifyReport rep = verify_upper_bound(2, 200);
  if (!rep.all_passed() || rep.cases.size() != 199)
    return fail("upper-bound verifier: " + std::to_string(rep.failed) +
                " of " + std::to_string(rep.cases.size()) + " cases failed");
  return pass("d_prim(a^n b^n) <= d(n) constructively for n = 2..200 via "
              "the double-cycle basis and single-occurrence rewriting");
}

outcome criterion4()
{
  VerifyReport rep = verify_lower_bound(3, 4, 4);
  if (!rep.all_passed())
    return fail("lower-bound exhaustion failed: " +
                (rep.cases.empty() ? std::string("no cases")
                                   : rep.cases.back().detail));
  IndexResult r6 = primitivity_index(rw("a^6 b^6"));
  IndexResult r12 = primitivity_index(rw("a^12 b^12"));
  if (r6.status != IndexResult::Status::Computed || r6.value != 4)
    return fail("d_prim(a^6 b^6) != 4");
  if (r12.status != IndexResult::Status::Computed || r12.value != 5)
    return fail("d_prim(a^12 b^12) != 5");
  return pass("d_prim(a^6 b^6) = 4 and d_prim(a^12 b^12) = 5; every "
              "smaller-degree cover rejected by theory and brute force "
              "in agreement");
}

outcome criterion5()
{
  // Independent oracle: Hall's recursion for index-d subgroups of F_2,
  // a_d = d * d! - sum_{k<d} (d-k)! * a_k.
  std::vector<long> oracle(6, 0);
  for (long d = 1; d <= 5; ++d) {
    long fact = 1;
    for (long j = 2; j <= d; ++j) fact *= j;
    long total = d * fact;
    for (long k = 1; k < d; ++k) {
      long f = 1;
      for (long j = 2; j <= d - k; ++j) f *= j;
      total -= f * oracle[k];
    }
    oracle[d] = total;
  }
  const long expected[6] = {0, 1, 3, 13, 71, 461};
  std::ostringstream counts;
  for (int d = 1; d <= 5; ++d) {
    if (oracle[d] != expected[d])
      return fail("Hall oracle mismatch at degree " + std::to_string(d));
    long seen = 0;
    enumerate_covers(2, d, [&](const CoverPermutations&) {
      ++seen;
      return true;
    });
    if (seen != oracle[d])
      return fail("degree " + std::to_string(d) + ": enumerated " +
                  std::to_string(seen) + ", oracle " +
                  std::to_string(oracle[d]));
    counts << (d > 1 ? ", " : "") << seen;
  }
  return pass("cover counts at degrees 1..5 are " + counts.str() +
              ", matching the Hall recursion");
}

outcome criterion6()
{
  for (int d = 2; d <= 20; ++d)
    if (canonical_key(double_cycle_cover(d)) !=
        canonical_key(kernel_phi_cover(d)))
      return fail("cycle covers disagree at d = " + std::to_string(d));
  VerifyReport rep = verify_lemma_one(2, 20);
  if (!rep.all_passed() || rep.cases.size() != 19)
    return fail("basis verifier: " + std::to_string(rep.failed) + " of " +
                std::to_string(rep.cases.size()) + " cases failed");
  return pass("double-cycle and kernel covers coincide and the rewritten "
              "power basis re-folds exactly for d = 2..20");
}

outcome criterion7()
{
  long total = 0;
  for (int d = 1; d <= 4; ++d)
    enumerate_covers(2, d, [&](const CoverPermutations&) {
      ++total;
      return true;
    });
  if (total != 88) return fail("expected 88 covers of index <= 4");
  VerifyReport rep = verify_power_bases(1, 4);
  if (!rep.all_passed())
    return fail("power-basis verifier: " + std::to_string(rep.failed) +
                " of " + std::to_string(rep.cases.size()) +
                " degree cases failed");
  return pass("power_basis yields a re-folding basis containing a^k and "
              "b^l on all 88 subgroups of index <= 4");
}

outcome criterion8()
{
  VerifyReport rep = verify_bounds(100000, 30, 10000);
  if (!rep.all_passed())
    return fail("bounds verifier: " + std::to_string(rep.failed) + " of " +
                std::to_string(rep.cases.size()) + " cases failed");
  return pass("psi ratio peaks at m = 113 under 1.03883, the effective "
              "envelope holds to 1e5, d(n_i) >= i+1 for i = 2..30, and "
              "float psi matches exact lcm to 1e-9 below 1e4");
}

outcome criterion9()
{
  BoundsScan scan = lemma2_bounds_check(200, 30);
  {
    std::ofstream out("criterion9_table.csv", std::ios::binary);
    out << lcm_csv(scan);
    if (!out.good()) return fail("could not write criterion9_table.csv");
  }
  double lo = 1e9, hi = -1e9;
  int violations = 0;
  for (const LcmSequenceRow& row : scan.rows) {
    double diff = row.d_value - row.log_n;
    lo = std::min(lo, diff);
    hi = std::max(hi, diff);
    if (diff < -3.0 || diff > 3.0) ++violations;
  }

  // Exact index values from criterion 4 sit at rows i = 3 and i = 4.
  bool sandwich_ok = true;
  for (const LcmSequenceRow& row : scan.rows) {
    if (row.i != 3 && row.i != 4) continue;
    IndexResult r = primitivity_index(
        rw("a^" + row.n_dec + " b^" + row.n_dec));
    if (r.status != IndexResult::Status::Computed ||
        r.value != row.d_value || row.log_n >= r.value ||
        r.value - row.log_n > 3.0)
      sandwich_ok = false;
  }

  char band[96];
  std::snprintf(band, sizeof band,
                "d(n_i) - log n_i spans [%.3f, %.3f] over i = 2..30", lo, hi);
  if (violations == 0 && sandwich_ok)
    return pass(std::string(band) +
                ", inside [-3, +3]; table in criterion9_table.csv");
  std::string why = std::string(band) + "; " + std::to_string(violations) +
                    " rows leave the required [-3, +3] band (table in "
                    "criterion9_table.csv)";
  if (!sandwich_ok) why += "; exact-value sandwich check failed";
  return fail(why);
}

outcome criterion10()
{
  std::mt19937 rng(0x5eed5);
  std::uniform_int_distribution<int> letter_pick(0, 3);
  std::uniform_int_distribution<int> len_pick(1, 24);
  auto random_letters = [&](int len) {
    std::vector<Letter> raw;
    const Letter alphabet[4] = {1, -1, 2, -2};
    for (int i = 0; i < len; ++i) raw.push_back(alphabet[letter_pick(rng)]);
    return raw;
  };

  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> raw = random_letters(len_pick(rng));
    Word reduced = free_reduce(2, raw);
    const auto& ls = reduced.letters();
    for (std::size_t i = 1; i < ls.size(); ++i)
      if (ls[i] == static_cast<Letter>(-ls[i - 1]))
        return fail("free reduction left an adjacent inverse pair");
    if (free_reduce(2, ls) != reduced)
      return fail("free reduction is not idempotent");
  }

  std::vector<WhiteheadAutomorphism> gens = whitehead_generators(2);
  std::uniform_int_distribution<std::size_t> gen_pick(0, gens.size() - 1);
  std::vector<Word> words;
  while (words.size() < 10) {
    Word w = free_reduce(2, random_letters(12));
    if (!w.letters().empty()) words.push_back(w);
  }
  for (const Word& w : words) {
    bool base = is_primitive(w);
    for (int k = 0; k < 20; ++k) {
      Word image = gens[gen_pick(rng)].apply(w);
      if (is_primitive(image) != base)
        return fail("primitivity not invariant under an automorphism");
    }
  }

  for (const Word& w : words) {
    CyclicWord c = cyclic_reduce(w).cyclic;
    if (c.rep().letters().empty()) continue;
    MinimizationResult m = whitehead_minimize(c);
    std::size_t prev = c.rep().letters().size();
    if (m.lengths.size() != m.trace.size())
      return fail("minimization trace and lengths diverge");
    for (std::size_t len : m.lengths) {
      if (len >= prev) return fail("minimization length did not decrease");
      prev = len;
    }
    if (m.minimal.rep().letters().size() != prev)
      return fail("minimization result length mismatch");
  }

  for (int trial = 0; trial < 10; ++trial) {
    Word w(2, {1});
    for (int k = 0; k < 4; ++k) w = gens[gen_pick(rng)].apply(w);
    if (!decide_primitive(w).primitive)
      return fail("image of a generator lost primitivity");
    MinimizationResult m =
        whitehead_minimize(cyclic_reduce(w).cyclic, TieBreak::Reversed);
    if (m.minimal.rep().letters().size() != 1)
      return fail("alternate tie-break failed to reach length 1");
  }

  return pass("free-reduction idempotence, automorphism invariance over "
              "20 x 10 samples, minimization descent, and reversed "
              "tie-break re-verification all hold at fixed seeds");
}

}  // namespace

int main(int argc, char** argv)
{
  struct entry {
    int number;
    double budget_seconds;  // 0: no budget stated
    std::function<outcome()> run;
  };
  const std::vector<entry> entries = {
      {1, 1.0, criterion1},  {2, 5.0, criterion2},  {3, 10.0, criterion3},
      {4, 300.0, criterion4}, {5, 30.0, criterion5}, {6, 5.0, criterion6},
      {7, 60.0, criterion7},  {8, 30.0, criterion8}, {9, 0.0, criterion9},
      {10, 0.0, criterion10},
  };

  int selected = 0;  // 0: all
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (selected < 0 || selected > 10) {
    std::fprintf(stderr, "criterion must be in 1..10\n");
    return 2;
  }

  int failures = 0;
  for (const entry& e : entries) {
    if (selected != 0 && e.number != selected) continue;
    auto start = std::chrono::steady_clock::now();
    outcome result;
    try {
      result = e.run();
    } catch (const std::exception& ex) {
      result = fail(std::string("exception: ") + ex.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (result.pass && e.budget_seconds > 0.0 &&
        elapsed > e.budget_seconds) {
      result.pass = false;
      result.summary += "; exceeded the " +
                        format_seconds(e.budget_seconds) + " budget";
    }
    std::printf("criterion %d: %s  %s (%s)\n", e.number,
                result.pass ? "PASS" : "FAIL", result.summary.c_str(),
                format_seconds(elapsed).c_str());
    if (!result.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
