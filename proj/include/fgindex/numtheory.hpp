#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fgx {

using BigNat = mpz_class;

// Least d >= 2 not dividing n; d(1) = 2. Always a prime power.
int smallest_nondivisor(unsigned long n);
int smallest_nondivisor(const BigNat& n);

// Natural log of a positive big integer, accurate to ~1 ulp of double.
double log_bignat(const BigNat& n);

// lcm(1..m); lcm_upto(0) = lcm_upto(1) = 1.
BigNat lcm_upto(unsigned long m);

// psi(m) = log lcm(1..m) = sum of log p over prime powers p^k <= m,
// tabulated by a prime-power sieve with Kahan-compensated prefix sums.
struct ChebyshevTable {
  unsigned long m_max = 0;
  std::vector<double> psi;  // psi[m] for 0 <= m <= m_max

  // Exact cross-check values, for m up to lcm_cap: log of the exact
  // lcm(1..m) computed in integer arithmetic.
  unsigned long lcm_cap = 0;
  std::vector<double> log_lcm;
};

ChebyshevTable chebyshev_table(unsigned long m_max, unsigned long lcm_cap);
double chebyshev_psi(unsigned long m);

// Effective Chebyshev bounds with eps(m) = sqrt(log m) e^(-sqrt(log m / R))
// where R = 515 / (sqrt(546) - sqrt(322))^2:
//   (1 - eps(m)) m < psi(m)          for m >= 2
//   psi(m) < (1 + eps(m)) m          for m >= 1
//   psi(m) < 1.03883 m               for m >= 1, max of psi(m)/m at m = 113
struct RosserSchoenfeldReport {
  unsigned long m_max = 0;
  bool lower_ok = false;
  bool upper_ok = false;
  bool ratio_cap_ok = false;
  bool argmax_ok = false;            // argmax of psi(m)/m equals 113
  unsigned long argmax = 0;
  double max_ratio = 0.0;
  std::vector<unsigned long> violations;

  bool all_ok() const
  {
    return lower_ok && upper_ok && ratio_cap_ok && argmax_ok;
  }
};

RosserSchoenfeldReport rosser_schoenfeld_check(unsigned long m_max);

// Growth data for the sequence n_i = lcm(1..i): d(n_i) is the least prime
// power above i, hence d(n_i) >= i + 1 exactly, while log n_i = psi(i).
struct LcmSequenceRow {
  int i = 0;
  BigNat n;            // n_i
  std::string n_dec;   // decimal rendering
  int d_value = 0;     // d(n_i)
  double log_n = 0.0;
};

struct BoundsScan {
  // max over 2 <= n <= n_max of d(n) - log n, and where it is attained.
  // Empirical constant for the scanned range only.
  double c_hat = 0.0;
  unsigned long c_hat_argmax = 0;
  bool exact_ok = false;  // every row satisfied d(n_i) >= i + 1
  std::vector<LcmSequenceRow> rows;  // i = 2..i_max
};

BoundsScan lemma2_bounds_check(unsigned long n_max, int i_max);

// CSV renderings: (m, psi, psi/m) and (i, n_i, d(n_i), log n_i).
std::string psi_csv(const ChebyshevTable& t);
std::string lcm_csv(const BoundsScan& s);

}  // namespace fgx
