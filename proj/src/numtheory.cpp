#include "fgindex/numtheory.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fgx {

int smallest_nondivisor(unsigned long n)
{
  if (n == 0) throw std::invalid_argument("d(n) needs n >= 1");
  for (unsigned long d = 2;; ++d)
    if (n % d != 0) return static_cast<int>(d);
}

int smallest_nondivisor(const BigNat& n)
{
  if (n <= 0) throw std::invalid_argument("d(n) needs n >= 1");
  for (unsigned long d = 2;; ++d)
    if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) return static_cast<int>(d);
}

double log_bignat(const BigNat& n)
{
  if (n <= 0) throw std::invalid_argument("log of a nonpositive integer");
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

BigNat lcm_upto(unsigned long m)
{
  BigNat l = 1;
  for (unsigned long k = 2; k <= m; ++k)
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
  return l;
}

ChebyshevTable chebyshev_table(unsigned long m_max, unsigned long lcm_cap)
{
  ChebyshevTable t;
  t.m_max = m_max;
  t.lcm_cap = std::min(lcm_cap, m_max);

  std::vector<char> composite(m_max + 1, 0);
  std::vector<double> increment(m_max + 1, 0.0);
  for (unsigned long p = 2; p <= m_max; ++p) {
    if (composite[p]) continue;
    for (unsigned long q = p * p; q <= m_max; q += p) composite[q] = 1;
    double lp = std::log(static_cast<double>(p));
    for (unsigned long pk = p; pk <= m_max; pk *= p) {
      increment[pk] = lp;
      if (pk > m_max / p) break;
    }
  }

  t.psi.assign(m_max + 1, 0.0);
  double sum = 0.0, carry = 0.0;
  for (unsigned long m = 1; m <= m_max; ++m) {
    double y = increment[m] - carry;
    double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
    t.psi[m] = sum;
  }

  if (t.lcm_cap > 0) {
    t.log_lcm.assign(t.lcm_cap + 1, 0.0);
    BigNat l = 1;
    for (unsigned long m = 2; m <= t.lcm_cap; ++m) {
      mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), m);
      t.log_lcm[m] = log_bignat(l);
    }
  }
  return t;
}

double chebyshev_psi(unsigned long m)
{
  if (m < 2) return 0.0;
  return chebyshev_table(m, 0).psi[m];
}

namespace {

double envelope(unsigned long m)
{
  // eps(m) = sqrt(log m) exp(-sqrt(log m / R)).
  static const double R =
      515.0 / ((std::sqrt(546.0) - std::sqrt(322.0)) *
               (std::sqrt(546.0) - std::sqrt(322.0)));
  double l = std::log(static_cast<double>(m));
  return std::sqrt(l) * std::exp(-std::sqrt(l / R));
}

}  // namespace

RosserSchoenfeldReport rosser_schoenfeld_check(unsigned long m_max)
{
  if (m_max < 2) throw std::invalid_argument("envelope check needs m_max >= 2");
  RosserSchoenfeldReport r;
  r.m_max = m_max;
  auto t = chebyshev_table(m_max, 0);

  r.lower_ok = r.upper_ok = r.ratio_cap_ok = true;
  for (unsigned long m = 1; m <= m_max; ++m) {
    double psi = t.psi[m];
    double md = static_cast<double>(m);
    bool bad = false;
    if (m >= 2 && !((1.0 - envelope(m)) * md < psi)) {
      r.lower_ok = false;
      bad = true;
    }
    if (!(psi < (1.0 + envelope(m)) * md)) {
      r.upper_ok = false;
      bad = true;
    }
    if (!(psi < 1.03883 * md)) {
      r.ratio_cap_ok = false;
      bad = true;
    }
    if (bad) r.violations.push_back(m);
    double ratio = psi / md;
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = m;
    }
  }
  r.argmax_ok = r.argmax == 113;
  return r;
}

BoundsScan lemma2_bounds_check(unsigned long n_max, int i_max)
{
  if (n_max < 2 || i_max < 2)
    throw std::invalid_argument("bounds scan needs n_max >= 2 and i_max >= 2");
  BoundsScan s;
  s.c_hat = -1e300;
  for (unsigned long n = 2; n <= n_max; ++n) {
    double gap = smallest_nondivisor(n) - std::log(static_cast<double>(n));
    if (gap > s.c_hat) {
      s.c_hat = gap;
      s.c_hat_argmax = n;
    }
  }

  s.exact_ok = true;
  BigNat l = 1;
  for (int i = 2; i <= i_max; ++i) {
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(i));
    LcmSequenceRow row;
    row.i = i;
    row.n = l;
    row.n_dec = l.get_str();
    row.d_value = smallest_nondivisor(l);
    row.log_n = log_bignat(l);
    if (row.d_value < i + 1) s.exact_ok = false;
    s.rows.push_back(std::move(row));
  }
  return s;
}

std::string psi_csv(const ChebyshevTable& t)
{
  std::ostringstream os;
  os << "m,psi,ratio\n";
  char buf[80];
  for (unsigned long m = 1; m <= t.m_max; ++m) {
    std::snprintf(buf, sizeof buf, "%lu,%.10g,%.10g\n", m, t.psi[m],
                  t.psi[m] / static_cast<double>(m));
    os << buf;
  }
  return os.str();
}

std::string lcm_csv(const BoundsScan& s)
{
  std::ostringstream os;
  os << "i,n_i,d,log_n\n";
  char buf[48];
  for (const auto& row : s.rows) {
    std::snprintf(buf, sizeof buf, ",%d,%.10g\n", row.d_value, row.log_n);
    os << row.i << ',' << row.n_dec << buf;
  }
  return os.str();
}

}  // namespace fgx
