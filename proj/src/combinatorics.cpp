#include "hypermaps/combinatorics.hpp"

namespace hypermaps {

Rational factorial(unsigned long n) {
  Rational r;
  mpz_fac_ui(mpq_numref(r.raw()), n);
  return r;
}

Rational double_factorial_odd(unsigned long l) {
  Rational r;
  mpz_2fac_ui(mpq_numref(r.raw()), 2 * l + 1);
  return r;
}

Rational binomial(long n, unsigned long k) {
  if (n >= 0 && static_cast<unsigned long>(n) >= k) {
    Rational r;
    mpz_bin_uiui(mpq_numref(r.raw()), static_cast<unsigned long>(n), k);
    return r;
  }
  Rational num(1);
  for (unsigned long i = 0; i < k; ++i) num *= Rational(n - static_cast<long>(i));
  return num / factorial(k);
}

Rational binomial(const Rational& a, unsigned long k) {
  Rational num(1);
  for (unsigned long i = 0; i < k; ++i) num *= a - Rational(static_cast<long>(i));
  return num / factorial(k);
}

Rational pochhammer(const Rational& a, unsigned long len) {
  Rational r(1);
  for (unsigned long t = 0; t < len; ++t) r *= a + Rational(static_cast<long>(t));
  return r;
}

Rational pow2(long e) { return Rational(2).pow(e); }

namespace {
void partitions_rec(int rest, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> partitions_of(int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> cur;
  partitions_rec(d, d, cur, out);
  return out;
}

}  // namespace hypermaps
