#include <random>

#include "doctest.h"
#include "hypermaps/combinatorics.hpp"
#include "hypermaps/laurent.hpp"
#include "hypermaps/multiseries.hpp"
#include "hypermaps/poly.hpp"
#include "hypermaps/useries.hpp"

using namespace hypermaps;

namespace {

Rational rand_rat(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 41) - 20;
  long den = static_cast<long>(rng() % 9) + 1;
  return Rational(num, den);
}

Poly rand_poly(std::mt19937_64& rng, int max_deg) {
  std::vector<Rational> c;
  int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_deg + 1));
  for (int i = 0; i <= deg; ++i) c.push_back(rand_rat(rng));
  return Poly(std::move(c));
}

LaurentSeries rand_laurent(std::mt19937_64& rng, int floor, int top) {
  LaurentSeries s;
  s.set_floor(floor);
  for (int e = floor; e <= top; ++e)
    if (rng() % 2) s.set_coeff(e, rand_poly(rng, 2));
  s.raise_cap(top);
  return s;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational("3/6").to_string() == "1/2");
  CHECK(Rational("7").to_string() == "7");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK_THROWS_AS(Rational(1, 0), domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
  CHECK_THROWS_AS(Rational("banana"), domain_error);
}

TEST_CASE("rational arithmetic is exact on random operands") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = rand_rat(rng), y = rand_rat(rng);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
  }
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(double_factorial_odd(0) == Rational(1));
  CHECK(double_factorial_odd(2) == Rational(15));  // 5!! = 15
  CHECK(binomial(5L, 2) == Rational(10));
  CHECK(binomial(-1L, 3) == Rational(-1));
  CHECK(binomial(2L, 3) == Rational(0));
  CHECK(pochhammer(Rational(3), 2) == Rational(12));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(1, 2) * Rational(3, 2) * Rational(5, 2));
  CHECK(pow2(-3) == Rational(1, 8));
}

TEST_CASE("poly arithmetic and evaluation") {
  Poly n = Poly::variable();
  Poly p = n * n + Poly(2) * n + Poly(1);
  CHECK(p.eval(Rational(3)) == Rational(16));
  CHECK(p.shifted(Rational(1)) == n * n + Poly(4) * n + Poly(4));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(Poly().degree() == -1);
}

TEST_CASE("poly pochhammer") {
  Poly n = Poly::variable();
  CHECK(pochhammer(n, 0) == Poly(1));
  // n(n+1)(n+2) = n^3 + 3n^2 + 2n
  Poly expected(std::vector<Rational>{Rational(0), Rational(2), Rational(3), Rational(1)});
  CHECK(pochhammer(n, 3) == expected);
  // direct product oracle: (n-2)(n-1) at n = 5 is 3*4
  Rational oracle = Rational(3) * Rational(4);
  CHECK(pochhammer(n - Poly(2), 2).eval(Rational(5)) == oracle);
}

TEST_CASE("binom_poly") {
  Poly n = Poly::variable();
  CHECK(binom_poly(n, 0) == Poly(1));
  CHECK(binom_poly(n + Poly(3), 4).eval(Rational(1)) == Rational(1));  // C(4,4)
  // direct-count oracle for C(6,4)
  Rational oracle = factorial(6) / (factorial(4) * factorial(2));
  CHECK(binom_poly(n, 4).eval(Rational(6)) == oracle);
}

TEST_CASE("binom_poly matches integer binomials for 0 <= k <= n <= 12") {
  Poly n = Poly::variable();
  for (unsigned long k = 0; k <= 12; ++k) {
    Poly bp = binom_poly(n, k);
    for (long nn = static_cast<long>(k); nn <= 12; ++nn)
      CHECK(bp.eval(Rational(nn)) == binomial(nn, k));
  }
}

TEST_CASE("lagrange interpolation recovers polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = rand_poly(rng, 6);
    std::vector<Rational> xs, ys;
    for (long x = 0; x <= 6; ++x) {
      xs.emplace_back(x);
      ys.push_back(p.eval(Rational(x)));
    }
    CHECK(lagrange_interpolate(xs, ys) == p);
  }
}

TEST_CASE("laurent series floors and truncation") {
  LaurentSeries a = LaurentSeries::monomial(0, Poly(1));
  CHECK(a.coeff(-5).is_zero());  // exact zero below the support of an exact series
  std::mt19937_64 rng(3);
  LaurentSeries b = rand_laurent(rng, -4, 0);
  CHECK_THROWS_AS(b.coeff(-5), truncation_error);
  LaurentSeries prod = a * b;
  CHECK(prod.floor() == b.floor());
}

TEST_CASE("laurent series ring laws above the common floor") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    LaurentSeries a = rand_laurent(rng, -5, 1);
    LaurentSeries b = rand_laurent(rng, -4, 0);
    LaurentSeries c = rand_laurent(rng, -6, 2);
    LaurentSeries lhs = (a * b) * c;
    LaurentSeries rhs = a * (b * c);
    int floor = std::max(lhs.floor(), rhs.floor());
    CHECK(lhs.equal_above(rhs, floor));
    LaurentSeries d1 = a * (b + c);
    LaurentSeries d2 = a * b + a * c;
    floor = std::max(d1.floor(), d2.floor());
    CHECK(d1.equal_above(d2, floor));
    LaurentSeries sum = a + b;
    sum -= b;
    CHECK(sum.equal_above(a, std::max(sum.floor(), a.floor())));
  }
}

TEST_CASE("inverse difference expansion") {
  // (a=1,b=2,order 2): lambda1^{-1} + lambda2 lambda1^{-2} + lambda2^2 lambda1^{-3}
  MultiSeries d = expand_inverse_difference(2, 0, 1, 2);
  CHECK(d.coeff({-1, 0}) == Poly(1));
  CHECK(d.coeff({-2, 1}) == Poly(1));
  CHECK(d.coeff({-3, 2}) == Poly(1));
  CHECK(d.coeff({-2, 0}).is_zero());
  CHECK_THROWS_AS(expand_inverse_difference(2, 1, 1, 2), domain_error);

  // antisymmetry, term by term
  MultiSeries e = expand_inverse_difference(2, 1, 0, 6);
  MultiSeries sum = expand_inverse_difference(2, 0, 1, 6) + e;
  for (const auto& [exps, poly] : sum.terms()) CHECK(poly.is_zero());

  // multiplying back by (lambda_a - lambda_b) recovers 1 inside the window
  MultiSeries diff(2);
  diff.set_coeff({1, 0}, Poly(1));
  diff.set_coeff({0, 1}, Poly(-1));
  MultiSeries prod = expand_inverse_difference(2, 0, 1, 8) * diff;
  CHECK(prod.coeff({0, 0}) == Poly(1));
  CHECK(prod.coeff({-3, 3}).is_zero());
  CHECK(prod.coeff({-5, 2}).is_zero());
}

TEST_CASE("multiseries exactness bookkeeping") {
  // a lifted truncated series times a geometric expansion keeps a sound
  // exactness region: queries outside it must throw
  LaurentSeries t;
  t.set_floor(-3);
  t.set_coeff(-1, Poly(1));
  t.set_coeff(-2, Poly::variable());
  MultiSeries lifted = MultiSeries::lift(t, 0, 2);
  MultiSeries prod = lifted * expand_inverse_difference(2, 0, 1, 10);
  CHECK_THROWS_AS(prod.coeff({-30, 0}), truncation_error);
  CHECK(prod.coeff({-2, 0}) == Poly(1));
}

TEST_CASE("ascending series ops") {
  // geometric series 1/(1-u)
  USeries f(0, 10);
  f.set_coeff(0, Rational(1));
  f.set_coeff(1, Rational(-1));
  USeries inv = f.inverse();
  for (int e = 0; e < 10; ++e) CHECK(inv.coeff(e) == Rational(1));
  USeries round = f * inv;
  CHECK(round.coeff(0) == Rational(1));
  for (int e = 1; e < round.ceil(); ++e) CHECK(round.coeff(e).is_zero());

  USeries g(1, 8);
  g.set_coeff(1, Rational(2));
  g.set_coeff(3, Rational(-1, 3));
  CHECK(g.exp_of().log().equal_below(g, 8));

  USeries h = USeries::monomial(Rational(1), -1, 5);  // 1/u
  CHECK(h.pow_int(-2).coeff(2) == Rational(1));
  CHECK(h.derivative().coeff(-2) == Rational(-1));

  // rational powers via exp/log: (1+u)^{1/2} squared gives back 1+u
  USeries one_plus_u(0, 12);
  one_plus_u.set_coeff(0, Rational(1));
  one_plus_u.set_coeff(1, Rational(1));
  USeries root = one_plus_u.pow_rat(Rational(1, 2));
  CHECK((root * root).equal_below(one_plus_u, 11));
}
