#include "doctest.h"
#include "hypermaps/combinatorics.hpp"
#include "hypermaps/curve.hpp"

using namespace hypermaps;

namespace {

// printed low-order coefficient formulas, used as independent oracles
Rational c0_formula() { return Rational(1); }
Rational c1_formula(const Rational& r, const Rational& j) {
  return j / Rational(2) - (r - Rational(1)) / Rational(6);
}
Rational c2_formula(const Rational& r, const Rational& j) {
  return j * (j - r) / Rational(6) +
         (r - Rational(1)) * (Rational(2) * r + Rational(1)) / Rational(72);
}
Rational c3_formula(const Rational& r, const Rational& j) {
  return j * (j - r) * (j - r - Rational(1)) / Rational(24) -
         (r - Rational(1)) * (r + Rational(2)) * (Rational(2) * r + Rational(1)) / Rational(540);
}

}  // namespace

TEST_CASE("branch series w") {
  for (const Rational& r : {Rational(1), Rational(2), Rational(3), Rational(1, 2)}) {
    USeries w = solve_w(r, 8);
    CHECK(w.coeff(0) == Rational(1));
    CHECK(w.coeff(1) == Rational(1));
    CHECK(w.coeff(2) == -(r - Rational(1)) / Rational(6));
    CHECK(w.coeff(3) == (r - Rational(1)) * (Rational(2) * r + Rational(1)) / Rational(72));
  }
  CHECK_THROWS_AS(solve_w(Rational(0), 4), domain_error);
  CHECK_THROWS_AS(solve_w(Rational(-1), 4), domain_error);
  // r = 1 carries no u^3 term
  CHECK(solve_w(Rational(1), 6).coeff(3) == Rational(0));
}

TEST_CASE("w satisfies its defining equation") {
  // substitute back independently of the solver's own check
  Rational r(3);
  USeries w = solve_w(r, 12);
  USeries g = w.pow_int(4);
  g.scale(Rational(1) / (r * (r + Rational(1))));
  USeries t = w;
  t.scale(Rational(1) / r);
  g -= t;
  g += USeries::constant(Rational(1) / (r + Rational(1)), g.ceil());
  g -= USeries::monomial(Rational(1, 2), 2, g.ceil());
  for (int e = g.lo(); e < g.ceil(); ++e) CHECK(g.coeff(e).is_zero());
}

TEST_CASE("curve coefficient family C") {
  for (const Rational& r : {Rational(1), Rational(2), Rational(3)}) {
    for (const Rational& j : {Rational(0), Rational(1), Rational(3), Rational(-1)}) {
      CoeffTable t = c_coeffs(r, j, 3);
      CHECK(t.coeffs[0] == c0_formula());
      CHECK(t.coeffs[1] == c1_formula(r, j));
      CHECK(t.coeffs[2] == c2_formula(r, j));
      CHECK(t.coeffs[3] == c3_formula(r, j));
    }
  }
  // the worked value used further down the chain
  CHECK(c_coeffs(Rational(2), Rational(1), 2).coeffs[2] == Rational(-7, 72));
}

TEST_CASE("odd branch series X") {
  for (long r : {1L, 2L, 3L, 4L, 5L}) {
    USeries x = solve_x(r, 11);
    CHECK(x.coeff(-1) == Rational(1));
    CHECK(x.coeff(1) == -Rational(r - 1) / Rational(6));
    CHECK(x.coeff(3) ==
          Rational(r - 1) * Rational(2 * r + 1) * Rational(r - 3) / Rational(360));
    for (int e = 0; e < 11; e += 2) CHECK(x.coeff(e).is_zero());
  }
  // r = 1: X = 1/u exactly
  USeries x1 = solve_x(1, 15);
  for (int e = 0; e < 15; ++e) CHECK(x1.coeff(e).is_zero());
  CHECK_THROWS_AS(solve_x(0, 4), domain_error);
}

TEST_CASE("ctilde low coefficients") {
  for (long r : {1L, 2L, 3L}) {
    for (long i = -2; i <= 3; ++i) {
      for (long j = -2; j <= 3; ++j) {
        CoeffTable t = ctilde(r, i, j, 2);
        CHECK(t.coeffs[0] == Rational(1));
        CHECK(t.coeffs[1] == Rational(i - j));
      }
    }
  }
}

TEST_CASE("ctilde binomial identity worked value") {
  // l = 3, y = 2, s = 2, m = 1: the binomial side is (4/3)(C(5,3) - 0) = 40/3
  Rational rhs = pow2(2) / Rational(3) *
                 (binomial(5L, 3) * binomial(1L, 1) - binomial(2L, 3) * binomial(1L, 0));
  CHECK(rhs == Rational(40, 3));
  CHECK(ctilde_binomial_rhs(3, 2, 2, 1) == rhs);
  CHECK(ctilde(2, 2, -3, 2).coeffs[2] == rhs);
}

TEST_CASE("ctilde binomial identity small grid") {
  Report rep = verify_ctilde_binomial({2, 3}, 4, 4, -2, 3);
  CHECK(rep.pass);
}

TEST_CASE("ctilde shift identities") {
  Report rep = verify_ctilde_shifts({1, 2, 3}, -3, 3, 6);
  CHECK(rep.pass);
}

TEST_CASE("ctilde as a polynomial in n") {
  CHECK(ctilde_poly_in_n(2, 1, 5, 0) == Poly(1));
  // s = 1 with shifts (a,b) gives 2n + a - b
  for (long a : {-2L, 0L, 3L}) {
    for (long b : {-1L, 0L, 2L}) {
      Poly expected(std::vector<Rational>{Rational(a - b), Rational(2)});
      CHECK(ctilde_poly_in_n(3, a, b, 1) == expected);
    }
  }
  // evaluating the interpolated polynomial matches a direct expansion
  Poly p = ctilde_poly_in_n(2, 0, -1, 2);
  CHECK(p.eval(Rational(2)) == ctilde(2, 2, -3, 2).coeffs[2]);
}

TEST_CASE("f series") {
  USeries f21 = f_series(Rational(2), Rational(1), 3);
  CHECK(f21.coeff(0) == Rational(1));
  // T coefficient is -3 C_2(r,j)
  CHECK(f21.coeff(1) == Rational(-3) * Rational(-7, 72));
  CHECK(f21.coeff(1) == Rational(7, 24));
}

TEST_CASE("f shift identities") {
  CHECK(verify_f_identities(Rational(1), Rational(0), 6).pass);
  CHECK(verify_f_identities(Rational(2), Rational(3), 6).pass);
  CHECK(verify_f_identities(Rational(3), Rational(1), 5).pass);

  // negative control: corrupt one coefficient and watch the comparison fail
  Rational r(2), j(3);
  USeries lhs = f_series(r, j + Rational(1), 5);
  USeries f = f_series(r, j, 6);
  USeries rhs = f.truncated(6);
  rhs += USeries::monomial((r - Rational(1)) / Rational(2) - j, 1, 6) * f;
  rhs += USeries::monomial(r + Rational(1), 2, 6) * f.derivative();
  rhs.set_coeff(3, rhs.coeff(3) + Rational(1));  // deliberate corruption
  int first_fail = -1;
  for (int e = 0; e < 5; ++e) {
    if (lhs.coeff(e) != rhs.coeff(e)) {
      first_fail = e;
      break;
    }
  }
  CHECK(first_fail == 3);
}

TEST_CASE("f product identity") {
  CHECK(verify_ff_product(2, 1, 0, 5).pass);
  CHECK(verify_ff_product(3, 2, 2, 5).pass);
  CHECK(verify_ff_product(1, 0, 0, 4).pass);
  // s = 0 coefficient of both sides is 1
  USeries fi = f_series(Rational(2), Rational(1), 0);
  USeries fj = f_series(Rational(2), Rational(0), 0);
  CHECK(fi.coeff(0) * fj.coeff(0) == Rational(1));
}
