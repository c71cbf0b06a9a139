#pragma once

#include <vector>

#include "hypermaps/poly.hpp"
#include "hypermaps/report.hpp"
#include "hypermaps/useries.hpp"

namespace hypermaps {

// Coefficient family read off an algebraic-curve expansion.
struct CoeffTable {
  enum class Family { kC, kCTilde };
  Family family;
  Rational r, i, j;  // fixed arguments (i unused for the C family)
  std::vector<Rational> coeffs;
};

// Power series w = 1 + u - ((r-1)/6) u^2 + ... solving
// w^{r+1}/(r(r+1)) - w/r + 1/(r+1) = u^2/2, exact through u^order.
// r must avoid 0 and -1.
USeries solve_w(const Rational& r, int order);

// C_0..C_ell_max with sum_l C_l u^{l+1} = (w^{j+1}-1)/(j+1), or log w at j = -1.
CoeffTable c_coeffs(const Rational& r, const Rational& j, int ell_max);

// Odd Laurent series X = 1/u - ((r-1)/6) u + ... solving
// ((X+1)^{r+1} - (X-1)^{r+1}) / (2(r+1)) = u^{-r}, exact through u^order.
// Integer r >= 1 only.
USeries solve_x(long r, int order);

// C~_0..C~_s_max from -(X+1)^i (X-1)^j dX/du = sum_s C~_s u^{s-i-j-2}.
// Negative i or j go through Laurent inversion of X+-1.
CoeffTable ctilde(long r, long i, long j, int s_max);

// The polynomial in n equal to C~_s(r, n+i_shift, -n+j_shift), obtained by
// interpolation through s+2 integer nodes; the extra node is a consistency
// check and a mismatch raises internal_error.
Poly ctilde_poly_in_n(long r, long i_shift, long j_shift, int s);

// Series in T with coefficient of T^l equal to (2l+1)!! C_{2l}(r,j) (-1)^l.
USeries f_series(const Rational& r, const Rational& j, int t_max);

// Shift identities relating f_{r,j+1} and f_{r,j+r} to f_{r,j}, checked
// coefficient-wise through T^{t_max-1}.
Report verify_f_identities(const Rational& r, const Rational& j, int t_max);

// f_{r,i}(T) f_{r,j}(-T) = sum_s (1+(s-i-j-1)/r)_s C~_s(r,i,j) (rT/2)^s,
// checked through T^{s_max}.
Report verify_ff_product(long r, long i, long j, int s_max);

// C~_s(r,i+1,j) - C~_s(r,i,j+1) = 2 C~_{s-1}(r,i,j) and its (r+1)-shift
// analogue, over the given grids.
Report verify_ctilde_shifts(const std::vector<long>& rs, long ij_lo, long ij_hi, int s_max);

// Closed binomial-sum value equal to C~_s(l-1, y, -y+s-(l-1)m-1).
Rational ctilde_binomial_rhs(long l, long y, int s, int m);

// Grid check of the identity behind ctilde_binomial_rhs.
Report verify_ctilde_binomial(const std::vector<long>& ls, int s_max, int m_max, long y_lo,
                              long y_hi);

}  // namespace hypermaps
