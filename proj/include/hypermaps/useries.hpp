#pragma once

#include <string>
#include <vector>

#include "hypermaps/rational.hpp"

namespace hypermaps {

// Truncated Laurent series in an ascending variable u: finitely many terms
// below, unknown at and above `ceil`.  Coefficients are exact rationals.
// Backs the curve-side series (X, w, the f-series in T, exponential kernels).
class USeries {
 public:
  USeries() : lo_(0), ceil_(0) {}
  USeries(int lo, int ceil) : lo_(lo), ceil_(ceil), c_(static_cast<size_t>(std::max(0, ceil - lo))) {}

  static USeries monomial(const Rational& c, int e, int ceil);
  static USeries constant(const Rational& c, int ceil) { return monomial(c, 0, ceil); }

  int lo() const { return lo_; }
  int ceil() const { return ceil_; }

  // Exact below the ceiling (exponents under the stored window are zero).
  Rational coeff(int e) const;
  void set_coeff(int e, const Rational& v);

  // Lowest exponent with a nonzero stored coefficient; ceil() if none.
  int valuation() const;
  bool stored_zero() const { return valuation() >= ceil_; }

  USeries& operator+=(const USeries& o);
  USeries& operator-=(const USeries& o);
  friend USeries operator+(USeries a, const USeries& b) { a += b; return a; }
  friend USeries operator-(USeries a, const USeries& b) { a -= b; return a; }
  friend USeries operator*(const USeries& a, const USeries& b);
  USeries operator-() const;
  USeries& scale(const Rational& s);

  USeries truncated(int ceil) const;
  USeries shifted(int d) const;  // multiply by u^d
  USeries derivative() const;
  USeries inverse() const;
  USeries pow_int(long e) const;
  // exp/log/rational powers for unit constant terms.
  USeries log() const;
  USeries exp_of() const;
  USeries pow_rat(const Rational& e) const;
  // u -> s*u
  USeries scale_var(const Rational& s) const;

  bool equal_below(const USeries& o, int ceil) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void grow_to(int e);
  int lo_;
  int ceil_;
  std::vector<Rational> c_;  // dense window [lo_, ceil_)
};

}  // namespace hypermaps
