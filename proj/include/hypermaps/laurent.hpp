#pragma once

#include <map>
#include <string>

#include "hypermaps/poly.hpp"

namespace hypermaps {

// Truncated Laurent series in one variable with Poly coefficients, the kind
// that expands in inverse powers: support is bounded above, and everything
// below `floor` is unknown (truncated away).  `cap` is an upper bound on the
// exponents the untruncated object can carry, including the unknown tail;
// it is what makes truncation floors propagate soundly through products.
class LaurentSeries {
 public:
  static constexpr int kNegInf = INT_MIN / 4;

  // Exact zero (known everywhere).
  LaurentSeries() : floor_(kNegInf), cap_(kNegInf) {}

  static LaurentSeries monomial(int e, Poly p) {
    LaurentSeries s;
    if (!p.is_zero()) {
      s.c_.emplace(e, std::move(p));
      s.cap_ = e;
    }
    return s;
  }

  bool known_zero() const { return c_.empty() && floor_ == kNegInf; }
  int floor() const { return floor_; }
  int cap() const { return cap_; }
  int top() const { return c_.empty() ? kNegInf : c_.rbegin()->first; }
  const std::map<int, Poly>& terms() const { return c_; }

  // Hard error below the floor, never a silent zero.
  const Poly& coeff(int e) const;

  void set_coeff(int e, Poly p);
  void set_floor(int f) { floor_ = f; }
  void raise_cap(int c) { cap_ = std::max(cap_, c); }

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { a += b; return a; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { a -= b; return a; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator-() const;
  LaurentSeries& scale(const Poly& p);
  LaurentSeries& scale(const Rational& r);

  // Multiply by lambda^d.
  LaurentSeries shifted(int d) const;

  // Drop everything below f and remember the loss.
  LaurentSeries& truncate_floor(int f);

  // Equal on all exponents >= from (both must know that range).
  bool equal_above(const LaurentSeries& o, int from) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void drop_below_floor();
  std::map<int, Poly> c_;  // nonzero coefficients only
  int floor_;              // exact for exponents >= floor_
  int cap_;                // true support (incl. unknown tail) is <= cap_
};

}  // namespace hypermaps
