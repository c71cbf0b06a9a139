#pragma once

#include <string>
#include <vector>

#include "hypermaps/combinatorics.hpp"
#include "hypermaps/rational.hpp"

namespace hypermaps {

// Dense univariate polynomial over Rational in the formal variable n.
// Trailing zeros are trimmed; the zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  Poly(long c) : Poly(Rational(c)) {}                             // NOLINT
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  // The polynomial n.
  static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly operator-() const;
  Poly& scale(const Rational& s);
  friend Poly operator*(const Rational& s, Poly p) { p.scale(s); return p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational eval(const Rational& x) const;

  // p(n + c)
  Poly shifted(const Rational& c) const;

  std::string to_string(const std::string& var = "n") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// prod_{t=0}^{ell-1} (a + t); the empty product is 1.
Poly pochhammer(const Poly& a, unsigned long ell);

// pochhammer(top - k + 1, k) / k!
Poly binom_poly(const Poly& top, unsigned long k);

// Unique polynomial of degree < xs.size() through the given points (exact).
Poly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace hypermaps
