#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hypermaps/errors.hpp"

namespace hypermaps {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Thin value wrapper around GMP's mpq_t; all arithmetic is exact.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }  // NOLINT(google-explicit-constructor)
  Rational(int n) : Rational(static_cast<long>(n)) {}       // NOLINT(google-explicit-constructor)
  Rational(long long n) : Rational(static_cast<long>(n)) {  // NOLINT(google-explicit-constructor)
    static_assert(sizeof(long long) == sizeof(long), "LP64 assumed");
  }
  Rational(long num, long den);
  explicit Rational(const std::string& s);

  Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  // Exact conversion; throws if not an integer fitting a long.
  long to_long() const;

  Rational pow(long e) const;
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  std::string num_string() const;
  std::string den_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  // Escape hatch for helpers that build values out of mpz_t.
  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

}  // namespace hypermaps
