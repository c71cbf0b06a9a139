#include "hypermaps/rational.hpp"

#include <ostream>

namespace hypermaps {

Rational::Rational(long num, long den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational::Rational(const std::string& s) {
  mpq_init(q_);
  if (s.empty() || mpq_set_str(q_, s.c_str(), 10) != 0) {
    mpq_clear(q_);
    throw domain_error("Rational: cannot parse '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw domain_error("Rational: zero denominator in '" + s + "'");
  }
  mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

long Rational::to_long() const {
  if (!is_integer()) throw domain_error("Rational: not an integer: " + to_string());
  if (!mpz_fits_slong_p(mpq_numref(q_))) throw domain_error("Rational: integer out of range");
  return mpz_get_si(mpq_numref(q_));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = *this;
  if (e < 0) {
    if (is_zero()) throw domain_error("Rational: 0 to a negative power");
    Rational inv;
    mpq_inv(inv.q_, q_);
    base = inv;
    e = -e;
  }
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), static_cast<unsigned long>(e));
  return r;  // powers of a canonical fraction stay canonical
}

std::string Rational::to_string() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::num_string() const {
  char* s = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::den_string() const {
  char* s = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace hypermaps
