#include "hypermaps/poly.hpp"

#include <sstream>

namespace hypermaps {

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::scale(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

Poly Poly::shifted(const Rational& c) const {
  // Horner in (n + c).
  Poly shift_var(std::vector<Rational>{c, Rational(1)});
  Poly r;
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * shift_var;
    r += Poly(c_[i]);
  }
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1));
    if (i == 0 || !unit) os << a.to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly pochhammer(const Poly& a, unsigned long ell) {
  Poly r(1);
  for (unsigned long t = 0; t < ell; ++t) r *= a + Poly(static_cast<long>(t));
  return r;
}

Poly binom_poly(const Poly& top, unsigned long k) {
  Poly p = pochhammer(top - Poly(static_cast<long>(k) - 1), k);
  p.scale(Rational(1) / factorial(k));
  return p;
}

Poly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw domain_error("lagrange_interpolate: size mismatch");
  const size_t m = xs.size();
  Poly result;
  for (size_t j = 0; j < m; ++j) {
    Poly basis(1);
    Rational denom(1);
    for (size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      basis *= Poly(std::vector<Rational>{-xs[i], Rational(1)});
      denom *= xs[j] - xs[i];
    }
    basis.scale(ys[j] / denom);
    result += basis;
  }
  return result;
}

}  // namespace hypermaps
