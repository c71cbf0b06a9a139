#include "hypermaps/useries.hpp"

#include <algorithm>
#include <sstream>

namespace hypermaps {

USeries USeries::monomial(const Rational& c, int e, int ceil) {
  USeries s(std::min(e, ceil), ceil);
  if (e < ceil) s.set_coeff(e, c);
  return s;
}

Rational USeries::coeff(int e) const {
  if (e >= ceil_) throw truncation_error("USeries: coefficient request at/above truncation order");
  if (e < lo_) return Rational(0);
  return c_[static_cast<size_t>(e - lo_)];
}

void USeries::grow_to(int e) {
  if (e >= lo_) return;
  c_.insert(c_.begin(), static_cast<size_t>(lo_ - e), Rational(0));
  lo_ = e;
}

void USeries::set_coeff(int e, const Rational& v) {
  if (e >= ceil_) throw truncation_error("USeries: write at/above truncation order");
  grow_to(e);
  c_[static_cast<size_t>(e - lo_)] = v;
}

int USeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return lo_ + static_cast<int>(i);
  return ceil_;
}

USeries& USeries::operator+=(const USeries& o) {
  int ceil = std::min(ceil_, o.ceil_);
  USeries r(std::min(lo_, o.lo_), ceil);
  for (int e = r.lo_; e < ceil; ++e) {
    Rational v = (e >= lo_ && e < ceil_ ? c_[static_cast<size_t>(e - lo_)] : Rational(0)) +
                 (e >= o.lo_ && e < o.ceil_ ? o.c_[static_cast<size_t>(e - o.lo_)] : Rational(0));
    r.c_[static_cast<size_t>(e - r.lo_)] = std::move(v);
  }
  *this = std::move(r);
  return *this;
}

USeries& USeries::operator-=(const USeries& o) { return *this += -o; }

USeries operator*(const USeries& a, const USeries& b) {
  const int va = a.valuation(), vb = b.valuation();
  const int ceil = std::min(a.ceil_ + vb, b.ceil_ + va);
  USeries r(va + vb, ceil);
  for (int ea = va; ea < a.ceil_; ++ea) {
    const Rational& ca = a.c_[static_cast<size_t>(ea - a.lo_)];
    if (ca.is_zero()) continue;
    for (int eb = vb; eb < b.ceil_ && ea + eb < ceil; ++eb) {
      const Rational& cb = b.c_[static_cast<size_t>(eb - b.lo_)];
      if (cb.is_zero()) continue;
      r.c_[static_cast<size_t>(ea + eb - r.lo_)] += ca * cb;
    }
  }
  return r;
}

USeries USeries::operator-() const {
  USeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

USeries& USeries::scale(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

USeries USeries::truncated(int ceil) const {
  if (ceil > ceil_) throw truncation_error("USeries: cannot extend truncation order");
  USeries r(std::min(lo_, ceil), ceil);
  for (int e = r.lo_; e < ceil; ++e)
    if (e >= lo_) r.c_[static_cast<size_t>(e - r.lo_)] = c_[static_cast<size_t>(e - lo_)];
  return r;
}

USeries USeries::shifted(int d) const {
  USeries r = *this;
  r.lo_ += d;
  r.ceil_ += d;
  return r;
}

USeries USeries::derivative() const {
  USeries r(lo_ - 1, ceil_ - 1);
  for (int e = lo_; e < ceil_; ++e) {
    if (e == 0) continue;
    r.c_[static_cast<size_t>(e - 1 - r.lo_)] = Rational(e) * c_[static_cast<size_t>(e - lo_)];
  }
  return r;
}

USeries USeries::inverse() const {
  const int v = valuation();
  if (v >= ceil_) throw domain_error("USeries: cannot invert a series that is zero to this order");
  const int n = ceil_ - v;  // usable terms
  USeries r(-v, -v + n);
  const Rational& lead = c_[static_cast<size_t>(v - lo_)];
  r.c_[0] = Rational(1) / lead;
  for (int m = 1; m < n; ++m) {
    Rational acc(0);
    for (int i = 1; i <= m; ++i) {
      const Rational& ai = c_[static_cast<size_t>(v + i - lo_)];
      if (ai.is_zero()) continue;
      acc += ai * r.c_[static_cast<size_t>(m - i)];
    }
    r.c_[static_cast<size_t>(m)] = -acc / lead;
  }
  return r;
}

USeries USeries::pow_int(long e) const {
  if (e == 0) return constant(Rational(1), ceil_ - 2 * std::min(0, valuation()));
  USeries base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  USeries acc = base;
  n -= 1;
  USeries sq = base;
  while (n > 0) {
    if (n & 1) acc = acc * sq;
    n >>= 1;
    if (n > 0) sq = sq * sq;
  }
  return acc;
}

USeries USeries::log() const {
  if (valuation() != 0 || coeff(0) != Rational(1))
    throw domain_error("USeries: log requires constant term 1");
  USeries lp = derivative() * inverse();  // (log f)' = f'/f
  USeries r(1, ceil_);
  for (int e = 1; e < ceil_; ++e) r.set_coeff(e, lp.coeff(e - 1) / Rational(e));
  return r;
}

USeries USeries::exp_of() const {
  if (valuation() < 1)
    throw domain_error("USeries: exp requires positive valuation");
  const int n = ceil_;
  USeries r(0, n);
  r.set_coeff(0, Rational(1));
  // b' = a' b  =>  m*b_m = sum_i i*a_i*b_{m-i}
  for (int m = 1; m < n; ++m) {
    Rational acc(0);
    for (int i = 1; i <= m; ++i) {
      Rational ai = i < ceil_ ? coeff(i) : Rational(0);
      if (ai.is_zero()) continue;
      acc += Rational(i) * ai * r.coeff(m - i);
    }
    r.set_coeff(m, acc / Rational(m));
  }
  return r;
}

USeries USeries::pow_rat(const Rational& e) const {
  if (e.is_integer()) return pow_int(e.to_long());
  USeries l = log();
  l.scale(e);
  return l.exp_of();
}

USeries USeries::scale_var(const Rational& s) const {
  USeries r = *this;
  for (int e = lo_; e < ceil_; ++e)
    r.c_[static_cast<size_t>(e - lo_)] *= s.pow(e);
  return r;
}

bool USeries::equal_below(const USeries& o, int ceil) const {
  if (ceil > ceil_ || ceil > o.ceil_)
    throw truncation_error("USeries: comparison window above truncation order");
  for (int e = std::min(lo_, o.lo_); e < ceil; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

std::string USeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int e = lo_; e < ceil_; ++e) {
    const Rational& c = c_[static_cast<size_t>(e - lo_)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (e != 0) os << "*" << var << "^" << e;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << ceil_ << ")";
  return os.str();
}

}  // namespace hypermaps
