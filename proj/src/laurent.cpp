#include "hypermaps/laurent.hpp"

#include <sstream>

namespace hypermaps {

namespace {
int sat_add(int a, int b) {
  if (a <= LaurentSeries::kNegInf || b <= LaurentSeries::kNegInf) return LaurentSeries::kNegInf;
  return a + b;
}
}  // namespace

const Poly& LaurentSeries::coeff(int e) const {
  if (e < floor_)
    throw truncation_error("LaurentSeries: coefficient request below truncation floor");
  static const Poly zero;
  auto it = c_.find(e);
  return it == c_.end() ? zero : it->second;
}

void LaurentSeries::set_coeff(int e, Poly p) {
  if (p.is_zero())
    c_.erase(e);
  else {
    cap_ = std::max(cap_, e);
    c_[e] = std::move(p);
  }
}

void LaurentSeries::drop_below_floor() {
  while (!c_.empty() && c_.begin()->first < floor_) c_.erase(c_.begin());
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  floor_ = std::max(floor_, o.floor_);
  cap_ = std::max(cap_, o.cap_);
  for (const auto& [e, p] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end())
      c_.emplace(e, p);
    else {
      it->second += p;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  drop_below_floor();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  *this += -o;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  if (a.known_zero() || b.known_zero()) return r;
  // Unknown tail of one factor times the support bound of the other decides
  // where the product stops being trustworthy.
  r.floor_ = std::max(sat_add(a.floor_, b.cap_), sat_add(b.floor_, a.cap_));
  r.cap_ = sat_add(a.cap_, b.cap_);
  for (const auto& [ea, pa] : a.c_) {
    for (const auto& [eb, pb] : b.c_) {
      int e = ea + eb;
      if (e < r.floor_) continue;
      Poly prod = pa * pb;
      if (prod.is_zero()) continue;
      auto it = r.c_.find(e);
      if (it == r.c_.end())
        r.c_.emplace(e, std::move(prod));
      else {
        it->second += prod;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  }
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& [e, p] : r.c_) p = -p;
  return r;
}

LaurentSeries& LaurentSeries::scale(const Poly& p) {
  if (p.is_zero()) {
    c_.clear();
    // floor/cap unchanged: scaling by zero keeps knowledge, kills support
    return *this;
  }
  for (auto& [e, q] : c_) q = q * p;
  return *this;
}

LaurentSeries& LaurentSeries::scale(const Rational& r) { return scale(Poly(r)); }

LaurentSeries LaurentSeries::shifted(int d) const {
  LaurentSeries r;
  r.floor_ = sat_add(floor_, d);
  r.cap_ = sat_add(cap_, d);
  for (const auto& [e, p] : c_) r.c_.emplace(e + d, p);
  return r;
}

LaurentSeries& LaurentSeries::truncate_floor(int f) {
  floor_ = std::max(floor_, f);
  drop_below_floor();
  return *this;
}

bool LaurentSeries::equal_above(const LaurentSeries& o, int from) const {
  if (floor_ > from || o.floor_ > from)
    throw truncation_error("LaurentSeries: comparison window below truncation floor");
  int hi = std::max(top(), o.top());
  for (int e = from; e <= hi; ++e) {
    if (coeff(e) != o.coeff(e)) return false;
  }
  return true;
}

std::string LaurentSeries::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    if (it->first != 0) os << "*" << var << "^" << it->first;
  }
  return os.str();
}

}  // namespace hypermaps
