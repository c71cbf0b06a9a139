#include "hypermaps/multiseries.hpp"

#include <numeric>
#include <sstream>

namespace hypermaps {

namespace {
constexpr int kNegInf = MultiSeries::kNegInf;
constexpr int kPosInf = MultiSeries::kPosInf;

int sat_add(int a, int b) {
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  if (a >= kPosInf || b >= kPosInf) return kPosInf;
  return a + b;
}
}  // namespace

MultiSeries::MultiSeries(int nvars)
    : nvars_(nvars),
      floor_(static_cast<size_t>(nvars), kNegInf),
      cap_(static_cast<size_t>(nvars), kNegInf),
      cocap_(static_cast<size_t>(nvars), kNegInf),
      total_floor_(kNegInf),
      total_cap_(kNegInf) {}

MultiSeries MultiSeries::constant(int nvars, Poly p) {
  MultiSeries s(nvars);
  if (!p.is_zero()) {
    std::fill(s.cap_.begin(), s.cap_.end(), 0);
    std::fill(s.cocap_.begin(), s.cocap_.end(), 0);
    s.total_cap_ = 0;
    s.terms_.emplace(std::vector<int>(static_cast<size_t>(nvars), 0), std::move(p));
  }
  return s;
}

MultiSeries MultiSeries::lift(const LaurentSeries& s, int var, int nvars) {
  MultiSeries r(nvars);
  std::fill(r.cap_.begin(), r.cap_.end(), 0);
  r.cap_[static_cast<size_t>(var)] = s.cap();
  std::fill(r.cocap_.begin(), r.cocap_.end(), s.cap());
  r.cocap_[static_cast<size_t>(var)] = 0;
  r.total_cap_ = s.cap();
  r.floor_[static_cast<size_t>(var)] = s.floor();
  r.total_floor_ = s.floor();  // all exponent weight sits on one axis
  for (const auto& [e, p] : s.terms()) {
    std::vector<int> key(static_cast<size_t>(nvars), 0);
    key[static_cast<size_t>(var)] = e;
    r.terms_.emplace(std::move(key), p);
  }
  return r;
}

bool MultiSeries::exact_at(const std::vector<int>& e) const {
  long total = 0;
  bool above_cap = false;
  for (size_t v = 0; v < e.size(); ++v) {
    total += e[v];
    above_cap = above_cap || e[v] > cap_[v];
  }
  if (above_cap || total > total_cap_) return true;  // known zero beyond the support
  for (size_t v = 0; v < e.size(); ++v)
    if (e[v] < floor_[v]) return false;
  return total >= total_floor_;
}

const Poly& MultiSeries::coeff(const std::vector<int>& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw domain_error("MultiSeries: exponent arity mismatch");
  if (!exact_at(e))
    throw truncation_error("MultiSeries: coefficient request below truncation floor");
  static const Poly zero;
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

void MultiSeries::set_coeff(std::vector<int> e, Poly p) {
  long total = 0;
  for (size_t v = 0; v < e.size(); ++v) total += e[v];
  for (size_t v = 0; v < e.size(); ++v) {
    cap_[v] = std::max(cap_[v], e[v]);
    cocap_[v] = std::max(cocap_[v], static_cast<int>(total) - e[v]);
  }
  total_cap_ = std::max(total_cap_, static_cast<int>(total));
  if (p.is_zero())
    terms_.erase(e);
  else
    terms_[std::move(e)] = std::move(p);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  if (nvars_ != o.nvars_) throw domain_error("MultiSeries: arity mismatch");
  for (int v = 0; v < nvars_; ++v) {
    floor_[static_cast<size_t>(v)] =
        std::max(floor_[static_cast<size_t>(v)], o.floor_[static_cast<size_t>(v)]);
    cap_[static_cast<size_t>(v)] =
        std::max(cap_[static_cast<size_t>(v)], o.cap_[static_cast<size_t>(v)]);
    cocap_[static_cast<size_t>(v)] =
        std::max(cocap_[static_cast<size_t>(v)], o.cocap_[static_cast<size_t>(v)]);
  }
  total_floor_ = std::max(total_floor_, o.total_floor_);
  total_cap_ = std::max(total_cap_, o.total_cap_);
  for (const auto& [e, p] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end())
      terms_.emplace(e, p);
    else {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) { return *this += -o; }

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.nvars_ != b.nvars_) throw domain_error("MultiSeries: arity mismatch");
  const int k = a.nvars_;
  MultiSeries r(k);
  auto exact_zero = [k](const MultiSeries& x) {
    if (!x.terms_.empty() || x.total_floor_ != kNegInf) return false;
    for (int v = 0; v < k; ++v)
      if (x.floor_[static_cast<size_t>(v)] != kNegInf) return false;
    return true;
  };
  if (exact_zero(a) || exact_zero(b)) return r;

  for (int v = 0; v < k; ++v) {
    r.cap_[static_cast<size_t>(v)] =
        sat_add(a.cap_[static_cast<size_t>(v)], b.cap_[static_cast<size_t>(v)]);
    r.cocap_[static_cast<size_t>(v)] =
        sat_add(a.cocap_[static_cast<size_t>(v)], b.cocap_[static_cast<size_t>(v)]);
  }
  r.total_cap_ = sat_add(a.total_cap_, b.total_cap_);

  // Contamination from one factor's unknown region times the other's support.
  auto fold = [&](const MultiSeries& x, const MultiSeries& y) {
    // total-floor piece of x
    if (x.total_floor_ > kNegInf)
      r.total_floor_ = std::max(r.total_floor_, sat_add(x.total_floor_, y.total_cap_));
    for (int v = 0; v < k; ++v) {
      int fx = x.floor_[static_cast<size_t>(v)];
      if (fx == kNegInf) continue;
      int cy = y.cap_[static_cast<size_t>(v)];
      if (cy < kPosInf) {
        r.floor_[static_cast<size_t>(v)] =
            std::max(r.floor_[static_cast<size_t>(v)], sat_add(fx, cy));
      } else {
        // No per-variable bound on y; cover the piece by total degree instead.
        // Over the piece e_v < fx the total degree of x is at most
        // (fx - 1) + cocap_v(x).
        int piece_total =
            std::min(sat_add(fx - 1, x.cocap_[static_cast<size_t>(v)]), x.total_cap_);
        r.total_floor_ =
            std::max(r.total_floor_, sat_add(sat_add(piece_total, y.total_cap_), 1));
      }
    }
  };
  fold(a, b);
  fold(b, a);

  std::vector<int> e(static_cast<size_t>(k));
  for (const auto& [ea, pa] : a.terms_) {
    for (const auto& [eb, pb] : b.terms_) {
      for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      Poly prod = pa * pb;
      if (prod.is_zero()) continue;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end())
        r.terms_.emplace(e, std::move(prod));
      else {
        it->second += prod;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& [e, p] : r.terms_) p = -p;
  return r;
}

MultiSeries& MultiSeries::scale(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, p] : terms_) p.scale(s);
  return *this;
}

MultiSeries& MultiSeries::clip(const std::vector<int>& floors, int total) {
  for (int v = 0; v < nvars_; ++v)
    floor_[static_cast<size_t>(v)] = std::max(floor_[static_cast<size_t>(v)], floors[static_cast<size_t>(v)]);
  total_floor_ = std::max(total_floor_, total);
  for (auto it = terms_.begin(); it != terms_.end();) {
    long t = std::accumulate(it->first.begin(), it->first.end(), 0L);
    bool below = t < total_floor_;
    for (size_t v = 0; v < it->first.size() && !below; ++v)
      below = it->first[v] < floor_[v];
    it = below ? terms_.erase(it) : ++it;
  }
  return *this;
}

MultiSeries& MultiSeries::prune_total(int total) {
  total_floor_ = std::max(total_floor_, total);
  for (auto it = terms_.begin(); it != terms_.end();) {
    long t = std::accumulate(it->first.begin(), it->first.end(), 0L);
    it = t < total ? terms_.erase(it) : ++it;
  }
  return *this;
}

MultiSeries& MultiSeries::drop_positive_exponents() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool outside = false;
    for (int c : it->first) outside = outside || c > 0;
    it = outside ? terms_.erase(it) : ++it;
  }
  return *this;
}

std::string MultiSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")*[";
    for (size_t v = 0; v < e.size(); ++v) {
      if (v) os << ",";
      os << e[v];
    }
    os << "]";
  }
  return first ? "0" : os.str();
}

MultiSeries expand_inverse_difference(int nvars, int pos_a, int pos_b, int order,
                                      const std::vector<int>& rank) {
  if (pos_a == pos_b) throw domain_error("expand_inverse_difference: equal indices");
  if (pos_a < 0 || pos_b < 0 || pos_a >= nvars || pos_b >= nvars)
    throw domain_error("expand_inverse_difference: index out of range");
  int ra = rank.empty() ? pos_a : rank[static_cast<size_t>(pos_a)];
  int rb = rank.empty() ? pos_b : rank[static_cast<size_t>(pos_b)];
  const bool a_is_hi = ra < rb;
  const int hi = a_is_hi ? pos_a : pos_b;
  const int lo = a_is_hi ? pos_b : pos_a;
  const Rational sign(a_is_hi ? 1 : -1);

  MultiSeries r(nvars);
  std::vector<int> caps(static_cast<size_t>(nvars), 0);
  caps[static_cast<size_t>(hi)] = -1;
  caps[static_cast<size_t>(lo)] = MultiSeries::kPosInf;
  r.set_caps(std::move(caps), -1);  // every true monomial has total degree -1
  std::vector<int> cocaps(static_cast<size_t>(nvars), -1);
  cocaps[static_cast<size_t>(hi)] = MultiSeries::kPosInf;
  cocaps[static_cast<size_t>(lo)] = -1;
  r.set_cocaps(std::move(cocaps));
  std::vector<int> floors(static_cast<size_t>(nvars), MultiSeries::kNegInf);
  floors[static_cast<size_t>(hi)] = -(order + 1);
  r.set_floors(std::move(floors), MultiSeries::kNegInf);
  for (int t = 0; t <= order; ++t) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(hi)] = -t - 1;
    e[static_cast<size_t>(lo)] = t;
    r.set_coeff(std::move(e), Poly(sign));
  }
  return r;
}

}  // namespace hypermaps
