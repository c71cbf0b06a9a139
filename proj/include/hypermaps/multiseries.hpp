#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypermaps/laurent.hpp"
#include "hypermaps/poly.hpp"

namespace hypermaps {

// Truncated multivariate Laurent series in lambda_1..lambda_k with Poly
// coefficients.  Exactness is tracked along two gradings at once:
//  - per variable: coefficients with e_v >= floor_v are exact,
//  - total degree: coefficients with sum(e) >= total_floor are exact,
// and a query must clear both.  Caps bound the true support of the
// untruncated object (per variable and in total degree); a geometric
// expansion of 1/(lambda_a - lambda_b) has unbounded positive powers of the
// smaller variable, so per-variable caps alone cannot propagate floors
// through products — the total-degree grading is what closes the algebra.
class MultiSeries {
 public:
  static constexpr int kNegInf = INT_MIN / 4;
  static constexpr int kPosInf = INT_MAX / 4;

  MultiSeries() = default;
  explicit MultiSeries(int nvars);

  static MultiSeries constant(int nvars, Poly p);
  // Place a univariate series on axis `var` (0-based).
  static MultiSeries lift(const LaurentSeries& s, int var, int nvars);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Poly>& terms() const { return terms_; }
  int floor_var(int v) const { return floor_[static_cast<size_t>(v)]; }
  int total_floor() const { return total_floor_; }
  int cap_var(int v) const { return cap_[static_cast<size_t>(v)]; }
  int total_cap() const { return total_cap_; }
  // bound on the total degree carried by all variables other than v
  int cocap_var(int v) const { return cocap_[static_cast<size_t>(v)]; }

  // Hard error if the exponent vector is below either floor.
  const Poly& coeff(const std::vector<int>& e) const;
  bool exact_at(const std::vector<int>& e) const;

  void set_coeff(std::vector<int> e, Poly p);
  void set_floors(std::vector<int> f, int total) {
    floor_ = std::move(f);
    total_floor_ = total;
  }
  void set_caps(std::vector<int> c, int total) {
    cap_ = std::move(c);
    total_cap_ = total;
  }
  void set_cocaps(std::vector<int> c) { cocap_ = std::move(c); }

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { a += b; return a; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { a -= b; return a; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  MultiSeries operator-() const;
  MultiSeries& scale(const Rational& r);

  // Drop terms below the given floors (raising the stored floors).
  MultiSeries& clip(const std::vector<int>& floors, int total);

  // Drop terms whose total degree is below the given threshold, regardless
  // of the stored floors.
  MultiSeries& prune_total(int total);

  // Drop stored terms with any positive exponent.
  MultiSeries& drop_positive_exponents();

  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Poly> terms_;
  std::vector<int> floor_;  // exact for e_v >= floor_[v]
  std::vector<int> cap_;    // true support has e_v <= cap_[v] (may be kPosInf)
  std::vector<int> cocap_;  // true support has sum_{w != v} e_w <= cocap_[v]
  int total_floor_ = kNegInf;
  int total_cap_ = kNegInf;
};

// Expansion of 1/(lambda_a - lambda_b) to `order` geometric terms in the
// region where rank[a] < rank[b] means |lambda_a| > |lambda_b|.
// Indices are 0-based; rank defaults to the identity ordering.
MultiSeries expand_inverse_difference(int nvars, int pos_a, int pos_b, int order,
                                      const std::vector<int>& rank = {});

}  // namespace hypermaps
