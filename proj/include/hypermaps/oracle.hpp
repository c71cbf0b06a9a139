#pragma once

#include <map>
#include <vector>

#include "hypermaps/rational.hpp"
#include "hypermaps/report.hpp"

namespace hypermaps {

// Bijection of {1..d}; stored 0-based internally.
class Permutation {
 public:
  explicit Permutation(int d) : img_(static_cast<size_t>(d)) {
    for (int i = 0; i < d; ++i) img_[static_cast<size_t>(i)] = i;
  }
  explicit Permutation(std::vector<int> images);  // validates bijectivity

  // Disjoint cycles with 1-based entries.
  static Permutation from_cycles(int d, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[static_cast<size_t>(x)]; }

  // (*this) composed after o: x -> this(o(x)).
  Permutation compose(const Permutation& o) const;
  Permutation inverse() const;
  int cycle_count() const;
  std::vector<int> cycle_type() const;  // sorted descending

  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

struct HypermapSpec {
  int l = 2;
  std::vector<int> b;
  int genus_filter = -1;  // -1 keeps every genus
  int cap = 12;           // largest permitted |b|
};

// Per-genus weighted counts from direct enumeration of the permutation
// triples.  The white permutation is fixed in canonical labelled form and
// the class-size factor folded in analytically, so only the blue class is
// enumerated.  OpenMP over enumeration chunks.
std::map<int, Rational> brute_count(const HypermapSpec& spec);

// Single-threaded reference enumeration kept for testing.
std::map<int, Rational> brute_count_serial(const HypermapSpec& spec);

bool transitive(const std::vector<Permutation>& gens, int d);

// Number of transitive factorizations beta = alpha tau_1 ... tau_r into
// transpositions with strictly increasing larger elements, alpha of class mu,
// beta of class nu, r = len(mu)+len(nu)+2g-2.  alpha is fixed to one
// representative (canonical blocks unless cycles are passed in) and the
// class size folded in analytically.
Rational hurwitz_strict(int g, const std::vector<int>& mu, const std::vector<int>& nu,
                        const std::vector<std::vector<int>>& alpha_cycles = {});

// Counts with nu faces against the rescaled monotone factorization number.
Report check_count_hurwitz(int l, const std::vector<int>& nu);

// Exchanging hyperedge and face roles: k'! M^[l]_{g,k}(b..b) = k! M^[b]_{g,k'}(l..l).
Report check_duality(int l, int b, int k);

}  // namespace hypermaps
