#pragma once

#include <map>
#include <vector>

#include "hypermaps/curve.hpp"
#include "hypermaps/laurent.hpp"
#include "hypermaps/multiseries.hpp"
#include "hypermaps/report.hpp"

namespace hypermaps {

// One entry of the series family y(lambda,n,i,j;l).  The (i,j) = (l,0) entry
// carries an extra lambda^0/n part, flagged so matrix assembly can cancel it
// against the -n column prefactor before any series arithmetic.
struct YEntry {
  LaurentSeries series;    // Poly-in-n coefficients
  bool has_inv_n = false;  // plus lambda^0 * (1/n) when set
};

struct ResolventMatrix {
  int l = 0;
  int order = 0;
  std::vector<LaurentSeries> entries;  // row-major, 1-based accessor below
  const LaurentSeries& at(int i, int j) const {
    return entries[static_cast<size_t>((i - 1) * l + (j - 1))];
  }
};

struct CountResult {
  int l = 0;
  std::vector<int> b;  // sorted ascending
  Poly poly_n;
  std::map<int, Rational> by_genus;
};

// Block-sum expression for y(lambda,n,i,j;l); exact down to lambda^{-order}.
YEntry y_entry(int l, int i, int j, int order);

// Alternative expression for the same series through the curve coefficients.
YEntry y_entry_curve(int l, int i, int j, int order);

ResolventMatrix m_matrix(int l, int order);

// 1-point generating series; nonzero coefficients sit at lambda^{-(lm+1)}.
LaurentSeries one_point(int l, int order);

// Same series through the curve coefficients.  The m = 0 term 2n/lambda is
// outside the stable range and only included on request.
LaurentSeries one_point_curve(int l, int order, bool include_unstable = false);

// Dense k-point series, adequate for coefficients with sum(b_j) <= b_sum_max.
// rank[v] gives the modulus ordering (smaller = larger |lambda|); identity
// when empty.  Practical for small k only.
MultiSeries k_point(int l, int k, int b_sum_max, const std::vector<int>& rank = {});

// Coefficient of prod_j lambda_j^{-(b_j+1)} of the k-point series, k >= 2,
// as a polynomial in n.  Sums the same (k-1)! cyclic-order terms as the dense
// series; evaluated per integer n with exact interpolation at the end.
Poly k_point_extract(int l, const std::vector<int>& b, const std::vector<int>& rank = {});

// Reference implementation: explicit loop over cyclic orders, no OpenMP.
Poly k_point_extract_serial(int l, const std::vector<int>& b,
                            const std::vector<int>& rank = {});

// Weighted hypermap counts with the n-refinement, split by genus.
CountResult count_hypermaps(int l, std::vector<int> b);
CountResult count_hypermaps_serial(int l, std::vector<int> b);

// (1/(l^p p!)) sum_s (-1)^s C(p,s) (i+1-ls)_{j-1}; requires j >= 1, p >= 0.
Poly f_func(const Poly& i, long j, long p, long l);

// (a+1) * M_1(a+1;n); zero when l does not divide a+1.
Poly one_point_explicit(int l, long a);

// (a+1)(b+1) * M_2(a+1,b+1;n); zero when l does not divide a+b+2.
Poly two_point_explicit(int l, long a, long b);

// lm * M_{g,1}(lm) in closed form for g <= 3.
Rational one_vertex_genus_formula(int l, int g, int m);

// lm * M_{g,1}(lm) at the top admissible genus g = (l-1)m/2.
Rational one_vertex_top_genus(int l, int m);

// lm * M_{g,1}(lm) by exact extraction from an exponential kernel in t.
Rational one_vertex_exp_formula(int l, int m, int g);

// Compares the one-vertex series in Y against evaluations of the 1-point
// coefficient polynomial at integer n = 1..n_max.
Report check_one_vertex_series(int l, int m, int n_max);

// Closed 2-point series with one fixed 2-gon face, checked against the
// k-point extraction for b <= order-3.
Report special_two_point_series(int l, int order);

// Difference-operator eigenvalue recursion for the factorial-type wave
// series, checked through `blocks` coefficient blocks.
Report verify_wave_recursion(int l, int blocks);

// Dual-path suites.
Report verify_y_dual(int l, int blocks);
Report verify_one_point_dual(int l, int m_max);
Report verify_two_point_dual(int l, int ab_max);
Report verify_one_vertex_dual(int l, int g_max, int lm_max);
Report verify_top_genus_dual(int l, int m_max);

// Structural property suite (pole cancellation, symmetry, divisibility,
// genus bound, parity, nonnegativity, region independence).
Report verify_structural(unsigned long seed);

}  // namespace hypermaps
