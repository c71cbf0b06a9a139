#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "hypermaps/combinatorics.hpp"
#include "hypermaps/engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypermaps {

namespace {

// Numeric coefficient table of the matrix entries at one integer value of n:
// value at (a, a', d) is the lambda^{-d} coefficient of M(lambda; n)_{a,a'}.
// Depth B suffices: in any closing configuration the per-position depths are
// nonnegative and sum to exactly B.
struct CoefTable {
  int l = 0;
  int depth = 0;
  std::vector<std::vector<std::pair<int, Rational>>> rows;  // sorted by depth
  std::vector<std::vector<Rational>> dense;

  const std::vector<std::pair<int, Rational>>& row(int a, int ap) const {
    return rows[static_cast<size_t>((a - 1) * l + (ap - 1))];
  }
  const Rational* at(int a, int ap, int d) const {
    if (d < 0 || d > depth) return nullptr;
    const Rational& r = dense[static_cast<size_t>((a - 1) * l + (ap - 1))][static_cast<size_t>(d)];
    return r.is_zero() ? nullptr : &r;
  }
};

CoefTable build_table(int l, const Rational& n, int depth) {
  CoefTable T;
  T.l = l;
  T.depth = depth;
  T.rows.assign(static_cast<size_t>(l) * l, {});
  T.dense.assign(static_cast<size_t>(l) * l,
                 std::vector<Rational>(static_cast<size_t>(depth) + 1, Rational(0)));
  auto put = [&](int a, int ap, int d, Rational v) {
    if (d > depth || v.is_zero()) return;
    T.dense[static_cast<size_t>((a - 1) * l + (ap - 1))][static_cast<size_t>(d)] = std::move(v);
  };
  auto block = [&](int j, int m, long len) {
    Rational acc(0);
    for (int s = 0; s <= m; ++s) {
      Rational p = pochhammer(n + Rational(1 - j - l * s), static_cast<unsigned long>(len));
      p *= binomial(static_cast<long>(m), static_cast<unsigned long>(s));
      if (s % 2)
        acc -= p;
      else
        acc += p;
    }
    return acc / (Rational(l).pow(m) * factorial(static_cast<unsigned long>(m)));
  };
  for (int a = 1; a <= l; ++a) {
    for (int ap = 1; ap <= l - 1; ++ap) {
      if (a == ap) put(a, ap, 0, Rational(1));
      for (int m = 0;; ++m) {
        int d = l + l * m + ap - a;
        if (d > depth) break;
        put(a, ap, d, block(ap, m, static_cast<long>(l) * m + l - 1 - a + ap));
      }
    }
    // column l carries the -n prefactor; at a = l the m = 0 part cancels
    // the Kronecker delta exactly, so both are dropped.
    for (int m = (a == l ? 1 : 0);; ++m) {
      int d = l + l * m - a;
      if (d > depth) break;
      put(a, l, d, -n * block(0, m, static_cast<long>(l) * m + l - 1 - a));
    }
  }
  for (size_t idx = 0; idx < T.dense.size(); ++idx)
    for (int d = 0; d <= depth; ++d)
      if (!T.dense[idx][static_cast<size_t>(d)].is_zero())
        T.rows[idx].push_back({d, T.dense[idx][static_cast<size_t>(d)]});
  return T;
}

struct Ctx {
  int l = 0, k = 0, B = 0, Tcap = 0;
  std::vector<int> nv;    // b_v + 1 per variable
  std::vector<int> rank;  // smaller rank = larger modulus
  int root = 0;           // variable with the largest rank (smallest modulus)
  std::vector<int> others;
};

Ctx make_ctx(int l, const std::vector<int>& b, const std::vector<int>& rank_in) {
  Ctx c;
  c.l = l;
  c.k = static_cast<int>(b.size());
  c.B = static_cast<int>(std::accumulate(b.begin(), b.end(), 0L));
  c.Tcap = c.B;
  for (int x : b) c.nv.push_back(x + 1);
  if (rank_in.empty()) {
    c.rank.resize(b.size());
    std::iota(c.rank.begin(), c.rank.end(), 0);
  } else {
    if (rank_in.size() != b.size())
      throw domain_error("k_point_extract: rank arity mismatch");
    c.rank = rank_in;
  }
  c.root = static_cast<int>(std::min_element(c.rank.begin(), c.rank.end()) - c.rank.begin());
  for (int v = 0; v < c.k; ++v)
    if (v != c.root) c.others.push_back(v);
  return c;
}

inline uint64_t pack_state(unsigned S, int ui, int beta, int a, int t, int pi) {
  return static_cast<uint64_t>(S) | (static_cast<uint64_t>(ui) << 16) |
         (static_cast<uint64_t>(beta) << 20) | (static_cast<uint64_t>(a - 1) << 21) |
         (static_cast<uint64_t>(t) << 24) | (static_cast<uint64_t>(pi) << 40);
}

// Sums, over every cyclic order rooted at ctx.root and the fixed seed
// (a2, t1) on the edge leaving the root, the product of matrix coefficients
// and geometric signs that lands on the target exponents.
Rational dp_run(const Ctx& ctx, const CoefTable& C, int a2, int t1) {
  const int m = ctx.k - 1;
  const int n_root = ctx.nv[static_cast<size_t>(ctx.root)];

  std::unordered_map<uint64_t, Rational> cur, nxt;
  // the wrap edge has the root on its high side, a fixed -1 sign
  for (int ui = 0; ui < m; ++ui)
    cur[pack_state(1u << ui, ui, 0, a2, t1, 0)] = Rational(-1);

  Rational out(0);
  for (int lev = 1; lev <= m; ++lev) {
    nxt.clear();
    for (const auto& [key, val] : cur) {
      const unsigned S = static_cast<unsigned>(key & 0xffffu);
      const int ui = static_cast<int>((key >> 16) & 0xfu);
      const int beta = static_cast<int>((key >> 20) & 0x1u);
      const int a = static_cast<int>((key >> 21) & 0x7u) + 1;
      const int t = static_cast<int>((key >> 24) & 0xffffu);
      const int pi = static_cast<int>(key >> 40);
      const int u = ctx.others[static_cast<size_t>(ui)];
      const int nu = ctx.nv[static_cast<size_t>(u)];
      const int contrib_in = beta ? -(t + 1) : t;

      if (lev == m) {
        // close the last variable (low side of the wrap edge), then the root
        for (int tk = 0; tk + t1 <= n_root - 2; ++tk) {
          const int d1 = n_root - t1 - tk - 2;
          const int du = nu + contrib_in + tk;
          if (du < 0) continue;
          if (pi + du + d1 != ctx.B)
            throw internal_error("k_point_extract: depth budget failed to close");
          for (int a1 = 1; a1 <= ctx.l; ++a1) {
            const Rational* cu = C.at(a, a1, du);
            if (!cu) continue;
            const Rational* c1v = C.at(a1, a2, d1);
            if (!c1v) continue;
            out += val * *cu * *c1v;
          }
        }
        continue;
      }
      for (int uj = 0; uj < m; ++uj) {
        if (S >> uj & 1u) continue;
        const int up = ctx.others[static_cast<size_t>(uj)];
        const bool u_hi = ctx.rank[static_cast<size_t>(u)] < ctx.rank[static_cast<size_t>(up)];
        for (int ap = 1; ap <= ctx.l; ++ap) {
          for (const auto& [d, c] : C.row(a, ap)) {
            if (pi + d > ctx.B) break;
            const int contrib_out = -nu + d - contrib_in;
            const int tp = u_hi ? -contrib_out - 1 : contrib_out;
            if (tp < 0 || tp > ctx.Tcap) continue;
            Rational w = val * c;
            if (!u_hi) w = -w;
            auto [it, fresh] =
                nxt.try_emplace(pack_state(S | (1u << uj), uj, u_hi ? 0 : 1, ap, tp, pi + d),
                                std::move(w));
            if (!fresh) it->second += w;
          }
        }
      }
    }
    if (lev < m) cur.swap(nxt);
  }
  return out;
}

// Same sum restricted to one explicit cyclic order; reference path.
Rational chain_run(const Ctx& ctx, const CoefTable& C, const std::vector<int>& order_vars,
                   int a2, int t1) {
  const int m = ctx.k - 1;
  const int n_root = ctx.nv[static_cast<size_t>(ctx.root)];
  // state: (beta, a, t, pi) for the variable at the current position
  std::unordered_map<uint64_t, Rational> cur, nxt;
  cur[pack_state(0, 0, 0, a2, t1, 0)] = Rational(-1);
  Rational out(0);
  for (int pos = 0; pos < m; ++pos) {
    const int u = order_vars[static_cast<size_t>(pos)];
    const int nu = ctx.nv[static_cast<size_t>(u)];
    nxt.clear();
    for (const auto& [key, val] : cur) {
      const int beta = static_cast<int>((key >> 20) & 0x1u);
      const int a = static_cast<int>((key >> 21) & 0x7u) + 1;
      const int t = static_cast<int>((key >> 24) & 0xffffu);
      const int pi = static_cast<int>(key >> 40);
      const int contrib_in = beta ? -(t + 1) : t;
      if (pos == m - 1) {
        for (int tk = 0; tk + t1 <= n_root - 2; ++tk) {
          const int d1 = n_root - t1 - tk - 2;
          const int du = nu + contrib_in + tk;
          if (du < 0) continue;
          for (int a1 = 1; a1 <= ctx.l; ++a1) {
            const Rational* cu = C.at(a, a1, du);
            if (!cu) continue;
            const Rational* c1 = C.at(a1, a2, d1);
            if (!c1) continue;
            out += val * *cu * *c1;
          }
        }
        continue;
      }
      const int up = order_vars[static_cast<size_t>(pos + 1)];
      const bool u_hi = ctx.rank[static_cast<size_t>(u)] < ctx.rank[static_cast<size_t>(up)];
      for (int ap = 1; ap <= ctx.l; ++ap) {
        for (const auto& [d, c] : C.row(a, ap)) {
          if (pi + d > ctx.B) break;
          const int contrib_out = -nu + d - contrib_in;
          const int tp = u_hi ? -contrib_out - 1 : contrib_out;
          if (tp < 0 || tp > ctx.Tcap) continue;
          Rational w = val * c;
          if (!u_hi) w = -w;
          auto [it, fresh] = nxt.try_emplace(pack_state(0, 0, u_hi ? 0 : 1, ap, tp, pi + d),
                                             std::move(w));
          if (!fresh) it->second += w;
        }
      }
    }
    cur.swap(nxt);
  }
  return out;
}

struct InterpolationPlan {
  int deg = 0;       // top admissible n-exponent
  int parity = 0;    // all exponents share this parity
  int npts = 0;      // half-degree nodes plus one redundant check node
};

InterpolationPlan make_plan(int l, const std::vector<int>& b) {
  const int k = static_cast<int>(b.size());
  const long B = std::accumulate(b.begin(), b.end(), 0L);
  InterpolationPlan p;
  long num = 2L - k + (static_cast<long>(l) - 1) * B / l;  // floor when l does not divide B
  p.deg = static_cast<int>(num);
  if (p.deg < 1) return p;
  p.parity = p.deg % 2;
  p.npts = (p.deg - p.parity) / 2 + 2;
  return p;
}

Poly interpolate_values(const InterpolationPlan& plan, const std::vector<Rational>& vals) {
  // vals[i] is the extraction at n = i+1; exponents share plan.parity, so
  // fit in x = n^2 with the top node kept back as a consistency check.
  std::vector<Rational> xs, ys;
  for (int i = 0; i < plan.npts; ++i) {
    Rational n(i + 1);
    xs.push_back(n * n);
    ys.push_back(plan.parity ? vals[static_cast<size_t>(i)] / n : vals[static_cast<size_t>(i)]);
  }
  std::vector<Rational> xs_fit(xs.begin(), xs.end() - 1), ys_fit(ys.begin(), ys.end() - 1);
  Poly w = lagrange_interpolate(xs_fit, ys_fit);
  if (w.eval(xs.back()) != ys.back())
    throw internal_error("k_point_extract: redundant interpolation node mismatch");
  if (w.is_zero()) return Poly();
  std::vector<Rational> coeffs(static_cast<size_t>(2 * w.degree() + plan.parity + 1), Rational(0));
  for (int i = 0; i <= w.degree(); ++i)
    coeffs[static_cast<size_t>(2 * i + plan.parity)] = w.coeff(i);
  return Poly(std::move(coeffs));
}

void check_extract_args(int l, const std::vector<int>& b) {
  if (l < 2) throw domain_error("k_point_extract: l must be >= 2");
  if (b.size() < 2) throw domain_error("k_point_extract: k must be >= 2");
  for (int x : b)
    if (x < 1) throw domain_error("k_point_extract: parts of b must be positive");
}

}  // namespace

Poly k_point_extract(int l, const std::vector<int>& b, const std::vector<int>& rank) {
  check_extract_args(l, b);
  const Ctx ctx = make_ctx(l, b, rank);
  const InterpolationPlan plan = make_plan(l, b);
  if (plan.deg < 1) return Poly();

  // independent tasks: one (n value, seed) pair each
  struct Task {
    int n_idx, a2, t1;
  };
  std::vector<Task> tasks;
  const int n_root = ctx.nv[static_cast<size_t>(ctx.root)];
  for (int i = 0; i < plan.npts; ++i)
    for (int a2 = 1; a2 <= l; ++a2)
      for (int t1 = 0; t1 <= n_root - 2; ++t1) tasks.push_back({i, a2, t1});

  std::vector<CoefTable> tables(static_cast<size_t>(plan.npts));
  for (int i = 0; i < plan.npts; ++i) tables[static_cast<size_t>(i)] = build_table(l, Rational(i + 1), ctx.B);

  std::vector<Rational> partial(tasks.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (size_t ti = 0; ti < tasks.size(); ++ti) {
    try {
      const Task& t = tasks[ti];
      partial[ti] = dp_run(ctx, tables[static_cast<size_t>(t.n_idx)], t.a2, t.t1);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<Rational> vals(static_cast<size_t>(plan.npts), Rational(0));
  for (size_t ti = 0; ti < tasks.size(); ++ti)
    vals[static_cast<size_t>(tasks[ti].n_idx)] += partial[ti];
  for (auto& v : vals) v = -v;  // leading sign of the k-point expression
  return interpolate_values(plan, vals);
}

Poly k_point_extract_serial(int l, const std::vector<int>& b, const std::vector<int>& rank) {
  check_extract_args(l, b);
  const Ctx ctx = make_ctx(l, b, rank);
  const InterpolationPlan plan = make_plan(l, b);
  if (plan.deg < 1) return Poly();

  const int n_root = ctx.nv[static_cast<size_t>(ctx.root)];
  std::vector<Rational> vals;
  for (int i = 0; i < plan.npts; ++i) {
    CoefTable table = build_table(l, Rational(i + 1), ctx.B);
    Rational acc(0);
    std::vector<int> arrangement = ctx.others;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      for (int a2 = 1; a2 <= l; ++a2)
        for (int t1 = 0; t1 <= n_root - 2; ++t1)
          acc += chain_run(ctx, table, arrangement, a2, t1);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    vals.push_back(-acc);
  }
  return interpolate_values(plan, vals);
}

}  // namespace hypermaps
