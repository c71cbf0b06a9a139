#include "hypermaps/curve.hpp"

#include <sstream>

#include "hypermaps/combinatorics.hpp"

namespace hypermaps {

namespace {

std::string grid_name(const char* base, std::initializer_list<long> args) {
  std::ostringstream os;
  os << base << "(";
  bool first = true;
  for (long a : args) {
    if (!first) os << ",";
    first = false;
    os << a;
  }
  os << ")";
  return os.str();
}

}  // namespace

USeries solve_w(const Rational& r, int order) {
  if (order < 1) throw domain_error("solve_w: order must be >= 1");
  if (r == Rational(0) || r == Rational(-1))
    throw domain_error("solve_w: r in {0,-1} makes the defining equation singular");
  const Rational one(1);
  const Rational inv_r_r1 = one / (r * (r + one));
  const Rational inv_r = one / r;
  const Rational inv_r1 = one / (r + one);

  auto defect = [&](const USeries& w, int ceil) {
    // w^{r+1}/(r(r+1)) - w/r + 1/(r+1) - u^2/2
    USeries g = w.truncated(ceil).pow_rat(r + one);
    g.scale(inv_r_r1);
    USeries t = w.truncated(ceil);
    t.scale(inv_r);
    g -= t;
    g += USeries::constant(inv_r1, g.ceil());
    g -= USeries::monomial(Rational(1, 2), 2, g.ceil());
    return g;
  };

  // Newton from the printed leading terms; quadratic convergence, the
  // derivative (w^r - 1)/r is u times a unit.
  USeries w(0, order + 2);
  w.set_coeff(0, Rational(1));
  w.set_coeff(1, Rational(1));
  int correct = 1;  // coefficients 0..correct are final
  while (correct < order) {
    int target = std::min(2 * correct, order);
    int ceil = target + 2;
    USeries g = defect(w, ceil);
    USeries dg = w.truncated(ceil).pow_rat(r);
    dg -= USeries::constant(one, dg.ceil());
    dg.scale(inv_r);
    USeries delta = g * dg.inverse();
    USeries wn(0, order + 2);
    for (int e = 0; e <= order && e + 1 < order + 2; ++e) {
      Rational c = e < w.ceil() ? w.coeff(e) : Rational(0);
      if (e < delta.ceil() && e >= delta.lo()) c -= delta.coeff(e);
      wn.set_coeff(e, c);
    }
    w = std::move(wn);
    correct = target;
  }
  USeries out = w.truncated(order + 1);
  // substitute back: the defining relation must close to the stored order
  USeries g = defect(out, order + 1);
  for (int e = g.lo(); e < g.ceil(); ++e)
    if (!g.coeff(e).is_zero()) throw internal_error("solve_w: defect does not vanish");
  return out;
}

CoeffTable c_coeffs(const Rational& r, const Rational& j, int ell_max) {
  if (ell_max < 0) throw domain_error("c_coeffs: ell_max must be >= 0");
  USeries w = solve_w(r, ell_max + 1);
  USeries s;
  if (j == Rational(-1)) {
    s = w.log();
  } else {
    s = w.pow_rat(j + Rational(1));
    s -= USeries::constant(Rational(1), s.ceil());
    s.scale(Rational(1) / (j + Rational(1)));
  }
  CoeffTable t;
  t.family = CoeffTable::Family::kC;
  t.r = r;
  t.j = j;
  for (int l = 0; l <= ell_max; ++l) t.coeffs.push_back(s.coeff(l + 1));
  return t;
}

USeries solve_x(long r, int order) {
  if (order < 1) throw domain_error("solve_x: order must be >= 1");
  if (r < 1) throw domain_error("solve_x: only integer r >= 1 is supported");
  const Rational inv_lead = Rational(1) / Rational(2 * (r + 1));

  auto power_side = [&](const USeries& x) {
    // ((X+1)^{r+1} - (X-1)^{r+1}) / (2(r+1))
    USeries xp = x + USeries::constant(Rational(1), x.ceil());
    USeries xm = x - USeries::constant(Rational(1), x.ceil());
    USeries g = xp.pow_int(r + 1) - xm.pow_int(r + 1);
    g.scale(inv_lead);
    return g;
  };

  // window carries provisional zeros above the proven part; Newton corrects them
  USeries x(-1, order + 2);
  x.set_coeff(-1, Rational(1));
  int correct = 0;  // exact through u^correct
  while (correct < order) {
    int target = std::min(std::max(2 * correct, 1), order);
    USeries xw = x.truncated(target + 2);
    USeries g = power_side(xw) - USeries::monomial(Rational(1), -r, xw.ceil() - 1 + r);
    // P'(X) = ((X+1)^r - (X-1)^r)/2
    USeries xp = xw + USeries::constant(Rational(1), xw.ceil());
    USeries xm = xw - USeries::constant(Rational(1), xw.ceil());
    USeries dp = xp.pow_int(r) - xm.pow_int(r);
    dp.scale(Rational(1, 2));
    USeries delta = g * dp.inverse();
    USeries xn(-1, order + 2);
    for (int e = -1; e <= target; ++e) {
      Rational c = x.coeff(e);
      if (e >= delta.lo() && e < delta.ceil()) c -= delta.coeff(e);
      xn.set_coeff(e, c);
    }
    x = std::move(xn);
    correct = target;
  }
  x = x.truncated(order + 1);
  USeries g = power_side(x) - USeries::monomial(Rational(1), static_cast<int>(-r), static_cast<int>(x.ceil() - 1 + r));
  for (int e = g.lo(); e < std::min(g.ceil(), static_cast<int>(order - r + 1)); ++e)
    if (!g.coeff(e).is_zero()) throw internal_error("solve_x: defect does not vanish");
  return x;
}

CoeffTable ctilde(long r, long i, long j, int s_max) {
  if (s_max < 0) throw domain_error("ctilde: s_max must be >= 0");
  const int order = s_max + 6;
  USeries x = solve_x(r, order);
  USeries xp = x + USeries::constant(Rational(1), x.ceil());
  USeries xm = x - USeries::constant(Rational(1), x.ceil());
  USeries s = xp.pow_int(i) * xm.pow_int(j) * x.derivative();
  s = -s;
  const int base = static_cast<int>(-i - j - 2);
  if (s.coeff(base) != Rational(1))
    throw internal_error("ctilde: normalization is off");
  CoeffTable t;
  t.family = CoeffTable::Family::kCTilde;
  t.r = Rational(r);
  t.i = Rational(i);
  t.j = Rational(j);
  for (int k = 0; k <= s_max; ++k) t.coeffs.push_back(s.coeff(base + k));
  return t;
}

Poly ctilde_poly_in_n(long r, long i_shift, long j_shift, int s) {
  if (s < 0) throw domain_error("ctilde_poly_in_n: s must be >= 0");
  // degree <= s in n, so s+1 nodes determine it; one extra node cross-checks
  std::vector<Rational> xs, ys;
  for (long n = 0; n <= s + 1; ++n) {
    xs.push_back(Rational(n));
    ys.push_back(ctilde(r, n + i_shift, -n + j_shift, s).coeffs[static_cast<size_t>(s)]);
  }
  std::vector<Rational> xs_fit(xs.begin(), xs.end() - 1), ys_fit(ys.begin(), ys.end() - 1);
  Poly p = lagrange_interpolate(xs_fit, ys_fit);
  if (p.eval(xs.back()) != ys.back())
    throw internal_error("ctilde_poly_in_n: redundant node mismatch, degree bound violated");
  return p;
}

USeries f_series(const Rational& r, const Rational& j, int t_max) {
  if (t_max < 0) throw domain_error("f_series: t_max must be >= 0");
  CoeffTable c = c_coeffs(r, j, 2 * t_max);
  USeries f(0, t_max + 1);
  Rational sign(1);
  for (int l = 0; l <= t_max; ++l) {
    f.set_coeff(l, double_factorial_odd(static_cast<unsigned long>(l)) *
                       c.coeffs[static_cast<size_t>(2 * l)] * sign);
    sign = -sign;
  }
  return f;
}

Report verify_f_identities(const Rational& r, const Rational& j, int t_max) {
  if (t_max < 1) throw domain_error("verify_f_identities: t_max must be >= 1");
  Report rep;
  USeries f_j = f_series(r, j, t_max);
  USeries f_j1 = f_series(r, j + Rational(1), t_max - 1);
  USeries f_jr = f_series(r, j + r, t_max - 1);
  USeries f_jm1 = f_series(r, j - Rational(1), t_max - 1);

  // f_{r,j+1} = (1 + ((r-1)/2 - j) T + (r+1) T^2 d/dT) f_{r,j}
  {
    USeries rhs = f_j.truncated(t_max);
    USeries t1 = USeries::monomial((r - Rational(1)) / Rational(2) - j, 1, t_max) * f_j;
    USeries t2 = USeries::monomial(r + Rational(1), 2, t_max) * f_j.derivative();
    rhs += t1;
    rhs += t2;
    bool ok = true;
    int first_fail = -1;
    for (int e = 0; e < t_max && ok; ++e) {
      if (f_j1.coeff(e) != rhs.coeff(e)) {
        ok = false;
        first_fail = e;
      }
    }
    rep.add("f-shift-by-one", ok,
            ok ? "" : "first failing coefficient T^" + std::to_string(first_fail));
  }
  // f_{r,j+r} = f_{r,j} - r j T f_{r,j-1}
  {
    USeries rhs = f_j.truncated(t_max);
    rhs -= USeries::monomial(r * j, 1, t_max) * f_jm1;
    bool ok = true;
    int first_fail = -1;
    for (int e = 0; e < t_max && ok; ++e) {
      if (f_jr.coeff(e) != rhs.coeff(e)) {
        ok = false;
        first_fail = e;
      }
    }
    rep.add("f-shift-by-r", ok,
            ok ? "" : "first failing coefficient T^" + std::to_string(first_fail));
  }
  return rep;
}

Report verify_ff_product(long r, long i, long j, int s_max) {
  if (s_max < 0) throw domain_error("verify_ff_product: s_max must be >= 0");
  if (r < 1) throw domain_error("verify_ff_product: integer r >= 1 required");
  Report rep;
  USeries fi = f_series(Rational(r), Rational(i), s_max);
  USeries fj = f_series(Rational(r), Rational(j), s_max).scale_var(Rational(-1));
  USeries lhs = fi * fj;
  CoeffTable ct = ctilde(r, i, j, s_max);
  const Rational half_r = Rational(r) / Rational(2);
  bool ok = true;
  int first_fail = -1;
  for (int s = 0; s <= s_max && ok; ++s) {
    Rational arg = Rational(1) + Rational(s - i - j - 1) / Rational(r);
    Rational rhs = pochhammer(arg, static_cast<unsigned long>(s)) *
                   ct.coeffs[static_cast<size_t>(s)] * half_r.pow(s);
    if (lhs.coeff(s) != rhs) {
      ok = false;
      first_fail = s;
    }
  }
  rep.add(grid_name("ff-product", {r, i, j}), ok,
          ok ? "" : "first failing coefficient T^" + std::to_string(first_fail));
  return rep;
}

Report verify_ctilde_shifts(const std::vector<long>& rs, long ij_lo, long ij_hi, int s_max) {
  Report rep;
  for (long r : rs) {
    bool ok1 = true, ok2 = true;
    for (long i = ij_lo; i <= ij_hi && (ok1 || ok2); ++i) {
      for (long j = ij_lo; j <= ij_hi; ++j) {
        CoeffTable base = ctilde(r, i, j, s_max);
        CoeffTable ip = ctilde(r, i + 1, j, s_max);
        CoeffTable jp = ctilde(r, i, j + 1, s_max);
        CoeffTable ipr = ctilde(r, i + r + 1, j, s_max);
        CoeffTable jpr = ctilde(r, i, j + r + 1, s_max);
        for (int s = 1; s <= s_max; ++s) {
          const Rational& prev = base.coeffs[static_cast<size_t>(s - 1)];
          if (ip.coeffs[static_cast<size_t>(s)] - jp.coeffs[static_cast<size_t>(s)] !=
              Rational(2) * prev)
            ok1 = false;
          if (ipr.coeffs[static_cast<size_t>(s)] - jpr.coeffs[static_cast<size_t>(s)] !=
              Rational(2 * (r + 1)) * prev)
            ok2 = false;
        }
      }
    }
    rep.add(grid_name("ctilde-shift-one", {r}), ok1);
    rep.add(grid_name("ctilde-shift-r-plus-one", {r}), ok2);
  }
  return rep;
}

Rational ctilde_binomial_rhs(long l, long y, int s, int m) {
  Rational acc(0);
  for (long t = 0; t <= m; ++t) {
    Rational term = binomial(static_cast<long>(m), static_cast<unsigned long>(t)) *
                    binomial(y + l * t, static_cast<unsigned long>(s + m));
    if ((m - t) % 2 != 0) term = -term;
    acc += term;
  }
  return pow2(s) / Rational(l).pow(m) * acc;
}

Report verify_ctilde_binomial(const std::vector<long>& ls, int s_max, int m_max, long y_lo,
                              long y_hi) {
  Report rep;
  for (long l : ls) {
    bool ok = true;
    std::string detail;
    for (int s = 0; s <= s_max && ok; ++s) {
      for (int m = 0; m <= m_max && ok; ++m) {
        for (long y = y_lo; y <= y_hi && ok; ++y) {
          Rational lhs =
              ctilde(l - 1, y, -y + s - (l - 1) * m - 1, s).coeffs[static_cast<size_t>(s)];
          Rational rhs = ctilde_binomial_rhs(l, y, s, m);
          if (lhs != rhs) {
            ok = false;
            std::ostringstream os;
            os << "mismatch at s=" << s << " m=" << m << " y=" << y;
            detail = os.str();
          }
        }
      }
    }
    rep.add(grid_name("ctilde-binomial", {l}), ok, detail);
  }
  return rep;
}

}  // namespace hypermaps
