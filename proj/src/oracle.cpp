#include "hypermaps/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "hypermaps/combinatorics.hpp"
#include "hypermaps/engine.hpp"
#include "hypermaps/errors.hpp"

namespace hypermaps {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(x)])
      throw domain_error("Permutation: not a bijection");
    seen[static_cast<size_t>(x)] = 1;
  }
}

Permutation Permutation::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) img[static_cast<size_t>(i)] = i;
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1;
      int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= d || to < 0 || to >= d)
        throw domain_error("Permutation: cycle entry out of range");
      img[static_cast<size_t>(from)] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (degree() != o.degree()) throw domain_error("Permutation: degree mismatch");
  std::vector<int> img(img_.size());
  for (size_t x = 0; x < img_.size(); ++x)
    img[x] = img_[static_cast<size_t>(o.img_[x])];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) img[static_cast<size_t>(img_[x])] = static_cast<int>(x);
  return Permutation(std::move(img));
}

int Permutation::cycle_count() const {
  std::vector<char> seen(img_.size(), 0);
  int cycles = 0;
  for (size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (size_t y = x; !seen[y]; y = static_cast<size_t>(img_[y])) seen[y] = 1;
  }
  return cycles;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> type;
  for (size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (size_t y = x; !seen[y]; y = static_cast<size_t>(img_[y])) {
      seen[y] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool transitive(const std::vector<Permutation>& gens, int d) {
  if (d <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(d), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int y = g.apply(x);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == d;
}

namespace {

constexpr int kMaxD = 16;

struct EnumCtx {
  int l = 0, d = 0, k = 0;
  std::array<int, kMaxD> sigma2{};  // canonical labelled white permutation
  int euler_const = 0;              // 2 - k + (l-1)d/l
};

// Tallies per genus for the sigma1 assignments reachable from one partial
// state; iterative deepening over the cycle starting at the smallest free
// element.  sigma1/used are scratch, restored on exit.
void enumerate_blue(const EnumCtx& ctx, std::array<int, kMaxD>& sigma1, unsigned used,
                    std::vector<long long>& tally) {
  if (used == (1u << ctx.d) - 1u) {
    // omega = sigma1 . sigma2 shares its cycle count with sigma0
    std::array<int, kMaxD> omega;
    for (int x = 0; x < ctx.d; ++x) omega[static_cast<size_t>(x)] = sigma1[static_cast<size_t>(ctx.sigma2[static_cast<size_t>(x)])];
    // connectivity of <sigma1, sigma2> via union-find
    std::array<int, kMaxD> parent;
    for (int x = 0; x < ctx.d; ++x) parent[static_cast<size_t>(x)] = x;
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<size_t>(a)] = b;
    };
    for (int x = 0; x < ctx.d; ++x) {
      unite(x, sigma1[static_cast<size_t>(x)]);
      unite(x, ctx.sigma2[static_cast<size_t>(x)]);
    }
    int comps = 0;
    for (int x = 0; x < ctx.d; ++x) comps += find(x) == x;
    if (comps != 1) return;

    std::array<char, kMaxD> seen{};
    int v = 0;
    for (int x = 0; x < ctx.d; ++x) {
      if (seen[static_cast<size_t>(x)]) continue;
      ++v;
      for (int y = x; !seen[static_cast<size_t>(y)]; y = omega[static_cast<size_t>(y)])
        seen[static_cast<size_t>(y)] = 1;
    }
    int twog = ctx.euler_const - v;
    if (twog < 0 || twog % 2 != 0)
      throw internal_error("brute_count: genus is not a nonnegative integer");
    int g = twog / 2;
    if (g >= static_cast<int>(tally.size())) tally.resize(static_cast<size_t>(g) + 1, 0);
    ++tally[static_cast<size_t>(g)];
    return;
  }

  int start = 0;
  while (used >> start & 1u) ++start;
  unsigned used2 = used | (1u << start);
  // ordered choice of the remaining cycle members
  std::array<int, kMaxD> cyc;
  cyc[0] = start;
  auto rec = [&](auto&& self, int depth, unsigned mask) -> void {
    if (depth == ctx.l) {
      for (int i = 0; i < ctx.l; ++i)
        sigma1[static_cast<size_t>(cyc[static_cast<size_t>(i)])] =
            cyc[static_cast<size_t>((i + 1) % ctx.l)];
      enumerate_blue(ctx, sigma1, mask, tally);
      return;
    }
    for (int c = 0; c < ctx.d; ++c) {
      if (mask >> c & 1u) continue;
      cyc[static_cast<size_t>(depth)] = c;
      self(self, depth + 1, mask | (1u << c));
    }
  };
  rec(rec, 1, used2);
}

EnumCtx make_enum_ctx(const HypermapSpec& spec) {
  EnumCtx ctx;
  ctx.l = spec.l;
  ctx.k = static_cast<int>(spec.b.size());
  long d = std::accumulate(spec.b.begin(), spec.b.end(), 0L);
  if (spec.l < 2) throw domain_error("brute_count: l must be >= 2");
  for (int x : spec.b)
    if (x < 1) throw domain_error("brute_count: parts of b must be positive");
  if (d > spec.cap)
    throw domain_error("brute_count: |b| = " + std::to_string(d) + " exceeds the cap of " +
                       std::to_string(spec.cap));
  ctx.d = static_cast<int>(d);
  int off = 0;
  for (int len : spec.b) {
    for (int i = 0; i < len; ++i)
      ctx.sigma2[static_cast<size_t>(off + i)] = off + (i + 1) % len;
    off += len;
  }
  ctx.euler_const = 2 - ctx.k + static_cast<int>((spec.l - 1) * d / spec.l);
  return ctx;
}

std::map<int, Rational> finish_tally(const HypermapSpec& spec, const std::vector<long long>& tally) {
  Rational prod_b(1);
  for (int x : spec.b) prod_b *= Rational(x);
  std::map<int, Rational> out;
  for (size_t g = 0; g < tally.size(); ++g) {
    if (tally[g] == 0) continue;
    if (spec.genus_filter >= 0 && static_cast<int>(g) != spec.genus_filter) continue;
    out[static_cast<int>(g)] = Rational(tally[g]) / prod_b;
  }
  return out;
}

}  // namespace

std::map<int, Rational> brute_count_serial(const HypermapSpec& spec) {
  long d = std::accumulate(spec.b.begin(), spec.b.end(), 0L);
  if (d % spec.l != 0) return {};
  EnumCtx ctx = make_enum_ctx(spec);
  std::vector<long long> tally;
  std::array<int, kMaxD> sigma1{};
  enumerate_blue(ctx, sigma1, 0, tally);
  return finish_tally(spec, tally);
}

std::map<int, Rational> brute_count(const HypermapSpec& spec) {
  long d = std::accumulate(spec.b.begin(), spec.b.end(), 0L);
  if (d % spec.l != 0) return {};
  EnumCtx ctx = make_enum_ctx(spec);

  // split on the ordered partner choice of element 0's cycle
  std::vector<std::array<int, kMaxD>> prefixes;
  {
    std::array<int, kMaxD> cyc;
    cyc[0] = 0;
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == ctx.l) {
        prefixes.push_back(cyc);
        return;
      }
      for (int c = 1; c < ctx.d; ++c) {
        bool taken = false;
        for (int i = 1; i < depth; ++i) taken = taken || cyc[static_cast<size_t>(i)] == c;
        if (taken) continue;
        cyc[static_cast<size_t>(depth)] = c;
        self(self, depth + 1);
      }
    };
    rec(rec, 1);
  }

  std::vector<std::vector<long long>> tallies(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (size_t p = 0; p < prefixes.size(); ++p) {
    const auto& cyc = prefixes[p];
    std::array<int, kMaxD> sigma1{};
    unsigned used = 0;
    for (int i = 0; i < ctx.l; ++i) {
      sigma1[static_cast<size_t>(cyc[static_cast<size_t>(i)])] =
          cyc[static_cast<size_t>((i + 1) % ctx.l)];
      used |= 1u << cyc[static_cast<size_t>(i)];
    }
    enumerate_blue(ctx, sigma1, used, tallies[p]);
  }

  std::vector<long long> tally;
  for (const auto& t : tallies) {
    if (t.size() > tally.size()) tally.resize(t.size(), 0);
    for (size_t g = 0; g < t.size(); ++g) tally[g] += t[g];
  }
  return finish_tally(spec, tally);
}

Rational hurwitz_strict(int g, const std::vector<int>& mu, const std::vector<int>& nu,
                        const std::vector<std::vector<int>>& alpha_cycles) {
  long d = std::accumulate(mu.begin(), mu.end(), 0L);
  if (d != std::accumulate(nu.begin(), nu.end(), 0L))
    throw domain_error("hurwitz_strict: |mu| != |nu|");
  if (d > 8) throw domain_error("hurwitz_strict: degree too large for enumeration");
  const int r = static_cast<int>(mu.size() + nu.size()) + 2 * g - 2;
  if (r < 0) return Rational(0);

  const int dd = static_cast<int>(d);
  std::vector<std::vector<int>> mu_cycles = alpha_cycles;
  if (mu_cycles.empty()) {
    int off = 1;
    for (int len : mu) {
      std::vector<int> c;
      for (int i = 0; i < len; ++i) c.push_back(off + i);
      off += len;
      mu_cycles.push_back(c);
    }
  }
  Permutation alpha = Permutation::from_cycles(dd, mu_cycles);
  {
    std::vector<int> mu_sorted = mu;
    std::sort(mu_sorted.rbegin(), mu_sorted.rend());
    if (alpha.cycle_type() != mu_sorted)
      throw domain_error("hurwitz_strict: representative is not of class mu");
  }
  std::vector<int> nu_sorted = nu;
  std::sort(nu_sorted.rbegin(), nu_sorted.rend());

  long long count = 0;
  std::vector<int> pi = alpha.images();
  std::vector<std::pair<int, int>> taus;

  auto type_matches = [&]() {
    Permutation p{std::vector<int>(pi)};
    return p.cycle_type() == nu_sorted;
  };
  auto is_transitive = [&]() {
    std::vector<Permutation> gens = {alpha};
    for (auto [a, b] : taus) {
      std::vector<int> img(static_cast<size_t>(dd));
      for (int i = 0; i < dd; ++i) img[static_cast<size_t>(i)] = i;
      std::swap(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]);
      gens.emplace_back(std::move(img));
    }
    return transitive(gens, dd);
  };

  auto rec = [&](auto&& self, int depth, int last_b) -> void {
    if (depth == r) {
      if (type_matches() && is_transitive()) ++count;
      return;
    }
    for (int bb = last_b + 1; bb < dd; ++bb) {  // 0-based larger element
      for (int aa = 0; aa < bb; ++aa) {
        // right-multiplying by (aa bb) swaps the images at those points
        std::swap(pi[static_cast<size_t>(aa)], pi[static_cast<size_t>(bb)]);
        taus.emplace_back(aa, bb);
        self(self, depth + 1, bb);
        taus.pop_back();
        std::swap(pi[static_cast<size_t>(aa)], pi[static_cast<size_t>(bb)]);
      }
    }
  };
  rec(rec, 0, 0);

  // class size of mu: d! / (prod parts * prod multiplicities!)
  std::map<int, int> mult;
  Rational z(1);
  for (int part : mu) {
    z *= Rational(part);
    ++mult[part];
  }
  for (auto [part, m] : mult) z *= factorial(static_cast<unsigned long>(m));
  return Rational(count) * factorial(static_cast<unsigned long>(dd)) / z;
}

Report check_count_hurwitz(int l, const std::vector<int>& nu) {
  Report rep;
  long d = std::accumulate(nu.begin(), nu.end(), 0L);
  if (d % l != 0) throw domain_error("check_count_hurwitz: l must divide |nu|");
  std::vector<int> mu(static_cast<size_t>(d / l), l);
  HypermapSpec spec;
  spec.l = l;
  spec.b = nu;
  std::map<int, Rational> counts = brute_count(spec);

  std::map<int, int> mult;
  for (int part : nu) ++mult[part];
  Rational pref(1);
  for (auto [part, m] : mult) pref *= factorial(static_cast<unsigned long>(m));
  pref /= factorial(static_cast<unsigned long>(d));

  // r <= d-1 bounds the genus where factorizations can exist at all
  const long g_hi =
      (d - 1 - static_cast<long>(mu.size()) - static_cast<long>(nu.size()) + 2) / 2;
  bool ok = true;
  std::string detail;
  for (int g = 0; g <= g_hi && ok; ++g) {
    Rational lhs = counts.count(g) ? counts.at(g) : Rational(0);
    Rational rhs = pref * hurwitz_strict(g, mu, nu);
    if (lhs != rhs) {
      ok = false;
      detail = "mismatch at genus " + std::to_string(g);
    }
  }
  for (const auto& [g, v] : counts) {
    if (g > g_hi && !v.is_zero()) {
      ok = false;
      detail = "count beyond the factorization bound at genus " + std::to_string(g);
    }
  }
  std::ostringstream name;
  name << "count-vs-monotone-hurwitz(l=" << l << ",|nu|=" << d << ")";
  rep.add(name.str(), ok, detail);
  return rep;
}

Report check_duality(int l, int b, int k) {
  Report rep;
  if ((b * k) % l != 0) throw domain_error("check_duality: l must divide b*k");
  const int kp = b * k / l;
  CountResult lhs = count_hypermaps(l, std::vector<int>(static_cast<size_t>(k), b));
  CountResult rhs = count_hypermaps(b, std::vector<int>(static_cast<size_t>(kp), l));
  Rational lf = factorial(static_cast<unsigned long>(kp));
  Rational rf = factorial(static_cast<unsigned long>(k));
  bool ok = true;
  std::string detail;
  std::map<int, Rational> all;
  for (const auto& [g, v] : lhs.by_genus) all[g] = Rational(0);
  for (const auto& [g, v] : rhs.by_genus) all[g] = Rational(0);
  for (const auto& [g, unused] : all) {
    Rational a = lhs.by_genus.count(g) ? lhs.by_genus.at(g) : Rational(0);
    Rational c = rhs.by_genus.count(g) ? rhs.by_genus.at(g) : Rational(0);
    if (lf * a != rf * c) {
      ok = false;
      detail = "mismatch at genus " + std::to_string(g);
    }
  }
  std::ostringstream name;
  name << "duality(l=" << l << ",b=" << b << ",k=" << k << ")";
  rep.add(name.str(), ok, detail);
  return rep;
}

}  // namespace hypermaps
