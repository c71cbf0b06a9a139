#include <numeric>
#include <random>
#include <sstream>

#include "hypermaps/combinatorics.hpp"
#include "hypermaps/engine.hpp"

namespace hypermaps {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

Report verify_structural(unsigned long seed) {
  Report rep;
  std::mt19937_64 rng(seed);

  // Pole cancellation: inside the exact window of the dense series, every
  // monomial with some exponent above -2 must have cancelled away.
  {
    bool ok = true;
    std::string detail;
    for (auto [l, k, bsum] : {std::tuple<int, int, int>{2, 2, 6}, {3, 2, 6}, {3, 3, 6}}) {
      MultiSeries ms = k_point(l, k, bsum);
      for (const auto& [e, p] : ms.terms()) {
        if (!ms.exact_at(e)) continue;
        bool shallow = false;
        for (int c : e) shallow = shallow || c >= -1;
        if (shallow && !p.is_zero()) {
          ok = false;
          detail = "uncancelled monomial at " + vec_str(e);
        }
      }
    }
    rep.add("pole-cancellation", ok, detail);
  }

  // Permutation symmetry of the extraction under reordering of b.
  {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<int, std::vector<int>>> cases = {
        {3, {1, 2, 3}}, {2, {1, 2, 3}}, {4, {1, 2, 2, 3}}};
    for (int extra = 0; extra < 2; ++extra) {
      int l = 2 + static_cast<int>(rng() % 2);
      std::vector<int> b;
      int parts = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < parts; ++i) b.push_back(1 + static_cast<int>(rng() % 4));
      cases.emplace_back(l, b);
    }
    for (auto& [l, b] : cases) {
      std::sort(b.begin(), b.end());
      Poly ref = k_point_extract(l, b);
      do {
        if (k_point_extract(l, b) != ref) {
          ok = false;
          detail = "asymmetric at l=" + std::to_string(l) + " b=" + vec_str(b);
        }
      } while (std::next_permutation(b.begin(), b.end()) && ok);
    }
    rep.add("b-permutation-symmetry", ok, detail);
  }

  // Vanishing whenever l does not divide |b|, verified by evaluation.
  {
    bool ok = true;
    std::string detail;
    for (auto& [l, b] : std::vector<std::pair<int, std::vector<int>>>{
             {3, {2, 2}}, {4, {2, 3}}, {5, {2, 2, 2}}, {3, {1, 3, 3, 3}}}) {
      if (!k_point_extract(l, b).is_zero()) {
        ok = false;
        detail = "nonzero at l=" + std::to_string(l) + " b=" + vec_str(b);
      }
    }
    rep.add("divisibility-vanishing", ok, detail);
  }

  // Genus support, parity and nonnegativity of counts.  Parity and the
  // admissible-exponent grid are enforced inside count assembly, which
  // turns a violation into an internal error.
  {
    bool ok = true;
    std::string detail;
    for (int l = 2; l <= 4 && ok; ++l) {
      for (int d = l; d <= 8 && ok; d += l) {
        for (const auto& b : partitions_of(d)) {
          if (b.size() > 4) continue;
          CountResult c = count_hypermaps(l, b);
          // floor of (l-1)|b|/(2l) - k/2 + 1/2
          long two_bound = (static_cast<long>(l) - 1) * d / l - static_cast<long>(b.size()) + 1;
          long bound = two_bound >= 0 ? two_bound / 2 : -1;
          for (const auto& [g, v] : c.by_genus) {
            if (g < 0 || g > bound) {
              ok = false;
              detail = "genus outside bound at l=" + std::to_string(l) + " b=" + vec_str(b);
            }
            if (v < Rational(0)) {
              ok = false;
              detail = "negative count at l=" + std::to_string(l) + " b=" + vec_str(b);
            }
          }
        }
      }
    }
    rep.add("genus-support-and-nonnegativity", ok, detail);
  }

  // Region independence: the opposite modulus ordering must extract the
  // same coefficients, both through the dense series and the direct path.
  {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<int, std::vector<int>>> cases = {
        {2, {1, 3}}, {3, {1, 2, 3}}, {2, {2, 3, 3}}, {3, {3, 3, 3}}};
    for (const auto& [l, b] : cases) {
      const int k = static_cast<int>(b.size());
      std::vector<int> rev(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) rev[static_cast<size_t>(i)] = k - 1 - i;
      if (k_point_extract(l, b) != k_point_extract(l, b, rev)) {
        ok = false;
        detail = "direct path differs at l=" + std::to_string(l) + " b=" + vec_str(b);
      }
      const long B = std::accumulate(b.begin(), b.end(), 0L);
      MultiSeries fwd = k_point(l, k, static_cast<int>(B));
      MultiSeries bwd = k_point(l, k, static_cast<int>(B), rev);
      std::vector<int> target(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) target[static_cast<size_t>(i)] = -(b[static_cast<size_t>(i)] + 1);
      if (fwd.coeff(target) != bwd.coeff(target)) {
        ok = false;
        detail = "dense path differs at l=" + std::to_string(l) + " b=" + vec_str(b);
      }
    }
    rep.add("region-independence", ok, detail);
  }

  return rep;
}

}  // namespace hypermaps
