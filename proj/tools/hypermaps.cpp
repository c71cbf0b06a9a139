#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypermaps/combinatorics.hpp"
#include "hypermaps/engine.hpp"
#include "hypermaps/io.hpp"
#include "hypermaps/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace hypermaps;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;   // a real mathematical discrepancy
constexpr int kExitUsage = 2;      // bad flags or resource guard

std::vector<int> parse_b(const std::string& csv) {
  std::vector<int> b;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    b.push_back(std::stoi(item));
  }
  if (b.empty()) throw domain_error("--b expects a comma-separated list of positive integers");
  return b;
}

void print_report(const Report& rep, bool verbose) {
  for (const auto& c : rep.checks) {
    if (!verbose && c.pass) {
      std::cout << "PASS " << c.name << "\n";
      continue;
    }
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
  }
}

int cmd_count(int l, const std::string& bcsv, int genus, bool oracle, int oracle_cap,
              const std::string& format) {
  std::vector<int> b = parse_b(bcsv);
  CountResult res = count_hypermaps(l, b);
  if (genus >= 0) {
    for (auto it = res.by_genus.begin(); it != res.by_genus.end();)
      it = it->first == genus ? ++it : res.by_genus.erase(it);
  }
  bool match = true;
  if (oracle) {
    HypermapSpec spec;
    spec.l = l;
    spec.b = b;
    spec.cap = oracle_cap;
    spec.genus_filter = genus;
    std::map<int, Rational> counted = brute_count(spec);
    std::map<int, Rational> expected = res.by_genus;
    match = counted == expected;
  }
  if (format == "json") {
    nlohmann::json j = count_to_json(res);
    if (oracle) j["oracle"] = match ? "MATCH" : "MISMATCH";
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << count_to_csv(res);
    if (oracle) std::cout << "oracle," << (match ? "MATCH" : "MISMATCH") << "\n";
  } else {
    std::cout << count_to_plain(res);
    if (oracle) std::cout << "oracle: " << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? kExitOk : kExitMismatch;
}

int cmd_table(int l, int b, int kmax, int gmax, const std::string& format) {
  if (static_cast<long>(b) * kmax > 36)
    throw domain_error("table: |b|*k exceeds the resource guard of 36");
  std::vector<std::pair<int, std::map<int, Rational>>> rows;
  for (int k = 1; k <= kmax; ++k) {
    CountResult c = count_hypermaps(l, std::vector<int>(static_cast<size_t>(k), b));
    rows.emplace_back(k, c.by_genus);
  }
  if (format == "json")
    std::cout << table_to_json(l, b, rows, gmax).dump(2) << "\n";
  else
    std::cout << table_to_csv(rows, gmax);
  return kExitOk;
}

int cmd_series(int l, int k, int order, const std::string& format) {
  if (k < 1) throw domain_error("series: k must be >= 1");
  if (k > 3) throw domain_error("series: the dense dump is limited to k <= 3");
  nlohmann::json j;
  if (k == 1) {
    if (order < l + 1) throw domain_error("series: order must be >= l+1");
    j = series_to_json(l, one_point(l, order));
  } else {
    if (order < 2) throw domain_error("series: order must be >= 2 for k >= 2");
    j = multiseries_to_json(l, k_point(l, k, order));
  }
  if (format == "csv") {
    // exponent(s);coefficient polynomial
    for (const auto& t : j["terms"])
      std::cout << t["exp"].dump() << ";" << t["poly"].dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

struct VerifyOpts {
  int l = 0;
  int b = 0;
  int k = 0;
  int lmax = 5;
  int smax = 6;
  int mmax = 6;
  int tmax = 6;
  int bmax = 8;
  int dmax = 0;
  int order = 0;
  int blocks = 3;
  int cap = 12;
  unsigned long seed = 1;
  bool verbose = false;
};

Report run_suite(const std::string& suite, const VerifyOpts& o);

Report suite_oracle(int lmax, int dmax, int cap) {
  Report rep;
  for (int l = 2; l <= lmax; ++l) {
    for (int d = l; d <= dmax; d += l) {
      bool ok = true;
      std::string detail;
      for (const auto& b : partitions_of(d)) {
        HypermapSpec spec;
        spec.l = l;
        spec.b = b;
        spec.cap = cap;
        std::map<int, Rational> counted = brute_count(spec);
        CountResult engine = count_hypermaps(l, b);
        if (counted != engine.by_genus) {
          ok = false;
          std::ostringstream os;
          os << "mismatch at b = (";
          for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
          os << ")";
          detail = os.str();
          break;
        }
      }
      std::ostringstream name;
      name << "oracle-vs-series(l=" << l << ",d=" << d << ")";
      rep.add(name.str(), ok, detail);
    }
  }
  return rep;
}

Report suite_hurwitz(int dmax) {
  Report rep;
  for (int l = 2; l <= 6; ++l)
    for (int d = l; d <= dmax; d += l)
      for (const auto& nu : partitions_of(d)) rep.merge(check_count_hurwitz(l, nu));
  return rep;
}

Report run_suite(const std::string& suite, const VerifyOpts& o) {
  Report rep;
  if (suite == "tcfin") {
    std::vector<long> ls;
    for (long l = 2; l <= o.lmax; ++l) ls.push_back(l);
    rep = verify_ctilde_binomial(ls, o.smax, o.mmax, -3, 6);
  } else if (suite == "fidentities") {
    for (long r = 1; r <= 3; ++r)
      for (long j : {0L, 1L, 2L, 3L}) rep.merge(verify_f_identities(Rational(r), Rational(j), o.tmax));
  } else if (suite == "fftmt") {
    rep.merge(verify_ff_product(2, 1, 0, o.smax));
    rep.merge(verify_ff_product(3, 2, 2, o.smax));
    for (long r = 1; r <= 3; ++r)
      for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 2; ++j) rep.merge(verify_ff_product(r, i, j, o.smax));
  } else if (suite == "ctshifts") {
    rep = verify_ctilde_shifts({1, 2, 3, 4}, -4, 4, o.smax);
  } else if (suite == "dualpath") {
    const int l = o.l > 0 ? o.l : 3;
    rep.merge(verify_y_dual(l, o.blocks));
    rep.merge(verify_one_point_dual(l, 5));
    rep.merge(verify_two_point_dual(l, std::min(o.bmax, 10)));
    rep.merge(verify_one_vertex_dual(l, 3, 20));
    rep.merge(verify_top_genus_dual(l, 20 / l));
  } else if (suite == "onevertex") {
    const int l = o.l > 0 ? o.l : 3;
    rep.merge(verify_one_vertex_dual(l, 3, 20));
    rep.merge(verify_top_genus_dual(l, 20 / l));
    for (int m = 1; m <= 3; ++m) rep.merge(check_one_vertex_series(l, m, 6));
  } else if (suite == "special2pt") {
    const int l = o.l > 0 ? o.l : 3;
    rep = special_two_point_series(l, o.order > 0 ? o.order : o.bmax + 3);
  } else if (suite == "psib") {
    const int l = o.l > 0 ? o.l : 2;
    rep = verify_wave_recursion(l, o.blocks);
  } else if (suite == "hurwitz") {
    rep = suite_hurwitz(o.dmax > 0 ? o.dmax : 6);
  } else if (suite == "duality") {
    rep = check_duality(o.l > 0 ? o.l : 3, o.b > 0 ? o.b : 2, o.k > 0 ? o.k : 3);
  } else if (suite == "structural") {
    rep = verify_structural(o.seed);
  } else if (suite == "oracle") {
    rep = suite_oracle(o.lmax > 0 ? std::min(o.lmax, 6) : 6, o.dmax > 0 ? o.dmax : o.cap,
                       o.cap);
  } else if (suite == "all") {
    for (const char* s : {"tcfin", "fidentities", "fftmt", "ctshifts", "psib", "structural",
                          "duality", "hurwitz"})
      rep.merge(run_suite(s, o));
    for (int l = 2; l <= 4; ++l) {
      VerifyOpts ol = o;
      ol.l = l;
      rep.merge(run_suite("dualpath", ol));
      rep.merge(run_suite("special2pt", ol));
    }
  } else {
    throw domain_error("unknown verify suite: " + suite);
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of hypermaps with matrix-series and brute-force cross-checks"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for parallel kernels (0 = library default)");

  auto* count = app.add_subcommand("count", "weighted counts for one face-degree vector");
  int c_l = 2;
  std::string c_b;
  int c_genus = -1;
  bool c_oracle = false;
  int c_cap = 12;
  std::string c_format = "plain";
  count->add_option("--l", c_l, "hyperedge size l >= 2")->required();
  count->add_option("--b", c_b, "comma-separated face degrees")->required();
  count->add_option("--genus", c_genus, "restrict to one genus");
  count->add_flag("--oracle", c_oracle, "cross-check against brute-force enumeration");
  count->add_option("--oracle-cap", c_cap, "largest |b| the oracle accepts");
  count->add_option("--format", c_format, "json | csv | plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  auto* table = app.add_subcommand("table", "grid of counts for equal face degrees");
  int t_l = 3, t_b = 3, t_kmax = 3, t_gmax = 3;
  std::string t_format = "csv";
  table->add_option("--l", t_l)->required();
  table->add_option("--b", t_b, "face degree used for every face")->required();
  table->add_option("--kmax", t_kmax);
  table->add_option("--gmax", t_gmax);
  table->add_option("--format", t_format)->check(CLI::IsMember({"json", "csv"}));

  auto* series = app.add_subcommand("series", "raw generating series dump");
  int s_l = 3, s_k = 1, s_order = 7;
  std::string s_format = "json";
  series->add_option("--l", s_l)->required();
  series->add_option("--k", s_k);
  series->add_option("--order", s_order);
  series->add_option("--format", s_format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "identity and cross-check suites");
  std::string v_suite;
  VerifyOpts vo;
  verify->add_option("suite", v_suite, "tcfin | fidentities | fftmt | ctshifts | dualpath | "
                                       "onevertex | special2pt | psib | hurwitz | duality | "
                                       "structural | oracle | all")
      ->required();
  verify->add_option("--l", vo.l);
  verify->add_option("--b", vo.b);
  verify->add_option("--k", vo.k);
  verify->add_option("--lmax", vo.lmax);
  verify->add_option("--smax", vo.smax);
  verify->add_option("--mmax", vo.mmax);
  verify->add_option("--tmax", vo.tmax);
  verify->add_option("--bmax", vo.bmax);
  verify->add_option("--dmax", vo.dmax);
  verify->add_option("--order", vo.order);
  verify->add_option("--blocks", vo.blocks);
  verify->add_option("--oracle-cap", vo.cap);
  verify->add_option("--seed", vo.seed, "seed for sampled property checks");
  verify->add_flag("--verbose", vo.verbose);

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (*count) return cmd_count(c_l, c_b, c_genus, c_oracle, c_cap, c_format);
    if (*table) return cmd_table(t_l, t_b, t_kmax, t_gmax, t_format);
    if (*series) return cmd_series(s_l, s_k, s_order, s_format);
    if (*verify) {
      Report rep = run_suite(v_suite, vo);
      print_report(rep, vo.verbose);
      return rep.pass ? kExitOk : kExitMismatch;
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const truncation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
