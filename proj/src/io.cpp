#include "hypermaps/io.hpp"

#include <sstream>

namespace hypermaps {

using nlohmann::json;

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).to_string());
  return arr;
}

Poly poly_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
  return Poly(std::move(coeffs));
}

json count_to_json(const CountResult& c) {
  json j;
  j["l"] = c.l;
  j["b"] = c.b;
  json poly = json::array();
  for (int i = 0; i <= c.poly_n.degree(); ++i) {
    Rational v = c.poly_n.coeff(i);
    if (v.is_zero()) continue;
    poly.push_back(json::array({v.to_string(), i}));
  }
  j["poly_n"] = poly;
  json bg = json::object();
  for (const auto& [g, v] : c.by_genus) bg[std::to_string(g)] = v.to_string();
  j["by_genus"] = bg;
  return j;
}

CountResult count_from_json(const json& j) {
  CountResult c;
  c.l = j.at("l").get<int>();
  c.b = j.at("b").get<std::vector<int>>();
  std::vector<Rational> coeffs;
  for (const auto& term : j.at("poly_n")) {
    int e = term.at(1).get<int>();
    if (e >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(e) + 1);
    coeffs[static_cast<size_t>(e)] = Rational(term.at(0).get<std::string>());
  }
  c.poly_n = Poly(std::move(coeffs));
  for (const auto& [key, val] : j.at("by_genus").items())
    c.by_genus[std::stoi(key)] = Rational(val.get<std::string>());
  return c;
}

json series_to_json(int l, const LaurentSeries& s) {
  json j;
  j["l"] = l;
  j["k"] = 1;
  j["floor"] = s.floor();
  json terms = json::array();
  for (const auto& [e, p] : s.terms()) {
    json t;
    t["exp"] = e;
    t["poly"] = poly_to_json(p);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

json multiseries_to_json(int l, const MultiSeries& s) {
  json j;
  j["l"] = l;
  j["k"] = s.nvars();
  std::vector<int> floors;
  for (int v = 0; v < s.nvars(); ++v) floors.push_back(s.floor_var(v));
  j["floor"] = floors;
  j["total_floor"] = s.total_floor();
  json terms = json::array();
  for (const auto& [e, p] : s.terms()) {
    if (!s.exact_at(e)) continue;
    json t;
    t["exp"] = e;
    t["poly"] = poly_to_json(p);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

std::string count_to_plain(const CountResult& c) {
  std::ostringstream os;
  os << "l = " << c.l << ", b = (";
  for (size_t i = 0; i < c.b.size(); ++i) {
    if (i) os << ",";
    os << c.b[i];
  }
  os << ")\n";
  os << "count polynomial: " << c.poly_n.to_string() << "\n";
  if (c.by_genus.empty()) {
    os << "count is zero\n";
  } else {
    for (const auto& [g, v] : c.by_genus)
      os << "genus " << g << ": " << v.to_string() << "\n";
  }
  return os.str();
}

std::string count_to_csv(const CountResult& c) {
  std::ostringstream os;
  os << "genus,count\n";
  for (const auto& [g, v] : c.by_genus) os << g << "," << v.to_string() << "\n";
  return os.str();
}

std::string table_to_csv(const std::vector<std::pair<int, std::map<int, Rational>>>& rows,
                         int g_max) {
  std::ostringstream os;
  os << "k";
  for (int g = 0; g <= g_max; ++g) os << ",g" << g;
  os << "\n";
  for (const auto& [k, by_genus] : rows) {
    os << k;
    for (int g = 0; g <= g_max; ++g) {
      Rational v = by_genus.count(g) ? by_genus.at(g) : Rational(0);
      os << "," << v.to_string();
    }
    os << "\n";
  }
  return os.str();
}

json table_to_json(int l, int b,
                   const std::vector<std::pair<int, std::map<int, Rational>>>& rows, int g_max) {
  json j;
  j["l"] = l;
  j["b"] = b;
  json jrows = json::array();
  for (const auto& [k, by_genus] : rows) {
    json row;
    row["k"] = k;
    json cells = json::array();
    for (int g = 0; g <= g_max; ++g) {
      Rational v = by_genus.count(g) ? by_genus.at(g) : Rational(0);
      cells.push_back(v.to_string());
    }
    row["counts"] = cells;
    jrows.push_back(row);
  }
  j["rows"] = jrows;
  return j;
}

}  // namespace hypermaps
