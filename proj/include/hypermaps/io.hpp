#pragma once

#include <string>

#include "json.hpp"

#include "hypermaps/engine.hpp"
#include "hypermaps/laurent.hpp"
#include "hypermaps/multiseries.hpp"

namespace hypermaps {

// Rationals serialize as strings, never floats; polynomials as coefficient
// arrays lowest degree first.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json count_to_json(const CountResult& c);
CountResult count_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(int l, const LaurentSeries& s);
nlohmann::json multiseries_to_json(int l, const MultiSeries& s);

std::string count_to_plain(const CountResult& c);
std::string count_to_csv(const CountResult& c);

// Grid of counts at fixed face size: header k,g0,g1,...; cells "p/q".
std::string table_to_csv(const std::vector<std::pair<int, std::map<int, Rational>>>& rows,
                         int g_max);
nlohmann::json table_to_json(int l, int b,
                             const std::vector<std::pair<int, std::map<int, Rational>>>& rows,
                             int g_max);

}  // namespace hypermaps
