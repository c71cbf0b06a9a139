#pragma once

#include <string>
#include <vector>

namespace hypermaps {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Outcome of a verification suite; failure is data, not an error.
struct Report {
  bool pass = true;
  std::vector<Check> checks;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({name, ok, detail});
    pass = pass && ok;
  }
  void merge(const Report& o) {
    for (const auto& c : o.checks) checks.push_back(c);
    pass = pass && o.pass;
  }
};

}  // namespace hypermaps
