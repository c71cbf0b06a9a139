#pragma once

#include <stdexcept>
#include <string>

namespace hypermaps {

// A request violated a documented precondition.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A coefficient below a truncation floor was requested.
struct truncation_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hypermaps
