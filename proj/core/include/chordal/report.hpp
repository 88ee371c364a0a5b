#pragma once

#include <string>
#include <vector>

#include "chordal/serialize.hpp"

namespace chordal {

/// One verified statement, usually an inequality lhs <= rhs.
struct Check {
  std::string name;
  long lhs = 0;
  long rhs = 0;
  bool pass = true;
  /// Set when the check was not run (caps exceeded under --force).
  bool skipped = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const;
  const Check* first_failure() const;
  Check& add_le(std::string name, long lhs, long rhs);
  Check& add_eq(std::string name, long lhs, long rhs);
  Check& add_true(std::string name, bool pass, std::string detail = {});
  Check& add_skipped(std::string name, std::string detail);
};

/// {"name", "lhs", "rhs", "pass"} plus "skipped"/"detail" when relevant.
Json to_json(const Check& c);
Json to_json(const Report& r);

}  // namespace chordal
