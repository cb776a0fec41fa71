#pragma once

#include <functional>
#include <string>
#include <vector>

#include "canonlab/groebner/ideal_io.hpp"

namespace canonlab {

struct Check {
  std::string name;
  bool pass = false;
  Json expected;
  Json computed;
};

/// Named pass/fail checks of one experiment with expected and computed values.
/// Schema: {"experiment":..., "checks":[{"name","pass","expected","computed"}], "timing_ms":...}.
struct Report {
  std::string experiment;
  std::vector<Check> checks;
  double timing_ms = 0;

  void add(std::string name, bool pass, Json expected, Json computed);
  /// Passes iff expected == computed.
  void expect_equal(std::string name, Json expected, Json computed);
  /// Runs body, which returns the computed value; an exception fails the check
  /// and records {"error": message} as the computed value.
  void expect(std::string name, Json expected, const std::function<Json()>& body);

  bool all_pass() const;
  const Check* find(const std::string& name) const;
  Json to_json() const;
};

}  // namespace canonlab
