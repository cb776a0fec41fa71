#include "canonlab/lab/report.hpp"

#include <algorithm>

namespace canonlab {

void Report::add(std::string name, bool pass, Json expected, Json computed) {
  checks.push_back({std::move(name), pass, std::move(expected), std::move(computed)});
}

void Report::expect_equal(std::string name, Json expected, Json computed) {
  const bool pass = expected == computed;
  add(std::move(name), pass, std::move(expected), std::move(computed));
}

void Report::expect(std::string name, Json expected, const std::function<Json()>& body) {
  try {
    expect_equal(std::move(name), std::move(expected), body());
  } catch (const std::exception& e) {
    add(std::move(name), false, std::move(expected), Json{{"error", e.what()}});
  }
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

Json Report::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"computed", c.computed}});
  }
  return Json{{"experiment", experiment}, {"checks", list}, {"timing_ms", timing_ms}};
}

}  // namespace canonlab
