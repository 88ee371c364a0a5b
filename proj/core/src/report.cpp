#include "chordal/report.hpp"

namespace chordal {

bool Report::ok() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const {
  for (const Check& c : checks) {
    if (!c.pass && !c.skipped) return &c;
  }
  return nullptr;
}

Check& Report::add_le(std::string name, long lhs, long rhs) {
  checks.push_back(Check{std::move(name), lhs, rhs, lhs <= rhs, false, {}});
  return checks.back();
}

Check& Report::add_eq(std::string name, long lhs, long rhs) {
  checks.push_back(Check{std::move(name), lhs, rhs, lhs == rhs, false, {}});
  return checks.back();
}

Check& Report::add_true(std::string name, bool pass, std::string detail) {
  checks.push_back(Check{std::move(name), pass ? 1 : 0, 1, pass, false, std::move(detail)});
  return checks.back();
}

Check& Report::add_skipped(std::string name, std::string detail) {
  checks.push_back(Check{std::move(name), 0, 0, true, true, std::move(detail)});
  return checks.back();
}

Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
  if (c.skipped) j["skipped"] = true;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  return checks;
}

}  // namespace chordal
