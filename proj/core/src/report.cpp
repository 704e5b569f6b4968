#include "monolift/report.hpp"

#include <json.hpp>

namespace monolift {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::probabilistic_pass: return "pass (probabilistic)";
    case CheckStatus::resource_limit: return "resource limit";
    case CheckStatus::info: return "info";
  }
  return "?";
}

}  // namespace

void RunReport::add(std::string name, CheckStatus status, std::string detail, double millis) {
  checks.push_back({std::move(name), status, std::move(detail), millis});
}

bool RunReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

bool RunReport::hit_resource_limit() const {
  for (const CheckResult& c : checks)
    if (c.status == CheckStatus::resource_limit) return true;
  return false;
}

int RunReport::exit_code() const {
  if (!all_passed()) return 1;
  if (hit_resource_limit()) return 2;
  return 0;
}

std::string RunReport::to_json_string() const {
  nlohmann::json out;
  out["command"] = command;
  out["seed"] = seed;
  out["field"] = field_mode_name(field);
  nlohmann::json list = nlohmann::json::array();
  for (const CheckResult& c : checks)
    list.push_back({{"name", c.name},
                    {"status", status_name(c.status)},
                    {"detail", c.detail},
                    {"ms", c.millis}});
  out["checks"] = list;
  out["exit_code"] = exit_code();
  return out.dump(2);
}

void RunReport::print(std::ostream& os) const {
  os << "# " << command << "  (seed " << seed << ", field " << field_mode_name(field) << ")\n";
  for (const CheckResult& c : checks) {
    os << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    if (c.millis > 0) os << "  (" << c.millis << " ms)";
    os << "\n";
  }
}

}  // namespace monolift
