// Run reports: per-check results with pass/fail/probabilistic status, the
// seed, and timings.  Reproducible given the seed.
#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "monolift/field.hpp"

namespace monolift {

enum class CheckStatus { pass, fail, probabilistic_pass, resource_limit, info };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::info;
  std::string detail;
  double millis = 0.0;
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  FieldMode field = FieldMode::rationals;
  std::vector<CheckResult> checks;

  void add(std::string name, CheckStatus status, std::string detail = {}, double millis = 0.0);
  bool all_passed() const;
  bool hit_resource_limit() const;
  // 0 pass, 1 mathematical failure, 2 resource limit, 3 input error (callers
  // map parse errors to 3 themselves).
  int exit_code() const;
  std::string to_json_string() const;
  void print(std::ostream& os) const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace monolift
