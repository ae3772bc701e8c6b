#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "frkt/asymptotics.hpp"

namespace frkt::report {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<std::pair<std::string, double>> values;
  std::string detail;
};

// Reference values the checks compare against. Defaults are frozen numbers or
// a second in-library route; the test suite supplies independent oracles.
struct References {
  double rho3 = 0.04860839;
  // (rho * rho)(v) on [0, 4]
  std::function<double(double)> rho_conv;
};

inline constexpr int kCheckCount = 11;

const char* check_name(int id);
CheckResult run_check(int id, const asym::Settings& s, const References& refs = {});
std::vector<CheckResult> run_checks(const std::vector<int>& ids, const asym::Settings& s, const References& refs = {});

// Library route for rho * rho: adaptive quadrature of the solved Dickman table.
std::function<double(double)> library_rho_conv();

}  // namespace frkt::report
