#pragma once

#include <string>
#include <vector>

#include "kcl/report.hpp"

namespace kcl::verify {

/// Each suite cross-checks one module against closed forms or an independent
/// numerical route. tolerance_scale multiplies every pinned tolerance.
report::Suite maxwellian_suite(double tolerance_scale = 1.0);
report::Suite thermo_suite(double tolerance_scale = 1.0);
report::Suite chapman_enskog_suite(double tolerance_scale = 1.0);
report::Suite closure_suite(double tolerance_scale = 1.0);
report::Suite scaling_suite(double tolerance_scale = 1.0);
report::Suite curtiss_suite(double tolerance_scale = 1.0);

std::vector<std::string> suite_names();

/// name = "all" runs every suite; unknown names throw std::invalid_argument.
std::vector<report::Suite> run_suites(const std::string& name, double tolerance_scale = 1.0);

}  // namespace kcl::verify
