#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcl::report {

inline constexpr int kSchemaVersion = 1;

struct Check {
  std::string id;
  std::string description;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// |value - expected| <= tolerance.
Check make_check(const std::string& id, const std::string& description, double value,
                 double expected, double tolerance);

struct Suite {
  std::string name;
  std::vector<Check> checks;
  double runtime_seconds = 0.0;

  bool passed() const;
};

bool all_passed(const std::vector<Suite>& suites);

/// 17 significant digits, locale-independent; nan/inf become strings.
std::string json_number(double v);
std::string json_escape(const std::string& s);

/// Deterministic JSON: fixed key order, stable formatting.
void write_json(std::ostream& out, const std::vector<Suite>& suites, double tolerance_scale);

/// Human-readable per-check lines with a final verdict.
void write_text(std::ostream& out, const std::vector<Suite>& suites);

}  // namespace kcl::report
