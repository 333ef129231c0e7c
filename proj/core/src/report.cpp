#include "kcl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace kcl::report {

Check make_check(const std::string& id, const std::string& description, double value,
                 double expected, double tolerance) {
  Check c;
  c.id = id;
  c.description = description;
  c.value = value;
  c.expected = expected;
  c.tolerance = tolerance;
  c.pass = std::isfinite(value) && std::abs(value - expected) <= tolerance;
  return c;
}

bool Suite::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool all_passed(const std::vector<Suite>& suites) {
  return std::all_of(suites.begin(), suites.end(), [](const Suite& s) { return s.passed(); });
}

std::string json_number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

void write_json(std::ostream& out, const std::vector<Suite>& suites, double tolerance_scale) {
  out << "{\n";
  out << "  \"schema_version\": " << kSchemaVersion << ",\n";
  out << "  \"tolerance_scale\": " << json_number(tolerance_scale) << ",\n";
  out << "  \"pass\": " << (all_passed(suites) ? "true" : "false") << ",\n";
  out << "  \"suites\": [\n";
  for (std::size_t s = 0; s < suites.size(); ++s) {
    const Suite& suite = suites[s];
    out << "    {\n";
    out << "      \"name\": \"" << json_escape(suite.name) << "\",\n";
    out << "      \"pass\": " << (suite.passed() ? "true" : "false") << ",\n";
    out << "      \"runtime_seconds\": " << json_number(suite.runtime_seconds) << ",\n";
    out << "      \"checks\": [\n";
    for (std::size_t i = 0; i < suite.checks.size(); ++i) {
      const Check& c = suite.checks[i];
      out << "        {\"id\": \"" << json_escape(c.id) << "\", "
          << "\"description\": \"" << json_escape(c.description) << "\", "
          << "\"value\": " << json_number(c.value) << ", "
          << "\"expected\": " << json_number(c.expected) << ", "
          << "\"tolerance\": " << json_number(c.tolerance) << ", "
          << "\"pass\": " << (c.pass ? "true" : "false") << "}";
      out << (i + 1 < suite.checks.size() ? ",\n" : "\n");
    }
    out << "      ]\n";
    out << "    }" << (s + 1 < suites.size() ? ",\n" : "\n");
  }
  out << "  ]\n";
  out << "}\n";
}

void write_text(std::ostream& out, const std::vector<Suite>& suites) {
  for (const Suite& suite : suites) {
    out << "suite " << suite.name << (suite.passed() ? " [pass]" : " [FAIL]") << "\n";
    for (const Check& c : suite.checks) {
      out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id << ": " << c.description
          << "  value=" << json_number(c.value) << " expected=" << json_number(c.expected)
          << " tol=" << json_number(c.tolerance) << "\n";
    }
  }
  out << (all_passed(suites) ? "ALL PASS" : "FAILURES PRESENT") << "\n";
}

}  // namespace kcl::report
