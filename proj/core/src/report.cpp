#include "spectra/report.hpp"

#include <limits>

namespace spectra {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::ViolationExpected:
      return "VIOLATION_EXPECTED";
  }
  return "?";
}

double IneqReport::extra(std::string_view key, double fallback) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  return fallback;
}

double safe_ratio(double lhs, double rhs) {
  if (rhs > 0.0) return lhs / rhs;
  if (lhs <= 0.0) return 0.0;
  return std::numeric_limits<double>::max();
}

IneqReport make_report(std::string name, double lhs, double rhs, double p, const SlackPolicy& slack,
                       bool violation_expected) {
  IneqReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = safe_ratio(lhs, rhs);
  r.p = p;
  r.slack = slack;
  if (slack.holds(lhs, rhs)) {
    r.verdict = Verdict::Pass;
  } else {
    r.verdict = violation_expected ? Verdict::ViolationExpected : Verdict::Fail;
  }
  return r;
}

}  // namespace spectra
