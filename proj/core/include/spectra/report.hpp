#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectra {

enum class Verdict { Pass, Fail, ViolationExpected };

std::string_view to_string(Verdict v);

struct SlackPolicy {
  double rel = 1e-9;
  double abs = 1e-12;

  bool holds(double lhs, double rhs) const { return lhs <= rhs * (1.0 + rel) + abs; }
};

/// One evaluated inequality instance lhs ≤ rhs.
struct IneqReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double p = 0.0;
  SlackPolicy slack;
  Verdict verdict = Verdict::Pass;
  /// Named diagnostics (tightness, filter thresholds, cross-checks), in insertion order.
  std::vector<std::pair<std::string, double>> extras;

  bool ok() const { return verdict != Verdict::Fail; }
  double extra(std::string_view key, double fallback = 0.0) const;
};

/// lhs/rhs with 0/0 ↦ 0 and x/0 ↦ DBL_MAX so that the ratio stays finite.
double safe_ratio(double lhs, double rhs);

/// Builds a report and assigns the verdict: PASS when the slack policy holds;
/// otherwise VIOLATION_EXPECTED if `violation_expected`, else FAIL.
IneqReport make_report(std::string name, double lhs, double rhs, double p, const SlackPolicy& slack,
                       bool violation_expected = false);

}  // namespace spectra
