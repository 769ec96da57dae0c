#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/ineq.hpp"

namespace spectra {

enum class EnsembleKind { Ginibre, Gue, HermitianPair, NormalPair, LowRankPerturbation };
/// Random: draws from `kind`. Prop2: the sharpness family diag(α), diag(α) + x·W*DW
/// with α_k = k − 1 and x = 10^{−U(3,6)}; it counts as a Hermitian pair.
enum class Family { Random, Prop2 };
enum class Checker { Thm2, Cor1, Thm3, Lemma45, Kato, Bouldin, SpVariational, Thm4, Heat };

std::string_view to_string(EnsembleKind k);
std::string_view to_string(Family f);
std::string_view to_string(Checker c);
/// Throw ConfigError on unknown names.
EnsembleKind parse_kind(std::string_view s);
Family parse_family(std::string_view s);
Checker parse_checker(std::string_view s);

/// Default ensemble kind for a checker (the one its inequality is stated for).
EnsembleKind default_kind(Checker c);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Ginibre;
  int dim = 8;
  double p = 2.0;
  int trials = 100;
  std::uint64_t seed = 0;
  Family family = Family::Random;
  CheckOptions options;
};

/// Throws ConfigError unless trials ≥ 1, dim ≥ 2 and the checker accepts the kind.
void validate(const EnsembleSpec& spec, Checker checker);

/// One generated trial. `param` is the resolvent shift a (thm4), the time t
/// (heat), the perturbation size x (prop2 family) and 0 otherwise.
struct EnsembleInstance {
  CMatrix a;
  CMatrix b;
  double param = 0.0;
};

/// Deterministic in (spec.seed, trial); independent of other trials.
EnsembleInstance make_instance(const EnsembleSpec& spec, Checker checker, std::uint64_t trial);

/// Runs the checker on one instance. Multi-report checkers return every report.
std::vector<IneqReport> evaluate(const EnsembleSpec& spec, Checker checker, const EnsembleInstance& inst,
                                 std::uint64_t trial);

struct FailInstance {
  std::string checker;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  int dim = 0;
  double p = 0.0;
  double param = 0.0;
  double ratio = 0.0;
  CMatrix a;
  CMatrix b;
};

struct EnsembleSummary {
  EnsembleSpec spec;
  Checker checker = Checker::Thm2;
  int trials = 0;
  int passes = 0;
  int fails = 0;
  int expected_violations = 0;
  double worst_ratio = 0.0;
  std::uint64_t worst_trial = 0;
  /// Largest-ratio FAIL, if any trial failed.
  std::optional<FailInstance> worst_fail;
};

/// Sequential over trials; per-trial streams make the result independent of order.
EnsembleSummary run_ensemble(const EnsembleSpec& spec, Checker checker);

}  // namespace spectra
