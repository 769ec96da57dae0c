#include <gtest/gtest.h>

#include "spectra/ensemble.hpp"
#include "spectra/error.hpp"

namespace spectra {
namespace {

EnsembleSpec make_spec(EnsembleKind kind, int dim, double p, int trials, std::uint64_t seed) {
  EnsembleSpec s;
  s.kind = kind;
  s.dim = dim;
  s.p = p;
  s.trials = trials;
  s.seed = seed;
  return s;
}

TEST(Ensemble, NamesRoundTrip) {
  for (Checker c : {Checker::Thm2, Checker::Cor1, Checker::Thm3, Checker::Lemma45, Checker::Kato, Checker::Bouldin,
                    Checker::SpVariational, Checker::Thm4, Checker::Heat}) {
    EXPECT_EQ(parse_checker(to_string(c)), c);
  }
  for (EnsembleKind k : {EnsembleKind::Ginibre, EnsembleKind::Gue, EnsembleKind::HermitianPair,
                         EnsembleKind::NormalPair, EnsembleKind::LowRankPerturbation}) {
    EXPECT_EQ(parse_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_family("prop2"), Family::Prop2);
  EXPECT_THROW(parse_checker("thm99"), ConfigError);
  EXPECT_THROW(parse_kind("wishart"), ConfigError);
  EXPECT_THROW(parse_family("nope"), ConfigError);
}

TEST(Ensemble, ValidationErrors) {
  EXPECT_THROW(validate(make_spec(EnsembleKind::Ginibre, 8, 0.5, 10, 1), Checker::Thm3), ConfigError);
  EXPECT_THROW(validate(make_spec(EnsembleKind::HermitianPair, 8, 0.5, 0, 1), Checker::Thm3), ConfigError);
  EXPECT_THROW(validate(make_spec(EnsembleKind::HermitianPair, 1, 0.5, 10, 1), Checker::Thm3), ConfigError);
  EXPECT_THROW(validate(make_spec(EnsembleKind::HermitianPair, 4, -1.0, 10, 1), Checker::Thm3), ConfigError);
  EXPECT_THROW(validate(make_spec(EnsembleKind::LowRankPerturbation, 4, 2.0, 10, 1), Checker::Bouldin),
               ConfigError);
  EXPECT_NO_THROW(validate(make_spec(EnsembleKind::NormalPair, 4, 2.0, 10, 1), Checker::Bouldin));
  EXPECT_THROW(run_ensemble(make_spec(EnsembleKind::Ginibre, 8, 2.0, 10, 1), Checker::Kato), ConfigError);
}

TEST(Ensemble, DeterministicGivenSeed) {
  const EnsembleSpec spec = make_spec(EnsembleKind::Ginibre, 6, 2.0, 20, 99);
  const EnsembleInstance i1 = make_instance(spec, Checker::Thm2, 7);
  const EnsembleInstance i2 = make_instance(spec, Checker::Thm2, 7);
  EXPECT_EQ(i1.a, i2.a);
  EXPECT_EQ(i1.b, i2.b);
  const EnsembleSummary s1 = run_ensemble(spec, Checker::Thm2);
  const EnsembleSummary s2 = run_ensemble(spec, Checker::Thm2);
  EXPECT_EQ(s1.worst_ratio, s2.worst_ratio);
  EXPECT_EQ(s1.worst_trial, s2.worst_trial);
  EXPECT_EQ(s1.passes, s2.passes);
  // Trials are independent of evaluation order.
  const EnsembleInstance late = make_instance(spec, Checker::Thm2, 19);
  EXPECT_EQ(make_instance(spec, Checker::Thm2, 19).a, late.a);
}

TEST(Ensemble, GinibreThm2AllPass) {
  const EnsembleSummary s = run_ensemble(make_spec(EnsembleKind::Ginibre, 16, 2.0, 1000, 42), Checker::Thm2);
  EXPECT_EQ(s.passes, 1000);
  EXPECT_EQ(s.fails, 0);
  EXPECT_FALSE(s.worst_fail.has_value());
}

TEST(Ensemble, HermitianThm3AllPass) {
  const EnsembleSummary s = run_ensemble(make_spec(EnsembleKind::HermitianPair, 8, 0.5, 1000, 7), Checker::Thm3);
  EXPECT_EQ(s.passes, 1000);
  EXPECT_EQ(s.fails, 0);
}

TEST(Ensemble, Prop2FamilyViolatesKato) {
  EnsembleSpec spec = make_spec(EnsembleKind::HermitianPair, 9, 0.5, 20, 5);
  spec.family = Family::Prop2;
  const EnsembleSummary s = run_ensemble(spec, Checker::Kato);
  EXPECT_EQ(s.fails, 0);
  EXPECT_EQ(s.expected_violations, 20);
  EXPECT_GT(s.worst_ratio, 1.0);
}

TEST(Ensemble, EveryCheckerRunsOnItsDefaultKind) {
  for (Checker c : {Checker::Thm2, Checker::Cor1, Checker::Thm3, Checker::Lemma45, Checker::Kato, Checker::Bouldin,
                    Checker::SpVariational, Checker::Thm4, Checker::Heat}) {
    double p = 2.0;
    if (c == Checker::Thm3) p = 0.5;
    EnsembleSpec spec = make_spec(default_kind(c), 6, p, 25, 3);
    const EnsembleSummary s = run_ensemble(spec, c);
    EXPECT_EQ(s.fails, 0) << to_string(c);
    EXPECT_EQ(s.passes + s.expected_violations, 25) << to_string(c);
  }
}

}  // namespace
}  // namespace spectra
