#pragma once

#include <vector>

#include "spectra/linalg.hpp"
#include "spectra/random.hpp"
#include "spectra/report.hpp"

namespace spectra {

inline constexpr int kMinJacobiMargin = 16;
inline constexpr int kDefaultJacobiMargin = 32;

/// Jacobi operator (Ju)(k) = a_{k−1}u(k−1) + b_k u(k) + c_k u(k+1) that agrees
/// with the free operator (a = c = 1, b = 0) outside [−support, support].
/// Coefficient vectors have length 2·support+1, entry i holding index i − support.
struct JacobiSpec {
  int support = 0;
  std::vector<cplx> a;
  std::vector<cplx> b;
  std::vector<cplx> c;
  /// Truncation half-width N; ≤ 0 selects support + kDefaultJacobiMargin.
  int trunc = 0;

  cplx a_at(int k) const;
  cplx b_at(int k) const;
  cplx c_at(int k) const;
  int resolved_trunc() const;
  bool is_selfadjoint(double tol = 0.0) const;
};

/// Free spec (all coefficients at their free values) with the given support.
JacobiSpec free_spec(int support, int trunc = 0);

/// Throws ConfigError on wrong coefficient lengths, non-finite entries or a
/// truncation margin below kMinJacobiMargin.
void validate(const JacobiSpec& spec);

/// Random finitely supported perturbation: entries are free values plus
/// complex Gaussians of standard deviation `scale` (selfadjoint: c = conj(a), b real).
JacobiSpec random_spec(Rng& rng, int support, bool selfadjoint, double scale = 1.0);

/// (2N+1)×(2N+1) sections indexed −N..N; row/column i is site i − N.
struct JacobiTruncation {
  CMatrix j;
  CMatrix j0;
  int trunc = 0;
};

JacobiTruncation build_truncation(const JacobiSpec& spec);

/// d_k = max(|a_{k−1}−1|, |a_k−1|, |b_k|, |c_{k−1}−1|, |c_k−1|) on [−S−1, S+1].
struct DSeq {
  int first = 0;  // site index of d.front()
  std::vector<double> d;

  double lp_pow(double p) const;
  double lp_norm(double p) const;
};

DSeq dseq(const JacobiSpec& spec);

/// dist(λ, [−2, 2]).
double segment_distance(cplx lambda);

/// ‖J − J0‖_{S_p} ≤ 3‖d‖_{ℓ^p} (norms, not powers).
IneqReport check_bound15(const JacobiSpec& spec, double p, const SlackPolicy& slack = {});

/// 10·2^{−margin/2}: truncation eigenvalues closer than this to [−2, 2] are dropped.
double default_filter_threshold(int margin);

struct LtReports {
  IneqReport main;   // rhs 3^p‖d‖_p^p
  IneqReport tight;  // rhs ‖J − J0‖_{S_p}^p
  double filter_threshold = 0.0;
  int counted = 0;
};

/// Σ dist(λ, [−2,2])^p over truncation eigenvalues beyond the filter, p ≥ 1.
/// `filter` < 0 selects default_filter_threshold(margin).
LtReports lt_sum_nonselfadjoint(const JacobiSpec& spec, double p, const SlackPolicy& slack = {},
                                double filter = -1.0);

/// Σ_{λ<−2} |λ+2|^p + Σ_{λ>2} |λ−2|^p for selfadjoint specs, any p > 0.
LtReports lt_sum_selfadjoint(const JacobiSpec& spec, double p, const SlackPolicy& slack = {},
                             double filter = -1.0);

struct WeightTriple {
  double w_new = 0.0;       // dist^p
  double w_borichev = 0.0;  // dist^{p+1+ε} / |λ²−4|
  double w_hk09 = 0.0;      // dist^{p+ε} / |λ²−4|^{1/2}
};

WeightTriple weight_comparison(cplx lambda, double p, double eps);

struct WeightSample {
  /// Sample infima of w_new / w_borichev and w_new / w_hk09.
  double c_borichev = 0.0;
  double c_hk09 = 0.0;
  /// w_new ≥ c_borichev·w_borichev on every sample point.
  bool holds = true;
};

WeightSample weight_comparison_sample(const std::vector<cplx>& lambdas, double p, double eps);

struct StabilityRow {
  int trunc = 0;
  double lhs = 0.0;
  int counted = 0;
  /// Largest movement, relative to the previous row, of eigenvalues with
  /// dist ≥ stable_dist; +inf if their count changed, 0 on the first row.
  double drift = 0.0;
  /// Eigenvalues off [−2, 2] but inside the filter distance.
  int spurious = 0;
};

/// lhs of the lt sum (selfadjoint form if the operator is selfadjoint) across an
/// increasing truncation schedule.
std::vector<StabilityRow> truncation_stability(const JacobiSpec& spec, double p, const std::vector<int>& schedule,
                                               double stable_dist = 0.1, double filter = -1.0);

}  // namespace spectra
