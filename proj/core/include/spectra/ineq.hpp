#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spectra/linalg.hpp"
#include "spectra/numrange.hpp"
#include "spectra/report.hpp"

namespace spectra {

struct CheckOptions {
  SlackPolicy slack;
  /// Angular resolution of the numerical-range bracket.
  int n_angles = kDefaultAngles;
};

// Every checker returns lhs ≤ rhs as an IneqReport. Left-hand sides are built
// from distance lower bounds: the outer numerical-range polygon, and for
// Hermitian eigenvalues a deflation by eigenvalue_resolution().

/// Σ_{λ∈σ(B)} dist(λ, W̄(A))^p ≤ ‖B − A‖_{S_p}^p for p ≥ 1.
/// extras: lhs_upper (inner-hull distances), n_outside.
IneqReport check_thm2(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt = {});
/// Same, reusing a bracket already computed for `a` (opt.n_angles is ignored).
IneqReport check_thm2(const NRangeBracket& w_a, const CMatrix& a, const CMatrix& b, double p,
                      const CheckOptions& opt = {});

/// Σ dist(λ, σ(A))^p ≤ ‖B − A‖_{S_p}^p for normal A whose spectrum lies on a
/// line segment (the finite-dimensional stand-in for a convex spectrum).
/// A non-collinear spectrum is a DomainError unless `nonconvex_demo` is set,
/// in which case distances go to the finite point set σ(A) and a violation is
/// reported as VIOLATION_EXPECTED.
IneqReport check_cor1(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt = {},
                      bool nonconvex_demo = false);

/// Σ_{λ<min σ(A)} (min σ(A) − λ)^p + Σ_{λ>max σ(A)} (λ − max σ(A))^p ≤ ‖B − A‖_{S_p}^p
/// for Hermitian A, B and p ∈ (0, 1].
IneqReport check_thm3(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt = {});

/// a − λ_n^−(B) ≤ s_n((B−A)_−) and λ_n^+(B) − b ≤ s_n((B−A)_+), one report per
/// eigenvalue of B outside [a, b] = [min σ(A), max σ(A)].
std::vector<IneqReport> check_lemma45(const CMatrix& a, const CMatrix& b, const CheckOptions& opt = {});

/// min over bijections π of Σ_j |α_π(j) − β_j|^p ≤ ‖B − A‖_{S_p}^p for Hermitian
/// A, B. For p < 1 failures are VIOLATION_EXPECTED.
IneqReport check_kato_matching(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt = {});

/// Σ_{λ∈σ(B)} dist(λ, σ(A))^p ≤ ‖B − A‖_{S_p}^p for normal A, B and p ≥ 2.
IneqReport check_bouldin(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt = {});

/// max over `frames` Haar-random orthonormal basis pairs of Σ_n |⟨K e_n, f_n⟩|^p
/// against ‖K‖_{S_p}^p. extras: attained (singular-vector frame sum) and
/// attain_rel_err.
IneqReport check_sp_variational(const CMatrix& k, double p, int frames, std::uint64_t seed,
                                const CheckOptions& opt = {});

/// Σ_{λ∈σ(H), Re λ>0} |Im λ|^p / |λ + a|^{2p} ≤ ‖(a+H0)^{-1} − (a+H)^{-1}‖_{S_p}^p
/// for H0 ⪰ 0. extras: counted, eq22_max_err (distance identity residual).
IneqReport check_thm4_matrix(const CMatrix& h0, const CMatrix& h, double a, double p,
                             const CheckOptions& opt = {});

/// Heat-semigroup bounds: first Σ dist(e^{−tλ}, [0,1])^p ≤ ‖e^{−tH} − e^{−tH0}‖_{S_p}^p,
/// then Σ_{λ<0} |λ|^p ≤ t^{−p}·(same right-hand side).
std::pair<IneqReport, IneqReport> check_heat(const CMatrix& h0, const CMatrix& h, double t, double p,
                                             const CheckOptions& opt = {});

/// Real-segment excess sum Σ_{λ<lo} (lo − λ − deflate)_+^p + Σ_{λ>hi} (λ − hi − deflate)_+^p.
double segment_excess_sum(const RVector& eigs, double lo, double hi, double p, double deflate = 0.0);

}  // namespace spectra
