#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spectra {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Throws DomainError unless `m` is square, non-empty and has finite entries.
void require_square_finite(const CMatrix& m, const char* what = "matrix");

/// Largest singular value.
double operator_norm(const CMatrix& m);
double max_abs(const CMatrix& m);

/// ‖M − M*‖_max ≤ 1e-10·‖M‖_max.
bool is_hermitian(const CMatrix& m);
/// ‖M*M − MM*‖_max ≤ tol·max(1, ‖M‖_max²).
bool is_normal(const CMatrix& m, double tol = 1e-10);

/// Unitary Q and upper triangular T with M = Q T Q*. The diagonal of T is
/// grouped so that eigenvalues agreeing within the cluster tolerance sit in
/// consecutive positions, clusters ordered by descending modulus and then by
/// ascending argument.
struct SchurForm {
  CMatrix q;
  CMatrix t;
  /// Cluster index of every diagonal position of `t`.
  std::vector<int> cluster_of;
  double cluster_tol = 0.0;

  std::vector<cplx> diagonal() const;
};

struct SpectrumItem {
  cplx eigenvalue;
  int multiplicity;
};

struct Spectrum {
  std::vector<SpectrumItem> items;
  double cluster_tol = 0.0;

  int total_multiplicity() const;
  /// Eigenvalues repeated according to multiplicity.
  std::vector<cplx> expanded() const;
};

/// Singular values in nonincreasing order; `values.size() == dim`.
struct SingularValues {
  std::vector<double> values;
};

/// 1e-8·‖M‖₂, floored at machine precision so zero matrices still cluster.
double default_cluster_tol(const CMatrix& m);

/// Complex Schur triangularization. A negative `cluster_tol` selects
/// default_cluster_tol(m). Throws NumericalError when the QR iteration does
/// not converge.
SchurForm schur(const CMatrix& m, double cluster_tol = -1.0);

/// Eigenvalues with algebraic multiplicities; cluster means are reported.
Spectrum spectrum(const CMatrix& m, double cluster_tol = -1.0);

/// Schur diagonal (eigenvalues with multiplicity, ordered as in schur()).
std::vector<cplx> eigenvalues(const CMatrix& m);

SingularValues singular_values(const CMatrix& m);

/// Σ s_n^p. Singular values below dim·ε·s_max are treated as exact zeros so
/// that the quasi-norm of a numerically low-rank matrix is not inflated by
/// rounding for p < 1.
double schatten_pow(const CMatrix& m, double p);
/// (Σ s_n^p)^{1/p}; a quasi-norm for p < 1. p ≤ 0 is a DomainError.
double schatten_norm(const CMatrix& m, double p);
double schatten_pow(const SingularValues& sv, double p);

struct HermitianEig {
  RVector values;  // ascending
  CMatrix vectors;  // columns
};

/// Throws DomainError for non-Hermitian input.
HermitianEig hermitian_eig(const CMatrix& h);
/// Ascending eigenvalues of a Hermitian matrix.
RVector hermitian_eigenvalues(const CMatrix& h);

/// (M₊, M₋) with M₊ − M₋ = M, M₊ + M₋ = |M|, both positive semidefinite.
std::pair<CMatrix, CMatrix> pos_neg_parts(const CMatrix& m);

/// e^{−tH} for Hermitian H.
CMatrix hermitian_expm(const CMatrix& h, double t);

/// Backward-error radius used to deflate computed Hermitian eigenvalues:
/// 16·dim·ε·max(1, ‖·‖₂ of the inputs).
double eigenvalue_resolution(const CMatrix& a, const CMatrix& b);

}  // namespace spectra
