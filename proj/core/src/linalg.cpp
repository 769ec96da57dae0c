#include "spectra/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spectra/error.hpp"

namespace spectra {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Single-linkage clustering of points in the plane; returns a cluster id per point.
std::vector<int> cluster_points(const std::vector<cplx>& pts, double tol) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(pts[i] - pts[j]) <= tol) {
        const int ri = find(i);
        const int rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::vector<int> id(n, -1);
  std::vector<int> root_to_id(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_to_id[r] < 0) root_to_id[r] = next++;
    id[i] = root_to_id[r];
  }
  return id;
}

// Exchanges the adjacent diagonal entries k, k+1 of the triangular factor by a
// unitary similarity, updating the Schur vectors.
void swap_adjacent(CMatrix& t, CMatrix& q, Eigen::Index k) {
  const cplx t11 = t(k, k);
  const cplx t22 = t(k + 1, k + 1);
  const cplx t12 = t(k, k + 1);
  const double nv = std::hypot(std::abs(t12), std::abs(t22 - t11));
  if (nv == 0.0) return;
  const cplx c = t12 / nv;
  const cplx s = (t22 - t11) / nv;
  Eigen::Matrix2cd z;
  z << c, -std::conj(s), s, std::conj(c);
  t.middleCols(k, 2) = (t.middleCols(k, 2) * z).eval();
  t.middleRows(k, 2) = (z.adjoint() * t.middleRows(k, 2)).eval();
  q.middleCols(k, 2) = (q.middleCols(k, 2) * z).eval();
  t(k + 1, k) = 0.0;
}

}  // namespace

void require_square_finite(const CMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DomainError(std::string(what) + " must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + " has non-finite entries");
  }
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double operator_norm(const CMatrix& m) {
  const auto sv = singular_values(m);
  return sv.values.empty() ? 0.0 : sv.values.front();
}

bool is_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= 1e-10 * max_abs(m);
}

bool is_normal(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m) * max_abs(m));
  return max_abs(m.adjoint() * m - m * m.adjoint()) <= tol * scale;
}

std::vector<cplx> SchurForm::diagonal() const {
  std::vector<cplx> d(static_cast<std::size_t>(t.rows()));
  for (Eigen::Index i = 0; i < t.rows(); ++i) d[static_cast<std::size_t>(i)] = t(i, i);
  return d;
}

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& it : items) total += it.multiplicity;
  return total;
}

std::vector<cplx> Spectrum::expanded() const {
  std::vector<cplx> out;
  for (const auto& it : items) out.insert(out.end(), static_cast<std::size_t>(it.multiplicity), it.eigenvalue);
  return out;
}

double default_cluster_tol(const CMatrix& m) {
  return std::max(1e-8 * operator_norm(m), std::numeric_limits<double>::min());
}

SchurForm schur(const CMatrix& m, double cluster_tol) {
  require_square_finite(m, "schur input");
  if (cluster_tol < 0.0) cluster_tol = default_cluster_tol(m);

  Eigen::ComplexSchur<CMatrix> cs(m.rows());
  cs.compute(m);
  if (cs.info() != Eigen::Success) {
    throw NumericalError("complex Schur iteration did not converge within " +
                         std::to_string(cs.getMaxIterations()) + " iterations");
  }
  SchurForm out;
  out.q = cs.matrixU();
  out.t = cs.matrixT().triangularView<Eigen::Upper>();
  out.cluster_tol = cluster_tol;

  const auto diag = out.diagonal();
  const auto ids = cluster_points(diag, cluster_tol);
  const int n_clusters = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;

  std::vector<cplx> mean(static_cast<std::size_t>(n_clusters), 0.0);
  std::vector<int> count(static_cast<std::size_t>(n_clusters), 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    mean[static_cast<std::size_t>(ids[i])] += diag[i];
    ++count[static_cast<std::size_t>(ids[i])];
  }
  for (int c = 0; c < n_clusters; ++c) mean[static_cast<std::size_t>(c)] /= static_cast<double>(count[static_cast<std::size_t>(c)]);

  std::vector<int> order(static_cast<std::size_t>(n_clusters));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ma = std::abs(mean[static_cast<std::size_t>(a)]);
    const double mb = std::abs(mean[static_cast<std::size_t>(b)]);
    if (ma != mb) return ma > mb;
    return std::arg(mean[static_cast<std::size_t>(a)]) < std::arg(mean[static_cast<std::size_t>(b)]);
  });
  std::vector<int> rank_of_cluster(static_cast<std::size_t>(n_clusters));
  for (int r = 0; r < n_clusters; ++r) rank_of_cluster[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;

  std::vector<int> rank(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) rank[i] = rank_of_cluster[static_cast<std::size_t>(ids[i])];

  // Stable insertion sort of the diagonal by cluster rank via adjacent swaps.
  for (std::size_t i = 1; i < rank.size(); ++i) {
    for (std::size_t j = i; j > 0 && rank[j - 1] > rank[j]; --j) {
      swap_adjacent(out.t, out.q, static_cast<Eigen::Index>(j - 1));
      std::swap(rank[j - 1], rank[j]);
    }
  }
  out.cluster_of = std::move(rank);
  return out;
}

Spectrum spectrum(const CMatrix& m, double cluster_tol) {
  const SchurForm sf = schur(m, cluster_tol);
  Spectrum out;
  out.cluster_tol = sf.cluster_tol;
  const auto diag = sf.diagonal();
  std::size_t i = 0;
  while (i < diag.size()) {
    std::size_t j = i;
    cplx sum = 0.0;
    while (j < diag.size() && sf.cluster_of[j] == sf.cluster_of[i]) sum += diag[j++];
    const int mult = static_cast<int>(j - i);
    out.items.push_back({sum / static_cast<double>(mult), mult});
    i = j;
  }
  return out;
}

std::vector<cplx> eigenvalues(const CMatrix& m) { return schur(m).diagonal(); }

SingularValues singular_values(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("singular_values expects a square matrix");
  if (!m.allFinite()) throw DomainError("singular_values input has non-finite entries");
  SingularValues out;
  if (m.size() == 0) return out;
  Eigen::BDCSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  out.values.assign(s.data(), s.data() + s.size());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double schatten_pow(const SingularValues& sv, double p) {
  if (!(p > 0.0)) throw DomainError("Schatten exponent p must be positive");
  if (sv.values.empty()) return 0.0;
  const double cutoff = static_cast<double>(sv.values.size()) * kEps * sv.values.front();
  double sum = 0.0;
  for (double s : sv.values) {
    if (s > cutoff) sum += std::pow(s, p);
  }
  return sum;
}

double schatten_pow(const CMatrix& m, double p) {
  if (!(p > 0.0)) throw DomainError("Schatten exponent p must be positive");
  return schatten_pow(singular_values(m), p);
}

double schatten_norm(const CMatrix& m, double p) { return std::pow(schatten_pow(m, p), 1.0 / p); }

HermitianEig hermitian_eig(const CMatrix& h) {
  require_square_finite(h, "Hermitian input");
  if (!is_hermitian(h)) throw DomainError("matrix is not Hermitian within tolerance");
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

RVector hermitian_eigenvalues(const CMatrix& h) {
  require_square_finite(h, "Hermitian input");
  if (!is_hermitian(h)) throw DomainError("matrix is not Hermitian within tolerance");
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  return es.eigenvalues();
}

std::pair<CMatrix, CMatrix> pos_neg_parts(const CMatrix& m) {
  const auto eig = hermitian_eig(m);
  const RVector pos = eig.values.cwiseMax(0.0);
  const RVector neg = (-eig.values).cwiseMax(0.0);
  CMatrix plus = eig.vectors * pos.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
  CMatrix minus = eig.vectors * neg.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
  return {0.5 * (plus + plus.adjoint()), 0.5 * (minus + minus.adjoint())};
}

CMatrix hermitian_expm(const CMatrix& h, double t) {
  const auto eig = hermitian_eig(h);
  const RVector ex = (-t * eig.values).array().exp().matrix();
  CMatrix out = eig.vectors * ex.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

double eigenvalue_resolution(const CMatrix& a, const CMatrix& b) {
  const double scale = std::max({1.0, operator_norm(a), operator_norm(b)});
  return 16.0 * static_cast<double>(std::max(a.rows(), b.rows())) * kEps * scale;
}

}  // namespace spectra
