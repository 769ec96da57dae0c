#include "spectra/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace spectra {

Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x5eedu};
  return Rng(seq);
}

cplx complex_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

CMatrix ginibre(Rng& rng, int n) {
  CMatrix g(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) g(i, j) = scale * complex_normal(rng);
  }
  return g;
}

CMatrix gue(Rng& rng, int n) {
  const CMatrix g = ginibre(rng, n);
  return 0.5 * (g + g.adjoint());
}

CMatrix haar_unitary(Rng& rng, int n) {
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = complex_normal(rng);
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    const double ad = std::abs(d);
    if (ad > 0.0) q.col(j) *= d / ad;
  }
  return q;
}

CVector random_unit_vector(Rng& rng, int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_normal(rng);
  return v / v.norm();
}

CMatrix random_low_rank(Rng& rng, int n, int rank, double max_sigma) {
  std::uniform_real_distribution<double> unif(0.0, max_sigma);
  CMatrix m = CMatrix::Zero(n, n);
  for (int k = 0; k < rank; ++k) {
    const double sigma = unif(rng);
    const CVector u = random_unit_vector(rng, n);
    const CVector v = random_unit_vector(rng, n);
    m += sigma * u * v.adjoint();
  }
  return m;
}

CMatrix random_hermitian_low_rank(Rng& rng, int n, int rank, double max_sigma, bool positive) {
  std::uniform_real_distribution<double> unif(0.0, max_sigma);
  std::bernoulli_distribution coin(0.5);
  CMatrix m = CMatrix::Zero(n, n);
  for (int k = 0; k < rank; ++k) {
    double sigma = unif(rng);
    if (!positive && coin(rng)) sigma = -sigma;
    const CVector u = random_unit_vector(rng, n);
    m += sigma * u * u.adjoint();
  }
  return 0.5 * (m + m.adjoint());
}

}  // namespace spectra
