#pragma once

#include <cstdint>
#include <random>

#include "spectra/linalg.hpp"

namespace spectra {

using Rng = std::mt19937_64;

/// Independent, reproducible generator for (seed, stream); used to give every
/// ensemble trial its own stream so results do not depend on trial order.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream);

/// Standard complex Gaussian, E|z|² = 1.
cplx complex_normal(Rng& rng);

/// i.i.d. standard complex Gaussian entries scaled by 1/√n.
CMatrix ginibre(Rng& rng, int n);

/// (G + G*)/2 for G Ginibre: a GUE sample, semicircle on [−√2, √2].
CMatrix gue(Rng& rng, int n);

/// Haar-distributed unitary (QR of a Ginibre sample with phase fix).
CMatrix haar_unitary(Rng& rng, int n);

CVector random_unit_vector(Rng& rng, int n);

/// Σ_{k<rank} σ_k u_k v_k* with unit u_k, v_k and σ_k uniform in (0, max_sigma).
CMatrix random_low_rank(Rng& rng, int n, int rank, double max_sigma);

/// Σ_{k<rank} ±σ_k u_k u_k*, Hermitian; σ_k uniform in (0, max_sigma) and
/// signs chosen at random unless `positive`.
CMatrix random_hermitian_low_rank(Rng& rng, int n, int rank, double max_sigma, bool positive = false);

}  // namespace spectra
