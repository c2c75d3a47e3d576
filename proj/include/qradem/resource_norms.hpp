#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "qradem/pauli.hpp"

namespace qradem {

inline constexpr double kInfQ = std::numeric_limits<double>::infinity();

/// (p,q) group norm over the rows of a transfer matrix:
/// ((1/N1) sum_i ||M_i||_p^q)^(1/q); at q = inf the prefactor drops and the
/// value is max_i ||M_i||_p. Rows range over output strings z.
double group_norm(const TransferMatrix& m, double p, double q);

/// Per-slot resource bounds mu_ij >= 1, flattened in slot order
/// (layer-major, slot index within layer).
struct ResourceVector {
    std::vector<double> mu;
};

/// Noisy resource bound: (1-4eps)·mu when the noisy norm saturates above 1,
/// else 1.
double noisy_mu(double mu_ij, double eps_ij, bool saturated);

/// Sampled surrogate for "max over channels with ||M||_{1,inf} <= mu of the
/// noisy norm exceeds 1". Draws random mixed-unitary channels blended toward
/// the identity until the norm bound holds, composes per-qubit depolarizing
/// noise, and reports whether any noisy norm lands above 1. The true max over
/// all bounded channels is not computable exactly; this is the documented
/// sampled stand-in.
bool saturation_probe(double mu, double eps, int n, int n_samples, std::uint64_t seed);

/// Upper bound of the noisy fixed-structure class:
/// prod_ij mu_ij(eps) * sqrt(8 n0 / m) * ||alpha||_1 * max_i ||f_I(x_i)||_inf.
double corollary_bound(const ResourceVector& mu_eps, int n0, int m, const RepVector& alpha,
                       const std::vector<RepVector>& f_inputs);

}  // namespace qradem
