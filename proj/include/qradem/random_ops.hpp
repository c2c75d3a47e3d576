#pragma once

#include "qradem/channels.hpp"
#include "qradem/pauli.hpp"
#include "qradem/rng.hpp"

namespace qradem {

/// Haar-distributed random unitary via QR of a Ginibre matrix with the phase
/// convention fixed by the R diagonal.
CMat random_unitary(int n, Rng& rng);

/// Random mixed-unitary channel: `count` Haar unitaries with probabilities
/// drawn uniformly and rescaled to sum to `total_p`.
MixedUnitaryChannel random_mixed_unitary(int n, int count, double total_p, Rng& rng);

}  // namespace qradem
