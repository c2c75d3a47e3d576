#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qradem/pauli.hpp"

namespace qradem {

/// Mixed-unitary channel D(rho) = (1 - sum p_i) rho + sum_i p_i U_i rho U_i^dag.
/// The identity component is implicit; `unitaries` holds only the noise terms.
struct MixedUnitaryChannel {
    int n = 1;
    std::vector<CMat> unitaries;
    std::vector<double> probs;

    MixedUnitaryChannel(int n_, std::vector<CMat> us, std::vector<double> ps);

    double prob_sum() const;

    /// True when sum p_i <= 1/2; the lower bound of the nonincreasing-factor
    /// inequality is vacuous outside this regime.
    bool gentle() const { return prob_sum() <= 0.5 + 1e-12; }
};

/// Quasi-channel sum_i v_i U_i(.)U_i^dag with signed coefficients summing to 1.
/// Unlike MixedUnitaryChannel the identity component is listed explicitly.
struct QuasiChannel {
    int n = 1;
    std::vector<CMat> unitaries;
    std::vector<double> coeffs;

    QuasiChannel(int n_, std::vector<CMat> us, std::vector<double> vs);

    double l1_weight() const;
};

/// Depolarizing channel: X, Y, Z each with probability eps. Domain [0, 1/4].
MixedUnitaryChannel depolarizing(double eps);

/// Dephasing channel: Z with probability eps. Domain [0, 1/2].
MixedUnitaryChannel dephasing(double eps);

/// Recovery map of the depolarizing channel; l1 weight (1+2eps)/(1-4eps).
QuasiChannel recovery_depolarizing(double eps);

/// Recovery map of the dephasing channel; l1 weight 1/(1-2eps).
QuasiChannel recovery_dephasing(double eps);

TransferMatrix transfer_matrix(const MixedUnitaryChannel& ch);
TransferMatrix transfer_matrix(const QuasiChannel& ch);

/// PTM of per-qubit depolarizing noise on all n wires: the diagonal matrix
/// with entry (1-4eps)^w(z) at Pauli string z.
TransferMatrix depolarizing_product_ptm(int n, double eps);

/// |Tr[a^dag b]| == dim, i.e. equality up to a global phase.
bool phase_equal(const CMat& a, const CMat& b, double tol = 1e-9);

struct CompatibilityWitness {
    double identity_weight = 1.0;
    /// (index into the gate set, probability) for each unitary component.
    std::vector<std::pair<int, double>> decomposition;
};

struct Incompatible {
    int component = -1;  // index of the unitary with no gate-set match
    std::string reason;
};

using CompatibilityResult = std::variant<CompatibilityWitness, Incompatible>;

/// Matches every unitary component of the channel against the gate set up to
/// global phase. The identity component is always compatible.
CompatibilityResult is_compatible(const MixedUnitaryChannel& channel,
                                  const std::vector<CMat>& gate_set);

/// Rebuild the channel PTM from a witness; soundness check for is_compatible.
TransferMatrix reconstruct_from_witness(const CompatibilityWitness& w,
                                        const std::vector<CMat>& gate_set);

/// The 24 single-qubit Clifford unitaries, <H,S> closure with canonical
/// phases, in a fixed deterministic order. Computed once and cached.
const std::vector<CMat>& clifford1();

/// Serializable channel description; field names are part of the CLI contract:
/// {"kind": "depolarizing"|"dephasing"|"mixed_unitary"|"quasi",
///  "epsilon": number, "unitaries": [...], "coeffs": [...]}.
struct ChannelSpec {
    std::string kind = "depolarizing";
    double epsilon = 0.0;
    std::vector<CMat> unitaries;  // mixed_unitary / quasi kinds only
    std::vector<double> coeffs;

    MixedUnitaryChannel to_mixed_unitary() const;
    QuasiChannel to_quasi() const;
    TransferMatrix ptm() const;
    int qubits() const;
    bool is_quasi() const { return kind == "quasi"; }

    /// sum p_j of the mixed-unitary form; feeds the 1 - 2 sum p_j factor.
    double prob_sum() const;

    std::string id() const;  // short deterministic label, e.g. "depolarizing(0.05)"
};

void to_json(nlohmann::json& j, const ChannelSpec& spec);
void from_json(const nlohmann::json& j, ChannelSpec& spec);

}  // namespace qradem
