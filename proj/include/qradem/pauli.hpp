#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qradem/errors.hpp"

namespace qradem {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Hard cap on qubit count; 4^6 = 4096 rows is the largest transfer matrix
/// this library will materialize.
inline constexpr int kMaxQubits = 6;

/// Hermiticity tolerance applied on construction of representation vectors.
inline constexpr double kHermTol = 1e-10;

std::size_t pow4(int n);

/// A Pauli string over {0,1,2,3}^n (0=I, 1=X, 2=Y, 3=Z).
///
/// Index convention used everywhere in this library: a string maps to the
/// base-4 integer whose most significant digit is qubit 0. Kronecker products
/// follow the same order, so tensor() is a plain kron() on both dense
/// matrices and transfer matrices.
struct PauliString {
    std::vector<std::uint8_t> symbols;

    PauliString() = default;
    explicit PauliString(std::vector<std::uint8_t> syms);

    int n() const { return static_cast<int>(symbols.size()); }

    /// Number of non-identity symbols.
    int weight() const;

    /// Base-4 index, qubit 0 most significant.
    std::size_t index() const;

    static PauliString from_index(std::size_t index, int n);

    /// Dense 2^n x 2^n matrix of the corresponding Pauli operator.
    CMat matrix() const;

    std::string label() const;  // e.g. "IXZ"
};

/// Weight of the Pauli string with the given index, without materializing it.
int pauli_weight(std::size_t index, int n);

/// Pauli-basis representation of a Hermitian operator Q:
/// entries[z] = 2^-n Tr[P_z Q].
struct RepVector {
    int n = 0;
    RVec entries;

    RepVector() = default;
    RepVector(int n_, RVec e);

    double l1_norm() const { return entries.lpNorm<1>(); }
    double linf_norm() const { return entries.lpNorm<Eigen::Infinity>(); }
};

/// Pauli transfer matrix of a channel: entries(z, x) = 2^-n_out Tr[P_z Phi(P_x)].
/// Rows are indexed by output strings z, columns by input strings x.
struct TransferMatrix {
    int n_in = 0;
    int n_out = 0;
    RMat entries;

    TransferMatrix() = default;
    TransferMatrix(int n_in_, int n_out_, RMat e);

    std::size_t rows() const { return static_cast<std::size_t>(entries.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(entries.cols()); }
};

/// Pauli-basis representation of a dense Hermitian operator.
/// Throws DimensionError for non-power-of-two shapes and HermiticityError
/// when the anti-Hermitian part exceeds 1e-10.
RepVector rep_vector(const CMat& op);

/// Inverse of rep_vector: Q = sum_z entries[z] P_z. Handy as a dense oracle.
CMat dense_operator(const RepVector& v);

TransferMatrix identity_ptm(int n);

/// Transfer matrix of the unitary channel U(.)U^dag.
TransferMatrix transfer_matrix(const CMat& unitary);

/// Transfer matrix of a channel given by a Kraus operator list.
TransferMatrix transfer_matrix_kraus(const std::vector<CMat>& kraus);

/// Matrix product m2 * m1, i.e. the channel "m1 first, then m2".
TransferMatrix compose(const TransferMatrix& m2, const TransferMatrix& m1);

/// Kronecker product; m1 acts on the more significant qubit block.
TransferMatrix tensor(const TransferMatrix& m1, const TransferMatrix& m2);

/// Matrix-vector product: representation of Phi(rho).
RepVector apply(const TransferMatrix& m, const RepVector& state);

/// Tr[rho H] = 2^n sum_z obs[z] state[z] under the 2^-n Tr convention.
double expectation(const RepVector& obs, const RepVector& state);

/// Embed an m-qubit transfer matrix acting on the given (distinct) qubits of
/// an n0-qubit register; identity on the remaining wires. The slot's own
/// index order follows the order of `qubits`.
TransferMatrix embed_ptm(const TransferMatrix& m, const std::vector<int>& qubits, int n0);

namespace pauli_mats {
const CMat& I();
const CMat& X();
const CMat& Y();
const CMat& Z();
}  // namespace pauli_mats

}  // namespace qradem
