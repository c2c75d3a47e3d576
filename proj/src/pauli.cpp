#include "qradem/pauli.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qradem {

namespace {

void check_qubit_count(int n, const char* what) {
    if (n < 1) throw DimensionError(std::string(what) + ": qubit count must be >= 1");
    if (n > kMaxQubits)
        throw ResourceCapError(std::string(what) + ": qubit count " + std::to_string(n) +
                               " exceeds the cap of " + std::to_string(kMaxQubits));
}

int log2_exact(std::size_t dim, const char* what) {
    int n = 0;
    std::size_t d = dim;
    while (d > 1) {
        if (d % 2 != 0)
            throw DimensionError(std::string(what) + ": dimension " + std::to_string(dim) +
                                 " is not a power of two");
        d /= 2;
        ++n;
    }
    if (n == 0) throw DimensionError(std::string(what) + ": dimension must be at least 2");
    return n;
}

}  // namespace

namespace pauli_mats {

const CMat& I() {
    static const CMat m = CMat::Identity(2, 2);
    return m;
}
const CMat& X() {
    static const CMat m = [] {
        CMat x(2, 2);
        x << 0, 1, 1, 0;
        return x;
    }();
    return m;
}
const CMat& Y() {
    static const CMat m = [] {
        CMat y(2, 2);
        y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
        return y;
    }();
    return m;
}
const CMat& Z() {
    static const CMat m = [] {
        CMat z(2, 2);
        z << 1, 0, 0, -1;
        return z;
    }();
    return m;
}

const CMat& single(std::uint8_t s) {
    switch (s) {
        case 0: return I();
        case 1: return X();
        case 2: return Y();
        default: return Z();
    }
}

}  // namespace pauli_mats

std::size_t pow4(int n) {
    return std::size_t{1} << (2 * n);
}

PauliString::PauliString(std::vector<std::uint8_t> syms) : symbols(std::move(syms)) {
    check_qubit_count(n(), "PauliString");
    for (auto s : symbols)
        if (s > 3) throw ParameterError("PauliString: symbols must be in {0,1,2,3}");
}

int PauliString::weight() const {
    int w = 0;
    for (auto s : symbols) w += (s != 0);
    return w;
}

std::size_t PauliString::index() const {
    std::size_t idx = 0;
    for (auto s : symbols) idx = idx * 4 + s;
    return idx;
}

PauliString PauliString::from_index(std::size_t index, int n) {
    check_qubit_count(n, "PauliString");
    if (index >= pow4(n)) throw ParameterError("PauliString: index out of range");
    std::vector<std::uint8_t> syms(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        syms[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(index & 3);
        index >>= 2;
    }
    return PauliString(std::move(syms));
}

CMat PauliString::matrix() const {
    CMat m = pauli_mats::single(symbols[0]);
    for (int j = 1; j < n(); ++j)
        m = Eigen::kroneckerProduct(m, pauli_mats::single(symbols[static_cast<std::size_t>(j)])).eval();
    return m;
}

std::string PauliString::label() const {
    static const char names[] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    s.reserve(symbols.size());
    for (auto sym : symbols) s.push_back(names[sym]);
    return s;
}

int pauli_weight(std::size_t index, int n) {
    int w = 0;
    for (int j = 0; j < n; ++j) {
        w += ((index & 3) != 0);
        index >>= 2;
    }
    return w;
}

RepVector::RepVector(int n_, RVec e) : n(n_), entries(std::move(e)) {
    check_qubit_count(n, "RepVector");
    if (static_cast<std::size_t>(entries.size()) != pow4(n))
        throw DimensionError("RepVector: entry count must be 4^n");
}

TransferMatrix::TransferMatrix(int n_in_, int n_out_, RMat e)
    : n_in(n_in_), n_out(n_out_), entries(std::move(e)) {
    check_qubit_count(n_in, "TransferMatrix");
    check_qubit_count(n_out, "TransferMatrix");
    if (rows() != pow4(n_out) || cols() != pow4(n_in))
        throw DimensionError("TransferMatrix: shape must be 4^n_out x 4^n_in");
}

RepVector rep_vector(const CMat& op) {
    if (op.rows() != op.cols()) throw DimensionError("rep_vector: operator must be square");
    const int n = log2_exact(static_cast<std::size_t>(op.rows()), "rep_vector");
    check_qubit_count(n, "rep_vector");
    if ((op - op.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw HermiticityError("rep_vector: operator is not Hermitian within 1e-10");

    const double scale = 1.0 / static_cast<double>(op.rows());
    RVec entries(static_cast<Eigen::Index>(pow4(n)));
    for (std::size_t z = 0; z < pow4(n); ++z) {
        const CMat pz = PauliString::from_index(z, n).matrix();
        const Complex tr = (pz * op).trace();
        entries[static_cast<Eigen::Index>(z)] = scale * tr.real();
    }
    return RepVector(n, std::move(entries));
}

CMat dense_operator(const RepVector& v) {
    const std::size_t dim = std::size_t{1} << v.n;
    CMat q = CMat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t z = 0; z < pow4(v.n); ++z) {
        const double a = v.entries[static_cast<Eigen::Index>(z)];
        if (a != 0.0) q += a * PauliString::from_index(z, v.n).matrix();
    }
    return q;
}

TransferMatrix identity_ptm(int n) {
    check_qubit_count(n, "identity_ptm");
    const auto dim = static_cast<Eigen::Index>(pow4(n));
    return TransferMatrix(n, n, RMat::Identity(dim, dim));
}

TransferMatrix transfer_matrix(const CMat& unitary) {
    return transfer_matrix_kraus({unitary});
}

TransferMatrix transfer_matrix_kraus(const std::vector<CMat>& kraus) {
    if (kraus.empty()) throw DimensionError("transfer_matrix: empty Kraus list");
    const Eigen::Index dim = kraus.front().rows();
    for (const auto& k : kraus)
        if (k.rows() != dim || k.cols() != dim)
            throw DimensionError("transfer_matrix: inconsistent Kraus dimensions");
    const int n = log2_exact(static_cast<std::size_t>(dim), "transfer_matrix");
    check_qubit_count(n, "transfer_matrix");

    const double scale = 1.0 / static_cast<double>(dim);
    const std::size_t N = pow4(n);
    RMat m(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    std::vector<CMat> paulis(N);
    for (std::size_t i = 0; i < N; ++i) paulis[i] = PauliString::from_index(i, n).matrix();

    for (std::size_t x = 0; x < N; ++x) {
        CMat out = CMat::Zero(dim, dim);
        for (const auto& k : kraus) out += k * paulis[x] * k.adjoint();
        for (std::size_t z = 0; z < N; ++z) {
            const Complex tr = (paulis[z] * out).trace();
            m(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(x)) = scale * tr.real();
        }
    }
    return TransferMatrix(n, n, std::move(m));
}

TransferMatrix compose(const TransferMatrix& m2, const TransferMatrix& m1) {
    if (m1.n_out != m2.n_in)
        throw DimensionError("compose: inner qubit counts differ (" + std::to_string(m1.n_out) +
                             " vs " + std::to_string(m2.n_in) + ")");
    return TransferMatrix(m1.n_in, m2.n_out, m2.entries * m1.entries);
}

TransferMatrix tensor(const TransferMatrix& m1, const TransferMatrix& m2) {
    const int n_in = m1.n_in + m2.n_in;
    const int n_out = m1.n_out + m2.n_out;
    check_qubit_count(n_in, "tensor");
    check_qubit_count(n_out, "tensor");
    RMat m = Eigen::kroneckerProduct(m1.entries, m2.entries);
    return TransferMatrix(n_in, n_out, std::move(m));
}

RepVector apply(const TransferMatrix& m, const RepVector& state) {
    if (state.n != m.n_in) throw DimensionError("apply: state qubit count differs from n_in");
    return RepVector(m.n_out, m.entries * state.entries);
}

double expectation(const RepVector& obs, const RepVector& state) {
    if (obs.n != state.n) throw DimensionError("expectation: qubit counts differ");
    const double scale = static_cast<double>(std::size_t{1} << obs.n);
    return scale * obs.entries.dot(state.entries);
}

TransferMatrix embed_ptm(const TransferMatrix& m, const std::vector<int>& qubits, int n0) {
    check_qubit_count(n0, "embed_ptm");
    if (m.n_in != m.n_out) throw DimensionError("embed_ptm: slot must preserve qubit count");
    if (static_cast<int>(qubits.size()) != m.n_in)
        throw DimensionError("embed_ptm: qubit list does not match slot arity");
    std::vector<bool> used(static_cast<std::size_t>(n0), false);
    for (int q : qubits) {
        if (q < 0 || q >= n0) throw DimensionError("embed_ptm: qubit index out of range");
        if (used[static_cast<std::size_t>(q)]) throw DimensionError("embed_ptm: repeated qubit");
        used[static_cast<std::size_t>(q)] = true;
    }

    const int arity = m.n_in;
    const std::size_t N = pow4(n0);
    RMat out = RMat::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));

    // Per-qubit base-4 digit extraction; digit of qubit q sits at shift 2*(n0-1-q).
    auto digit = [n0](std::size_t idx, int q) -> std::size_t {
        return (idx >> (2 * (n0 - 1 - q))) & 3;
    };

    for (std::size_t z = 0; z < N; ++z) {
        // Free wires force z and x to share digits; only 4^arity columns are nonzero.
        std::size_t slot_z = 0;
        for (int a = 0; a < arity; ++a) slot_z = slot_z * 4 + digit(z, qubits[static_cast<std::size_t>(a)]);
        for (std::size_t sx = 0; sx < pow4(arity); ++sx) {
            const double val = m.entries(static_cast<Eigen::Index>(slot_z), static_cast<Eigen::Index>(sx));
            if (val == 0.0) continue;
            std::size_t x = z;
            for (int a = 0; a < arity; ++a) {
                const int q = qubits[static_cast<std::size_t>(a)];
                const std::size_t d = (sx >> (2 * (arity - 1 - a))) & 3;
                const int shift = 2 * (n0 - 1 - q);
                x = (x & ~(std::size_t{3} << shift)) | (d << shift);
            }
            out(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(x)) = val;
        }
    }
    return TransferMatrix(n0, n0, std::move(out));
}

}  // namespace qradem
