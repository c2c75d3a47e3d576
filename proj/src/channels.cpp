#include "qradem/channels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qradem {

namespace {

constexpr double kUnitaryTol = 1e-12;

void check_unitary(const CMat& u, int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (u.rows() != dim || u.cols() != dim)
        throw DimensionError("channel: unitary dimension does not match qubit count");
    const CMat res = u.adjoint() * u - CMat::Identity(dim, dim);
    if (res.cwiseAbs().maxCoeff() > kUnitaryTol)
        throw ParameterError("channel: matrix is not unitary within 1e-12");
}

// Canonical phase: scale so the first entry with |.| > tol is real positive.
CMat canonical_phase(const CMat& u) {
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            const Complex v = u(r, c);
            if (std::abs(v) > 1e-9) return u * (std::abs(v) / v);
        }
    }
    return u;
}

std::string matrix_key(const CMat& u) {
    std::ostringstream os;
    os.precision(9);
    for (Eigen::Index r = 0; r < u.rows(); ++r)
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            double re = u(r, c).real(), im = u(r, c).imag();
            if (std::abs(re) < 5e-10) re = 0.0;
            if (std::abs(im) < 5e-10) im = 0.0;
            os << std::fixed << re << ',' << im << ';';
        }
    return os.str();
}

}  // namespace

MixedUnitaryChannel::MixedUnitaryChannel(int n_, std::vector<CMat> us, std::vector<double> ps)
    : n(n_), unitaries(std::move(us)), probs(std::move(ps)) {
    if (n < 1 || n > kMaxQubits) throw DimensionError("channel: invalid qubit count");
    if (unitaries.size() != probs.size())
        throw DimensionError("channel: unitary and probability counts differ");
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw ParameterError("channel: probabilities must be nonnegative");
        sum += p;
    }
    if (sum > 1.0 + 1e-12) throw ParameterError("channel: probabilities sum to more than 1");
    for (const auto& u : unitaries) check_unitary(u, n);
}

double MixedUnitaryChannel::prob_sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

QuasiChannel::QuasiChannel(int n_, std::vector<CMat> us, std::vector<double> vs)
    : n(n_), unitaries(std::move(us)), coeffs(std::move(vs)) {
    if (n < 1 || n > kMaxQubits) throw DimensionError("quasi-channel: invalid qubit count");
    if (unitaries.size() != coeffs.size())
        throw DimensionError("quasi-channel: unitary and coefficient counts differ");
    double sum = 0.0;
    for (double v : coeffs) sum += v;
    if (std::abs(sum - 1.0) > 1e-10)
        throw ParameterError("quasi-channel: coefficients must sum to 1 for a trace-preserving map");
    for (const auto& u : unitaries) check_unitary(u, n);
}

double QuasiChannel::l1_weight() const {
    double s = 0.0;
    for (double v : coeffs) s += std::abs(v);
    return s;
}

MixedUnitaryChannel depolarizing(double eps) {
    if (eps < 0.0 || eps > 0.25)
        throw ParameterError("depolarizing: epsilon must lie in [0, 1/4]");
    if (eps == 0.0) return MixedUnitaryChannel(1, {}, {});
    return MixedUnitaryChannel(1, {pauli_mats::X(), pauli_mats::Y(), pauli_mats::Z()},
                               {eps, eps, eps});
}

MixedUnitaryChannel dephasing(double eps) {
    if (eps < 0.0 || eps > 0.5)
        throw ParameterError("dephasing: epsilon must lie in [0, 1/2]");
    if (eps == 0.0) return MixedUnitaryChannel(1, {}, {});
    return MixedUnitaryChannel(1, {pauli_mats::Z()}, {eps});
}

QuasiChannel recovery_depolarizing(double eps) {
    if (eps < 0.0 || eps >= 0.25)
        throw ParameterError("recovery_depolarizing: epsilon must lie in [0, 1/4); the map is singular at 1/4");
    const double denom = 1.0 - 4.0 * eps;
    return QuasiChannel(1, {pauli_mats::I(), pauli_mats::X(), pauli_mats::Y(), pauli_mats::Z()},
                        {1.0 + 3.0 * eps / denom, -eps / denom, -eps / denom, -eps / denom});
}

QuasiChannel recovery_dephasing(double eps) {
    if (eps < 0.0 || eps >= 0.5)
        throw ParameterError("recovery_dephasing: epsilon must lie in [0, 1/2)");
    const double denom = 1.0 - 2.0 * eps;
    return QuasiChannel(1, {pauli_mats::I(), pauli_mats::Z()},
                        {(1.0 - eps) / denom, -eps / denom});
}

TransferMatrix transfer_matrix(const MixedUnitaryChannel& ch) {
    const auto dim = static_cast<Eigen::Index>(pow4(ch.n));
    RMat m = (1.0 - ch.prob_sum()) * RMat::Identity(dim, dim);
    for (std::size_t i = 0; i < ch.unitaries.size(); ++i)
        m += ch.probs[i] * transfer_matrix(ch.unitaries[i]).entries;
    return TransferMatrix(ch.n, ch.n, std::move(m));
}

TransferMatrix transfer_matrix(const QuasiChannel& ch) {
    const auto dim = static_cast<Eigen::Index>(pow4(ch.n));
    RMat m = RMat::Zero(dim, dim);
    for (std::size_t i = 0; i < ch.unitaries.size(); ++i)
        m += ch.coeffs[i] * transfer_matrix(ch.unitaries[i]).entries;
    return TransferMatrix(ch.n, ch.n, std::move(m));
}

bool phase_equal(const CMat& a, const CMat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    const double dim = static_cast<double>(a.rows());
    return std::abs(std::abs((a.adjoint() * b).trace()) - dim) < tol * dim;
}

CompatibilityResult is_compatible(const MixedUnitaryChannel& channel,
                                  const std::vector<CMat>& gate_set) {
    if (gate_set.empty()) throw ParameterError("is_compatible: gate set must be nonempty");
    for (const auto& g : gate_set)
        if (g.rows() != (Eigen::Index{1} << channel.n))
            throw DimensionError("is_compatible: gate set qubit count differs from channel");

    CompatibilityWitness w;
    w.identity_weight = 1.0 - channel.prob_sum();
    for (std::size_t i = 0; i < channel.unitaries.size(); ++i) {
        int match = -1;
        for (std::size_t g = 0; g < gate_set.size(); ++g) {
            if (phase_equal(channel.unitaries[i], gate_set[g])) {
                match = static_cast<int>(g);
                break;
            }
        }
        if (match < 0) {
            return Incompatible{static_cast<int>(i),
                                "unitary component " + std::to_string(i) +
                                    " matches no gate-set element up to global phase"};
        }
        w.decomposition.emplace_back(match, channel.probs[i]);
    }
    return w;
}

TransferMatrix reconstruct_from_witness(const CompatibilityWitness& w,
                                        const std::vector<CMat>& gate_set) {
    if (gate_set.empty()) throw ParameterError("reconstruct_from_witness: empty gate set");
    const int n = [&] {
        Eigen::Index d = gate_set.front().rows();
        int k = 0;
        while (d > 1) {
            d /= 2;
            ++k;
        }
        return k;
    }();
    const auto dim = static_cast<Eigen::Index>(pow4(n));
    RMat m = w.identity_weight * RMat::Identity(dim, dim);
    for (const auto& [gi, p] : w.decomposition)
        m += p * transfer_matrix(gate_set[static_cast<std::size_t>(gi)]).entries;
    return TransferMatrix(n, n, std::move(m));
}

const std::vector<CMat>& clifford1() {
    static const std::vector<CMat> group = [] {
        CMat h(2, 2);
        h << 1, 1, 1, -1;
        h /= std::sqrt(2.0);
        CMat s(2, 2);
        s << 1, 0, 0, Complex(0, 1);

        std::map<std::string, CMat> seen;
        std::vector<CMat> frontier{canonical_phase(CMat::Identity(2, 2))};
        seen.emplace(matrix_key(frontier.front()), frontier.front());
        while (!frontier.empty()) {
            std::vector<CMat> next;
            for (const auto& u : frontier) {
                for (const CMat* g : {&h, &s}) {
                    CMat v = canonical_phase(*g * u);
                    auto key = matrix_key(v);
                    if (seen.emplace(key, v).second) next.push_back(std::move(v));
                }
            }
            frontier = std::move(next);
        }
        std::vector<CMat> out;
        out.reserve(seen.size());
        for (auto& [key, u] : seen) out.push_back(std::move(u));
        return out;
    }();
    return group;
}

MixedUnitaryChannel ChannelSpec::to_mixed_unitary() const {
    if (kind == "depolarizing") return depolarizing(epsilon);
    if (kind == "dephasing") return dephasing(epsilon);
    if (kind == "mixed_unitary") {
        if (unitaries.empty()) throw ParameterError("mixed_unitary channel spec has no unitaries");
        Eigen::Index d = unitaries.front().rows();
        int n = 0;
        while (d > 1) {
            d /= 2;
            ++n;
        }
        return MixedUnitaryChannel(n, unitaries, coeffs);
    }
    throw ParameterError("channel spec of kind '" + kind + "' is not mixed-unitary");
}

QuasiChannel ChannelSpec::to_quasi() const {
    if (kind != "quasi") throw ParameterError("channel spec of kind '" + kind + "' is not quasi");
    if (unitaries.empty()) throw ParameterError("quasi channel spec has no unitaries");
    Eigen::Index d = unitaries.front().rows();
    int n = 0;
    while (d > 1) {
        d /= 2;
        ++n;
    }
    return QuasiChannel(n, unitaries, coeffs);
}

TransferMatrix ChannelSpec::ptm() const {
    if (is_quasi()) return transfer_matrix(to_quasi());
    return transfer_matrix(to_mixed_unitary());
}

int ChannelSpec::qubits() const {
    if (kind == "depolarizing" || kind == "dephasing") return 1;
    if (unitaries.empty()) throw ParameterError("channel spec has no unitaries");
    Eigen::Index d = unitaries.front().rows();
    int n = 0;
    while (d > 1) {
        d /= 2;
        ++n;
    }
    return n;
}

double ChannelSpec::prob_sum() const {
    return to_mixed_unitary().prob_sum();
}

std::string ChannelSpec::id() const {
    std::ostringstream os;
    os << kind;
    if (kind == "depolarizing" || kind == "dephasing") os << '(' << epsilon << ')';
    return os.str();
}

namespace {

nlohmann::json unitary_to_json(const CMat& u) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < u.cols(); ++c)
            row.push_back({u(r, c).real(), u(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMat unitary_from_json(const nlohmann::json& j) {
    const auto nrows = j.size();
    if (nrows == 0) throw ConfigError("channel spec: empty unitary");
    const auto ncols = j.at(0).size();
    CMat u(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
    for (std::size_t r = 0; r < nrows; ++r) {
        if (j.at(r).size() != ncols) throw ConfigError("channel spec: ragged unitary rows");
        for (std::size_t c = 0; c < ncols; ++c) {
            const auto& cell = j.at(r).at(c);
            if (!cell.is_array() || cell.size() != 2)
                throw ConfigError("channel spec: unitary entries must be [re, im] pairs");
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    return u;
}

}  // namespace

void to_json(nlohmann::json& j, const ChannelSpec& spec) {
    j = nlohmann::json{{"kind", spec.kind}};
    if (spec.kind == "depolarizing" || spec.kind == "dephasing") {
        j["epsilon"] = spec.epsilon;
    } else {
        nlohmann::json us = nlohmann::json::array();
        for (const auto& u : spec.unitaries) us.push_back(unitary_to_json(u));
        j["unitaries"] = std::move(us);
        j["coeffs"] = spec.coeffs;
    }
}

void from_json(const nlohmann::json& j, ChannelSpec& spec) {
    spec = ChannelSpec{};
    if (!j.contains("kind")) throw ConfigError("channel spec: missing field 'kind'");
    spec.kind = j.at("kind").get<std::string>();
    if (spec.kind == "depolarizing" || spec.kind == "dephasing") {
        if (!j.contains("epsilon")) throw ConfigError("channel spec: missing field 'epsilon'");
        spec.epsilon = j.at("epsilon").get<double>();
    } else if (spec.kind == "mixed_unitary" || spec.kind == "quasi") {
        if (!j.contains("unitaries") || !j.contains("coeffs"))
            throw ConfigError("channel spec: '" + spec.kind + "' needs 'unitaries' and 'coeffs'");
        for (const auto& u : j.at("unitaries")) spec.unitaries.push_back(unitary_from_json(u));
        spec.coeffs = j.at("coeffs").get<std::vector<double>>();
    } else {
        throw ConfigError("channel spec: unknown kind '" + spec.kind + "'");
    }
}

}  // namespace qradem
