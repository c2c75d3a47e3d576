#include "qradem/resource_norms.hpp"

#include <Eigen/QR>
#include <cmath>

#include "qradem/random_ops.hpp"

namespace qradem {

double group_norm(const TransferMatrix& m, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw ParameterError("group_norm: p and q must be positive (q may be inf)");

    const Eigen::Index rows = m.entries.rows();
    auto row_norm = [&](Eigen::Index i) -> double {
        if (std::isinf(p)) return m.entries.row(i).cwiseAbs().maxCoeff();
        double acc = 0.0;
        for (Eigen::Index j = 0; j < m.entries.cols(); ++j)
            acc += std::pow(std::abs(m.entries(i, j)), p);
        return std::pow(acc, 1.0 / p);
    };

    if (std::isinf(q)) {
        double best = 0.0;
        for (Eigen::Index i = 0; i < rows; ++i) best = std::max(best, row_norm(i));
        return best;
    }
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) acc += std::pow(row_norm(i), q);
    return std::pow(acc / static_cast<double>(rows), 1.0 / q);
}

double noisy_mu(double mu_ij, double eps_ij, bool saturated) {
    if (mu_ij < 1.0) throw ParameterError("noisy_mu: mu must be >= 1");
    if (eps_ij < 0.0 || eps_ij > 0.25) throw ParameterError("noisy_mu: epsilon must lie in [0, 1/4]");
    return saturated ? (1.0 - 4.0 * eps_ij) * mu_ij : 1.0;
}

CMat random_unitary(int n, Rng& rng) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMat g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
}

MixedUnitaryChannel random_mixed_unitary(int n, int count, double total_p, Rng& rng) {
    std::vector<CMat> us;
    std::vector<double> ps;
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        us.push_back(random_unitary(n, rng));
        const double w = rng.uniform() + 1e-3;
        ps.push_back(w);
        sum += w;
    }
    for (double& p : ps) p *= total_p / sum;
    return MixedUnitaryChannel(n, std::move(us), std::move(ps));
}

namespace {

// PTM of n-fold depolarizing noise: diagonal (1-4eps)^w(z).
RMat depol_layer(int n, double eps) {
    const auto dim = static_cast<Eigen::Index>(pow4(n));
    RMat d = RMat::Zero(dim, dim);
    for (Eigen::Index z = 0; z < dim; ++z)
        d(z, z) = std::pow(1.0 - 4.0 * eps, pauli_weight(static_cast<std::size_t>(z), n));
    return d;
}

}  // namespace

bool saturation_probe(double mu, double eps, int n, int n_samples, std::uint64_t seed) {
    if (mu < 1.0) throw ParameterError("saturation_probe: mu must be >= 1");
    if (eps < 0.0 || eps > 0.25) throw ParameterError("saturation_probe: epsilon in [0, 1/4]");
    Rng rng(seed);
    const RMat noise = depol_layer(n, eps);
    const auto dim = static_cast<Eigen::Index>(pow4(n));
    for (int s = 0; s < n_samples; ++s) {
        const MixedUnitaryChannel ch = random_mixed_unitary(n, 2 + static_cast<int>(rng.uniform_int(3)), 0.9 * rng.uniform(), rng);
        const RMat base = transfer_matrix(ch).entries;
        // Blend toward the identity until the norm constraint holds; the
        // family (1-t)·id + t·ch interpolates norms monotonically enough for
        // a bisection to land inside the feasible set.
        auto norm_at = [&](double t) {
            TransferMatrix m(n, n, ((1.0 - t) * RMat::Identity(dim, dim) + t * base).eval());
            return group_norm(m, 1.0, kInfQ);
        };
        double t_hi = 1.0;
        if (norm_at(1.0) > mu) {
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 50; ++it) {
                const double mid = 0.5 * (lo + hi);
                (norm_at(mid) <= mu ? lo : hi) = mid;
            }
            t_hi = lo;
        }
        const double t = t_hi * rng.uniform();
        const RMat blended = (1.0 - t) * RMat::Identity(dim, dim) + t * base;
        TransferMatrix noisy(n, n, (noise * blended).eval());
        if (group_norm(noisy, 1.0, kInfQ) > 1.0 + 1e-12) return true;
    }
    return false;
}

double corollary_bound(const ResourceVector& mu_eps, int n0, int m, const RepVector& alpha,
                       const std::vector<RepVector>& f_inputs) {
    if (f_inputs.empty()) throw ParameterError("corollary_bound: sample list must be nonempty");
    if (m != static_cast<int>(f_inputs.size()))
        throw ParameterError("corollary_bound: m must equal the sample count");
    if (n0 < 1) throw ParameterError("corollary_bound: n0 must be >= 1");

    double prod = 1.0;
    for (double mu : mu_eps.mu) prod *= mu;
    double max_inf = 0.0;
    for (const auto& f : f_inputs) max_inf = std::max(max_inf, f.linf_norm());
    return prod * std::sqrt(8.0 * n0 / static_cast<double>(m)) * alpha.l1_norm() * max_inf;
}

}  // namespace qradem
