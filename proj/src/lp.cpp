#include "qradem/lp.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace qradem {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
constexpr double kFeasTol = 1e-9;

struct Tableau {
    // rows 0..m-1: constraints; columns 0..n-1 original, n..n+m-1 artificial,
    // last column rhs. Cost row kept separately.
    RMat body;
    RVec cost;      // reduced costs, length n+m
    double cost_rhs = 0.0;
    std::vector<int> basis;       // per row: basic column
    std::vector<bool> row_active;
    int m = 0, n = 0;

    int total_cols() const { return n + m; }

    void pivot(int row, int col) {
        const double piv = body(row, col);
        body.row(row) /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == row || !row_active[static_cast<std::size_t>(i)]) continue;
            const double f = body(i, col);
            if (f != 0.0) body.row(i) -= f * body.row(row);
        }
        const double fc = cost[col];
        if (fc != 0.0) {
            cost -= fc * body.row(row).head(total_cols());
            cost_rhs -= fc * body(row, total_cols());
        }
        basis[static_cast<std::size_t>(row)] = col;
    }

    // Bland: entering = smallest-index column with negative reduced cost;
    // leaving = min ratio with smallest basic index on ties.
    // allow_artificial_entering is always false; artificials never re-enter.
    bool iterate(int max_entering_col, std::size_t max_iters, const char* phase) {
        std::size_t iters = 0;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < max_entering_col; ++j) {
                if (cost[j] < -kCostTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m; ++i) {
                if (!row_active[static_cast<std::size_t>(i)]) continue;
                const double a = body(i, enter);
                if (a <= kPivotTol) continue;
                const double ratio = body(i, total_cols()) / a;
                if (leave < 0 || ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded direction

            pivot(leave, enter);
            if (++iters > max_iters)
                throw SolverError(std::string("lp_solve: iteration cap hit in ") + phase +
                                  " (" + std::to_string(max_iters) + " pivots)");
        }
    }
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.A.rows());
    const int n = static_cast<int>(lp.A.cols());
    if (lp.b.size() != m || lp.c.size() != n)
        throw DimensionError("lp_solve: inconsistent LP dimensions");
    if (!lp.A.allFinite() || !lp.b.allFinite() || !lp.c.allFinite())
        throw ParameterError("lp_solve: LP data must be finite");

    Tableau t;
    t.m = m;
    t.n = n;
    t.body.resize(m, n + m + 1);
    t.basis.resize(static_cast<std::size_t>(m));
    t.row_active.assign(static_cast<std::size_t>(m), true);
    RVec flip = RVec::Ones(m);
    for (int i = 0; i < m; ++i) {
        const double sgn = (lp.b[i] < 0.0) ? -1.0 : 1.0;
        flip[i] = sgn;
        t.body.block(i, 0, 1, n) = sgn * lp.A.row(i);
        t.body.block(i, n, 1, m).setZero();
        t.body(i, n + i) = 1.0;
        t.body(i, n + m) = sgn * lp.b[i];
        t.basis[static_cast<std::size_t>(i)] = n + i;
    }

    // Phase 1: minimize the artificial sum. Reduced costs of artificials are
    // 0 in the starting basis; originals pick up -sum of their column.
    t.cost = RVec::Zero(n + m);
    t.cost_rhs = 0.0;
    for (int i = 0; i < m; ++i) {
        t.cost.head(n) -= t.body.block(i, 0, 1, n).transpose();
        t.cost_rhs -= t.body(i, n + m);
    }
    const std::size_t max_iters = 20000 + 100 * static_cast<std::size_t>(m + n);
    if (!t.iterate(n, max_iters, "phase 1"))
        throw SolverError("lp_solve: phase 1 reported an unbounded direction");

    const double phase1_obj = -t.cost_rhs;
    if (phase1_obj > kFeasTol) {
        // Farkas certificate from the phase-1 duals: y = B^-T c1_B over the
        // flipped system, then unflip.
        RVec y = RVec::Zero(m);
        RMat basis_cols(m, m);
        RVec cb(m);
        for (int i = 0; i < m; ++i) {
            const int col = t.basis[static_cast<std::size_t>(i)];
            for (int r = 0; r < m; ++r)
                basis_cols(r, i) = (col < n) ? flip[r] * lp.A(r, col) : ((r == col - n) ? 1.0 : 0.0);
            cb[i] = (col >= n) ? 1.0 : 0.0;
        }
        y = basis_cols.transpose().colPivHouseholderQr().solve(cb);
        for (int i = 0; i < m; ++i) y[i] *= flip[i];
        return LpInfeasible{phase1_obj, std::move(y)};
    }

    // Drive artificials that remain basic at zero out of the basis; rows with
    // no usable original pivot are redundant and go inactive.
    for (int i = 0; i < m; ++i) {
        if (t.basis[static_cast<std::size_t>(i)] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (std::abs(t.body(i, j)) > 1e-9) {
                col = j;
                break;
            }
        }
        if (col >= 0)
            t.pivot(i, col);
        else
            t.row_active[static_cast<std::size_t>(i)] = false;
    }

    // Phase 2 over the original objective.
    t.cost = RVec::Zero(n + m);
    t.cost.head(n) = lp.c;
    t.cost_rhs = 0.0;
    for (int i = 0; i < m; ++i) {
        if (!t.row_active[static_cast<std::size_t>(i)]) continue;
        const int col = t.basis[static_cast<std::size_t>(i)];
        if (col < n && lp.c[col] != 0.0) {
            t.cost -= lp.c[col] * t.body.row(i).head(n + m);
            t.cost_rhs -= lp.c[col] * t.body(i, n + m);
        }
    }
    if (!t.iterate(n, max_iters, "phase 2"))
        throw UnboundedError("lp_solve: objective is unbounded below");

    RVec x = RVec::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (!t.row_active[static_cast<std::size_t>(i)]) continue;
        const int col = t.basis[static_cast<std::size_t>(i)];
        if (col < n) x[col] = t.body(i, n + m);
    }

    const double residue = (lp.A * x - lp.b).lpNorm<Eigen::Infinity>();
    if (!x.allFinite() || residue > kFeasTol) {
        std::ostringstream os;
        os << "lp_solve: numerical breakdown, feasibility residue " << residue;
        throw SolverError(os.str());
    }

    // Duals from the final basis restricted to active rows.
    std::vector<int> active;
    for (int i = 0; i < m; ++i)
        if (t.row_active[static_cast<std::size_t>(i)]) active.push_back(i);
    const int ma = static_cast<int>(active.size());
    RMat bsub(ma, ma);
    RVec cb(ma);
    for (int k = 0; k < ma; ++k) {
        const int col = t.basis[static_cast<std::size_t>(active[static_cast<std::size_t>(k)])];
        for (int r = 0; r < ma; ++r) {
            const int row = active[static_cast<std::size_t>(r)];
            bsub(r, k) = (col < n) ? lp.A(row, col) : 0.0;
        }
        cb[k] = (col < n) ? lp.c[col] : 0.0;
    }
    RVec y_active = bsub.transpose().colPivHouseholderQr().solve(cb);
    RVec dual = RVec::Zero(m);
    for (int k = 0; k < ma; ++k) dual[active[static_cast<std::size_t>(k)]] = y_active[k];

    return LpOptimum{lp.c.dot(x), std::move(x), std::move(dual)};
}

namespace {

RVec vec_ptm(const TransferMatrix& t) {
    RVec v(t.entries.size());
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < t.entries.rows(); ++r)
        for (Eigen::Index c = 0; c < t.entries.cols(); ++c) v[k++] = t.entries(r, c);
    return v;
}

std::string ptm_key(const TransferMatrix& t) {
    std::ostringstream os;
    os.precision(12);
    for (Eigen::Index r = 0; r < t.entries.rows(); ++r)
        for (Eigen::Index c = 0; c < t.entries.cols(); ++c) {
            double v = t.entries(r, c);
            if (std::abs(v) < 5e-13) v = 0.0;
            os << std::fixed << v << ';';
        }
    return os.str();
}

}  // namespace

std::optional<RecoveryDecomposition> l1_recovery_norm(const MixedUnitaryChannel& channel,
                                                      const std::vector<CMat>& gate_set) {
    if (gate_set.empty()) throw ParameterError("l1_recovery_norm: gate set must be nonempty");
    const TransferMatrix m = transfer_matrix(channel);
    Eigen::FullPivLU<RMat> lu(m.entries);
    if (std::abs(lu.determinant()) < 1e-10)
        throw SingularChannelError("l1_recovery_norm: channel transfer matrix is singular");
    const RMat inv = lu.inverse();
    const TransferMatrix target(m.n_in, m.n_out, inv);

    const int g = static_cast<int>(gate_set.size());
    const Eigen::Index dim = target.entries.size();
    LinearProgram lp;
    lp.A.resize(dim, 2 * g);
    for (int i = 0; i < g; ++i) {
        const RVec col = vec_ptm(transfer_matrix(gate_set[static_cast<std::size_t>(i)]));
        lp.A.col(i) = col;
        lp.A.col(g + i) = -col;
    }
    lp.b = vec_ptm(target);
    lp.c = RVec::Ones(2 * g);

    const LpOutcome out = lp_solve(lp);
    if (std::holds_alternative<LpInfeasible>(out)) return std::nullopt;
    const auto& opt = std::get<LpOptimum>(out);
    RecoveryDecomposition dec;
    dec.l1 = opt.value;
    dec.v = opt.x.head(g) - opt.x.tail(g);
    return dec;
}

std::variant<RVec, Outside> hull_membership(const TransferMatrix& target,
                                            const std::vector<TransferMatrix>& hull) {
    if (hull.empty()) throw ParameterError("hull_membership: hull must be nonempty");
    for (const auto& h : hull)
        if (h.n_in != target.n_in || h.n_out != target.n_out)
            throw DimensionError("hull_membership: dimension mismatch");

    const int g = static_cast<int>(hull.size());
    const Eigen::Index dim = target.entries.size();
    LinearProgram lp;
    lp.A.resize(dim + 1, g);
    for (int i = 0; i < g; ++i) {
        lp.A.col(i).head(dim) = vec_ptm(hull[static_cast<std::size_t>(i)]);
        lp.A(dim, i) = 1.0;
    }
    lp.b.resize(dim + 1);
    lp.b.head(dim) = vec_ptm(target);
    lp.b[dim] = 1.0;
    lp.c = RVec::Zero(g);

    const LpOutcome out = lp_solve(lp);
    if (const auto* inf = std::get_if<LpInfeasible>(&out))
        return Outside{inf->infeasibility, inf->farkas};
    return std::get<LpOptimum>(out).x;
}

RobustnessResult free_robustness(const TransferMatrix& c_k,
                                 const std::vector<TransferMatrix>& hull_k1) {
    if (hull_k1.empty()) throw ParameterError("free_robustness: hull must be nonempty");
    for (const auto& h : hull_k1)
        if (h.n_in != c_k.n_in || h.n_out != c_k.n_out)
            throw DimensionError("free_robustness: dimension mismatch");

    // Duplicate hull matrices collapse onto their first occurrence.
    std::map<std::string, int> first;
    std::vector<int> rep;  // representative (deduped) index per hull element
    std::vector<int> rep_to_orig;
    for (int i = 0; i < static_cast<int>(hull_k1.size()); ++i) {
        const auto key = ptm_key(hull_k1[static_cast<std::size_t>(i)]);
        auto [it, inserted] = first.emplace(key, static_cast<int>(rep_to_orig.size()));
        if (inserted) rep_to_orig.push_back(i);
        rep.push_back(it->second);
    }
    const int g = static_cast<int>(rep_to_orig.size());
    const Eigen::Index dim = c_k.entries.size();

    LinearProgram lp;
    lp.A.resize(dim + 1, 2 * g);
    for (int i = 0; i < g; ++i) {
        const RVec col = vec_ptm(hull_k1[static_cast<std::size_t>(rep_to_orig[static_cast<std::size_t>(i)])]);
        lp.A.col(i).head(dim) = col;
        lp.A.col(g + i).head(dim) = -col;
        lp.A(dim, i) = 1.0;
        lp.A(dim, g + i) = -1.0;
    }
    lp.b.resize(dim + 1);
    lp.b.head(dim) = vec_ptm(c_k);
    lp.b[dim] = 1.0;
    lp.c = RVec::Zero(2 * g);
    lp.c.tail(g).setOnes();

    const LpOutcome out = lp_solve(lp);
    RobustnessResult res;
    if (std::holds_alternative<LpInfeasible>(out)) {
        res.feasible = false;
        res.gamma = std::numeric_limits<double>::infinity();
        return res;
    }
    const auto& opt = std::get<LpOptimum>(out);
    res.gamma = std::max(0.0, opt.value);

    RVec a = RVec::Zero(static_cast<Eigen::Index>(hull_k1.size()));
    RVec b = RVec::Zero(static_cast<Eigen::Index>(hull_k1.size()));
    for (int i = 0; i < g; ++i) {
        const auto orig = static_cast<Eigen::Index>(rep_to_orig[static_cast<std::size_t>(i)]);
        a[orig] = opt.x[i];
        b[orig] = opt.x[g + i];
    }
    a /= (1.0 + res.gamma);
    if (res.gamma > 1e-12)
        b /= res.gamma;
    else
        b = a;  // the negative side carries zero weight; any convex vector works
    res.a_weights = std::move(a);
    res.b_weights = std::move(b);

    RMat recon = RMat::Zero(c_k.entries.rows(), c_k.entries.cols());
    for (std::size_t i = 0; i < hull_k1.size(); ++i)
        recon += ((1.0 + res.gamma) * res.a_weights[static_cast<Eigen::Index>(i)] -
                  res.gamma * res.b_weights[static_cast<Eigen::Index>(i)]) *
                 hull_k1[i].entries;
    res.recon_residual = (recon - c_k.entries).cwiseAbs().maxCoeff();
    return res;
}

RobustnessResult gamma_class(const std::vector<TransferMatrix>& class_k,
                             const std::vector<TransferMatrix>& class_k1,
                             const std::vector<std::string>* ids) {
    if (class_k.empty() || class_k1.empty())
        throw ParameterError("gamma_class: both classes must be nonempty");

    std::map<std::string, int> seen;
    RobustnessResult best;
    bool have = false;
    for (int i = 0; i < static_cast<int>(class_k.size()); ++i) {
        const auto key = ptm_key(class_k[static_cast<std::size_t>(i)]);
        if (!seen.emplace(key, i).second) continue;
        RobustnessResult r = free_robustness(class_k[static_cast<std::size_t>(i)], class_k1);
        r.circuit_index = i;
        if (ids && i < static_cast<int>(ids->size())) r.circuit_id = (*ids)[static_cast<std::size_t>(i)];
        if (!have || r.gamma > best.gamma + 1e-15) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

}  // namespace qradem
