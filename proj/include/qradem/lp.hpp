#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qradem/channels.hpp"
#include "qradem/pauli.hpp"

namespace qradem {

/// min c^T x  s.t.  A x = b,  x >= 0.
struct LinearProgram {
    RMat A;
    RVec b;
    RVec c;
};

struct LpOptimum {
    double value = 0.0;
    RVec x;
    /// Dual multipliers of the equality rows; b^T dual equals value at the
    /// optimum (strong duality sanity handle).
    RVec dual;
};

struct LpInfeasible {
    double infeasibility = 0.0;  // phase-1 objective
    /// Farkas certificate: farkas^T A <= 0 componentwise, farkas^T b > 0.
    RVec farkas;
};

using LpOutcome = std::variant<LpOptimum, LpInfeasible>;

/// Dense two-phase primal simplex with Bland's anti-cycling rule, so results
/// are bit-reproducible for identical inputs. Throws UnboundedError when the
/// objective is unbounded below and SolverError on numerical breakdown
/// (including a final feasibility residue above 1e-9).
LpOutcome lp_solve(const LinearProgram& lp);

struct RecoveryDecomposition {
    double l1 = 1.0;
    RVec v;  // signed coefficients over the gate set
};

/// Minimal sum |v_i| with sum_i v_i M^{U_i} = (M^channel)^-1 over the given
/// gate set; nullopt when no decomposition exists over that set.
std::optional<RecoveryDecomposition> l1_recovery_norm(const MixedUnitaryChannel& channel,
                                                      const std::vector<CMat>& gate_set);

struct Outside {
    double infeasibility = 0.0;
    RVec farkas;
};

/// Convex weights reproducing `target` over the hull, or an infeasibility
/// certificate.
std::variant<RVec, Outside> hull_membership(const TransferMatrix& target,
                                            const std::vector<TransferMatrix>& hull);

struct RobustnessResult {
    double gamma = 0.0;
    bool feasible = true;       // false: target outside the affine span
    int circuit_index = -1;     // attaining element of the outer max
    std::string circuit_id;
    RVec a_weights;             // convex weights, sum 1
    RVec b_weights;             // convex weights, sum 1
    double recon_residual = 0.0;  // max-norm error of the decomposition identity
};

/// Minimal gamma with c_k = (1+gamma)·A - gamma·B for A, B in the hull,
/// solved as min sum(b) over c_k = sum(a_i - b_i) M_i, sum a - sum b = 1,
/// a, b >= 0. This single-LP form is equivalent to the minimal mixing weight
/// lambda with (c_k + lambda·C')/(1+lambda) inside the hull.
RobustnessResult free_robustness(const TransferMatrix& c_k,
                                 const std::vector<TransferMatrix>& hull_k1);

/// Outer max of free_robustness over class_k; deterministic tiebreak on the
/// smallest attaining index. Duplicate transfer matrices are solved once.
RobustnessResult gamma_class(const std::vector<TransferMatrix>& class_k,
                             const std::vector<TransferMatrix>& class_k1,
                             const std::vector<std::string>* ids = nullptr);

}  // namespace qradem
