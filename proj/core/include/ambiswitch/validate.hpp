#pragma once

// Machine checks of the standing assumptions: non-free-loop cycles, the
// strong triangular cost condition, terminal consistency (finite and
// temporary/infinite), and the box-prior support function.
//
// All x-dependent conditions are verified on a user-supplied finite grid.
// Validators are pure and deterministic.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ambiswitch/model.hpp"

namespace ambiswitch {

enum class CheckStatus { Pass, Fail, Skipped };

struct ValidationCheck {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
    // Worst witness: the grid point / cycle where the margin is smallest.
    double witness_x = 0.0;
    std::vector<int> witness_cycle;  // regime cycle or (k,i,j) triple
    double margin = 0.0;             // smallest margin found (negative = violation)
    bool advisory = false;           // advisory checks never hard-fail validation

    bool passed() const { return status == CheckStatus::Pass; }
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    void add(ValidationCheck c) { checks.push_back(std::move(c)); }
    bool hard_failure() const;
    const ValidationCheck* find(const std::string& name) const;
};

/// Empirical cost estimate hook used by the Remark-style advisory fallback of
/// the strong triangular check: returns the Monte Carlo estimate of the
/// discounted total cost magnitude for a probe strategy, or nullopt when no
/// estimator is wired in.
using CostEstimateHook = std::function<std::optional<double>(const SwitchingProblem&)>;

/// Every simple regime cycle must carry strictly positive total cost at every
/// grid point.  Cycles are enumerated exhaustively for I <= 6; for larger I
/// only 2- and 3-cycles are checked (documented limitation).
ValidationCheck validate_non_free_loop(const SwitchingProblem& problem,
                                       const std::vector<double>& grid);

/// Strong triangular condition: with N the set of regimes with some negative
/// outgoing cost and C_i = -min_{j,x} c_{i,j}(x)/(1+|x|^q), requires
///   c_{k,j}(x) <= c_{k,i}(x) - C_i (1 + C_qX (1+|x|^q) e^{C_q (T-t)})
/// for all i in N, j,k != i and grid x.  Finite horizons use the exponential
/// factor at t = 0; infinite horizons use the C_qX^inf form (no exponential).
/// On failure, the weaker sufficient condition (bounded expected total cost)
/// is evaluated empirically through `hook` and reported as advisory.
std::vector<ValidationCheck> validate_strong_triangular(
    const SwitchingProblem& problem, const std::vector<double>& grid, double q,
    double C_qX, double C_q, double T, const CostEstimateHook& hook = {});

/// Terminal consistency: g(x,i) >= max_j {g(x,j) - c_{i,j}(x)} on the grid.
/// For infinite horizons additionally checks g <= 0 and the differential
/// sufficient condition  L^i g - rho g - g' sigma theta >= 0 at theta = +/-kappa_i
/// (second derivatives of g taken by central differences on the grid).
std::vector<ValidationCheck> validate_terminal(const SwitchingProblem& problem,
                                               const std::vector<double>& grid);

/// Non-negative reward condition of the stationary problem:
/// psi(x,i) - varsigma(x,i,0) >= 0 on the grid.
ValidationCheck validate_nonnegative_reward(const SwitchingProblem& problem,
                                            const std::vector<double>& grid);

/// Support function of the box prior and its maximizer:
///   varsigma(x,i,z) = max_{|theta| <= kappa_i} theta (phi(x,i) + z)
///                   = kappa_i |phi(x,i) + z|,
/// attained at theta* = kappa_i sign(phi + z) with sign(0) := +1.
struct SigmaSupport {
    double value = 0.0;
    double theta_star = 0.0;
};
SigmaSupport sigma_support(const SwitchingProblem& problem, int regime, double x,
                           double z);

/// Uniform default validation grid (401 points) over [lo, hi].
std::vector<double> default_validation_grid(double lo, double hi, int n = 401);

}  // namespace ambiswitch
