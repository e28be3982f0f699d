#pragma once

// Problem data model for robust optimal switching in one state dimension:
// per-regime diffusion dynamics, running rewards, switching costs, discounting,
// box-prior ambiguity radii and (temporary) terminal payoffs.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ambiswitch {

/// Thrown when a problem instance violates a structural invariant.
class model_error : public std::runtime_error {
public:
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Dynamics

/// One-dimensional diffusion dX = b(x) dt + sigma(x) dW for a single regime.
struct DriftDiffusion {
    enum class Kind { GBM, OU, AffineCustom };
    Kind kind = Kind::GBM;

    // GBM: b(x) = rate*x, sigma(x) = vol*x
    double gbm_rate = 0.0;
    double gbm_vol = 0.0;
    // OU: b(x) = speed*(mean - x), sigma(x) = vol
    double ou_speed = 0.0;
    double ou_mean = 0.0;
    double ou_vol = 0.0;
    // AffineCustom: b(x) = b0 + b1*x, sigma(x) = s0 + s1*x
    double b0 = 0.0, b1 = 0.0, s0 = 0.0, s1 = 0.0;

    static DriftDiffusion gbm(double rate, double vol);
    static DriftDiffusion ou(double speed, double mean, double vol);
    static DriftDiffusion affine(double b0, double b1, double s0, double s1);

    double drift(double x) const;
    double sigma(double x) const;

    void check() const;
};

// ---------------------------------------------------------------------------
// Rewards and ambiguity premium

/// Running reward psi for one regime: Zero, x^p, or c0 + c1*x.
struct PsiSpec {
    enum class Kind { Zero, Power, Affine };
    Kind kind = Kind::Zero;
    double power = 0.5;          // exponent p in (0,1), Power only
    double c0 = 0.0, c1 = 0.0;   // Affine only

    static PsiSpec zero() { return {}; }
    static PsiSpec power_reward(double p);
    static PsiSpec affine(double c0, double c1);

    double operator()(double x) const;
    void check() const;
};

/// Ambiguity premium phi for one regime: Zero or c0 + c1*x.
struct PhiSpec {
    enum class Kind { Zero, Affine };
    Kind kind = Kind::Zero;
    double c0 = 0.0, c1 = 0.0;

    static PhiSpec zero() { return {}; }
    static PhiSpec affine(double c0, double c1);

    double operator()(double x) const;
    bool is_zero() const { return kind == Kind::Zero; }
};

struct RewardSpec {
    std::vector<PsiSpec> psi;  // one per regime
    std::vector<PhiSpec> phi;  // one per regime
};

/// Per-regime box prior radii: Theta^{x,i} = [-kappa_i, kappa_i].
struct AmbiguitySpec {
    std::vector<double> kappa;

    bool all_zero() const;
    void check() const;
};

// ---------------------------------------------------------------------------
// Switching costs

/// Switching cost c_{i,j}(x): either a constant I x I matrix (zero diagonal)
/// or the two-regime slippage pair c12 = e^x(1+K), c21 = -e^x(1-K).
struct CostSpec {
    enum class Kind { ConstantMatrix, Slippage };
    Kind kind = Kind::ConstantMatrix;

    std::vector<double> matrix;  // row-major I x I, ConstantMatrix only
    double slippage = 0.0;       // K in (0,1), Slippage only

    static CostSpec constant_matrix(int regimes, std::vector<double> m);
    static CostSpec slippage_costs(double K);

    double operator()(int from, int to, double x) const;
    int regimes_hint() const;  // 2 for Slippage, sqrt(size) for matrix
    void check(int regimes) const;

private:
    int matrix_dim_ = 0;
};

// ---------------------------------------------------------------------------
// Discount, horizon, terminal

struct DiscountSpec {
    double rate = 0.0;  // constant rho >= 0
};

struct Horizon {
    enum class Kind { Finite, Infinite };
    Kind kind = Kind::Infinite;
    double T = 0.0;  // Finite only

    static Horizon finite(double T);
    static Horizon infinite() { return {}; }
    bool is_finite() const { return kind == Kind::Finite; }
};

/// Terminal payoff g(x,i).  For finite horizons this is the terminal reward;
/// for infinite horizons it is the temporary terminal used by the
/// T-convergence cross check.
struct TerminalSpec {
    enum class Kind { Zero, BuyLow, CustomGrid };
    Kind kind = Kind::Zero;

    // BuyLow: g(x,1) = -e^x(1-K) - C, g(x,i) = -C for i >= 2.
    double buylow_K = 0.0;
    double buylow_C = 0.0;

    // CustomGrid: per-regime piecewise-linear values on shared abscissae,
    // extended by the edge value outside [xs.front(), xs.back()].
    std::vector<double> xs;
    std::vector<std::vector<double>> values;  // [regime][node]

    static TerminalSpec zero() { return {}; }
    static TerminalSpec buy_low(double K, double C);
    static TerminalSpec custom(std::vector<double> xs,
                               std::vector<std::vector<double>> values);
    static TerminalSpec constants(const std::vector<double>& g_per_regime);

    double operator()(double x, int regime) const;
    void check(int regimes) const;
};

/// Moment-estimate constants for the growth bounds.  The underlying constants
/// are existential, so these are user inputs; defaults C_qX = 1 and C_q = rho.
struct MomentConstants {
    double q = 1.0;     // polynomial growth exponent, q >= 1
    double C_qX = 1.0;  // spatial constant
    double C_q = 0.0;   // exponential-rate constant; 0 means "use rho"
};

// ---------------------------------------------------------------------------
// Full problem

/// A complete optimal switching problem instance under box-prior drift
/// ambiguity.  Immutable after construction; cheap to copy and thread-safe to
/// share.
struct SwitchingProblem {
    int regimes = 1;
    std::vector<DriftDiffusion> dynamics;  // one per regime
    RewardSpec reward;
    AmbiguitySpec ambiguity;
    CostSpec costs;
    DiscountSpec discount;
    Horizon horizon;
    TerminalSpec terminal;
    MomentConstants moments;

    double drift(double x, int regime) const { return dynamics[regime].drift(x); }
    double sigma(double x, int regime) const { return dynamics[regime].sigma(x); }
    double psi(double x, int regime) const { return reward.psi[regime](x); }
    double phi(double x, int regime) const { return reward.phi[regime](x); }
    double cost(int from, int to, double x) const { return costs(from, to, x); }
    double kappa(int regime) const { return ambiguity.kappa[regime]; }
    double rho() const { return discount.rate; }
    double terminal_value(double x, int regime) const { return terminal(x, regime); }
    bool phi_all_zero() const;

    /// Structural invariants: I >= 1, spec sizes match, sigma_i > 0 on the
    /// given working domain, zero cost diagonal, T > 0 / rho > 0 per horizon.
    void check(double x_lo, double x_hi) const;
};

/// Fund-selection instance of the two-regime GBM problem (power reward,
/// constant costs, infinite horizon).
SwitchingProblem make_fund_selection_problem(double b1, double b2, double sigma1,
                                             double sigma2, double p, double rho,
                                             double c12, double c21, double kappa1,
                                             double kappa2);

/// Buy-low-sell-high instance: two regimes sharing one OU log-price, zero
/// rewards, slippage costs, common ambiguity radius.  The temporary terminal
/// constant C is resolved later (terminal kind BuyLow with C = 0 placeholder
/// unless supplied).
SwitchingProblem make_buy_low_sell_high_problem(double a, double b, double sigma,
                                                double rho, double K, double kappa,
                                                double terminal_C = 0.0);

}  // namespace ambiswitch
