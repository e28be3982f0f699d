#include "ambiswitch/model.hpp"

#include <algorithm>
#include <sstream>

namespace ambiswitch {

// --- DriftDiffusion ---------------------------------------------------------

DriftDiffusion DriftDiffusion::gbm(double rate, double vol) {
    DriftDiffusion d;
    d.kind = Kind::GBM;
    d.gbm_rate = rate;
    d.gbm_vol = vol;
    d.check();
    return d;
}

DriftDiffusion DriftDiffusion::ou(double speed, double mean, double vol) {
    DriftDiffusion d;
    d.kind = Kind::OU;
    d.ou_speed = speed;
    d.ou_mean = mean;
    d.ou_vol = vol;
    d.check();
    return d;
}

DriftDiffusion DriftDiffusion::affine(double b0, double b1, double s0, double s1) {
    DriftDiffusion d;
    d.kind = Kind::AffineCustom;
    d.b0 = b0;
    d.b1 = b1;
    d.s0 = s0;
    d.s1 = s1;
    return d;
}

double DriftDiffusion::drift(double x) const {
    switch (kind) {
        case Kind::GBM: return gbm_rate * x;
        case Kind::OU: return ou_speed * (ou_mean - x);
        case Kind::AffineCustom: return b0 + b1 * x;
    }
    return 0.0;
}

double DriftDiffusion::sigma(double x) const {
    switch (kind) {
        case Kind::GBM: return gbm_vol * x;
        case Kind::OU: return ou_vol;
        case Kind::AffineCustom: return s0 + s1 * x;
    }
    return 0.0;
}

void DriftDiffusion::check() const {
    if (kind == Kind::GBM && gbm_vol <= 0.0)
        throw model_error("GBM dynamics require vol > 0");
    if (kind == Kind::OU && (ou_speed <= 0.0 || ou_vol <= 0.0))
        throw model_error("OU dynamics require speed > 0 and vol > 0");
}

// --- PsiSpec / PhiSpec -------------------------------------------------------

PsiSpec PsiSpec::power_reward(double p) {
    PsiSpec s;
    s.kind = Kind::Power;
    s.power = p;
    s.check();
    return s;
}

PsiSpec PsiSpec::affine(double c0, double c1) {
    PsiSpec s;
    s.kind = Kind::Affine;
    s.c0 = c0;
    s.c1 = c1;
    return s;
}

double PsiSpec::operator()(double x) const {
    switch (kind) {
        case Kind::Zero: return 0.0;
        // Power rewards are only meaningful on nonnegative states; clamp so
        // that stray sub-zero Euler states do not produce NaN.
        case Kind::Power: return std::pow(std::max(x, 0.0), power);
        case Kind::Affine: return c0 + c1 * x;
    }
    return 0.0;
}

void PsiSpec::check() const {
    if (kind == Kind::Power && (power <= 0.0 || power >= 1.0))
        throw model_error("power reward exponent must lie in (0,1)");
}

PhiSpec PhiSpec::affine(double c0, double c1) {
    PhiSpec s;
    s.kind = Kind::Affine;
    s.c0 = c0;
    s.c1 = c1;
    return s;
}

double PhiSpec::operator()(double x) const {
    return kind == Kind::Zero ? 0.0 : c0 + c1 * x;
}

// --- AmbiguitySpec -----------------------------------------------------------

bool AmbiguitySpec::all_zero() const {
    return std::all_of(kappa.begin(), kappa.end(), [](double k) { return k == 0.0; });
}

void AmbiguitySpec::check() const {
    for (double k : kappa)
        if (!(k >= 0.0) || !std::isfinite(k))
            throw model_error("ambiguity radii must be finite and nonnegative");
}

// --- CostSpec ----------------------------------------------------------------

CostSpec CostSpec::constant_matrix(int regimes, std::vector<double> m) {
    if (static_cast<int>(m.size()) != regimes * regimes)
        throw model_error("cost matrix size does not match regime count");
    CostSpec c;
    c.kind = Kind::ConstantMatrix;
    c.matrix = std::move(m);
    c.matrix_dim_ = regimes;
    c.check(regimes);
    return c;
}

CostSpec CostSpec::slippage_costs(double K) {
    if (!(K > 0.0 && K < 1.0))
        throw model_error("slippage fraction must lie in (0,1)");
    CostSpec c;
    c.kind = Kind::Slippage;
    c.slippage = K;
    return c;
}

double CostSpec::operator()(int from, int to, double x) const {
    if (from == to) return 0.0;
    if (kind == Kind::ConstantMatrix) return matrix[from * matrix_dim_ + to];
    // Slippage, I = 2: buying pays e^x(1+K), selling earns e^x(1-K).
    const double ex = std::exp(x);
    return from == 0 ? ex * (1.0 + slippage) : -ex * (1.0 - slippage);
}

int CostSpec::regimes_hint() const {
    return kind == Kind::Slippage ? 2 : matrix_dim_;
}

void CostSpec::check(int regimes) const {
    if (kind == Kind::Slippage) {
        if (regimes != 2) throw model_error("slippage costs require exactly 2 regimes");
        return;
    }
    if (matrix_dim_ != regimes)
        throw model_error("cost matrix dimension does not match regime count");
    for (int i = 0; i < regimes; ++i)
        if (matrix[i * regimes + i] != 0.0)
            throw model_error("cost matrix diagonal must be zero");
}

// --- Horizon / TerminalSpec --------------------------------------------------

Horizon Horizon::finite(double T) {
    if (!(T > 0.0)) throw model_error("finite horizon requires T > 0");
    Horizon h;
    h.kind = Kind::Finite;
    h.T = T;
    return h;
}

TerminalSpec TerminalSpec::buy_low(double K, double C) {
    if (!(K > 0.0 && K < 1.0)) throw model_error("terminal slippage K must lie in (0,1)");
    TerminalSpec t;
    t.kind = Kind::BuyLow;
    t.buylow_K = K;
    t.buylow_C = C;
    return t;
}

TerminalSpec TerminalSpec::custom(std::vector<double> xs,
                                  std::vector<std::vector<double>> values) {
    TerminalSpec t;
    t.kind = Kind::CustomGrid;
    t.xs = std::move(xs);
    t.values = std::move(values);
    if (t.xs.size() < 2) throw model_error("custom terminal grid needs >= 2 nodes");
    if (!std::is_sorted(t.xs.begin(), t.xs.end()))
        throw model_error("custom terminal grid abscissae must be sorted");
    for (const auto& v : t.values)
        if (v.size() != t.xs.size())
            throw model_error("custom terminal value row length mismatch");
    return t;
}

TerminalSpec TerminalSpec::constants(const std::vector<double>& g_per_regime) {
    std::vector<std::vector<double>> rows;
    rows.reserve(g_per_regime.size());
    for (double g : g_per_regime) rows.push_back({g, g});
    return custom({0.0, 1.0}, std::move(rows));
}

double TerminalSpec::operator()(double x, int regime) const {
    switch (kind) {
        case Kind::Zero:
            return 0.0;
        case Kind::BuyLow:
            return (regime == 0 ? -std::exp(x) * (1.0 - buylow_K) : 0.0) - buylow_C;
        case Kind::CustomGrid: {
            const auto& v = values[regime];
            if (x <= xs.front()) return v.front();
            if (x >= xs.back()) return v.back();
            auto it = std::upper_bound(xs.begin(), xs.end(), x);
            const std::size_t j = static_cast<std::size_t>(it - xs.begin());
            const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
            return v[j - 1] + w * (v[j] - v[j - 1]);
        }
    }
    return 0.0;
}

void TerminalSpec::check(int regimes) const {
    if (kind == Kind::CustomGrid && static_cast<int>(values.size()) != regimes)
        throw model_error("custom terminal needs one value row per regime");
}

// --- SwitchingProblem ----------------------------------------------------------

bool SwitchingProblem::phi_all_zero() const {
    return std::all_of(reward.phi.begin(), reward.phi.end(),
                       [](const PhiSpec& p) { return p.is_zero(); });
}

void SwitchingProblem::check(double x_lo, double x_hi) const {
    if (regimes < 1) throw model_error("need at least one regime");
    auto expect_size = [&](std::size_t n, const char* what) {
        if (n != static_cast<std::size_t>(regimes)) {
            std::ostringstream os;
            os << what << ": expected " << regimes << " entries, got " << n;
            throw model_error(os.str());
        }
    };
    expect_size(dynamics.size(), "dynamics");
    expect_size(reward.psi.size(), "reward.psi");
    expect_size(reward.phi.size(), "reward.phi");
    expect_size(ambiguity.kappa.size(), "ambiguity.kappa");
    ambiguity.check();
    costs.check(regimes);
    terminal.check(regimes);
    for (int i = 0; i < regimes; ++i) {
        dynamics[i].check();
        reward.psi[i].check();
        if (reward.psi[i].kind == PsiSpec::Kind::Power &&
            dynamics[i].kind != DriftDiffusion::Kind::GBM)
            throw model_error("power rewards require nonnegative (GBM) dynamics");
    }
    // sigma_i > 0 on the working domain, sampled at the ends and midpoint.
    // GBM is exempt at x = 0 where the diffusion degenerates by construction.
    for (int i = 0; i < regimes; ++i) {
        for (double x : {x_lo, 0.5 * (x_lo + x_hi), x_hi}) {
            const double s = sigma(x, i);
            const bool gbm_origin = dynamics[i].kind == DriftDiffusion::Kind::GBM && x <= 0.0;
            if (!gbm_origin && !(s > 0.0)) {
                std::ostringstream os;
                os << "sigma(" << x << ", regime " << i << ") = " << s << " is not positive";
                throw model_error(os.str());
            }
        }
    }
    if (horizon.is_finite()) {
        if (!(horizon.T > 0.0)) throw model_error("finite horizon requires T > 0");
    } else {
        if (!(discount.rate > 0.0))
            throw model_error("infinite horizon requires constant discount rho > 0");
    }
}

// --- canned case studies -------------------------------------------------------

SwitchingProblem make_fund_selection_problem(double b1, double b2, double sigma1,
                                             double sigma2, double p, double rho,
                                             double c12, double c21, double kappa1,
                                             double kappa2) {
    SwitchingProblem pr;
    pr.regimes = 2;
    pr.dynamics = {DriftDiffusion::gbm(b1, sigma1), DriftDiffusion::gbm(b2, sigma2)};
    pr.reward.psi = {PsiSpec::power_reward(p), PsiSpec::power_reward(p)};
    pr.reward.phi = {PhiSpec::zero(), PhiSpec::zero()};
    pr.ambiguity.kappa = {kappa1, kappa2};
    pr.costs = CostSpec::constant_matrix(2, {0.0, c12, c21, 0.0});
    pr.discount.rate = rho;
    pr.horizon = Horizon::infinite();
    pr.terminal = TerminalSpec::zero();
    pr.moments.q = 1.0;
    pr.moments.C_qX = 1.0;
    pr.moments.C_q = rho;
    return pr;
}

SwitchingProblem make_buy_low_sell_high_problem(double a, double b, double sigma,
                                                double rho, double K, double kappa,
                                                double terminal_C) {
    SwitchingProblem pr;
    pr.regimes = 2;
    pr.dynamics = {DriftDiffusion::ou(a, b, sigma), DriftDiffusion::ou(a, b, sigma)};
    pr.reward.psi = {PsiSpec::zero(), PsiSpec::zero()};
    pr.reward.phi = {PhiSpec::zero(), PhiSpec::zero()};
    pr.ambiguity.kappa = {kappa, kappa};
    pr.costs = CostSpec::slippage_costs(K);
    pr.discount.rate = rho;
    pr.horizon = Horizon::infinite();
    pr.terminal = TerminalSpec::buy_low(K, terminal_C);
    pr.moments.q = 1.0;
    pr.moments.C_qX = 1.0;
    pr.moments.C_q = rho;
    return pr;
}

}  // namespace ambiswitch
