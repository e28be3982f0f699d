#include "ambiswitch/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ambiswitch {

namespace {

std::string cycle_to_string(const std::vector<int>& cycle) {
    std::ostringstream os;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (k) os << "->";
        os << cycle[k] + 1;  // report 1-based regimes
    }
    return os.str();
}

// Enumerate simple cycles (i0, ..., i_{m-1}, i0) up to max_len distinct
// regimes; each cycle is visited once with its smallest regime first.
void for_each_simple_cycle(int regimes, int max_len,
                           const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> path;
    std::vector<char> used(regimes, 0);
    std::function<void(int)> extend = [&](int start) {
        const int last = path.back();
        for (int next = start; next < regimes; ++next) {
            if (used[next] || next == last) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(next);
            used[next] = 1;
            if (path.size() >= 2) fn(path);
            extend(start);
            used[next] = 0;
            path.pop_back();
        }
    };
    for (int i0 = 0; i0 < regimes; ++i0) {
        path = {i0};
        std::fill(used.begin(), used.end(), 0);
        used[i0] = 1;
        // Restrict to cycles whose minimum regime is i0: all later members > i0.
        extend(i0 + 1);
    }
}

}  // namespace

bool ValidationReport::hard_failure() const {
    return std::any_of(checks.begin(), checks.end(), [](const ValidationCheck& c) {
        return c.status == CheckStatus::Fail && !c.advisory;
    });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<double> default_validation_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int j = 0; j < n; ++j) g[j] = lo + (hi - lo) * j / (n - 1);
    return g;
}

ValidationCheck validate_non_free_loop(const SwitchingProblem& problem,
                                       const std::vector<double>& grid) {
    ValidationCheck check;
    check.name = "non_free_loop";
    if (grid.empty()) throw std::invalid_argument("non_free_loop: empty grid");

    const int I = problem.regimes;
    const int max_len = I <= 6 ? I : 3;

    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_cycle;
    double best_x = grid.front();

    for_each_simple_cycle(I, max_len, [&](const std::vector<int>& path) {
        for (double x : grid) {
            double total = 0.0;
            for (std::size_t k = 1; k < path.size(); ++k)
                total += problem.cost(path[k - 1], path[k], x);
            total += problem.cost(path.back(), path.front(), x);
            if (total < best) {
                best = total;
                best_cycle = path;
                best_cycle.push_back(path.front());
                best_x = x;
            }
        }
    });

    check.margin = best;
    check.witness_cycle = best_cycle;
    check.witness_x = best_x;
    if (I == 1) {
        check.status = CheckStatus::Pass;
        check.detail = "single regime: no cycles to check";
        check.margin = 0.0;
        return check;
    }
    std::ostringstream os;
    os << "min loop sum " << best << " on cycle " << cycle_to_string(best_cycle)
       << " at x=" << best_x;
    if (I > 6) os << " (I>6: only 2- and 3-cycles enumerated)";
    check.detail = os.str();
    check.status = best > 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
    return check;
}

std::vector<ValidationCheck> validate_strong_triangular(
    const SwitchingProblem& problem, const std::vector<double>& grid, double q,
    double C_qX, double C_q, double T, const CostEstimateHook& hook) {
    if (grid.empty()) throw std::invalid_argument("strong_triangular: empty grid");
    ValidationCheck check;
    check.name = "strong_triangular";

    const int I = problem.regimes;
    const bool infinite = !problem.horizon.is_finite();

    // N: regimes with some negative outgoing cost anywhere on the grid.
    std::vector<char> in_N(I, 0);
    std::vector<double> Ci(I, 0.0);
    for (int i = 0; i < I; ++i) {
        double worst = 0.0;
        for (int j = 0; j < I; ++j) {
            if (j == i) continue;
            for (double x : grid) {
                const double c = problem.cost(i, j, x);
                if (c < 0.0) in_N[i] = 1;
                worst = std::min(worst, c / (1.0 + std::pow(std::abs(x), q)));
            }
        }
        Ci[i] = -worst;
    }

    const bool any_negative = std::any_of(in_N.begin(), in_N.end(), [](char b) { return b != 0; });
    if (!any_negative) {
        check.status = CheckStatus::Pass;
        check.detail = "no negative costs on the grid: N is empty, condition vacuous";
        check.margin = std::numeric_limits<double>::infinity();
        return {check};
    }

    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<int> worst_triple;
    double worst_x = grid.front();
    for (int i = 0; i < I; ++i) {
        if (!in_N[i]) continue;
        for (int k = 0; k < I; ++k) {
            if (k == i) continue;
            for (int j = 0; j < I; ++j) {
                if (j == i) continue;
                for (double x : grid) {
                    const double growth = 1.0 + std::pow(std::abs(x), q);
                    const double penalty =
                        infinite ? Ci[i] * (1.0 + C_qX * growth)
                                 : Ci[i] * (1.0 + C_qX * growth * std::exp(C_q * T));
                    const double margin =
                        problem.cost(k, i, x) - penalty - problem.cost(k, j, x);
                    if (margin < worst_margin) {
                        worst_margin = margin;
                        worst_triple = {k, i, j};
                        worst_x = x;
                    }
                }
            }
        }
    }

    check.margin = worst_margin;
    check.witness_cycle = worst_triple;
    check.witness_x = worst_x;
    {
        std::ostringstream os;
        os << "worst margin " << worst_margin;
        if (!worst_triple.empty())
            os << " at (k,i,j)=(" << worst_triple[0] + 1 << "," << worst_triple[1] + 1 << ","
               << worst_triple[2] + 1 << "), x=" << worst_x;
        check.detail = os.str();
    }
    check.status = worst_margin >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;

    std::vector<ValidationCheck> out{check};
    if (check.status == CheckStatus::Fail) {
        // Weaker sufficient condition: the empirical discounted total cost of a
        // probe strategy stays below C_f (1 + |x|^q).  Advisory only.
        ValidationCheck adv;
        adv.name = "cost_bound_advisory";
        adv.advisory = true;
        if (!hook) {
            adv.status = CheckStatus::Skipped;
            adv.detail = "no cost estimator wired in";
        } else if (auto est = hook(problem)) {
            double cf = 0.0;
            const double x0 = grid[grid.size() / 2];
            for (int i = 0; i < I; ++i)
                for (int j = 0; j < I; ++j)
                    for (double x : grid)
                        cf = std::max(cf, std::abs(problem.cost(i, j, x)) /
                                              (1.0 + std::pow(std::abs(x), q)));
            const double bound = cf * (1.0 + std::pow(std::abs(x0), q));
            adv.margin = bound - *est;
            adv.status = *est <= bound ? CheckStatus::Pass : CheckStatus::Fail;
            std::ostringstream os;
            os << "empirical discounted cost " << *est << " vs growth bound " << bound
               << " at x0=" << x0 << " (empirical evidence, not proof)";
            adv.detail = os.str();
        } else {
            adv.status = CheckStatus::Skipped;
            adv.detail = "cost estimator declined";
        }
        out.push_back(std::move(adv));
    }
    return out;
}

std::vector<ValidationCheck> validate_terminal(const SwitchingProblem& problem,
                                               const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("terminal: empty grid");
    const int I = problem.regimes;
    std::vector<ValidationCheck> out;

    {
        ValidationCheck c;
        c.name = "terminal_consistency";
        double worst = std::numeric_limits<double>::infinity();
        std::vector<int> worst_pair;
        double worst_x = grid.front();
        for (int i = 0; i < I; ++i) {
            for (int j = 0; j < I; ++j) {
                if (j == i) continue;
                for (double x : grid) {
                    const double margin = problem.terminal_value(x, i) -
                                          (problem.terminal_value(x, j) - problem.cost(i, j, x));
                    if (margin < worst) {
                        worst = margin;
                        worst_pair = {i, j};
                        worst_x = x;
                    }
                }
            }
        }
        c.margin = worst;
        c.witness_cycle = worst_pair;
        c.witness_x = worst_x;
        std::ostringstream os;
        if (I == 1) {
            worst = 0.0;
            c.margin = 0.0;
            os << "single regime: nothing to compare";
        } else {
            os << "min margin of g(x,i) - max_j {g(x,j) - c_ij(x)}: " << worst;
            if (!worst_pair.empty())
                os << " at (i,j)=(" << worst_pair[0] + 1 << "," << worst_pair[1] + 1
                   << "), x=" << worst_x;
        }
        c.detail = os.str();
        c.status = worst >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
        out.push_back(std::move(c));
    }

    if (!problem.horizon.is_finite()) {
        // Temporary terminal for the infinite-horizon construction: g <= 0.
        {
            ValidationCheck c;
            c.name = "terminal_nonpositive";
            double worst = std::numeric_limits<double>::infinity();
            double worst_x = grid.front();
            int worst_i = 0;
            for (int i = 0; i < I; ++i)
                for (double x : grid) {
                    const double margin = -problem.terminal_value(x, i);
                    if (margin < worst) {
                        worst = margin;
                        worst_x = x;
                        worst_i = i;
                    }
                }
            c.margin = worst;
            c.witness_x = worst_x;
            c.witness_cycle = {worst_i};
            std::ostringstream os;
            os << "max g = " << -worst << " at x=" << worst_x << ", regime " << worst_i + 1;
            c.detail = os.str();
            c.status = worst >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
            out.push_back(std::move(c));
        }
        // Differential sufficient condition L^i g - rho g - g' sigma theta >= 0
        // for theta = +/- kappa_i, derivatives by central differences.
        {
            ValidationCheck c;
            c.name = "terminal_differential";
            const double rho = problem.rho();
            double worst = std::numeric_limits<double>::infinity();
            double worst_x = grid.front();
            int worst_i = 0;
            const double h = grid.size() >= 2 ? (grid.back() - grid.front()) / 1000.0 : 1e-4;
            for (int i = 0; i < I; ++i) {
                const double kap = problem.kappa(i);
                for (double x : grid) {
                    const double g0 = problem.terminal_value(x, i);
                    const double gp = problem.terminal_value(x + h, i);
                    const double gm = problem.terminal_value(x - h, i);
                    const double dg = (gp - gm) / (2.0 * h);
                    const double d2g = (gp - 2.0 * g0 + gm) / (h * h);
                    const double sig = problem.sigma(x, i);
                    const double gen = problem.drift(x, i) * dg + 0.5 * sig * sig * d2g;
                    for (double theta : {-kap, +kap}) {
                        const double margin = gen - rho * g0 - dg * sig * theta;
                        if (margin < worst) {
                            worst = margin;
                            worst_x = x;
                            worst_i = i;
                        }
                    }
                }
            }
            c.margin = worst;
            c.witness_x = worst_x;
            c.witness_cycle = {worst_i};
            std::ostringstream os;
            os << "min of L g - rho g - g' sigma theta over theta=+/-kappa: " << worst
               << " at x=" << worst_x << ", regime " << worst_i + 1;
            c.detail = os.str();
            c.status = worst >= -1e-12 ? CheckStatus::Pass : CheckStatus::Fail;
            out.push_back(std::move(c));
        }
    }
    return out;
}

ValidationCheck validate_nonnegative_reward(const SwitchingProblem& problem,
                                            const std::vector<double>& grid) {
    ValidationCheck c;
    c.name = "nonnegative_reward";
    double worst = std::numeric_limits<double>::infinity();
    double worst_x = grid.front();
    int worst_i = 0;
    for (int i = 0; i < problem.regimes; ++i)
        for (double x : grid) {
            const double margin = problem.psi(x, i) - sigma_support(problem, i, x, 0.0).value;
            if (margin < worst) {
                worst = margin;
                worst_x = x;
                worst_i = i;
            }
        }
    c.margin = worst;
    c.witness_x = worst_x;
    c.witness_cycle = {worst_i};
    std::ostringstream os;
    os << "min of psi - varsigma(.,0): " << worst << " at x=" << worst_x << ", regime "
       << worst_i + 1;
    c.detail = os.str();
    c.status = worst >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

SigmaSupport sigma_support(const SwitchingProblem& problem, int regime, double x,
                           double z) {
    const double kap = problem.kappa(regime);
    const double arg = problem.phi(x, regime) + z;
    SigmaSupport s;
    // sign(0) := +1 so the maximizing prior is always well defined.
    s.theta_star = arg >= 0.0 ? kap : -kap;
    s.value = kap * std::abs(arg);
    return s;
}

}  // namespace ambiswitch
