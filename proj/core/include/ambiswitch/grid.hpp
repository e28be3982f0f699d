#pragma once

#include <stdexcept>
#include <vector>

namespace ambiswitch {

/// Uniform 1-D spatial grid; for finite horizons also carries the time mesh.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int nx = 3;
    int nt = 0;     // time steps (finite horizon only; nt intervals, nt+1 rows)
    double T = 0.0; // finite horizon length

    Grid1D() = default;
    Grid1D(double lo, double hi, int n) : x_min(lo), x_max(hi), nx(n) { check(); }
    Grid1D(double lo, double hi, int n, int steps, double horizon)
        : x_min(lo), x_max(hi), nx(n), nt(steps), T(horizon) {
        check();
        if (nt < 1 || !(T > 0.0))
            throw std::invalid_argument("time grid requires nt >= 1 and T > 0");
    }

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dt() const { return T / nt; }
    double x(int j) const { return x_min + j * dx(); }

    std::vector<double> nodes() const {
        std::vector<double> xs(nx);
        for (int j = 0; j < nx; ++j) xs[j] = x(j);
        return xs;
    }

    /// Linear interpolation of nodal data at x (clamped to the domain).
    double interpolate(const std::vector<double>& nodal, double xq) const;

    void check() const {
        if (!(x_min < x_max)) throw std::invalid_argument("grid requires x_min < x_max");
        if (nx < 3) throw std::invalid_argument("grid requires nx >= 3");
    }
};

}  // namespace ambiswitch
