#include "ambiswitch/rng.hpp"

namespace ambiswitch {
namespace detail {

namespace {

double normal_pdf_kernel(double x) { return std::exp(-0.5 * x * x); }

double normal_tail_area(double r) {
    // int_r^inf exp(-x^2/2) dx
    return std::sqrt(M_PI / 2.0) * std::erfc(r / std::sqrt(2.0));
}

// Misfit of the 256-layer closure: y_256(r) - 1 (positive when the climb
// overshoots the density apex before the last layer).
double closure_misfit(double r) {
    constexpr int n = 256;
    const double fr = normal_pdf_kernel(r);
    const double v = r * fr + normal_tail_area(r);
    double x = r;
    double y = fr;
    for (int i = 1; i < n; ++i) {
        y += v / x;
        if (y >= 1.0) {
            if (i == n - 1) break;       // exact closure handled below
            return 1.0 + (n - 1 - i);    // overshot early: large positive misfit
        }
        x = std::sqrt(-2.0 * std::log(y));
    }
    return y - 1.0;
}

ZigguratTables build_tables() {
    // Bisection for the rightmost abscissa; misfit is increasing in r.
    double lo = 3.0, hi = 4.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (closure_misfit(mid) > 0.0 ? hi : lo) = mid;
    }
    const double r = 0.5 * (lo + hi);

    ZigguratTables t;
    const double fr = normal_pdf_kernel(r);
    t.r = r;
    t.v = r * fr + normal_tail_area(r);
    t.x[1] = r;
    t.x[0] = t.v / fr;
    t.x[256] = 0.0;
    double x = r;
    double y = fr;
    for (int i = 1; i < 256; ++i) {
        y += t.v / x;
        x = y < 1.0 ? std::sqrt(-2.0 * std::log(y)) : 0.0;
        if (i + 1 <= 255) t.x[i + 1] = x;
    }
    for (int i = 0; i <= 255; ++i) t.y[i] = normal_pdf_kernel(t.x[i]);
    t.y[256] = 1.0;
    return t;
}

}  // namespace

const ZigguratTables& ziggurat_tables() {
    static const ZigguratTables tables = build_tables();
    return tables;
}

}  // namespace detail

double standard_normal(Xoshiro256pp& rng) {
    const auto& t = detail::ziggurat_tables();
    for (;;) {
        const std::uint64_t bits = rng.next();
        const int layer = static_cast<int>(bits & 255u);
        const double sign = (bits & 256u) ? -1.0 : 1.0;
        const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
        const double x = u * t.x[layer];
        if (x < t.x[layer + 1]) return sign * x;
        if (layer == 0) {
            // Base strip: exponential tail beyond r.
            for (;;) {
                const double ex = -std::log(rng.uniform()) / t.r;
                const double ey = -std::log(rng.uniform());
                if (ey + ey > ex * ex) return sign * (t.r + ex);
            }
        }
        const double y = t.y[layer] + rng.uniform() * (t.y[layer + 1] - t.y[layer]);
        if (y < std::exp(-0.5 * x * x)) return sign * x;
    }
}

}  // namespace ambiswitch
