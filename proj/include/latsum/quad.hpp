#pragma once

#include "latsum/errors.hpp"

#include <cmath>
#include <cstdint>
#include <functional>

namespace latsum {

namespace detail {

inline double simpson_step(const std::function<double(double)>& f, double a,
                           double fa, double b, double fb, double m, double fm,
                           double whole, double tol, int depth,
                           std::int64_t& budget) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    budget -= 2;
    if (budget < 0) throw QuadratureFailure("adaptive quadrature budget exhausted");
    double h = b - a;
    double left = h / 12.0 * (fa + 4.0 * flm + fm);
    double right = h / 12.0 * (fm + 4.0 * frm + fb);
    double err = (left + right - whole) / 15.0;
    if (depth <= 0) throw QuadratureFailure("adaptive quadrature depth exhausted");
    // Noise floor: stop once the estimate is converged relative to the local
    // magnitude or the interval is negligibly narrow; halving the absolute
    // tolerance forever would chase integrand evaluation noise.
    if (std::abs(err) <= tol ||
        std::abs(err) <= 4e-15 * std::abs(left + right) || h <= 1e-10)
        return left + right + err;
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1,
                        budget) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1,
                        budget);
}

} // namespace detail

// Adaptive Simpson on [a, b] with absolute tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol, int initial_panels = 16,
                               std::int64_t budget = 2000000) {
    double total = 0.0;
    double h = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
        double f0 = f(x0), f1 = f(x1), fm = f(xm);
        budget -= 3;
        double whole = h / 6.0 * (f0 + 4.0 * fm + f1);
        total += detail::simpson_step(f, x0, f0, x1, f1, xm, fm, whole,
                                      tol / initial_panels, 48, budget);
    }
    return total;
}

// Golden-section minimization of a unimodal function on [a, b].
inline std::pair<double, double> golden_section(
    const std::function<double(double)>& f, double a, double b, double tol) {
    const double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

} // namespace latsum
