#pragma once

#include "latsum/lattice.hpp"

namespace latsum {

struct EvalResult {
    double value = 0.0;
    double tail_bound = 0.0;
    double r_max_used = 0.0;
};

double riemann_zeta(double s);
double gamma_fn(double s);
double digamma(double x);
double trigamma(double x);
// Solves digamma(x) = y for x > 0 by safeguarded Newton.
double digamma_inverse(double y);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a), a > 0.
double gammq(double a, double x);
// Unnormalized upper incomplete gamma for real a (any sign), x > 0.
double upper_gamma(double a, double x);
// log Gamma(a, x); handles large |a| without overflow.
double log_upper_gamma(double a, double x);

double unit_ball_volume(int d);

// Certified bound on sum_{p in L, |p| > R} e^{-pi*alpha*|p|^2}
// (annulus point-count estimate; requires R >= cell_half_diameter).
double theta_tail_bound(const Lattice& L, double alpha, double R);
// Certified bound on sum_{|p| > R} |p|^{-s}, s > d.
double power_tail_bound(const Lattice& L, double s, double R);
// Certified bound on sum_{|p| > R} ln|p| * |p|^{-s}, s > d, R > e^{1/s}.
double log_power_tail_bound(const Lattice& L, double s, double R);

// Epstein zeta zeta_L(s) = sum_{p != 0} |p|^{-s}, s > d. Incomplete-gamma
// accelerated evaluation; tail_bound certifies the truncation of both the
// primal and dual exponential sums.
EvalResult epstein_zeta(const Lattice& L, double s, double tol = 1e-10);
// Brute-force shell sum with the annulus tail bound; independent slow path.
EvalResult epstein_zeta_direct(const Lattice& L, double s, double tol = 1e-6,
                               std::int64_t point_cap = kDefaultPointCap);
// d/ds zeta_L(s) = -sum_{p != 0} ln|p| |p|^{-s}.
EvalResult epstein_zeta_deriv(const Lattice& L, double s, double tol = 1e-8,
                              std::int64_t point_cap = kDefaultPointCap);

// theta_L(alpha) = sum_{p in L} e^{-pi*alpha*|p|^2}, origin included.
EvalResult lattice_theta(const Lattice& L, double alpha, double tol = 1e-10);
// theta_L(alpha) - 1 with the origin removed analytically.
EvalResult lattice_theta_minus_one(const Lattice& L, double alpha,
                                   double tol = 1e-10);
// Direct summation regardless of alpha (no Jacobi switch); test hook.
EvalResult lattice_theta_direct(const Lattice& L, double alpha,
                                double tol = 1e-10);

} // namespace latsum
