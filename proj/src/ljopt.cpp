#include "latsum/ljopt.hpp"
#include "latsum/errors.hpp"
#include "latsum/specfun.hpp"

#include <cmath>

namespace latsum {

namespace {

double log_zeta(const Lattice& L, double s) {
    return std::log(epstein_zeta(L, s, 1e-12).value);
}

} // namespace

void validate_lj(const LJParams& p, int dim) {
    if (!(p.a1 > 0.0 && p.a2 > 0.0))
        throw DomainError("LJ coefficients must be positive");
    if (!(p.x2 > p.x1))
        throw DomainError("LJ exponents must satisfy x2 > x1");
    if (!(p.x1 > dim))
        throw DivergentExponent("LJ requires x1 > dim");
}

double lj_energy(const Lattice& L, const LJParams& p) {
    if (!(p.x1 > L.dim)) throw DivergentExponent("lj_energy requires x1 > dim");
    return p.a2 * epstein_zeta(L, p.x2, 1e-10).value -
           p.a1 * epstein_zeta(L, p.x1, 1e-10).value;
}

double tilde_energy_log(const Lattice& L, double x1, double x2) {
    if (!(x2 > x1 && x1 > L.dim))
        throw DivergentExponent("tilde energy requires x2 > x1 > dim");
    return x1 * log_zeta(L, x2) - x2 * log_zeta(L, x1);
}

double tilde_energy(const Lattice& L, double x1, double x2) {
    return std::exp(tilde_energy_log(L, x1, x2));
}

double optimal_scale(const Lattice& L, const LJParams& p) {
    validate_lj(p, L.dim);
    double num = std::log(p.a2 * p.x2) + log_zeta(L, p.x2);
    double den = std::log(p.a1 * p.x1) + log_zeta(L, p.x1);
    return std::exp((num - den) / (p.x2 - p.x1));
}

double min_energy_closed_form(const Lattice& L, const LJParams& p) {
    validate_lj(p, L.dim);
    double q = p.x2 - p.x1;
    double log_pref = (p.x2 / q) * (std::log(p.a1) + log_zeta(L, p.x1)) -
                      (p.x1 / q) * (std::log(p.a2) + log_zeta(L, p.x2));
    double lr = std::log(p.x1 / p.x2);
    // (x1/x2)^{x2/q} - (x1/x2)^{x1/q} < 0 since x1 < x2.
    double bracket = std::exp(p.x2 / q * lr) - std::exp(p.x1 / q * lr);
    return std::exp(log_pref) * bracket;
}

double r_min(const LJParams& p) {
    if (!(p.a1 > 0.0 && p.a2 > 0.0 && p.x2 > p.x1 && p.x1 > 0.0))
        throw DomainError("invalid LJ parameters");
    return std::pow(p.a2 * p.x2 / (p.a1 * p.x1), 2.0 / (p.x2 - p.x1));
}

double H_function(const Lattice& L, const Lattice& Lam, double x) {
    if (!(x > L.dim)) throw DivergentExponent("H requires x > dim");
    return (log_zeta(L, x) - log_zeta(Lam, x)) / x;
}

double h_function(const Lattice& L, double x, double deriv_tol) {
    if (!(x > L.dim)) throw DivergentExponent("h requires x > dim");
    double z = epstein_zeta(L, x, 1e-12).value;
    double dz = epstein_zeta_deriv(L, x, deriv_tol).value;
    return -std::log(z) + x * dz / z;
}

double min_energy_ratio(const Lattice& Lam, const Lattice& L, double x1,
                        double x2) {
    if (!(x2 > x1 && x1 > L.dim))
        throw DivergentExponent("ratio requires x2 > x1 > dim");
    double q = x2 - x1;
    double lg = (x2 / q) * log_zeta(Lam, x1) + (x1 / q) * log_zeta(L, x2) -
                (x1 / q) * log_zeta(Lam, x2) - (x2 / q) * log_zeta(L, x1);
    return std::exp(lg);
}

} // namespace latsum
