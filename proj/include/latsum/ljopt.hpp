#pragma once

#include "latsum/lattice.hpp"

namespace latsum {

struct LJParams {
    double a1 = 1.0, a2 = 1.0;
    double x1 = 0.0, x2 = 0.0;
};

void validate_lj(const LJParams& p, int dim);

// E_f[L] = a2 zeta_L(x2) - a1 zeta_L(x1).
double lj_energy(const Lattice& L, const LJParams& p);

// log of tilde E_f[L] = zeta_L(x2)^{x1} / zeta_L(x1)^{x2} (unit density).
double tilde_energy_log(const Lattice& L, double x1, double x2);
double tilde_energy(const Lattice& L, double x1, double x2);

// lambda_0^L = (a2 x2 zeta_L(x2) / (a1 x1 zeta_L(x1)))^{1/(x2-x1)}.
double optimal_scale(const Lattice& L, const LJParams& p);

// min_{lambda>0} E_f[lambda L], closed form; strictly negative.
double min_energy_closed_form(const Lattice& L, const LJParams& p);

// Squared-distance location of the potential minimum.
double r_min(const LJParams& p);

// H_L(x) = (1/x) log(zeta_L(x)/zeta_Lam(x)).
double H_function(const Lattice& L, const Lattice& Lam, double x);
// h_L(x) = -log zeta_L(x) + x zeta_L'(x)/zeta_L(x).
double h_function(const Lattice& L, double x, double deriv_tol = 1e-8);

// min_lambda E_f[lambda Lam] / min_lambda E_f[lambda L] for unit-shortest
// lattices; tends to tau(Lam)/tau(L) as x1, x2 -> infinity.
double min_energy_ratio(const Lattice& Lam, const Lattice& L, double x1,
                        double x2);

} // namespace latsum
