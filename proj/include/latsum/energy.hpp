#pragma once

#include "latsum/lattice.hpp"
#include "latsum/potentials.hpp"

#include <string>

namespace latsum {

struct EnergyResult {
    double value = 0.0;
    double r_max_used = 0.0;
    double tail_bound = 0.0;
    std::string method;
};

// E_f[lambda L] = sum_{p != 0} f(lambda^2 |p|^2) by shell summation. The
// truncation tail is evaluated exactly through Epstein zeta values whenever
// the potential has an exact inverse-power tail; otherwise the envelope bound
// is driven below tol by radius doubling.
EnergyResult energy_direct(const RadialPotential& f, const Lattice& L,
                           double lambda, double tol = 1e-10);

// Same energy through the theta-function integral representation
// E_f[lambda L] = (pi/lambda^2) Int_0^inf (theta_L(u) - 1) rho_f(pi u / lambda^2) du.
EnergyResult energy_theta_integral(const RadialPotential& f, const Lattice& L,
                                   double lambda, double tol = 1e-8);

// Shell sum restricted to shell indices >= from_shell (1-based).
double energy_shell_partial(const RadialPotential& f, const Lattice& L,
                            double lambda, int from_shell, double tol = 1e-10);

} // namespace latsum
