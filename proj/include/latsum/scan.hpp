#pragma once

#include "latsum/energy.hpp"
#include "latsum/lattice.hpp"
#include "latsum/potentials.hpp"

#include <functional>
#include <string>
#include <vector>

namespace latsum {

struct ScaleMinimum {
    double lambda_star = 0.0;
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int grid_points_used = 0;
};

// Coarse log-spaced grid seeds golden-section refinement in each local
// bracket; the best bracket wins.
ScaleMinimum minimize_scale(const RadialPotential& f, const Lattice& L,
                            double lo, double hi, double tol = 1e-8,
                            int grid_points = 200);

struct GridSpec {
    double x_lo = 0.0, x_hi = 0.5;
    double y_lo = 0.8660254037844386, y_hi = 3.0;
    double step = 1e-2;
    double arc_step = 1e-3; // boundary arc x^2+y^2=1, t in [pi/3, pi/2]
};

struct DomainField {
    GridSpec grid;
    std::vector<double> xs, ys;
    // values[iy][ix]; flag != 0 marks singular cells (skipped, not fatal).
    std::vector<std::vector<double>> values;
    std::vector<std::vector<int>> flags;
    std::vector<double> arc_t, arc_values;
    std::vector<int> arc_flags;
    std::string metric;
};

struct Metric {
    enum class Kind { CValue, ThetaDiff, EnergyDiff, MinLJEnergy } kind;
    double alpha = 1.0;                 // ThetaDiff
    const RadialPotential* f = nullptr; // EnergyDiff
    double lambda = 1.0;                // EnergyDiff
    double a1 = 1, a2 = 1, x1 = 0, x2 = 0; // MinLJEnergy
};

DomainField scan_domain(const Metric& metric, const GridSpec& grid);

// c(L) = d4 d8 / d6^2 with d_s = zeta_L(s) - zeta_Lambda1(s).
double c_function(const DomainPoint2D& p);

struct CMinResult {
    double c = 0.0;
    double x = 0.0, y = 0.0;
};
// Coarse scan plus nested grid refinement of the c minimum.
CMinResult find_c_minimum(double coarse_step = 1e-2, double final_step = 1e-5);

// h(eps) = (2+eps)^2 / (6(1+eps)); epsilon_zero is its inverse on eps >= 0.
double h_of_epsilon(double eps);
double epsilon_zero(double c_min);

// Delta(eps, L) = 4(2+eps)^2 d6^2 - 24(1+eps) d4 d8.
double discriminant(double eps, const DomainPoint2D& p);

struct AllScalesResult {
    bool optimal = false;
    std::vector<DomainPoint2D> witnesses;
};
AllScalesResult verify_all_scales_optimality(double eps, const GridSpec& grid);

struct Interval {
    double lo = 0.0, hi = 0.0;
};
// Lambda sub-intervals on which some grid lattice strictly beats Lambda1.
std::vector<Interval> nonminimality_window(const RadialPotential& f,
                                           const GridSpec& grid,
                                           double lambda_lo, double lambda_hi,
                                           int steps);

enum class CrossoverSide { HighDensity, LowDensity };
// Doubling lambda ladder; returns the first rung past which E_f[lambda L]
// beats E_f[lambda Lambda1] persistently.
double crossover_scale(const RadialPotential& f, const Lattice& L,
                       CrossoverSide side, double start = 1.0, int rungs = 17);

struct OneWellBranch {
    double lo = 0.0, hi = 0.0;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0; // E = c1 - 3 c2 lambda - c3 / lambda^4
    double lambda_c = 0.0;               // (4 c3 / (3 c2))^{1/5}
    double e_lo = 0.0, e_hi = 0.0;
};

struct OneWellLatticeReport {
    std::vector<OneWellBranch> branches;
    double lambda_star = 0.0; // argmin over lambda >= 4/9
    double e_min = 0.0;
    bool small_lambda_excluded = false; // lambda < 4/9 cannot do better
    double s1_bound = 0.0, s2_bound = 0.0, s3_bound = 0.0; // at the worst
    double worst_small_lambda = 0.0;                       // grid lambda
};

struct OneWellReport {
    double p = 0.0;
    bool hard_core = false;
    double lambda1 = 0.0, lambda2 = 0.0, lambda3 = 0.0;
    double u_p = 0.0;
    OneWellLatticeReport z2, a2;
    bool verdict = false; // square beats triangular
};

OneWellReport onewell_verify_appendix(double p, bool hard_core);

struct TheilReport {
    bool pos = false, incr = false, normalize = false, hardwall = false,
         zbettera = false;
    double worst_pos = 0.0, worst_incr = 0.0, worst_normalize = 0.0,
           worst_hardwall = 0.0;
    double zbettera_lhs = 0.0, zbettera_rhs = 0.0;
    double integral_i1 = 0.0, integral_i2 = 0.0;
    bool all() const { return pos && incr && normalize && hardwall && zbettera; }
};

// g is the distance-form potential; the envelope |g(rho)| <=
// tail_constant * rho^{-tail_exponent} (rho >= 1) certifies the integrals.
TheilReport theil_conditions_check(const std::function<double(double)>& g,
                                   double alpha0, double alpha1, double C0,
                                   double tail_exponent, double tail_constant);

} // namespace latsum
