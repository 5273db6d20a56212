#include "latsum/energy.hpp"
#include "latsum/errors.hpp"
#include "latsum/quad.hpp"
#include "latsum/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shell sum of f(lambda^2 r2) for shells with index >= from_shell, plus tail.
EnergyResult shell_sum(const RadialPotential& f, const Lattice& L,
                       double lambda, int from_shell, double tol) {
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    const int d = L.dim;
    if (!(f.tail_exponent() > d))
        throw NonSummableTail("potential tail exponent must exceed dimension");
    const double lam2 = lambda * lambda;
    // Radius (in L coordinates) past which the exact power tail is active.
    const double r_exact =
        std::sqrt(std::max(f.power_tail_from(), f.r_tail()) / lam2);
    double R = std::max(8.0 * std::sqrt(L.shortest_sq()), 1.25 * r_exact);

    const bool exact = !f.exact_power_tail().empty();
    for (;;) {
        if (exact) {
            auto sh = shells(L, R);
            double sum = 0.0;
            std::int64_t idx = 0;
            std::vector<double> partial(f.exact_power_tail().size(), 0.0);
            for (const auto& e : sh.entries) {
                ++idx;
                // Skipped shells must still be removed from the zeta tail.
                for (size_t k = 0; k < partial.size(); ++k)
                    partial[k] += static_cast<double>(e.mult) *
                                  std::pow(e.r2, -f.exact_power_tail()[k].power);
                if (idx < from_shell) continue;
                sum += static_cast<double>(e.mult) * f.eval(lam2 * e.r2);
            }
            double tailv = 0.0, tailb = 0.0;
            for (size_t k = 0; k < partial.size(); ++k) {
                const auto& t = f.exact_power_tail()[k];
                double s = 2.0 * t.power;
                if (!(s > d))
                    throw NonSummableTail("power tail term not summable");
                auto z = epstein_zeta(L, s, 1e-12);
                double lamp = std::pow(lambda, -s);
                tailv += t.coeff * lamp * (z.value - partial[k]);
                tailb += std::abs(t.coeff) * lamp * z.tail_bound;
            }
            return {sum + tailv, R, tailb, "direct"};
        }
        if (lam2 * R * R >= f.r_tail()) {
            double tb = potential_tail_bound(f, R, lambda, d, L.det_abs);
            if (tb <= tol) {
                auto sh = shells(L, R);
                double sum = 0.0;
                std::int64_t idx = 0;
                for (const auto& e : sh.entries) {
                    ++idx;
                    if (idx < from_shell) continue;
                    sum += static_cast<double>(e.mult) * f.eval(lam2 * e.r2);
                }
                return {sum, R, tb, "direct"};
            }
        }
        R *= 2.0;
        if (R > 1e7) throw EnumerationTooLarge("energy radius exceeds cap");
    }
}

} // namespace

EnergyResult energy_direct(const RadialPotential& f, const Lattice& L,
                           double lambda, double tol) {
    return shell_sum(f, L, lambda, 1, tol);
}

double energy_shell_partial(const RadialPotential& f, const Lattice& L,
                            double lambda, int from_shell, double tol) {
    if (from_shell < 1) throw DomainError("from_shell must be >= 1");
    return shell_sum(f, L, lambda, from_shell, tol).value;
}

EnergyResult energy_theta_integral(const RadialPotential& f, const Lattice& L,
                                   double lambda, double tol) {
    if (!f.has_density())
        throw NoDensity("theta-integral path needs an inverse Laplace density");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    const double lam2 = lambda * lambda;
    auto integrand = [&](double v) {
        double u = std::exp(v);
        double th = lattice_theta_minus_one(L, u, 1e-13).value;
        if (th == 0.0) return 0.0;
        return th * f.inverse_laplace_density(kPi * u / lam2) * u;
    };
    // Rough scale from a coarse pass fixes the absolute tolerance.
    double rough = 0.0;
    for (double v = -38.0; v <= 38.0; v += 0.5)
        rough += 0.5 * std::abs(integrand(v));
    double atol = tol * std::max(1.0, rough);
    double I = adaptive_simpson(integrand, -40.0, 40.0, atol, 64);
    return {kPi / lam2 * I, 0.0, atol, "theta_integral"};
}

} // namespace latsum
