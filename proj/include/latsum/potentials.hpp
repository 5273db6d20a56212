#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace latsum {

// Term c * r^{-p} in the squared-distance variable.
struct PowerTerm {
    double coeff = 0.0;
    double power = 1.0;
};

// Radial pair potential evaluated on the SQUARED distance r = |p|^2.
// Distance-form definitions g(rho) are wrapped as f(r) = g(sqrt(r)).
class RadialPotential {
public:
    enum class Kind {
        LennardJones,
        InversePowerPoly,
        YukawaDiff,
        PiecewiseOneWell,
        HardCoreOneWell,
        Callback,
    };

    static RadialPotential lennard_jones(double a1, double a2, double x1,
                                         double x2);
    static RadialPotential inverse_power_poly(std::vector<PowerTerm> terms);
    static RadialPotential yukawa_diff(double a1, double a2, double x1,
                                       double x2);
    static RadialPotential piecewise_one_well(double p);
    static RadialPotential hard_core_one_well(double p);
    // eval takes the squared distance. The envelope |f(r)| <= K r^{-xt/2}
    // must hold for r >= r_tail.
    static RadialPotential callback(std::function<double(double)> eval,
                                    double tail_exponent, double tail_constant,
                                    double r_tail = 0.0);

    // f_eps(r) = 6/r^4 - 2(2+eps)/r^3 + (1+eps)/r^2.
    static RadialPotential f_epsilon(double eps);
    // V(r) = 14/r^2 - 40/r^3 + 35/r^4.
    static RadialPotential counterexample_v();

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    double eval(double r) const;
    bool has_density() const;
    double inverse_laplace_density(double t) const;

    // Envelope |f(r)| <= tail_constant * r^{-tail_exponent/2}, r >= r_tail.
    double tail_exponent() const { return tail_exponent_; }
    double tail_constant() const { return tail_constant_; }
    double r_tail() const { return r_tail_; }

    // Exact inverse-power expansion of the tail, valid for r > power_tail_from
    // (squared distance); empty when no exact form exists.
    const std::vector<PowerTerm>& exact_power_tail() const {
        return power_tail_;
    }
    double power_tail_from() const { return power_tail_from_; }

    // Parameters (meaning depends on the variant).
    double a1 = 0, a2 = 0, x1 = 0, x2 = 0, p = 0, eps = 0;
    std::vector<PowerTerm> terms;

private:
    RadialPotential() = default;
    Kind kind_ = Kind::Callback;
    std::string name_;
    std::function<double(double)> eval_;
    double tail_exponent_ = 0.0;
    double tail_constant_ = 0.0;
    double r_tail_ = 0.0;
    std::vector<PowerTerm> power_tail_;
    double power_tail_from_ = 0.0;
};

bool lj_admissibility_check(double x1, double x2);
bool yukawa_condition_check(double a1, double a2, double x1, double x2);

// Certified bound on sum over |p| > R of |f(lambda^2 |p|^2)| for a lattice of
// dimension d and covolume covol (annulus point-count estimate).
double potential_tail_bound(const RadialPotential& f, double R, double lambda,
                            int d, double covol);

} // namespace latsum
