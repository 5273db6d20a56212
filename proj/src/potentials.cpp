#include "latsum/potentials.hpp"
#include "latsum/errors.hpp"
#include "latsum/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHardCoreWall = 30000.0;

double one_well_g(double rho, double p, bool hard_core) {
    if (rho < 4.0 / 9.0)
        return hard_core ? kHardCoreWall
                         : (2.0 / 3.0) * std::pow(4.0 / 9.0, p) / std::pow(rho, p);
    if (rho <= 1.0) return 2.0 - 3.0 * rho;
    return -std::pow(rho, -4.0);
}

} // namespace

RadialPotential RadialPotential::lennard_jones(double a1, double a2, double x1,
                                               double x2) {
    if (!(a1 > 0.0 && a2 > 0.0 && x2 > x1 && x1 > 0.0))
        throw DomainError("lennard_jones requires a1,a2 > 0 and x2 > x1 > 0");
    RadialPotential f;
    f.kind_ = Kind::LennardJones;
    f.name_ = "lennard_jones";
    f.a1 = a1; f.a2 = a2; f.x1 = x1; f.x2 = x2;
    f.tail_exponent_ = x1;
    f.tail_constant_ = a1 + a2;
    f.r_tail_ = 1.0;
    f.power_tail_ = {{a2, 0.5 * x2}, {-a1, 0.5 * x1}};
    f.power_tail_from_ = 0.0;
    return f;
}

RadialPotential RadialPotential::inverse_power_poly(std::vector<PowerTerm> terms) {
    if (terms.empty()) throw DomainError("inverse_power_poly needs terms");
    RadialPotential f;
    f.kind_ = Kind::InversePowerPoly;
    f.name_ = "inverse_power_poly";
    double pmin = std::numeric_limits<double>::infinity();
    double ksum = 0.0;
    for (const auto& t : terms) {
        if (!(t.power >= 1.0))
            throw DomainError("inverse_power_poly powers must be >= 1");
        pmin = std::min(pmin, t.power);
        ksum += std::abs(t.coeff);
    }
    f.terms = terms;
    f.tail_exponent_ = 2.0 * pmin;
    f.tail_constant_ = ksum;
    f.r_tail_ = 1.0;
    f.power_tail_ = std::move(terms);
    f.power_tail_from_ = 0.0;
    return f;
}

RadialPotential RadialPotential::yukawa_diff(double a1, double a2, double x1,
                                             double x2) {
    if (!(0.0 < x1 && x1 < x2 && a1 > 0.0 && a2 > 0.0))
        throw DomainError("yukawa_diff requires 0 < x1 < x2 and positive a");
    RadialPotential f;
    f.kind_ = Kind::YukawaDiff;
    f.name_ = "yukawa_diff";
    f.a1 = a1; f.a2 = a2; f.x1 = x1; f.x2 = x2;
    // |f(r)| <= (a1+a2) e^{-x1 r}/r <= K r^{-4} for r >= 1.
    double rpk = std::max(1.0, 3.0 / x1);
    f.tail_exponent_ = 8.0;
    f.tail_constant_ = (a1 + a2) * std::pow(rpk, 3.0) * std::exp(-x1 * rpk);
    f.r_tail_ = 1.0;
    return f;
}

RadialPotential RadialPotential::piecewise_one_well(double p) {
    if (!(p > 4.0)) throw DomainError("piecewise_one_well requires p > 4");
    RadialPotential f;
    f.kind_ = Kind::PiecewiseOneWell;
    f.name_ = "piecewise_one_well";
    f.p = p;
    f.tail_exponent_ = 4.0;
    f.tail_constant_ = 1.0;
    f.r_tail_ = 1.0;
    f.power_tail_ = {{-1.0, 2.0}};
    f.power_tail_from_ = 1.0;
    return f;
}

RadialPotential RadialPotential::hard_core_one_well(double p) {
    RadialPotential f = piecewise_one_well(p > 4.0 ? p : 50.0);
    f.kind_ = Kind::HardCoreOneWell;
    f.name_ = "hard_core_one_well";
    return f;
}

RadialPotential RadialPotential::callback(std::function<double(double)> eval,
                                          double tail_exponent,
                                          double tail_constant, double r_tail) {
    RadialPotential f;
    f.kind_ = Kind::Callback;
    f.name_ = "callback";
    f.eval_ = std::move(eval);
    f.tail_exponent_ = tail_exponent;
    f.tail_constant_ = tail_constant;
    f.r_tail_ = std::max(r_tail, 1e-300);
    return f;
}

RadialPotential RadialPotential::f_epsilon(double eps) {
    if (eps < 0.0) throw DomainError("f_epsilon requires eps >= 0");
    RadialPotential f = inverse_power_poly(
        {{6.0, 4.0}, {-2.0 * (2.0 + eps), 3.0}, {1.0 + eps, 2.0}});
    f.name_ = "f_epsilon";
    f.eps = eps;
    return f;
}

RadialPotential RadialPotential::counterexample_v() {
    RadialPotential f =
        inverse_power_poly({{14.0, 2.0}, {-40.0, 3.0}, {35.0, 4.0}});
    f.name_ = "counterexample_v";
    return f;
}

double RadialPotential::eval(double r) const {
    if (!(r > 0.0)) return std::numeric_limits<double>::infinity();
    switch (kind_) {
        case Kind::LennardJones:
            return a2 * std::pow(r, -0.5 * x2) - a1 * std::pow(r, -0.5 * x1);
        case Kind::InversePowerPoly: {
            double s = 0.0;
            for (const auto& t : terms) s += t.coeff * std::pow(r, -t.power);
            return s;
        }
        case Kind::YukawaDiff:
            return (a2 * std::exp(-x2 * r) - a1 * std::exp(-x1 * r)) / r;
        case Kind::PiecewiseOneWell:
            return one_well_g(std::sqrt(r), p, false);
        case Kind::HardCoreOneWell:
            return one_well_g(std::sqrt(r), p, true);
        case Kind::Callback:
            return eval_(r);
    }
    return 0.0;
}

bool RadialPotential::has_density() const {
    return kind_ == Kind::LennardJones || kind_ == Kind::InversePowerPoly ||
           kind_ == Kind::YukawaDiff;
}

double RadialPotential::inverse_laplace_density(double t) const {
    if (!(t > 0.0)) throw DomainError("density argument must be positive");
    switch (kind_) {
        case Kind::LennardJones:
            return a2 * std::pow(t, 0.5 * x2 - 1.0) / std::tgamma(0.5 * x2) -
                   a1 * std::pow(t, 0.5 * x1 - 1.0) / std::tgamma(0.5 * x1);
        case Kind::InversePowerPoly: {
            double s = 0.0;
            for (const auto& tm : terms)
                s += tm.coeff * std::pow(t, tm.power - 1.0) /
                     std::tgamma(tm.power);
            return s;
        }
        case Kind::YukawaDiff:
            return (t > x2 ? a2 : 0.0) - (t > x1 ? a1 : 0.0);
        default:
            throw NoDensity("no inverse Laplace density for " + name_);
    }
}

bool lj_admissibility_check(double x1, double x2) {
    if (!(x2 > x1 && x1 > 0.0))
        throw DomainError("lj_admissibility_check requires x2 > x1 > 0");
    auto side = [](double x) {
        return std::exp(-0.5 * x * std::log(kPi) + std::lgamma(0.5 * x) +
                        std::log(0.5 * x));
    };
    return side(x2) <= side(x1);
}

bool yukawa_condition_check(double a1, double a2, double x1, double x2) {
    if (!(0.0 < a1 && a1 < a2))
        throw DomainError("yukawa_condition_check requires 0 < a1 < a2");
    if (!(0.0 < x1 && x1 < x2))
        throw DomainError("yukawa_condition_check requires 0 < x1 < x2");
    double lhs = a1 * (a1 * x2 + x1 * (a2 - a1) * kPi) /
                 (a2 * x2 * (a1 + (a2 - a1) * kPi));
    double expo = (1.0 - x1 / x2) * (a2 / a1 - 1.0) * kPi;
    return lhs * std::exp(expo) >= 1.0;
}

double potential_tail_bound(const RadialPotential& f, double R, double lambda,
                            int d, double covol) {
    double xt = f.tail_exponent();
    if (!(xt > d))
        throw NonSummableTail("tail exponent must exceed the dimension");
    if (!(lambda > 0.0) || !(R > 0.0))
        throw DomainError("tail bound requires positive R and lambda");
    if (lambda * lambda * R * R < f.r_tail())
        throw DomainError("tail bound requires R inside the envelope region");
    double c = unit_ball_volume(d) * std::pow(2.0, d) / covol;
    return c * xt / (xt - d) * f.tail_constant() * std::pow(lambda, -xt) *
           std::pow(R, d - xt);
}

} // namespace latsum
