#include <doctest.h>

#include "latsum/errors.hpp"
#include "latsum/potentials.hpp"
#include "latsum/quad.hpp"

#include <cmath>

using namespace latsum;

TEST_CASE("eval goldens in the squared-distance convention") {
    auto lj = RadialPotential::lennard_jones(1, 1, 6, 12);
    CHECK(lj.eval(1.0) == doctest::Approx(0.0));
    CHECK(lj.eval(4.0) == doctest::Approx(1.0 / 4096.0 - 1.0 / 64.0));

    auto fe = RadialPotential::f_epsilon(0.5);
    CHECK(fe.eval(1.0) == doctest::Approx(6.0 - 5.0 + 1.5));

    auto V = RadialPotential::counterexample_v();
    CHECK(V.eval(1.0) == doctest::Approx(9.0));
    CHECK(V.eval(2.0) == doctest::Approx(14.0 / 4 - 40.0 / 8 + 35.0 / 16));

    auto ow = RadialPotential::piecewise_one_well(50.0);
    CHECK(ow.eval(0.25) == doctest::Approx(0.5));   // rho = 1/2: 2 - 3/2
    CHECK(ow.eval(4.0) == doctest::Approx(-1.0 / 16.0)); // rho = 2: -rho^-4
    CHECK(ow.eval(1.0) == doctest::Approx(-1.0));

    auto hc = RadialPotential::hard_core_one_well(50.0);
    CHECK(hc.eval(0.01) == doctest::Approx(30000.0));
    CHECK(hc.eval(4.0) == doctest::Approx(-1.0 / 16.0));
}

TEST_CASE("invalid parameters rejected") {
    CHECK_THROWS_AS(RadialPotential::lennard_jones(1, 1, 12, 6), DomainError);
    CHECK_THROWS_AS(RadialPotential::piecewise_one_well(3.0), DomainError);
    CHECK_THROWS_AS(RadialPotential::inverse_power_poly({}), DomainError);
}

TEST_CASE("f_epsilon density sign at t = 1 + eps/2") {
    // rho(t) = t (t-1) (t-1-eps): negative between the roots iff eps > 0.
    auto f0 = RadialPotential::f_epsilon(0.0);
    auto f5 = RadialPotential::f_epsilon(0.5);
    CHECK(f0.inverse_laplace_density(1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f0.inverse_laplace_density(1.25) > 0.0);
    CHECK(f5.inverse_laplace_density(1.25) < 0.0);
    CHECK(f5.inverse_laplace_density(1.0 + 0.25) ==
          doctest::Approx(1.25 * 0.25 * (1.25 - 1.5)).epsilon(1e-12));
}

TEST_CASE("forward Laplace transform of the density recovers the potential") {
    auto check = [](const RadialPotential& f, double r, double tmax) {
        double got = adaptive_simpson(
            [&](double t) {
                return t > 0.0 ? f.inverse_laplace_density(t) * std::exp(-r * t)
                               : 0.0;
            },
            0.0, tmax, 1e-11, 64);
        CHECK(got == doctest::Approx(f.eval(r)).epsilon(1e-8));
    };
    check(RadialPotential::lennard_jones(1, 1, 6, 12), 1.0, 120.0);
    check(RadialPotential::lennard_jones(2, 3, 5, 9), 1.7, 120.0);
    check(RadialPotential::f_epsilon(0.5), 0.8, 200.0);
    check(RadialPotential::counterexample_v(), 1.3, 120.0);
    check(RadialPotential::yukawa_diff(1.0, 2.0, 0.5, 2.0), 1.1, 400.0);
}

TEST_CASE("yukawa density is a difference of step functions") {
    auto f = RadialPotential::yukawa_diff(1.0, 3.0, 0.5, 2.0);
    CHECK(f.inverse_laplace_density(0.3) == doctest::Approx(0.0));
    CHECK(f.inverse_laplace_density(1.0) == doctest::Approx(-1.0));
    CHECK(f.inverse_laplace_density(2.5) == doctest::Approx(2.0));
}

TEST_CASE("yukawa condition check distinguishes regimes") {
    CHECK(yukawa_condition_check(1.0, 20.0, 1.0, 2.0));
    CHECK(!yukawa_condition_check(1.0, 1.01, 1.9, 2.0));
    CHECK_THROWS_AS(yukawa_condition_check(2.0, 1.0, 1.0, 2.0), DomainError);
}

TEST_CASE("envelope tail bound is monotone in R and vanishes") {
    auto lj = RadialPotential::lennard_jones(1, 1, 6, 12);
    double prev = potential_tail_bound(lj, 4.0, 1.0, 2, 1.0);
    for (double R : {8.0, 16.0, 64.0, 512.0}) {
        double cur = potential_tail_bound(lj, R, 1.0, 2, 1.0);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(prev < 1e-8);
    auto cb = RadialPotential::callback([](double r) { return 1.0 / r; }, 1.5,
                                        1.0, 1.0);
    CHECK_THROWS_AS(potential_tail_bound(cb, 4.0, 1.0, 2, 1.0),
                    NonSummableTail);
}

TEST_CASE("no density for the one-well variants") {
    CHECK(!RadialPotential::piecewise_one_well(50.0).has_density());
    CHECK_THROWS_AS(
        RadialPotential::piecewise_one_well(50.0).inverse_laplace_density(1.0),
        NoDensity);
}
