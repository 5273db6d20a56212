#include <doctest.h>

#include "latsum/energy.hpp"
#include "latsum/errors.hpp"
#include "latsum/specfun.hpp"

#include <cmath>

using namespace latsum;

TEST_CASE("direct energy matches the zeta combination for pure powers") {
    Lattice L = special_lattice("Lambda1");
    auto lj = RadialPotential::lennard_jones(1, 1, 6, 12);
    for (double lam : {0.8, 1.0, 1.3}) {
        double want = std::pow(lam, -12.0) * epstein_zeta(L, 12.0, 1e-13).value -
                      std::pow(lam, -6.0) * epstein_zeta(L, 6.0, 1e-13).value;
        CHECK(energy_direct(lj, L, lam).value ==
              doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("shell-partial energy drops exactly the first shells") {
    Lattice L = special_lattice("A2");
    auto V = RadialPotential::counterexample_v();
    double lam = 0.9;
    double full = energy_direct(V, L, lam).value;
    double partial = energy_shell_partial(V, L, lam, 2, 1e-10);
    // First shell: 6 points at squared distance 1.
    CHECK(full - partial == doctest::Approx(6.0 * V.eval(lam * lam)).epsilon(1e-10));
}

TEST_CASE("theta-integral path agrees with direct summation") {
    auto fe = RadialPotential::f_epsilon(0.5);
    auto lj = RadialPotential::lennard_jones(1, 1, 6, 12);
    Lattice L1 = special_lattice("Lambda1");
    Lattice L = from_domain_point({0.26, 0.97});
    for (double lam : {0.7, 1.0, 1.8}) {
        CHECK(energy_theta_integral(fe, L1, lam, 1e-10).value ==
              doctest::Approx(energy_direct(fe, L1, lam).value).epsilon(1e-8));
        CHECK(energy_theta_integral(lj, L, lam, 1e-10).value ==
              doctest::Approx(energy_direct(lj, L, lam).value).epsilon(1e-8));
    }
}

TEST_CASE("yukawa energy through the envelope path matches the integral") {
    auto f = RadialPotential::yukawa_diff(1.0, 2.0, 0.5, 2.0);
    Lattice L = special_lattice("Z2");
    double a = energy_direct(f, L, 1.0, 1e-10).value;
    double b = energy_theta_integral(f, L, 1.0, 1e-9).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-7));
}

TEST_CASE("one-well energy at unit scale is minus the zeta value") {
    // At lambda = 1 every nonzero point has rho >= 1; only the -rho^-4 branch
    // and the single rho = 1 shell at the well bottom contribute.
    Lattice L = special_lattice("Z2");
    auto f = RadialPotential::piecewise_one_well(50.0);
    double z4 = epstein_zeta(L, 4.0, 1e-13).value;
    // g(1) = -1 = -1/rho^4 at rho = 1, so E(1) = -zeta_L(4) exactly.
    CHECK(energy_direct(f, L, 1.0).value == doctest::Approx(-z4).epsilon(1e-11));
}

TEST_CASE("errors: bad scale and non-summable tails") {
    auto lj = RadialPotential::lennard_jones(1, 1, 6, 12);
    CHECK_THROWS_AS(energy_direct(lj, special_lattice("Z2"), -1.0), DomainError);
    auto slow = RadialPotential::callback([](double r) { return 1.0 / r; }, 1.5,
                                          1.0, 1.0);
    CHECK_THROWS_AS(energy_direct(slow, special_lattice("Z2"), 1.0),
                    NonSummableTail);
    auto ow = RadialPotential::piecewise_one_well(50.0);
    CHECK_THROWS_AS(energy_theta_integral(ow, special_lattice("Z2"), 1.0),
                    NoDensity);
}
