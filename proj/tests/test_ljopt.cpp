#include <doctest.h>

#include "latsum/energy.hpp"
#include "latsum/errors.hpp"
#include "latsum/ljopt.hpp"
#include "latsum/scan.hpp"
#include "latsum/specfun.hpp"

#include <cmath>
#include <random>

using namespace latsum;

TEST_CASE("optimal scale and closed-form minimum match brute force") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(0.5, 2.0);
    std::uniform_real_distribution<double> ux(3.0, 9.0);
    Lattice L = special_lattice("Lambda1");
    for (int k = 0; k < 10; ++k) {
        LJParams p{ua(rng), ua(rng), ux(rng), 0.0};
        p.x2 = p.x1 + 1.0 + ux(rng);
        auto f = RadialPotential::lennard_jones(p.a1, p.a2, p.x1, p.x2);
        auto m = minimize_scale(f, L, 0.2, 6.0, 1e-9);
        CHECK(m.lambda_star == doctest::Approx(optimal_scale(L, p)).epsilon(1e-6));
        CHECK(m.value ==
              doctest::Approx(min_energy_closed_form(L, p)).epsilon(1e-8));
        CHECK(min_energy_closed_form(L, p) < 0.0);
    }
}

TEST_CASE("tilde energy equals the zeta power combination") {
    Lattice L = special_lattice("Z2");
    double z6 = epstein_zeta(L, 6.0, 1e-13).value;
    double z12 = epstein_zeta(L, 12.0, 1e-13).value;
    CHECK(tilde_energy_log(L, 6.0, 12.0) ==
          doctest::Approx(6.0 * std::log(z12) - 12.0 * std::log(z6))
              .epsilon(1e-12));
}

TEST_CASE("lj_energy is the two-term zeta combination") {
    Lattice L = special_lattice("A2");
    LJParams p{2.0, 3.0, 5.0, 9.0};
    double want = 3.0 * epstein_zeta(L, 9.0, 1e-10).value -
                  2.0 * epstein_zeta(L, 5.0, 1e-10).value;
    CHECK(lj_energy(L, p) == doctest::Approx(want).epsilon(1e-10));
    CHECK_THROWS_AS(lj_energy(L, {1, 1, 1.5, 3}), DivergentExponent);
}

TEST_CASE("r_min golden") {
    CHECK(r_min({1, 1, 6, 12}) == doctest::Approx(std::pow(2.0, 1.0 / 3.0)));
    CHECK(r_min({2, 1, 200, 400}) == doctest::Approx(1.0));
}

TEST_CASE("min energy ratio corner values") {
    Lattice A2 = special_lattice("A2"), Z2 = special_lattice("Z2");
    CHECK(min_energy_ratio(A2, Z2, 3, 4) == doctest::Approx(1.061).epsilon(5e-3));
    CHECK(min_energy_ratio(A2, Z2, 49, 50) ==
          doctest::Approx(1.499).epsilon(5e-3));
    // limit tau(A2)/tau(Z2) = 3/2
    CHECK(min_energy_ratio(A2, Z2, 200, 400) ==
          doctest::Approx(1.5).epsilon(5e-3));
}

TEST_CASE("H function consistency with its definition") {
    Lattice Z2 = special_lattice("Z2"), L1 = special_lattice("Lambda1");
    double x = 7.3;
    double want = (std::log(epstein_zeta(Z2, x, 1e-12).value) -
                   std::log(epstein_zeta(L1, x, 1e-12).value)) /
                  x;
    CHECK(H_function(Z2, L1, x) == doctest::Approx(want).epsilon(1e-12));
    CHECK(H_function(Z2, L1, x) > 0.0); // triangular wins at unit density
}

TEST_CASE("h function matches a finite difference of x -> -log zeta / ... ") {
    Lattice L = special_lattice("Z2");
    double x = 6.0, h = 1e-5;
    auto lz = [&](double s) { return std::log(epstein_zeta(L, s, 1e-13).value); };
    // h_L(x) = d/dy [ y * (-lz(x)/x) ] ... direct definition instead:
    double want = -lz(x) + x * epstein_zeta_deriv(L, x, 1e-10).value /
                               epstein_zeta(L, x, 1e-13).value;
    CHECK(h_function(L, x, 1e-10) == doctest::Approx(want).epsilon(1e-9));
    // consistency: x^2 d/dx H_L(x) = h_L(x) - h_Lam(x) with Lam = Lambda1
    Lattice L1 = special_lattice("Lambda1");
    double dH = (H_function(L, L1, x + h) - H_function(L, L1, x - h)) / (2 * h);
    double want2 = (h_function(L, x, 1e-10) - h_function(L1, x, 1e-10));
    CHECK(x * x * dH == doctest::Approx(want2).epsilon(1e-4));
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(validate_lj({1, 1, 1.5, 3}, 2), DivergentExponent);
    CHECK_THROWS_AS(validate_lj({-1, 1, 6, 12}, 2), DomainError);
    CHECK_THROWS_AS(optimal_scale(special_lattice("Z2"), {1, 1, 12, 6}),
                    DomainError);
}
