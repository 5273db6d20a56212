#include <doctest.h>

#include "latsum/errors.hpp"
#include "latsum/specfun.hpp"

#include <cmath>
#include <random>

using namespace latsum;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("riemann zeta at even integers") {
    CHECK(riemann_zeta(2) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
    CHECK(riemann_zeta(4) ==
          doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-14));
    CHECK(riemann_zeta(6) ==
          doctest::Approx(std::pow(kPi, 6) / 945.0).epsilon(1e-14));
    CHECK(riemann_zeta(8) ==
          doctest::Approx(std::pow(kPi, 8) / 9450.0).epsilon(1e-14));
    CHECK(riemann_zeta(3) == doctest::Approx(1.2020569031595943).epsilon(1e-13));
}

TEST_CASE("digamma, trigamma, and the inverse") {
    // digamma(1) = -gamma, trigamma(1) = pi^2/6
    CHECK(digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-13));
    CHECK(trigamma(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
    for (double y : {-1.0, 0.0, 1.0, 3.5}) {
        double x = digamma_inverse(y);
        CHECK(digamma(x) == doctest::Approx(y).epsilon(1e-11));
    }
    // 2 * digamma_inverse(log pi) - 2, the dimension where x0 crosses
    CHECK(2.0 * digamma_inverse(std::log(kPi)) - 2.0 ==
          doctest::Approx(5.256).epsilon(1e-3 / 5.256));
}

TEST_CASE("upper incomplete gamma against identities") {
    // Gamma(1, x) = e^-x; Gamma(2, x) = (x + 1) e^-x
    for (double x : {0.3, 1.0, 4.0, 20.0}) {
        CHECK(upper_gamma(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
        CHECK(upper_gamma(2.0, x) ==
              doctest::Approx((x + 1.0) * std::exp(-x)).epsilon(1e-12));
    }
    // Recurrence Gamma(a+1, x) = a Gamma(a, x) + x^a e^-x, incl. a <= 0
    for (double a : {-2.3, -0.7, 0.4, 1.6, 5.5}) {
        for (double x : {0.5, 2.0, 9.0}) {
            double lhs = upper_gamma(a + 1.0, x);
            double rhs = a * upper_gamma(a, x) + std::pow(x, a) * std::exp(-x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
    CHECK(gammq(3.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("epstein zeta closed forms") {
    // zeta_Z2(4) = 4 zeta(2) beta(2), beta(2) = Catalan
    const double catalan = 0.915965594177219015;
    CHECK(epstein_zeta(special_lattice("Z2"), 4.0, 1e-13).value ==
          doctest::Approx(4.0 * riemann_zeta(2) * catalan).epsilon(1e-12));
    // zeta_A2(4) = 6 zeta(2) L_{-3}(2)
    const double l3_2 = 0.7813024128964864;
    CHECK(epstein_zeta(special_lattice("A2"), 4.0, 1e-13).value ==
          doctest::Approx(6.0 * riemann_zeta(2) * l3_2).epsilon(1e-12));
    // scaling law: zeta_{cL}(s) = c^-s zeta_L(s)
    Lattice L1 = special_lattice("Lambda1");
    double c4 = std::pow(2.0 / std::sqrt(3.0), 2.0); // (scale^2)^2 for s = 4
    CHECK(epstein_zeta(L1, 4.0, 1e-13).value ==
          doctest::Approx(6.0 * riemann_zeta(2) * l3_2 / c4).epsilon(1e-12));
}

TEST_CASE("epstein zeta agrees with the direct slow path") {
    for (auto p : {DomainPoint2D{0.0, 1.0}, DomainPoint2D{0.26, 0.97},
                   DomainPoint2D{0.5, 1.5}}) {
        Lattice L = from_domain_point(p);
        for (double s : {5.0, 8.0}) {
            double fast = epstein_zeta(L, s, 1e-12).value;
            auto slow = epstein_zeta_direct(L, s, 1e-7);
            CHECK(std::abs(fast - slow.value) < 1e-6);
        }
    }
}

TEST_CASE("epstein zeta derivative vs finite differences") {
    Lattice L = special_lattice("Z2");
    double h = 1e-5;
    double fd = (epstein_zeta(L, 6.0 + h, 1e-13).value -
                 epstein_zeta(L, 6.0 - h, 1e-13).value) /
                (2.0 * h);
    CHECK(epstein_zeta_deriv(L, 6.0, 1e-9).value ==
          doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("epstein zeta rejects non-summable exponents") {
    CHECK_THROWS_AS(epstein_zeta(special_lattice("Z2"), 2.0),
                    DivergentExponent);
    CHECK_THROWS_AS(epstein_zeta(special_lattice("Z2"), 1.5),
                    DivergentExponent);
}

TEST_CASE("jacobi identity on random unit-covolume lattices") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(0.0, 0.5);
    std::uniform_real_distribution<double> uy(0.9, 2.5);
    for (int k = 0; k < 25; ++k) {
        double x = ux(rng), y = uy(rng);
        if (x * x + y * y < 1.0) continue;
        Lattice L = from_domain_point({x, y});
        Lattice Ld = dual(L);
        for (double alpha : {0.2, 0.5, 1.0, 2.0, 5.0}) {
            double lhs = lattice_theta(L, alpha, 1e-13).value;
            double rhs = std::pow(alpha, -1.0) / L.det_abs *
                         lattice_theta(Ld, 1.0 / alpha, 1e-13).value;
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, lhs));
        }
    }
}

TEST_CASE("theta minus one matches theta") {
    Lattice L = special_lattice("A2");
    for (double alpha : {0.05, 0.7, 1.0, 3.0}) {
        double a = lattice_theta(L, alpha, 1e-13).value - 1.0;
        double b = lattice_theta_minus_one(L, alpha, 1e-13).value;
        CHECK(a == doctest::Approx(b).epsilon(1e-11));
    }
}

TEST_CASE("certified tail bounds really bound the tails") {
    Lattice L = special_lattice("Z2");
    double R = 6.0;
    auto sh = shells(L, 40.0);
    double tail_pow = 0.0, tail_theta = 0.0;
    for (const auto& e : sh.entries)
        if (e.r2 > R * R) {
            tail_pow += e.mult * std::pow(e.r2, -3.0);
            tail_theta += e.mult * std::exp(-kPi * 0.5 * e.r2);
        }
    CHECK(power_tail_bound(L, 6.0, R) >= tail_pow);
    CHECK(theta_tail_bound(L, 0.5, R) >= tail_theta);
}
