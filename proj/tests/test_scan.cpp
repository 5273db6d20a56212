#include <doctest.h>

#include "latsum/errors.hpp"
#include "latsum/scan.hpp"
#include "latsum/specfun.hpp"

#include <cmath>
#include <random>

using namespace latsum;

namespace {
const double kPi = 3.14159265358979323846;

double builtin_well(double r) {
    if (r <= 0.68) return 3.0 * (0.68 * 0.68 / (r * r) - 1.0);
    if (r <= 0.707) return -(r - 0.68) * (0.7 / 0.027);
    if (r <= 1.0) return -0.7 - (r - 0.707) * (0.3 / 0.293);
    if (r <= 1.035) return -1.0 + (r - 1.0) * (0.98 / 0.035);
    return -0.02 * std::pow(1.035 / r, 4.0);
}
} // namespace

TEST_CASE("c function domain handling") {
    CHECK_THROWS_AS(c_function({0.5, std::sqrt(3.0) / 2.0}),
                    IndeterminateAtTriangular);
    CHECK_THROWS_AS(c_function({0.3, 0.9}), OutOfDomain);
    // large-y boundary limit 21/20, corner limit near 0.772
    CHECK(c_function({0.0, 200.0}) == doctest::Approx(1.05).epsilon(1e-2));
    double t = kPi / 3.0 + 2e-3;
    CHECK(c_function({std::cos(t), std::sin(t)}) ==
          doctest::Approx(0.7719234).epsilon(5e-3 / 0.772));
}

TEST_CASE("epsilon threshold round trip") {
    for (double c : {0.70, 0.769, 0.95}) {
        double eps = epsilon_zero(c);
        CHECK(h_of_epsilon(eps) == doctest::Approx(c).epsilon(1e-12));
    }
    CHECK(epsilon_zero(0.769) == doctest::Approx(1.1485753).epsilon(1e-5));
    CHECK_THROWS_AS(epsilon_zero(0.5), DomainError);
}

TEST_CASE("discriminant sign is equivalent to h(eps) < c") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(0.0, 0.5);
    std::uniform_real_distribution<double> uy(0.9, 2.0);
    std::uniform_real_distribution<double> ue(0.0, 2.0);
    int tested = 0;
    while (tested < 200) {
        DomainPoint2D p{ux(rng), uy(rng)};
        if (!in_domain(p) || std::hypot(p.x - 0.5, p.y - std::sqrt(3.0) / 2.0) <
                                 1e-3)
            continue;
        double eps = ue(rng);
        bool neg = discriminant(eps, p) < 0.0;
        bool hlc = h_of_epsilon(eps) < c_function(p);
        CHECK(neg == hlc);
        ++tested;
    }
}

TEST_CASE("theta difference field is positive off the corner") {
    GridSpec g;
    g.step = 0.1;
    g.y_hi = 1.6;
    g.arc_step = 0.05;
    Metric m{Metric::Kind::ThetaDiff};
    m.alpha = 1.0;
    DomainField field = scan_domain(m, g);
    for (size_t iy = 0; iy < field.ys.size(); ++iy)
        for (size_t ix = 0; ix < field.xs.size(); ++ix)
            if (field.flags[iy][ix] == 0 &&
                std::hypot(field.xs[ix] - 0.5,
                           field.ys[iy] - std::sqrt(3.0) / 2.0) > 1e-6)
                CHECK(field.values[iy][ix] > 0.0);
}

TEST_CASE("minimize_scale error when no interior minimum") {
    auto f = RadialPotential::inverse_power_poly({{1.0, 3.0}});
    CHECK_THROWS_AS(minimize_scale(f, special_lattice("Z2"), 0.5, 2.0),
                    NoMinimumInRange);
}

TEST_CASE("window examples") {
    GridSpec g;
    g.step = 2e-2;
    g.y_hi = 1.3;
    g.arc_step = 5e-3;
    auto empty = nonminimality_window(RadialPotential::f_epsilon(0.5), g, 0.5,
                                      3.0, 126);
    CHECK(empty.empty());
    auto lj = nonminimality_window(RadialPotential::lennard_jones(1, 1, 6, 12),
                                   g, 2.0, 4.0, 101);
    CHECK(!lj.empty());
    CHECK_THROWS_AS(
        nonminimality_window(RadialPotential::yukawa_diff(1, 2, 0.5, 2.0), g,
                             1.0, 2.0, 10),
        NoDensity);
}

TEST_CASE("crossover ladder") {
    auto f = RadialPotential::inverse_power_poly({{-1.0, 2.0}, {1.0, 4.0}});
    CHECK(crossover_scale(f, special_lattice("Z2"), CrossoverSide::HighDensity) ==
          doctest::Approx(2.0));
    auto pure = RadialPotential::inverse_power_poly({{1.0, 3.0}});
    CHECK_THROWS_AS(crossover_scale(pure, special_lattice("Z2"),
                                    CrossoverSide::HighDensity, 1.0, 8),
                    NoCrossoverFound);
    auto V = RadialPotential::counterexample_v();
    CHECK_THROWS_AS(crossover_scale(V, from_domain_point({0.26, 0.97}),
                                    CrossoverSide::HighDensity, 2.0, 6),
                    NoCrossoverFound);
}

TEST_CASE("one-well appendix report") {
    auto rep = onewell_verify_appendix(50.0, false);
    CHECK(rep.lambda1 == doctest::Approx(0.4433).epsilon(1e-3 / 0.4433));
    CHECK(rep.lambda2 == doctest::Approx(0.6765).epsilon(1e-3 / 0.6765));
    CHECK(rep.lambda3 == doctest::Approx(0.9245).epsilon(1e-3 / 0.9245));
    CHECK(rep.z2.lambda_star ==
          doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-10));
    CHECK(rep.a2.lambda_star == doctest::Approx(4.0 / 9.0).epsilon(1e-10));
    CHECK(rep.verdict);
    CHECK(rep.u_p > 9.0 / 4.0);
    CHECK_THROWS_AS(onewell_verify_appendix(3.0, false), DomainError);
}

TEST_CASE("well-potential condition checker") {
    auto rep = theil_conditions_check(builtin_well, 0.6, 0.68, 0.05, 4.0,
                                      std::pow(1.035, 4.0));
    CHECK(rep.pos);
    CHECK(rep.incr);
    CHECK(rep.normalize);
    CHECK(rep.hardwall);
    CHECK(rep.zbettera);
    CHECK(rep.all());
    // A pure power has no well: (normalize) must fail.
    auto pure = theil_conditions_check(
        [](double r) { return std::pow(r, -4.0); }, 0.6, 0.68, 0.05, 4.0, 1.0);
    CHECK(!pure.normalize);
    CHECK_THROWS_AS(theil_conditions_check(builtin_well, 0.5, 0.68, 0.05, 4.0,
                                           1.2),
                    DomainError); // sqrt(3) * 0.5 < 1
    CHECK_THROWS_AS(theil_conditions_check(builtin_well, 0.6, 0.68, 0.05, 1.5,
                                           1.2),
                    IntegralDivergence);
}
