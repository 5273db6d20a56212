#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace latsum {

// Bravais lattice L = A Z^d, columns of `basis` are the generators.
struct Lattice {
    int dim = 0;
    Eigen::MatrixXd basis;
    double det_abs = 0.0;

    Eigen::MatrixXd gram() const { return basis.transpose() * basis; }
    // Squared length of the shortest nonzero vector.
    double shortest_sq() const;
};

struct Shell {
    double r2 = 0.0;   // squared distance
    std::int64_t mult = 0;
};

struct ShellSeries {
    std::vector<Shell> entries;
    double r_max = 0.0;

    std::int64_t total_points() const;
};

// Point of the half elliptic fundamental domain for unit-density 2D
// lattices: 0 <= x <= 1/2, x^2 + y^2 >= 1.
struct DomainPoint2D {
    double x = 0.0;
    double y = 1.0;
};

inline constexpr std::int64_t kDefaultPointCap = 100000000; // 1e8 candidates

Lattice make_lattice(const Eigen::MatrixXd& basis);

// Named lattices: Z2, A2, Lambda1, Z3, D3, D3star, D4, E8.
// Lambda1, D3, D3star, D4, E8 are unit-covolume; Z2, A2, Z3 have unit
// shortest vector.
Lattice special_lattice(const std::string& name);

Lattice dual(const Lattice& L);

bool in_domain(const DomainPoint2D& p, double tol = 1e-12);

// Unit-density lattice with Gram form Q(m,n) = ((m+nx)^2 + n^2 y^2)/y.
Lattice from_domain_point(const DomainPoint2D& p);

ShellSeries shells(const Lattice& L, double r_max,
                   std::int64_t point_cap = kDefaultPointCap);

int kissing_number(const Lattice& L);

std::int64_t count_points(const Lattice& L, double r,
                          std::int64_t point_cap = kDefaultPointCap);

// Half the diameter of the fundamental cell; any ball of this radius
// contains at least one lattice point. Used by tail bounds.
double cell_half_diameter(const Lattice& L);

} // namespace latsum
