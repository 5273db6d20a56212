#include "latsum/lattice.hpp"
#include "latsum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latsum {

namespace {

constexpr double kShellMergeRelTol = 1e-9;

// Candidate coordinate box: |n_i| <= r * sqrt((G^{-1})_{ii}).
std::vector<std::int64_t> coordinate_bounds(const Lattice& L, double r) {
    Eigen::MatrixXd Ginv = L.gram().inverse();
    std::vector<std::int64_t> b(static_cast<size_t>(L.dim));
    for (int i = 0; i < L.dim; ++i) {
        double bi = r * std::sqrt(std::max(Ginv(i, i), 0.0));
        b[static_cast<size_t>(i)] = static_cast<std::int64_t>(std::floor(bi + 1e-12));
    }
    return b;
}

// Collect squared lengths of all nonzero points with |p| <= r_max.
std::vector<double> enumerate_r2(const Lattice& L, double r_max,
                                 std::int64_t point_cap) {
    const int d = L.dim;
    auto bounds = coordinate_bounds(L, r_max);
    double candidates = 1.0;
    for (auto b : bounds) candidates *= static_cast<double>(2 * b + 1);
    if (candidates > static_cast<double>(point_cap))
        throw EnumerationTooLarge("shell enumeration would visit " +
                                  std::to_string(candidates) + " candidates");

    const Eigen::MatrixXd G = L.gram();
    const double r2_max = r_max * r_max * (1.0 + 1e-12);
    std::vector<double> out;
    std::vector<std::int64_t> n(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) n[static_cast<size_t>(i)] = -bounds[static_cast<size_t>(i)];
    Eigen::VectorXd nv(d);
    while (true) {
        bool zero = true;
        for (int i = 0; i < d; ++i) {
            nv(i) = static_cast<double>(n[static_cast<size_t>(i)]);
            if (n[static_cast<size_t>(i)] != 0) zero = false;
        }
        if (!zero) {
            double r2 = nv.dot(G * nv);
            if (r2 <= r2_max) out.push_back(r2);
        }
        int k = 0;
        for (; k < d; ++k) {
            size_t ks = static_cast<size_t>(k);
            if (n[ks] < bounds[ks]) {
                ++n[ks];
                break;
            }
            n[ks] = -bounds[ks];
        }
        if (k == d) break;
    }
    return out;
}

} // namespace

double Lattice::shortest_sq() const {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < dim; ++j) best = std::min(best, basis.col(j).squaredNorm());
    auto r2s = enumerate_r2(*this, std::sqrt(best), kDefaultPointCap);
    for (double r2 : r2s) best = std::min(best, r2);
    return best;
}

std::int64_t ShellSeries::total_points() const {
    std::int64_t n = 0;
    for (const auto& e : entries) n += e.mult;
    return n;
}

Lattice make_lattice(const Eigen::MatrixXd& basis) {
    if (basis.rows() != basis.cols() || basis.rows() < 1)
        throw SingularBasis("basis must be a square matrix");
    Lattice L;
    L.dim = static_cast<int>(basis.rows());
    L.basis = basis;
    double det = basis.determinant();
    double scale = std::pow(basis.norm() / std::sqrt(static_cast<double>(L.dim)),
                            L.dim);
    if (std::abs(det) <= 1e-12 * std::max(scale, 1e-300))
        throw SingularBasis("basis determinant is numerically zero");
    L.det_abs = std::abs(det);
    return L;
}

Lattice special_lattice(const std::string& name) {
    Eigen::MatrixXd B;
    if (name == "Z2") {
        B = Eigen::MatrixXd::Identity(2, 2);
    } else if (name == "A2") {
        B.resize(2, 2);
        B << 1.0, 0.5,
             0.0, std::sqrt(3.0) / 2.0;
    } else if (name == "Lambda1") {
        double s = std::sqrt(2.0 / std::sqrt(3.0));
        B.resize(2, 2);
        B << 1.0, 0.5,
             0.0, std::sqrt(3.0) / 2.0;
        B *= s;
    } else if (name == "Z3") {
        B = Eigen::MatrixXd::Identity(3, 3);
    } else if (name == "D3") {
        // FCC generators scaled to covolume 1.
        B.resize(3, 3);
        B << 0.0, 1.0, 1.0,
             1.0, 0.0, 1.0,
             1.0, 1.0, 0.0;
        B *= std::pow(2.0, -1.0 / 3.0);
    } else if (name == "D3star") {
        // BCC generators scaled to covolume 1.
        B.resize(3, 3);
        B << 1.0, 0.0, 0.5,
             0.0, 1.0, 0.5,
             0.0, 0.0, 0.5;
        B *= std::pow(2.0, 1.0 / 3.0);
    } else if (name == "D4") {
        B.resize(4, 4);
        B << -1.0, -1.0,  0.0,  0.0,
              1.0, -1.0,  0.0,  0.0,
              0.0,  1.0, -1.0,  0.0,
              0.0,  0.0,  1.0, -1.0;
        B.transposeInPlace();
        B *= std::pow(2.0, -0.25);
    } else if (name == "E8") {
        B.resize(8, 8);
        B << 2, -1,  0,  0,  0,  0,  0, 0.5,
             0,  1, -1,  0,  0,  0,  0, 0.5,
             0,  0,  1, -1,  0,  0,  0, 0.5,
             0,  0,  0,  1, -1,  0,  0, 0.5,
             0,  0,  0,  0,  1, -1,  0, 0.5,
             0,  0,  0,  0,  0,  1, -1, 0.5,
             0,  0,  0,  0,  0,  0,  1, 0.5,
             0,  0,  0,  0,  0,  0,  0, 0.5;
    } else {
        throw UnknownLattice("unknown lattice name: " + name);
    }
    return make_lattice(B);
}

Lattice dual(const Lattice& L) {
    return make_lattice(L.basis.inverse().transpose());
}

bool in_domain(const DomainPoint2D& p, double tol) {
    return p.x >= -tol && p.x <= 0.5 + tol && p.x * p.x + p.y * p.y >= 1.0 - tol;
}

Lattice from_domain_point(const DomainPoint2D& p) {
    if (!in_domain(p))
        throw OutOfDomain("point (" + std::to_string(p.x) + ", " +
                          std::to_string(p.y) + ") outside the fundamental domain");
    double sy = std::sqrt(p.y);
    Eigen::MatrixXd B(2, 2);
    B << 1.0 / sy, p.x / sy,
         0.0,      sy;
    return make_lattice(B);
}

ShellSeries shells(const Lattice& L, double r_max, std::int64_t point_cap) {
    if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
    auto r2s = enumerate_r2(L, r_max, point_cap);
    std::sort(r2s.begin(), r2s.end());
    ShellSeries s;
    s.r_max = r_max;
    for (double r2 : r2s) {
        if (!s.entries.empty() &&
            r2 - s.entries.back().r2 <= kShellMergeRelTol * r2) {
            ++s.entries.back().mult;
        } else {
            s.entries.push_back({r2, 1});
        }
    }
    // Snap shells whose squared length is within merge tolerance of an integer;
    // Gram matrices of the named lattices are rational.
    for (auto& e : s.entries) {
        double n = std::round(e.r2);
        if (n > 0 && std::abs(e.r2 - n) <= kShellMergeRelTol * e.r2 * 10.0)
            e.r2 = n;
    }
    return s;
}

int kissing_number(const Lattice& L) {
    double r1 = std::sqrt(L.shortest_sq());
    auto s = shells(L, r1 * (1.0 + 1e-9));
    return static_cast<int>(s.entries.front().mult);
}

std::int64_t count_points(const Lattice& L, double r, std::int64_t point_cap) {
    return shells(L, r, point_cap).total_points();
}

double cell_half_diameter(const Lattice& L) {
    double s = 0.0;
    for (int j = 0; j < L.dim; ++j) s += L.basis.col(j).norm();
    return 0.5 * s;
}

} // namespace latsum
