#include "latsum/scan.hpp"
#include "latsum/errors.hpp"
#include "latsum/ljopt.hpp"
#include "latsum/quad.hpp"
#include "latsum/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCornerX = 0.5;
const double kCornerY = std::sqrt(3.0) / 2.0;

int worker_count() {
    if (const char* env = std::getenv("LATSUM_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 4;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    for (auto& t : pool) t.join();
}

double lambda1_zeta(double s) {
    static std::unordered_map<double, double> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    double v = epstein_zeta(special_lattice("Lambda1"), s, 1e-13).value;
    cache[s] = v;
    return v;
}

bool near_corner(const DomainPoint2D& p, double tol = 1e-9) {
    return std::hypot(p.x - kCornerX, p.y - kCornerY) < tol;
}

struct D468 {
    double d4, d6, d8;
};

D468 zeta_diffs(const DomainPoint2D& p) {
    Lattice L = from_domain_point(p);
    return {epstein_zeta(L, 4.0, 1e-13).value - lambda1_zeta(4.0),
            epstein_zeta(L, 6.0, 1e-13).value - lambda1_zeta(6.0),
            epstein_zeta(L, 8.0, 1e-13).value - lambda1_zeta(8.0)};
}

double c_from_diffs(const D468& d) { return d.d4 * d.d8 / (d.d6 * d.d6); }

// Upper/lower bounds on the number of nonzero points of L in the closed ball
// of radius r, from the covolume estimate.
double count_upper(const Lattice& L, double r) {
    double h = cell_half_diameter(L);
    double v = unit_ball_volume(L.dim) * std::pow(r + h, L.dim) / L.det_abs;
    return v; // includes the origin cell, fine as an upper bound on nonzero pts
}
double count_lower(const Lattice& L, double r) {
    double h = cell_half_diameter(L);
    if (r <= h) return 0.0;
    double v = unit_ball_volume(L.dim) * std::pow(r - h, L.dim) / L.det_abs;
    return std::max(0.0, v - 1.0);
}

} // namespace

ScaleMinimum minimize_scale(const RadialPotential& f, const Lattice& L,
                            double lo, double hi, double tol, int grid_points) {
    if (!(0.0 < lo && lo < hi)) throw DomainError("need 0 < lo < hi");
    auto energy = [&](double lam) { return energy_direct(f, L, lam, 1e-10).value; };
    std::vector<double> lam(grid_points), e(grid_points);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < grid_points; ++i) {
        lam[i] = std::exp(llo + (lhi - llo) * i / (grid_points - 1));
        e[i] = energy(lam[i]);
    }
    int best = static_cast<int>(std::min_element(e.begin(), e.end()) - e.begin());
    if (best == grid_points - 1)
        throw NoMinimumInRange("energy still decreasing at the upper end");
    double a = lam[std::max(0, best - 1)];
    double b = lam[std::min(grid_points - 1, best + 1)];
    auto [xs, vs] = golden_section(energy, a, b, tol);
    ScaleMinimum m;
    m.lambda_star = xs;
    m.value = vs;
    m.bracket_lo = a;
    m.bracket_hi = b;
    m.grid_points_used = grid_points;
    return m;
}

double c_function(const DomainPoint2D& p) {
    if (!in_domain(p)) throw OutOfDomain("point outside the fundamental domain");
    if (near_corner(p))
        throw IndeterminateAtTriangular("c(L) is 0/0 at the triangular corner");
    return c_from_diffs(zeta_diffs(p));
}

double h_of_epsilon(double eps) {
    if (eps < 0.0) throw DomainError("h is defined for eps >= 0");
    return (2.0 + eps) * (2.0 + eps) / (6.0 * (1.0 + eps));
}

double epsilon_zero(double c_min) {
    if (!(c_min > 2.0 / 3.0))
        throw DomainError("epsilon_zero requires c_min > h(0) = 2/3");
    double b = 6.0 * c_min - 4.0;
    return 0.5 * (b + std::sqrt(b * b - 4.0 * (4.0 - 6.0 * c_min)));
}

double discriminant(double eps, const DomainPoint2D& p) {
    if (near_corner(p))
        throw IndeterminateAtTriangular("discriminant degenerates at the corner");
    D468 d = zeta_diffs(p);
    return 4.0 * (2.0 + eps) * (2.0 + eps) * d.d6 * d.d6 -
           24.0 * (1.0 + eps) * d.d4 * d.d8;
}

DomainField scan_domain(const Metric& metric, const GridSpec& grid) {
    DomainField field;
    field.grid = grid;
    for (double x = grid.x_lo; x <= grid.x_hi + 1e-12; x += grid.step)
        field.xs.push_back(x);
    for (double y = grid.y_lo; y <= grid.y_hi + 1e-12; y += grid.step)
        field.ys.push_back(y);

    const Lattice L1 = special_lattice("Lambda1");
    auto eval = [&](const DomainPoint2D& p) -> double {
        switch (metric.kind) {
            case Metric::Kind::CValue:
                return c_function(p);
            case Metric::Kind::ThetaDiff:
                return lattice_theta(from_domain_point(p), metric.alpha).value -
                       lattice_theta(L1, metric.alpha).value;
            case Metric::Kind::EnergyDiff:
                return energy_direct(*metric.f, from_domain_point(p),
                                     metric.lambda).value -
                       energy_direct(*metric.f, L1, metric.lambda).value;
            case Metric::Kind::MinLJEnergy:
                return min_energy_closed_form(
                    from_domain_point(p),
                    {metric.a1, metric.a2, metric.x1, metric.x2});
        }
        return 0.0;
    };
    switch (metric.kind) {
        case Metric::Kind::CValue: field.metric = "c_value"; break;
        case Metric::Kind::ThetaDiff: field.metric = "theta_diff"; break;
        case Metric::Kind::EnergyDiff: field.metric = "energy_diff"; break;
        case Metric::Kind::MinLJEnergy: field.metric = "min_lj_energy"; break;
    }

    field.values.assign(field.ys.size(),
                        std::vector<double>(field.xs.size(), 0.0));
    field.flags.assign(field.ys.size(), std::vector<int>(field.xs.size(), 0));
    parallel_for(static_cast<int>(field.ys.size()), [&](int iy) {
        for (size_t ix = 0; ix < field.xs.size(); ++ix) {
            DomainPoint2D p{field.xs[ix], field.ys[static_cast<size_t>(iy)]};
            if (!in_domain(p)) {
                field.flags[static_cast<size_t>(iy)][ix] = 2; // outside
                continue;
            }
            try {
                field.values[static_cast<size_t>(iy)][ix] = eval(p);
            } catch (const Error&) {
                field.flags[static_cast<size_t>(iy)][ix] = 1; // singular
            }
        }
    });

    // Rhombic boundary arc x = cos t, y = sin t, t in [pi/3, pi/2].
    for (double t = kPi / 3.0; t <= kPi / 2.0 + 1e-12; t += grid.arc_step)
        field.arc_t.push_back(t);
    field.arc_values.assign(field.arc_t.size(), 0.0);
    field.arc_flags.assign(field.arc_t.size(), 0);
    parallel_for(static_cast<int>(field.arc_t.size()), [&](int i) {
        double t = field.arc_t[static_cast<size_t>(i)];
        DomainPoint2D p{std::cos(t), std::sin(t)};
        try {
            field.arc_values[static_cast<size_t>(i)] = eval(p);
        } catch (const Error&) {
            field.arc_flags[static_cast<size_t>(i)] = 1;
        }
    });
    return field;
}

CMinResult find_c_minimum(double coarse_step, double final_step) {
    GridSpec grid;
    grid.step = coarse_step;
    Metric m{Metric::Kind::CValue};
    DomainField field = scan_domain(m, grid);

    double best = std::numeric_limits<double>::infinity();
    double bx = 0.0, by = 0.0;
    for (size_t iy = 0; iy < field.ys.size(); ++iy)
        for (size_t ix = 0; ix < field.xs.size(); ++ix)
            if (field.flags[iy][ix] == 0 && field.values[iy][ix] < best) {
                best = field.values[iy][ix];
                bx = field.xs[ix];
                by = field.ys[iy];
            }
    // Arc minimum.
    double arc_best = std::numeric_limits<double>::infinity();
    double arc_t = 0.0;
    for (size_t i = 0; i < field.arc_t.size(); ++i)
        if (field.arc_flags[i] == 0 && field.arc_values[i] < arc_best) {
            arc_best = field.arc_values[i];
            arc_t = field.arc_t[i];
        }

    if (arc_best <= best) {
        auto carc = [](double t) {
            return c_function({std::cos(t), std::sin(t)});
        };
        double lo = std::max(kPi / 3.0, arc_t - 2.0 * grid.arc_step);
        double hi = std::min(kPi / 2.0, arc_t + 2.0 * grid.arc_step);
        auto [ts, cs] = golden_section(carc, lo, hi, 1e-9);
        return {cs, std::cos(ts), std::sin(ts)};
    }
    // Nested interior refinement.
    double step = coarse_step;
    while (step > final_step) {
        double next = step / 10.0;
        for (double x = bx - 2.0 * step; x <= bx + 2.0 * step + 1e-15; x += next)
            for (double y = by - 2.0 * step; y <= by + 2.0 * step + 1e-15;
                 y += next) {
                DomainPoint2D p{std::clamp(x, 0.0, 0.5), y};
                if (!in_domain(p) || near_corner(p, 1e-7)) continue;
                double c = c_function(p);
                if (c < best) {
                    best = c;
                    bx = p.x;
                    by = p.y;
                }
            }
        step = next;
    }
    return {best, bx, by};
}

AllScalesResult verify_all_scales_optimality(double eps, const GridSpec& grid) {
    if (eps < 0.0) throw DomainError("eps must be >= 0");
    Metric m{Metric::Kind::CValue};
    DomainField field = scan_domain(m, grid);
    double h = h_of_epsilon(eps);
    AllScalesResult res;
    res.optimal = true;
    for (size_t iy = 0; iy < field.ys.size(); ++iy)
        for (size_t ix = 0; ix < field.xs.size(); ++ix)
            if (field.flags[iy][ix] == 0 && !(h < field.values[iy][ix])) {
                res.optimal = false;
                res.witnesses.push_back({field.xs[ix], field.ys[iy]});
            }
    for (size_t i = 0; i < field.arc_t.size(); ++i)
        if (field.arc_flags[i] == 0 && !(h < field.arc_values[i])) {
            res.optimal = false;
            res.witnesses.push_back(
                {std::cos(field.arc_t[i]), std::sin(field.arc_t[i])});
        }
    return res;
}

std::vector<Interval> nonminimality_window(const RadialPotential& f,
                                           const GridSpec& grid,
                                           double lambda_lo, double lambda_hi,
                                           int steps) {
    if (!(lambda_lo > 0.0 && lambda_hi > lambda_lo && steps > 1))
        throw DomainError("invalid lambda range");
    if (f.exact_power_tail().empty() || f.power_tail_from() > 0.0)
        throw NoDensity("window scan needs an exact inverse-power potential");

    // Collect candidate lattices: grid cells plus boundary arc samples.
    std::vector<DomainPoint2D> pts;
    for (double x = grid.x_lo; x <= grid.x_hi + 1e-12; x += grid.step)
        for (double y = grid.y_lo; y <= grid.y_hi + 1e-12; y += grid.step) {
            DomainPoint2D p{x, y};
            if (in_domain(p) && !near_corner(p, 1e-7)) pts.push_back(p);
        }
    for (double t = kPi / 3.0; t <= kPi / 2.0 + 1e-12; t += grid.arc_step) {
        DomainPoint2D p{std::cos(t), std::sin(t)};
        if (!near_corner(p, 1e-7)) pts.push_back(p);
    }

    const auto& terms = f.exact_power_tail();
    std::vector<double> svals;
    for (const auto& t : terms) svals.push_back(2.0 * t.power);

    // Per-lattice zeta differences against Lambda1 for every power.
    std::vector<std::vector<double>> diffs(pts.size(),
                                           std::vector<double>(terms.size()));
    parallel_for(static_cast<int>(pts.size()), [&](int i) {
        Lattice L = from_domain_point(pts[static_cast<size_t>(i)]);
        for (size_t k = 0; k < terms.size(); ++k)
            diffs[static_cast<size_t>(i)][k] =
                epstein_zeta(L, svals[k], 1e-13).value - lambda1_zeta(svals[k]);
    });

    std::vector<char> beats(static_cast<size_t>(steps), 0);
    std::vector<double> lams(static_cast<size_t>(steps));
    parallel_for(steps, [&](int j) {
        double lam =
            lambda_lo + (lambda_hi - lambda_lo) * j / (steps - 1.0);
        lams[static_cast<size_t>(j)] = lam;
        for (size_t i = 0; i < pts.size(); ++i) {
            double diff = 0.0;
            for (size_t k = 0; k < terms.size(); ++k)
                diff += terms[k].coeff * std::pow(lam, -svals[k]) * diffs[i][k];
            if (diff < -1e-12) {
                beats[static_cast<size_t>(j)] = 1;
                break;
            }
        }
    });

    std::vector<Interval> out;
    for (int j = 0; j < steps; ++j) {
        if (beats[static_cast<size_t>(j)]) {
            if (out.empty() || !beats[static_cast<size_t>(j - 1)])
                out.push_back({lams[static_cast<size_t>(j)],
                               lams[static_cast<size_t>(j)]});
            out.back().hi = lams[static_cast<size_t>(j)];
        }
    }
    return out;
}

double crossover_scale(const RadialPotential& f, const Lattice& L,
                       CrossoverSide side, double start, int rungs) {
    const Lattice L1 = special_lattice("Lambda1");
    auto diff = [&](double lam) {
        return energy_direct(f, L, lam, 1e-11).value -
               energy_direct(f, L1, lam, 1e-11).value;
    };
    double ratio = (side == CrossoverSide::HighDensity) ? 2.0 : 0.5;
    double lam = start;
    for (int k = 0; k < rungs; ++k) {
        if (diff(lam) < 0.0) {
            // Persistence at the next two rungs.
            if (diff(lam * ratio) < 0.0 && diff(lam * ratio * ratio) < 0.0)
                return lam;
        }
        lam *= ratio;
    }
    throw NoCrossoverFound("no crossover on ladder [" + std::to_string(start) +
                           ", " + std::to_string(start * std::pow(ratio, rungs - 1)) +
                           "]");
}

namespace {

OneWellLatticeReport onewell_lattice(const RadialPotential& f,
                                     const Lattice& L, bool hard_core,
                                     double p) {
    OneWellLatticeReport rep;
    const double zeta4 = epstein_zeta(L, 4.0, 1e-13).value;
    auto sh = shells(L, 2.3);
    // Branch boundaries in [4/9, 1]: lambda = 1/rho for shells with rho < 9/4.
    std::vector<double> bounds = {4.0 / 9.0};
    for (auto it = sh.entries.rbegin(); it != sh.entries.rend(); ++it) {
        double rho = std::sqrt(it->r2);
        double b = 1.0 / rho;
        if (b > 4.0 / 9.0 + 1e-12 && b < 1.0 - 1e-12) bounds.push_back(b);
    }
    bounds.push_back(1.0);
    std::sort(bounds.begin(), bounds.end());

    double best = std::numeric_limits<double>::infinity();
    double best_lam = 0.0;
    for (size_t b = 0; b + 1 < bounds.size(); ++b) {
        OneWellBranch br;
        br.lo = bounds[b];
        br.hi = bounds[b + 1];
        double mid = 0.5 * (br.lo + br.hi);
        double c1 = 0.0, c2 = 0.0, c3 = zeta4;
        for (const auto& e : sh.entries) {
            double rho = std::sqrt(e.r2);
            if (mid * rho <= 1.0 + 1e-12) {
                c1 += 2.0 * static_cast<double>(e.mult);
                c2 += static_cast<double>(e.mult) * rho;
                c3 -= static_cast<double>(e.mult) / (e.r2 * e.r2);
            }
        }
        br.c1 = c1;
        br.c2 = c2;
        br.c3 = c3;
        br.lambda_c = std::pow(4.0 * c3 / (3.0 * c2), 0.2);
        auto ebr = [&](double lam) { return c1 - 3.0 * c2 * lam - c3 / std::pow(lam, 4.0); };
        br.e_lo = ebr(br.lo);
        br.e_hi = ebr(br.hi);
        rep.branches.push_back(br);
        for (auto [lam, ev] : {std::pair{br.lo, br.e_lo}, {br.hi, br.e_hi}})
            if (ev < best) {
                best = ev;
                best_lam = lam;
            }
    }
    rep.lambda_star = best_lam;
    rep.e_min = best;

    // lambda < 4/9: direct evaluation on [0.05, 4/9), then the certified
    // count-bound estimate below 0.05.
    bool ok = true;
    for (int i = 0; i < 400 && ok; ++i) {
        double lam = 0.05 + (4.0 / 9.0 - 0.05 - 1e-6) * i / 399.0;
        if (energy_direct(f, L, lam, 1e-8).value <= best) ok = false;
    }
    double worst_b = std::numeric_limits<double>::infinity();
    double worst_lam = 0.0;
    double ws1 = 0, ws2 = 0, ws3 = 0;
    double tau = static_cast<double>(sh.entries.front().mult);
    for (int i = 0; i < 300; ++i) {
        double lam = std::exp(std::log(1e-6) +
                              (std::log(0.05) - std::log(1e-6)) * i / 299.0);
        double s1 =
            hard_core ? 30000.0 * std::max(tau, count_lower(L, 4.0 / (9.0 * lam)))
                      : (2.0 / 3.0) * std::pow(4.0 / (9.0 * lam), p) * tau;
        double s2 = -count_upper(L, 1.0 / lam); // integrand >= -1 there
        double s3 = -std::pow(lam, -4.0) *
                    std::min(zeta4, power_tail_bound(L, 4.0, 1.0 / lam));
        double bnd = s1 + s2 + s3;
        if (bnd < worst_b) {
            worst_b = bnd;
            worst_lam = lam;
            ws1 = s1;
            ws2 = s2;
            ws3 = s3;
        }
    }
    if (worst_b <= best) ok = false;
    rep.small_lambda_excluded = ok;
    rep.s1_bound = ws1;
    rep.s2_bound = ws2;
    rep.s3_bound = ws3;
    rep.worst_small_lambda = worst_lam;
    return rep;
}

} // namespace

OneWellReport onewell_verify_appendix(double p, bool hard_core) {
    if (!hard_core && !(p > 4.0))
        throw DomainError("continuous one-well verifier requires p > 4");
    OneWellReport rep;
    rep.p = p;
    rep.hard_core = hard_core;
    RadialPotential f = hard_core ? RadialPotential::hard_core_one_well(p)
                                  : RadialPotential::piecewise_one_well(p);
    const Lattice Z2 = special_lattice("Z2");
    const Lattice A2 = special_lattice("A2");
    rep.z2 = onewell_lattice(f, Z2, hard_core, p);
    rep.a2 = onewell_lattice(f, A2, hard_core, p);

    // Displayed critical scales of the square-lattice analysis.
    for (const auto& br : rep.z2.branches) {
        if (std::abs(br.hi - 1.0 / std::sqrt(5.0)) < 1e-9) rep.lambda1 = br.lambda_c;
        if (std::abs(br.hi - 1.0 / std::sqrt(2.0)) < 1e-9) rep.lambda2 = br.lambda_c;
        if (std::abs(br.hi - 1.0) < 1e-9) rep.lambda3 = br.lambda_c;
    }
    if (!hard_core) {
        double z4 = epstein_zeta(Z2, 4.0, 1e-13).value;
        double a4 = z4;
        double a3 = 260.0 * kPi / 243.0;
        double a2c = 104.0 * std::sqrt(2.0) * kPi / 27.0 - 130.0 * kPi / 81.0;
        auto term = [&](double alpha, double k) {
            return std::pow(9.0 / 8.0 * std::pow(9.0 / 4.0, p) * alpha,
                            1.0 / (p - k));
        };
        rep.u_p = std::max({term(a4, 4.0), term(a3, 3.0), term(a2c, 2.0)});
    }
    rep.verdict = rep.z2.e_min < rep.a2.e_min && rep.z2.small_lambda_excluded &&
                  rep.a2.small_lambda_excluded;
    return rep;
}

TheilReport theil_conditions_check(const std::function<double(double)>& g,
                                   double alpha0, double alpha1, double C0,
                                   double tail_exponent, double tail_constant) {
    if (!(0.0 < alpha0 && alpha0 < alpha1 && alpha1 < 1.0 &&
          1.0 < std::sqrt(3.0) * alpha0))
        throw DomainError("need 0 < alpha0 < alpha1 < 1 < sqrt(3) alpha0");
    if (!(tail_exponent > 2.0))
        throw IntegralDivergence("integrals need a tail exponent above 2");
    TheilReport rep;
    const double R = 80.0;
    const double tol = 1e-9;

    // (pos): g >= 0 on (0, alpha1], g <= 0 on [1, infinity).
    rep.pos = true;
    rep.worst_pos = 0.0;
    for (int i = 0; i < 2000; ++i) {
        double r = alpha1 * std::exp(-8.0 * i / 1999.0);
        rep.worst_pos = std::min(rep.worst_pos, g(r));
    }
    for (int i = 0; i < 2000; ++i) {
        double r = 1.0 + (R - 1.0) * i / 1999.0;
        rep.worst_pos = std::min(rep.worst_pos, -g(r));
    }
    rep.pos = rep.worst_pos >= -tol;

    // (incr): g' >= 0 on (sqrt(3) alpha0, infinity).
    double a_incr = std::sqrt(3.0) * alpha0;
    rep.worst_incr = 0.0;
    const double h = 1e-6;
    for (int i = 1; i < 2000; ++i) {
        double r = a_incr + (R - a_incr) * i / 1999.0;
        double d = (g(r + h) - g(r - h)) / (2.0 * h);
        rep.worst_incr = std::min(rep.worst_incr, d);
    }
    rep.incr = rep.worst_incr >= -1e-6;

    // (normalize): g(1) = -1 and no sample falls below -1.
    double gmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 40000; ++i) {
        double r = 0.25 * alpha0 + (R - 0.25 * alpha0) * i / 40000.0;
        gmin = std::min(gmin, g(r));
    }
    rep.worst_normalize =
        std::max(std::abs(g(1.0) + 1.0), std::max(0.0, -1.0 - gmin));
    rep.normalize = rep.worst_normalize <= 1e-6;

    // Integrals I1 = int_{alpha1}^inf g rho drho, I2 = int_{alpha1/2}^inf
    // |g'| rho drho, with envelope-certified tails beyond R.
    double i1 = adaptive_simpson([&](double r) { return g(r) * r; }, alpha1, R,
                                 1e-10, 64);
    double tail1 = tail_constant * std::pow(R, 2.0 - tail_exponent) /
                   (tail_exponent - 2.0);
    rep.integral_i1 = i1; // tail adds at most tail1 in absolute value
    double i2 = 0.0;
    {
        int n = 40000;
        double a = alpha1 / 2.0;
        double prev = std::abs((g(a + h) - g(a - h)) / (2.0 * h)) * a;
        for (int i = 1; i <= n; ++i) {
            double r = a + (R - a) * i / n;
            double cur = std::abs((g(r + h) - g(r - h)) / (2.0 * h)) * r;
            i2 += 0.5 * (prev + cur) * (R - a) / n;
            prev = cur;
        }
    }
    // |g'| tail: monotone tail of the envelope gives roughly the same decay.
    double tail2 = tail_constant * (tail_exponent + 1.0) *
                   std::pow(R, 1.0 - tail_exponent) / (tail_exponent - 1.0);
    rep.integral_i2 = i2 + tail2;

    // (hardwall): g(r) >= -C0 I1 / r^2 + C0 I2 / r on (0, alpha0].
    rep.worst_hardwall = std::numeric_limits<double>::infinity();
    bool hw = true;
    for (int i = 0; i < 2000; ++i) {
        double r = alpha0 * std::exp(-8.0 * i / 1999.0);
        double rhs = -C0 * (i1 - tail1) / (r * r) + C0 * rep.integral_i2 / r;
        double margin = g(r) - rhs;
        rep.worst_hardwall = std::min(rep.worst_hardwall, margin);
        if (margin < -tol) hw = false;
    }
    rep.hardwall = hw;

    // (zbettera): min_{[alpha0,1]} g(r) + g(sqrt 2 r)
    //   <= -3/2 + (1/4) E_f[alpha0 A2^{(>= 2)}].
    double lhs = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 4000; ++i) {
        double r = alpha0 + (1.0 - alpha0) * i / 4000.0;
        lhs = std::min(lhs, g(r) + g(std::sqrt(2.0) * r));
    }
    RadialPotential f = RadialPotential::callback(
        [&g](double r) { return g(std::sqrt(r)); }, tail_exponent,
        tail_constant, 1.0);
    // Envelope-certified tail only; 5e-4 is far below the condition margin.
    double etail = energy_shell_partial(f, special_lattice("A2"), alpha0, 2, 5e-4);
    rep.zbettera_lhs = lhs;
    rep.zbettera_rhs = -1.5 + 0.25 * etail;
    rep.zbettera = lhs <= rep.zbettera_rhs + tol;
    return rep;
}

} // namespace latsum
