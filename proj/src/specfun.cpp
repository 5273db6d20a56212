#include "latsum/specfun.hpp"
#include "latsum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bernoulli numbers B_2, B_4, ..., B_20.
constexpr double kBernoulli[] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0};

// Series for P(a,x), returns Q = 1 - P.
double gammq_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    double lg = std::lgamma(a);
    double p = sum * std::exp(-x + a * std::log(x) - lg);
    return 1.0 - p;
}

// Lentz continued fraction for Q(a,x), x > a+1 roughly.
double gammq_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// log of the continued-fraction value of Gamma(a,x) (valid for x moderately
// large relative to a; works for negative a too).
double log_upper_gamma_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 2000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return -x + a * std::log(x) + std::log(h);
}

} // namespace

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw DomainError("riemann_zeta requires s > 1");
    if (s >= 55.0) {
        double sum = 1.0;
        for (int n = 2; n < 64; ++n) {
            double t = std::pow(static_cast<double>(n), -s);
            sum += t;
            if (t < 1e-18) break;
        }
        return sum;
    }
    const int N = 24;
    double sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(static_cast<double>(n), -s);
    double Nd = static_cast<double>(N);
    sum += 0.5 * std::pow(Nd, -s);
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
    // Euler-Maclaurin correction terms.
    double poch = s; // s(s+1)...(s+2k-2)
    double npow = std::pow(Nd, -s - 1.0);
    for (int k = 1; k <= 10; ++k) {
        double fact = 1.0;
        for (int j = 2; j <= 2 * k; ++j) fact *= j;
        sum += kBernoulli[k - 1] / fact * poch * npow;
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        npow /= Nd * Nd;
    }
    return sum;
}

double gamma_fn(double s) {
    if (!(s > 0.0)) throw DomainError("gamma_fn requires s > 0");
    return std::tgamma(s);
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma requires x > 0");
    double result = 0.0;
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x;
    result += std::log(x) - 0.5 * inv;
    double inv2 = inv * inv;
    double p = inv2;
    static const double coef[] = {1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0,
                                  -1.0 / 240.0, 1.0 / 132.0,
                                  -691.0 / 32760.0, 1.0 / 12.0};
    for (double c : coef) {
        result -= c * p;
        p *= inv2;
    }
    return result;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma requires x > 0");
    double result = 0.0;
    while (x < 8.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    // 1/x + 1/(2x^2) + sum B_2k / x^{2k+1}
    double result2 = inv + 0.5 * inv2;
    double p = inv * inv2;
    for (int k = 1; k <= 7; ++k) {
        result2 += kBernoulli[k - 1] * p;
        p *= inv2;
    }
    return result + result2;
}

double digamma_inverse(double y) {
    double x = (y >= -2.22) ? std::exp(y) + 0.5 : -1.0 / (y + 0.5772156649015329);
    double lo = 1e-300, hi = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
        double f = digamma(x) - y;
        if (f > 0.0) hi = std::min(hi, x);
        else lo = std::max(lo, x);
        double step = f / trigamma(x);
        double xn = x - step;
        if (!(xn > lo && xn < hi))
            xn = std::isinf(hi) ? 2.0 * x : 0.5 * (lo + hi);
        if (std::abs(xn - x) <= 1e-14 * std::max(1.0, std::abs(x))) {
            x = xn;
            if (std::abs(digamma(x) - y) < 1e-10) return x;
        }
        x = xn;
    }
    if (std::abs(digamma(x) - y) < 1e-10) return x;
    throw NoConvergence("digamma_inverse did not converge");
}

double gammq(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw DomainError("gammq requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return gammq_series(a, x);
    return gammq_cf(a, x);
}

double upper_gamma(double a, double x) {
    if (!(x > 0.0)) throw DomainError("upper_gamma requires x > 0");
    if (x >= std::max(2.0, a + 2.0)) return std::exp(log_upper_gamma_cf(a, x));
    if (a > 0.0) return gammq(a, x) * std::tgamma(a);
    // a <= 0, small x: downward recurrence Gamma(a,x) =
    // (Gamma(a+1,x) - x^a e^{-x}) / a. Integer orders start at
    // Gamma(0,x) = E1(x); fractional ones at the positive fractional part.
    double a0;
    double g;
    if (std::abs(a - std::round(a)) < 1e-12) {
        a0 = 0.0;
        // E1 series, adequate for x < 2.
        double e1 = -0.5772156649015329 - std::log(x);
        double term = -1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x / k;
            e1 -= term / k;
        }
        g = e1;
        a = std::round(a);
    } else {
        a0 = a - std::floor(a);
        g = gammq(a0, x) * std::tgamma(a0);
    }
    int steps = static_cast<int>(std::lround(a0 - a));
    for (int j = 1; j <= steps; ++j) {
        double aj = a0 - j;
        g = (g - std::pow(x, aj) * std::exp(-x)) / aj;
    }
    return g;
}

double log_upper_gamma(double a, double x) {
    if (x >= std::max(2.0, a + 2.0)) return log_upper_gamma_cf(a, x);
    double g = upper_gamma(a, x);
    if (!(g > 0.0)) return -std::numeric_limits<double>::infinity();
    return std::log(g);
}

double unit_ball_volume(int d) {
    return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double theta_tail_bound(const Lattice& L, double alpha, double R) {
    double h = cell_half_diameter(L);
    R = std::max(R, h);
    int d = L.dim;
    double c = unit_ball_volume(d) * std::pow(2.0, d) / L.det_abs;
    double z = kPi * alpha * R * R;
    double term1 = std::pow(R, d) * std::exp(-z);
    double term2 = 0.5 * d * std::pow(kPi * alpha, -0.5 * d) *
                   upper_gamma(0.5 * d, z);
    return c * (term1 + term2);
}

double power_tail_bound(const Lattice& L, double s, double R) {
    if (!(s > L.dim)) throw DivergentExponent("power tail needs s > d");
    double h = cell_half_diameter(L);
    R = std::max(R, h);
    double c = unit_ball_volume(L.dim) * std::pow(2.0, L.dim) / L.det_abs;
    return c * s / (s - L.dim) * std::pow(R, L.dim - s);
}

double log_power_tail_bound(const Lattice& L, double s, double R) {
    if (!(s > L.dim)) throw DivergentExponent("log power tail needs s > d");
    double h = cell_half_diameter(L);
    R = std::max({R, h, std::exp(1.0 / s) * 1.01});
    int d = L.dim;
    double c = unit_ball_volume(d) * std::pow(2.0, d) / L.det_abs;
    double Rds = std::pow(R, d - s);
    double lr = std::log(R);
    return c * (lr * Rds + d * Rds * (lr / (s - d) + 1.0 / ((s - d) * (s - d))));
}

EvalResult epstein_zeta(const Lattice& L, double s, double tol) {
    const int d = L.dim;
    if (!(s > d)) throw DivergentExponent("epstein_zeta requires s > dim");
    const Lattice Ld = dual(L);
    const double V = L.det_abs;
    const double a = 0.5 * s;
    const double pref_log = a * std::log(kPi) - std::lgamma(a);

    double xcut = 40.0;
    for (int attempt = 0; attempt < 5; ++attempt, xcut *= 1.6) {
        double R1 = std::sqrt(xcut / kPi);
        double R2 = R1;
        double sum1 = 0.0;
        for (const auto& sh : shells(L, R1).entries)
            sum1 += static_cast<double>(sh.mult) * std::pow(sh.r2, -a) *
                    gammq(a, kPi * sh.r2);
        double sum2 = 0.0;
        for (const auto& sh : shells(Ld, R2).entries) {
            double x = kPi * sh.r2;
            double lt = pref_log + (0.5 * (s - d)) * std::log(x) +
                        log_upper_gamma(0.5 * (d - s), x);
            sum2 += static_cast<double>(sh.mult) * std::exp(lt) / V;
        }
        double cpart = 2.0 / (V * (s - d)) - 2.0 / s;
        double cval = (pref_log < 700.0) ? std::exp(pref_log) * cpart : 0.0;
        double value = sum1 + sum2 + cval;

        // Truncation bounds: primal terms are below |p|^{-s} Q(a, pi |p|^2)
        // <= Q(a, pi R1^2) * envelope; use the exponential theta-type bound
        // at alpha = 1/2 (Q(a,x) <= C e^{-x/2} beyond the cut) plus the dual
        // analogue.
        double qcap = gammq(std::max(a, 1e-8), xcut) * std::exp(0.5 * xcut);
        double t1 = std::min(power_tail_bound(L, s, R1),
                             qcap * std::pow(std::max(R1, 1e-10), -s) *
                                 theta_tail_bound(L, 0.5, R1));
        double g2 = std::exp(pref_log + (0.5 * (s - d)) * std::log(xcut) +
                             log_upper_gamma(0.5 * (d - s), xcut) + xcut);
        double t2 = g2 * theta_tail_bound(Ld, 1.0, R2) / V;
        double tb = t1 + t2;
        if (tb <= tol * std::max(1.0, std::abs(value)) || attempt == 4)
            return {value, tb, R1};
    }
    throw NoConvergence("epstein_zeta failed to certify tolerance");
}

EvalResult epstein_zeta_direct(const Lattice& L, double s, double tol,
                               std::int64_t point_cap) {
    if (!(s > L.dim)) throw DivergentExponent("epstein_zeta requires s > dim");
    double R = 8.0 * std::sqrt(L.shortest_sq());
    for (;;) {
        double tb = power_tail_bound(L, s, R);
        if (tb <= tol) {
            double sum = 0.0;
            auto sh = shells(L, R, point_cap);
            for (auto it = sh.entries.rbegin(); it != sh.entries.rend(); ++it)
                sum += static_cast<double>(it->mult) * std::pow(it->r2, -0.5 * s);
            return {sum, tb, R};
        }
        R *= 2.0;
        if (R > 1e7) throw EnumerationTooLarge("direct zeta radius exceeds cap");
    }
}

EvalResult epstein_zeta_deriv(const Lattice& L, double s, double tol,
                              std::int64_t point_cap) {
    if (!(s > L.dim)) throw DivergentExponent("epstein_zeta_deriv requires s > dim");
    double R = 8.0 * std::sqrt(L.shortest_sq());
    for (;;) {
        double tb = log_power_tail_bound(L, s, R);
        if (tb <= tol) {
            double sum = 0.0;
            auto sh = shells(L, R, point_cap);
            for (auto it = sh.entries.rbegin(); it != sh.entries.rend(); ++it)
                sum += static_cast<double>(it->mult) * 0.5 * std::log(it->r2) *
                       std::pow(it->r2, -0.5 * s);
            return {-sum, tb, R};
        }
        R *= 2.0;
        if (R > 1e7) throw EnumerationTooLarge("zeta derivative radius exceeds cap");
    }
}

EvalResult lattice_theta_direct(const Lattice& L, double alpha, double tol) {
    if (!(alpha > 0.0)) throw DomainError("theta requires alpha > 0");
    double xcut = 40.0;
    for (int attempt = 0; attempt < 6; ++attempt, xcut *= 1.5) {
        double R = std::max(std::sqrt(xcut / (kPi * alpha)),
                            cell_half_diameter(L));
        double sum = 0.0;
        for (const auto& sh : shells(L, R).entries)
            sum += static_cast<double>(sh.mult) * std::exp(-kPi * alpha * sh.r2);
        double tb = theta_tail_bound(L, alpha, R);
        if (tb <= tol * std::max(1.0, sum) || attempt == 5)
            return {1.0 + sum, tb, R};
    }
    throw NoConvergence("theta failed to certify tolerance");
}

EvalResult lattice_theta(const Lattice& L, double alpha, double tol) {
    if (!(alpha > 0.0)) throw DomainError("theta requires alpha > 0");
    if (alpha >= 1.0) return lattice_theta_direct(L, alpha, tol);
    // Jacobi: theta_L(alpha) = alpha^{-d/2} / covol * theta_{L*}(1/alpha).
    double f = std::pow(alpha, -0.5 * L.dim) / L.det_abs;
    EvalResult r = lattice_theta_direct(dual(L), 1.0 / alpha, tol);
    return {f * r.value, f * r.tail_bound, r.r_max_used};
}

EvalResult lattice_theta_minus_one(const Lattice& L, double alpha, double tol) {
    if (alpha >= 1.0) {
        EvalResult r = lattice_theta_direct(L, alpha, tol);
        return {r.value - 1.0, r.tail_bound, r.r_max_used};
    }
    double f = std::pow(alpha, -0.5 * L.dim) / L.det_abs;
    EvalResult r = lattice_theta_minus_one(dual(L), 1.0 / alpha, tol);
    return {f * r.value + (f - 1.0), f * r.tail_bound, r.r_max_used};
}

} // namespace latsum
