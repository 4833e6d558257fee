#include "ldpcdist/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ldpcdist {

namespace {

// log2((1+t)^k + (1-t)^k) for t > 0, stable for large t and large k.
double log2_pow_sum(unsigned k, double t) {
    double a = k * std::log2(1.0 + t);
    if (t == 1.0) return a;
    double b = k * std::log2(std::abs(1.0 - t));
    bool negative = (t > 1.0) && (k % 2 == 1); // sign of (1-t)^k
    // b < a always since |1-t| < 1+t
    double ratio = std::exp2(b - a);
    return a + std::log2(negative ? 1.0 - ratio : 1.0 + ratio);
}

// [(1+t)^{m-1} + (1-t)^{m-1}] / [(1+t)^m + (1-t)^m], monotone decreasing in t.
double t_equation_lhs(unsigned m, double t) {
    return std::exp2(log2_pow_sum(m - 1, t) - log2_pow_sum(m, t));
}

} // namespace

double entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_inv(double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("entropy_inv: argument outside [0,1]");
    // exact endpoints; near y=1 the entropy is quadratically flat and a
    // bisection on doubles stalls ~4e-9 short of 1/2
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (entropy(mid) < y) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double solve_t(unsigned m, double beta) {
    if (m < 2) throw std::invalid_argument("solve_t: m must be >= 2");
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("solve_t: beta outside (0,1)");
    if (m % 2 == 1 && beta >= 1.0 - 1.0 / m)
        throw std::invalid_argument("solve_t: no root for odd m and beta >= 1 - 1/m");
    const double target = 1.0 - beta;
    double lo = 0.0, hi = 1.0;
    while (t_equation_lhs(m, hi) > target) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(hi, 1.0); ++i) {
        double mid = 0.5 * (lo + hi);
        if (t_equation_lhs(m, mid) > target) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double q_exponent(const SpectrumParams& p, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("q_exponent: beta outside [0,1]");
    if (p.m % 2 == 1 && beta >= 1.0 - 1.0 / p.m) return kNegInf;
    if (beta == 0.0) return 0.0; // continuous limit
    if (beta == 1.0) return 0.0; // even m only; the all-ones word satisfies every check
    double t = solve_t(p.m, beta);
    double log_num = log2_pow_sum(p.m, t);
    return p.alpha * (log_num - 1.0 - beta * p.m * std::log2(t)) - p.alpha * p.m * entropy(beta);
}

double spectrum_exponent(const SpectrumParams& p, double beta) {
    double q = q_exponent(p, beta);
    if (q == kNegInf) return kNegInf;
    return entropy(beta) + q;
}

double f_exponent(const SpectrumParams& p, double theta) {
    if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("f_exponent: theta outside (0,1]");
    auto objective = [&](double beta) {
        double q = q_exponent(p, beta * theta);
        if (q == kNegInf) return kNegInf;
        return q + theta * entropy(beta);
    };

    const double step = 1e-3;
    double best = kNegInf, best_beta = step;
    for (double beta = step; beta <= 1.0 + 1e-12; beta += step) {
        double b = std::min(beta, 1.0);
        double v = objective(b);
        if (v > best) { best = v; best_beta = b; }
    }

    // Golden-section refinement on the bracket around the best grid point.
    double a = std::max(best_beta - step, step * 0.5);
    double b = std::min(best_beta + step, 1.0);
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > 1e-10) {
        if (fc > fd) { b = d; d = c; fd = fc; c = b - gr * (b - a); fc = objective(c); }
        else { a = c; c = d; fc = fd; d = a + gr * (b - a); fd = objective(d); }
    }
    return std::max({best, fc, fd});
}

double delta_star(const SpectrumParams& p) {
    auto g = [&](double beta) { return spectrum_exponent(p, beta); };
    const double step = 1e-4;
    double prev_beta = 1e-6, prev = g(prev_beta);
    for (double beta = prev_beta + step; beta <= 0.5 + step; beta += step) {
        double b = std::min(beta, 0.5);
        double cur = g(b);
        if (prev < 0.0 && cur >= 0.0) {
            double lo = prev_beta, hi = b;
            while (hi - lo > 1e-10) {
                double mid = 0.5 * (lo + hi);
                if (g(mid) < 0.0) lo = mid;
                else hi = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_beta = b;
        prev = cur;
    }
    throw std::runtime_error("delta_star: no sign change of the spectrum exponent in (0, 1/2]");
}

double theta_star(const SpectrumParams& p) {
    double lo = 1e-3, hi = 1.0;
    double flo = f_exponent(p, lo), fhi = f_exponent(p, hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::runtime_error("theta_star: invalid bracket, f(" + std::to_string(lo) + ")=" +
                                 std::to_string(flo) + ", f(" + std::to_string(hi) + ")=" +
                                 std::to_string(fhi));
    while (hi - lo > 1e-8) {
        double mid = 0.5 * (lo + hi);
        if (f_exponent(p, mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

ThresholdReport ldpc_exponents(const SpectrumParams& p) {
    ThresholdReport rep;
    rep.ell = p.ell();
    rep.emm = p.m;
    rep.rate = 1.0 - p.alpha;
    rep.delta_star = delta_star(p);
    rep.theta_star = theta_star(p);
    if (!(rep.delta_star < rep.theta_star))
        throw std::runtime_error("ldpc_exponents: delta* >= theta* for (" +
                                 std::to_string(rep.ell) + "," + std::to_string(rep.emm) + ")");
    double hd = entropy(rep.delta_star);
    rep.f_sw = (1.0 - rep.theta_star) * hd;
    rep.f_mb = hd / 2.0;
    rep.f_comb = std::min(rep.f_sw, rep.f_mb);
    rep.f_cs = hd - rep.theta_star * entropy(rep.delta_star / rep.theta_star);
    GenericExponents gen = generic_exponents(rep.rate);
    rep.generic_gv_delta = gen.gv_delta;
    rep.generic_f_swmb = gen.f_swmb;
    rep.generic_f_cs = gen.f_cs;
    return rep;
}

GenericExponents generic_exponents(double rate) {
    if (!(rate > 0.0 && rate < 1.0)) throw std::invalid_argument("generic_exponents: rate outside (0,1)");
    GenericExponents g;
    g.gv_delta = entropy_inv(1.0 - rate);
    g.f_swmb = std::min(rate * (1.0 - rate), (1.0 - rate) / 2.0);
    // h(x) >= 2x on [0, 1/2] puts the exact ratio in [0, 1/2]; clamp away the
    // bisection tolerance, which dominates when 1 - rate is near the ulp scale.
    double ratio = std::clamp(g.gv_delta / (1.0 - rate), 0.0, 0.5);
    g.f_cs = (1.0 - rate) * (1.0 - entropy(ratio));
    return g;
}

} // namespace ldpcdist
