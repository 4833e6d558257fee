#pragma once

#include <limits>

namespace ldpcdist {

/// Ensemble parameters for the asymptotic spectrum engine.
struct SpectrumParams {
    double alpha;   // ell/m = 1 - R
    unsigned m;     // row weight

    unsigned ell() const { return unsigned(alpha * m + 0.5); }
};

/// -inf marks the vanishing-probability region (odd m, beta >= 1 - 1/m).
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Asymptotic quantities and complexity exponents for one ensemble.
struct ThresholdReport {
    unsigned ell = 0, emm = 0;
    double rate = 0;
    double delta_star = 0;   // typical relative distance
    double theta_star = 0;   // erasure-correcting threshold
    double f_sw = 0;         // (1 - theta*) h(delta*)
    double f_mb = 0;         // h(delta*) / 2
    double f_comb = 0;       // min of the two
    double f_cs = 0;         // h(delta*) - theta* h(delta*/theta*)
    // Baselines for codes meeting the GV bound at the same rate.
    double generic_gv_delta = 0;
    double generic_f_swmb = 0;
    double generic_f_cs = 0;
};

/// Binary entropy, base 2; 0 log 0 := 0. Throws outside [0,1].
double entropy(double x);

/// Inverse of entropy on [0, 1/2], bisection to 1e-12.
double entropy_inv(double y);

/// Unique t > 0 with [(1+t)^{m-1} + (1-t)^{m-1}] / [(1+t)^m + (1-t)^m] = 1 - beta.
/// Requires m >= 2, 0 < beta < 1, and beta < 1 - 1/m when m is odd.
double solve_t(unsigned m, double beta);

/// alpha log2{[(1+t)^m + (1-t)^m] / (2 t^{beta m})} - alpha m h(beta).
/// Returns kNegInf when m is odd and beta >= 1 - 1/m; q(alpha, 0) := 0.
double q_exponent(const SpectrumParams& p, double beta);

/// h(beta) + q(alpha, beta): the normalized log of the average number of
/// weight-(beta n) codewords.
double spectrum_exponent(const SpectrumParams& p, double beta);

/// f(theta) = max over beta in (0,1] of q(alpha, beta*theta) + theta h(beta).
double f_exponent(const SpectrumParams& p, double theta);

/// Smallest beta in (0, 1/2] where spectrum_exponent crosses zero from below.
double delta_star(const SpectrumParams& p);

/// Root of f_exponent in (0, 1).
double theta_star(const SpectrumParams& p);

/// Full report: roots plus the four LDPC exponents and generic baselines.
/// Requires delta_star < theta_star.
ThresholdReport ldpc_exponents(const SpectrumParams& p);

struct GenericExponents {
    double gv_delta;   // h^{-1}(1 - R)
    double f_swmb;     // min{R(1-R), (1-R)/2}
    double f_cs;       // (1-R)[1 - h(gv_delta/(1-R))]
};

GenericExponents generic_exponents(double rate);

} // namespace ldpcdist
