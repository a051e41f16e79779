#pragma once

// Special functions backing the whole library: complex log-gamma,
// confluent hypergeometric F(a;c;z) for complex arguments, the divergent
// asymptotic series G(a;c;z), Gegenbauer polynomials, and Wigner
// D-functions (integer and half-integer L).
//
// Accuracy contracts:
//  * log_gamma: exp(log_gamma(z)) satisfies the gamma recurrence to
//    1e-12 relative away from poles. For Re z >= 0.5 the value matches
//    the standard continuous log-gamma; the reflection region is exact
//    under exp() and branch-validated on the tested strip |Im z| <= 3.
//  * kummer_f: estimated relative error <= 1e-11 for |z| <= 50 on the
//    parameter ranges used by the bases (verified down to ~1e-13).
//  * kummer_g_asymptotic: truncated divergent series; caller controls
//    the term count, optimal truncation utilities report the smallest
//    term reached.
//
// All functions are pure and reentrant.

#include <stdexcept>

#include "coulomb5/types.hpp"

namespace coulomb5::sf {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Principal-branch complex log-gamma (Lanczos g=7 plus reflection).
// Throws PoleError when z is within 1e-14 of a non-positive integer.
ComplexScalar log_gamma(ComplexScalar z);

// 1F1(a;c;z). Series branch (double-double compensated) for |z| <= 30,
// two-G-series asymptotic representation with optimal truncation beyond;
// when the asymptotic error estimate misses the target and |z| <= 80 the
// series branch is used as fallback. term_cap bounds the series length.
// Throws NonConvergenceError when no route reaches a usable estimate,
// and PoleError when c is within 1e-14 of a non-positive integer.
AccuracyReport kummer_f(ComplexScalar a, ComplexScalar c, ComplexScalar z,
                        int term_cap = 500);

inline constexpr double kummer_series_switch = 30.0;

// Diagnostics for a truncated asymptotic sum: the magnitude of the first
// omitted term bounds the truncation error at the optimal cutoff.
struct GDiagnostics {
    double first_omitted = 0.0;
    int terms_summed = 0;
    bool divergence_warning = false;  // terms grew before the requested count
};

// Truncated asymptotic series G(a;c;z) = 1 + a c/(1! z) + ... with
// n_terms correction terms (n_terms = 0 gives 1 exactly).
ComplexScalar kummer_g_asymptotic(ComplexScalar a, ComplexScalar c, ComplexScalar z,
                                  int n_terms, GDiagnostics* diag = nullptr);

// Gegenbauer polynomial C_n^lam(x) by the three-term recurrence.
// Requires n >= 0, lam > -1/2, |x| <= 1 (tiny roundoff slack admitted).
double gegenbauer(int n, double lam, double x);

// Wigner little-d function d^L_{m mp}(beta). L, m, mp are half-integers
// passed as doubles; throws std::domain_error on mismatched integrality
// (2L, 2m, 2mp must be integers of equal parity with |m|,|mp| <= L).
double wigner_d(double L, double m, double mp, double beta);

// Wigner D-function in the convention
//   D^L_{m mp}(alpha,beta,gamma) = e^{-i m alpha} d^L_{m mp}(beta) e^{-i mp gamma},
// chosen so that L3 = i d/dalpha has eigenvalue +m. gamma ranges over
// [0, 4pi); half-integer L is admitted.
ComplexScalar wigner_D(double L, double m, double mp, double alpha, double beta,
                       double gamma);

}  // namespace coulomb5::sf
