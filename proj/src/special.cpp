#include "coulomb5/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "coulomb5/dd.hpp"

namespace coulomb5::sf {

namespace {

// Lanczos g = 7, 9-term coefficient set.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double ln_2pi_half = 0.91893853320467274178032973640562;  // ln(2*pi)/2

bool near_nonpositive_integer(ComplexScalar z, double tol) {
    if (z.real() > 0.5) return false;
    double n = std::nearbyint(z.real());
    if (n > 0.0) return false;
    return std::abs(z - ComplexScalar(n, 0.0)) <= tol;
}

ComplexScalar log_gamma_positive(ComplexScalar z) {
    // Requires Re z >= 0.5.
    ComplexScalar zm1 = z - 1.0;
    ComplexScalar x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (zm1 + static_cast<double>(i));
    ComplexScalar t = zm1 + lanczos_g + 0.5;
    return (zm1 + 0.5) * std::log(t) - t + ln_2pi_half + std::log(x);
}

// Integer power by repeated multiplication; exponents here stay small.
double ipow(double b, long long e) {
    double r = 1.0;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

double log_factorial(long long n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(513);
        t[0] = 0.0;
        for (std::size_t i = 1; i < t.size(); ++i)
            t[i] = t[i - 1] + std::log(static_cast<double>(i));
        return t;
    }();
    if (n < static_cast<long long>(table.size())) return table[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

struct SeriesResult {
    ComplexScalar value;
    double est_abs_error;
    int terms;
    bool converged;
};

// Taylor series of 1F1 with double-double term recurrence and
// accumulation. The condition number sum|t_n|/|F| reaches ~4e13 at
// |z| = 30 on the imaginary axis, which plain double summation cannot
// survive; double-double keeps ~15 digits of headroom there.
SeriesResult kummer_series(ComplexScalar a, ComplexScalar c, ComplexScalar z,
                           int term_cap) {
    dd::Complex term(1.0, 0.0);
    dd::Complex sum(1.0, 0.0);
    const dd::Complex zdd(z.real(), z.imag());
    double sum_abs = 1.0;
    double tmag = 1.0;
    int n = 0;
    bool converged = false;
    for (; n < term_cap; ++n) {
        const double nd = static_cast<double>(n);
        // a + n and c + n assembled exactly in double-double.
        dd::Complex an{dd::two_sum(a.real(), nd), dd::Real(a.imag())};
        dd::Complex cn{dd::two_sum(c.real(), nd), dd::Real(c.imag())};
        dd::Complex cn_conj{cn.re, dd::Real(-cn.im.hi, -cn.im.lo)};
        dd::Real cn_norm = dd::add(dd::mul(cn.re, cn.re), dd::mul(cn.im, cn.im));
        term = dd::mul(term, an);
        term = dd::mul(term, zdd);
        term = dd::mul(term, cn_conj);
        term = dd::div(term, cn_norm);
        term = dd::div(term, nd + 1.0);
        sum = dd::add(sum, term);
        tmag = dd::abs_estimate(term);
        sum_abs += tmag;
        // Threshold is relative to the accumulated value, not to the
        // (hugely cancelling) absolute-term sum.
        if (tmag <= dd::abs_estimate(sum) * 1e-19 + 1e-300) {
            converged = true;
            ++n;
            break;
        }
    }
    ComplexScalar value(sum.re.value(), sum.im.value());
    // Error model: per-term double-double rounding (a few eps_dd per
    // recurrence step, weighted by the condition sum), the first omitted
    // term, and the final rounding to double.
    const double eps_dd = 4.93e-32;
    double est = sum_abs * eps_dd * 6.0 * static_cast<double>(n) + tmag +
                 std::abs(value) * 1.2e-16;
    return {value, est, n, converged};
}

struct GSum {
    ComplexScalar value;     // sum truncated just before the smallest term
    double min_term;         // magnitude of the smallest (first omitted) term
    int terms;               // number of terms summed
    bool diverged_early;     // smallest term is the leading one
};

// Optimal truncation of G(a;c;z): scan the terms, truncate at the global
// minimum magnitude. The series may grow for a few terms before decaying
// (large parameters), so first-growth stopping is not used.
GSum g_optimal(ComplexScalar a, ComplexScalar c, ComplexScalar z, int cap = 160) {
    ComplexScalar t(1.0, 0.0);
    ComplexScalar partial(0.0, 0.0);
    ComplexScalar best_partial(0.0, 0.0);
    double best_mag = 1.0;
    int best_j = 0;
    for (int j = 0; j < cap; ++j) {
        const double jd = static_cast<double>(j);
        if (j > 0) t *= (a + (jd - 1.0)) * (c + (jd - 1.0)) / ((jd)*z);
        double mag = std::abs(t);
        if (mag < best_mag) {
            best_mag = mag;
            best_j = j;
            best_partial = partial;  // sum of terms 0..j-1
        }
        partial += t;
        if (mag < 1e-30) break;
        if (mag > best_mag * 1e8) break;  // deep in the divergent tail
    }
    // best_j == 0 means even the leading term is not the smallest start:
    // the expansion has no usable regime at this z.
    if (best_j == 0) return {ComplexScalar(1.0, 0.0), 1.0, 0, true};
    return {best_partial, best_mag, best_j, false};
}

struct AsymResult {
    ComplexScalar value;
    double est_abs_error;
    int terms;
};

// Two-G-series representation
//   F = G(c)/G(c-a) (-z)^{-a} G(a; a-c+1; -z)
//     + G(c)/G(a) e^z z^{a-c} G(c-a; 1-a; z)
// with principal branches; valid away from the poles of the prefactors.
AsymResult kummer_asymptotic(ComplexScalar a, ComplexScalar c, ComplexScalar z) {
    const ComplexScalar lgc = log_gamma(c);
    GSum g1 = g_optimal(a, a - c + 1.0, -z);
    GSum g2 = g_optimal(c - a, 1.0 - a, z);
    ComplexScalar p1(0.0, 0.0), p2(0.0, 0.0);
    double m1 = 0.0, m2 = 0.0;
    if (!near_nonpositive_integer(c - a, 1e-13)) {
        p1 = std::exp(lgc - log_gamma(c - a) - a * std::log(-z));
        m1 = std::abs(p1);
    }
    if (!near_nonpositive_integer(a, 1e-13)) {
        p2 = std::exp(lgc - log_gamma(a) + z + (a - c) * std::log(z));
        m2 = std::abs(p2);
    }
    ComplexScalar value = p1 * g1.value + p2 * g2.value;
    double est = m1 * g1.min_term + m2 * g2.min_term +
                 (m1 * std::abs(g1.value) + m2 * std::abs(g2.value)) * 5e-15;
    return {value, est, g1.terms + g2.terms};
}

}  // namespace

ComplexScalar log_gamma(ComplexScalar z) {
    if (near_nonpositive_integer(z, 1e-14))
        throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_positive(z);
    // Reflection: log G(z) = ln pi - log sin(pi z) - log G(1 - z).
    ComplexScalar lsin = std::log(std::sin(pi * z));
    return std::log(ComplexScalar(pi, 0.0)) - lsin - log_gamma_positive(1.0 - z);
}

AccuracyReport kummer_f(ComplexScalar a, ComplexScalar c, ComplexScalar z,
                        int term_cap) {
    if (near_nonpositive_integer(c, 1e-14))
        throw PoleError("kummer_f: c at non-positive integer");
    if (std::abs(z) == 0.0) return {ComplexScalar(1.0, 0.0), 0.0, 0};

    const double az = std::abs(z);
    if (az <= kummer_series_switch) {
        SeriesResult s = kummer_series(a, c, z, term_cap);
        if (!s.converged)
            throw NonConvergenceError("kummer_f: series not converged within term cap");
        return {s.value, s.est_abs_error, s.terms};
    }

    AsymResult asym = kummer_asymptotic(a, c, z);
    double scale = std::max(std::abs(asym.value), 1e-300);
    if (asym.est_abs_error <= 1e-11 * scale)
        return {asym.value, asym.est_abs_error, asym.terms};

    // Asymptotic regime not reached at this z for these parameters; the
    // compensated series still has headroom for moderate |z|.
    if (az <= 80.0) {
        SeriesResult s = kummer_series(a, c, z, std::max(term_cap, 400));
        if (s.converged && s.est_abs_error < asym.est_abs_error)
            return {s.value, s.est_abs_error, s.terms};
    }
    if (asym.est_abs_error > 1e-6 * scale)
        throw NonConvergenceError("kummer_f: no route met the error target");
    return {asym.value, asym.est_abs_error, asym.terms};
}

ComplexScalar kummer_g_asymptotic(ComplexScalar a, ComplexScalar c, ComplexScalar z,
                                  int n_terms, GDiagnostics* diag) {
    ComplexScalar t(1.0, 0.0);
    ComplexScalar sum(1.0, 0.0);
    double prev_mag = 1.0;
    bool grew = false;
    for (int j = 1; j <= n_terms; ++j) {
        const double jd = static_cast<double>(j);
        t *= (a + (jd - 1.0)) * (c + (jd - 1.0)) / (jd * z);
        double mag = std::abs(t);
        if (mag > prev_mag) grew = true;
        prev_mag = mag;
        sum += t;
    }
    if (diag) {
        const double jd = static_cast<double>(n_terms + 1);
        ComplexScalar next = t * (a + (jd - 1.0)) * (c + (jd - 1.0)) / (jd * z);
        diag->first_omitted = std::abs(next);
        diag->terms_summed = n_terms;
        diag->divergence_warning = grew;
    }
    return sum;
}

double gegenbauer(int n, double lam, double x) {
    if (n < 0) throw std::domain_error("gegenbauer: n must be non-negative");
    if (!(lam > -0.5)) throw std::domain_error("gegenbauer: requires lam > -1/2");
    if (std::abs(x) > 1.0 + 1e-12)
        throw std::domain_error("gegenbauer: requires x in [-1, 1]");
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = 2.0 * lam * x;
    for (int j = 2; j <= n; ++j) {
        const double jd = static_cast<double>(j);
        double p2 = (2.0 * (jd + lam - 1.0) * x * p1 - (jd + 2.0 * lam - 2.0) * p0) / jd;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

struct DoubledLabel {
    long long L2, m2, mp2;
};

DoubledLabel validate_wigner(double L, double m, double mp) {
    long long L2, m2, mp2;
    if (!half_integer(L, L2) || !half_integer(m, m2) || !half_integer(mp, mp2))
        throw std::domain_error("wigner_d: L, m, mp must be half-integers");
    if (L2 < 0) throw std::domain_error("wigner_d: L must be >= 0");
    if (((L2 - m2) & 1LL) || ((L2 - mp2) & 1LL))
        throw std::domain_error("wigner_d: m, mp must share the integrality class of L");
    if (std::llabs(m2) > L2 || std::llabs(mp2) > L2)
        throw std::domain_error("wigner_d: requires |m| <= L and |mp| <= L");
    return {L2, m2, mp2};
}

}  // namespace

double wigner_d(double L, double m, double mp, double beta) {
    const auto [L2, m2, mp2] = validate_wigner(L, m, mp);
    // Wigner's sum formula; every factorial argument below is a
    // non-negative integer because of the shared integrality class.
    const long long Lpm = (L2 + m2) / 2, Lmm = (L2 - m2) / 2;
    const long long Lpmp = (L2 + mp2) / 2, Lmmp = (L2 - mp2) / 2;
    const long long dm = (m2 - mp2) / 2;  // m - mp
    const double lognorm = 0.5 * (log_factorial(Lpm) + log_factorial(Lmm) +
                                  log_factorial(Lpmp) + log_factorial(Lmmp));
    const double ch = std::cos(0.5 * beta);
    const double sh = std::sin(0.5 * beta);
    const long long smin = std::max(0LL, -dm);
    const long long smax = std::min(Lpmp, Lmm);
    double sum = 0.0;
    for (long long s = smin; s <= smax; ++s) {
        const double logden = log_factorial(Lpmp - s) + log_factorial(s) +
                              log_factorial(dm + s) + log_factorial(Lmm - s);
        const double mag = std::exp(lognorm - logden);
        const double sign = ((dm + s) & 1LL) ? -1.0 : 1.0;
        sum += sign * mag * ipow(ch, L2 + (mp2 - m2) / 2 - 2 * s) * ipow(sh, dm + 2 * s);
    }
    return sum;
}

ComplexScalar wigner_D(double L, double m, double mp, double alpha, double beta,
                       double gamma) {
    const double d = wigner_d(L, m, mp, beta);
    return std::exp(ComplexScalar(0.0, -m * alpha)) * d *
           std::exp(ComplexScalar(0.0, -mp * gamma));
}

}  // namespace coulomb5::sf
