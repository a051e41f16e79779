#include "coulomb5/parabolic.hpp"

#include <cmath>
#include <stdexcept>

#include "coulomb5/special.hpp"

namespace coulomb5::parabolic {

namespace {

void validate_L(double L) {
    long long t = 0;
    if (!half_integer(L, t) || t < 0)
        throw std::domain_error("parabolic: L must be a nonnegative half-integer");
}

double sigma_of(double k, double Omega, const PhysParams& p) {
    return std::sqrt(p.mu) * Omega / (2.0 * p.hbar * k);
}

}  // namespace

ParaPoint to_parabolic(const R5Point& p, bool strict) {
    const auto& x = p.x;
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    const double r = std::sqrt(r2);
    ParaPoint pt;
    // max(0, .) guards roundoff when x is on the axis to ~1 ulp
    pt.xi = std::max(0.0, r + x[0]);
    pt.eta = std::max(0.0, r - x[0]);
    const double rho1 = std::hypot(x[1], x[2]);
    const double rho2 = std::hypot(x[3], x[4]);
    if (rho1 == 0.0 && rho2 == 0.0) {
        if (strict)
            throw SingularLocusError(
                "to_parabolic: Euler angles undefined on the axis xi*eta = 0");
        pt.alpha = pt.beta = pt.gamma = 0.0;
        return pt;
    }
    pt.beta = 2.0 * std::atan2(rho1, rho2);
    const double phi1 = rho1 > 0.0 ? std::atan2(x[1], x[2]) : 0.0;
    const double phi2 = rho2 > 0.0 ? std::atan2(x[3], x[4]) : 0.0;
    double alpha = phi1 + phi2;
    double gamma = phi2 - phi1;
    int parity = 0;
    if (alpha < 0.0) {
        alpha += 2.0 * pi;
        parity = 1;
    } else if (alpha >= 2.0 * pi) {
        alpha -= 2.0 * pi;
        parity = 1;
    }
    if (parity == 0) {
        if (gamma < 0.0) gamma += 4.0 * pi;
    } else {
        gamma += 2.0 * pi;
        if (gamma >= 4.0 * pi) gamma -= 4.0 * pi;
    }
    pt.alpha = alpha;
    pt.gamma = gamma;
    return pt;
}

R5Point from_parabolic(const ParaPoint& pt) {
    if (pt.xi < 0.0 || pt.eta < 0.0)
        throw std::domain_error("from_parabolic: xi and eta must be nonnegative");
    const double rho = std::sqrt(pt.xi * pt.eta);
    const double sb = std::sin(0.5 * pt.beta);
    const double cb = std::cos(0.5 * pt.beta);
    const double pm = 0.5 * (pt.alpha - pt.gamma);
    const double pp = 0.5 * (pt.alpha + pt.gamma);
    std::array<double, 5> x{};
    x[0] = 0.5 * (pt.xi - pt.eta);
    x[1] = rho * sb * std::sin(pm);
    x[2] = rho * sb * std::cos(pm);
    x[3] = rho * cb * std::sin(pp);
    x[4] = rho * cb * std::cos(pp);
    return R5Point::from_cartesian(x);
}

ComplexScalar phi_function(double k, ComplexScalar Omega, double L, double x,
                           const PhysParams& p) {
    validate_L(L);
    if (!(k > 0.0)) throw std::domain_error("phi_function: k must be positive");
    if (x < 0.0) throw std::domain_error("phi_function: x must be >= 0");
    const ComplexScalar sigma = std::sqrt(p.mu) * Omega / (2.0 * p.hbar * k);
    const ComplexScalar apar =
        ComplexScalar(L + 1.0, 1.0 / (2.0 * p.a * k)) + ComplexScalar(0.0, 1.0) * sigma;
    const double fact = std::tgamma(2.0 * L + 2.0);  // (2L+1)!
    if (x == 0.0) return L == 0.0 ? ComplexScalar(1.0 / fact) : ComplexScalar(0.0);
    // (ikx)^L = (kx)^L e^{i pi L / 2}, principal branch for kx > 0
    const ComplexScalar pref =
        std::pow(k * x, L) *
        ComplexScalar(std::cos(0.5 * pi * L), std::sin(0.5 * pi * L)) / fact;
    const ComplexScalar phase(std::cos(0.5 * k * x), -std::sin(0.5 * k * x));
    const auto kum = sf::kummer_f(apar, ComplexScalar(2.0 * L + 2.0, 0.0),
                                  ComplexScalar(0.0, k * x));
    return pref * phase * kum.value;
}

ComplexScalar phi_function(double k, double Omega, double L, double x,
                           const PhysParams& p) {
    return phi_function(k, ComplexScalar(Omega, 0.0), L, x, p);
}

ComplexScalar norm_constant(double k, double Omega, double L, const PhysParams& p) {
    validate_L(L);
    if (!(k > 0.0)) throw std::domain_error("norm_constant: k must be positive");
    const double sigma = sigma_of(k, Omega, p);
    const double q = 1.0 / (2.0 * p.a * k);
    const double lg1 = sf::log_gamma(ComplexScalar(L + 1.0, -q - sigma)).real();
    const double lg2 = sf::log_gamma(ComplexScalar(L + 1.0, -q + sigma)).real();
    const double ln_mag = 0.5 * std::log(p.hbar * p.hbar * k * k * k / (2.0 * pi * p.mu)) +
                          pi * q + lg1 + lg2;
    // (-1)^L = e^{i pi L}, principal branch for half-integer L
    const ComplexScalar phase(std::cos(pi * L), std::sin(pi * L));
    return std::exp(ln_mag) * phase;
}

double phi_ode_residual(double k, double Omega, double L, double x,
                        const PhysParams& p, double* scale_out) {
    if (!(x > 0.0)) throw std::domain_error("phi_ode_residual: x must be positive");
    auto Phi = [&](double xx) { return phi_function(k, Omega, L, xx, p); };
    const double h1 = 1e-4 * std::min(1.0, 2.0 / k) * std::max(1.0, x);
    const double h2 = 1e-3 * std::min(1.0, 2.0 / k) * std::max(1.0, x);
    auto d1 = [&](double hh) { return (Phi(x + hh) - Phi(x - hh)) / (2.0 * hh); };
    auto d2 = [&](double hh) {
        return (Phi(x + hh) - 2.0 * Phi(x) + Phi(x - hh)) / (hh * hh);
    };
    const ComplexScalar Pp = (4.0 * d1(0.5 * h1) - d1(h1)) / 3.0;
    const ComplexScalar Ppp = (4.0 * d2(0.5 * h2) - d2(h2)) / 3.0;
    const ComplexScalar Pv = Phi(x);
    // (1/x)(x^2 Phi')' = x Phi'' + 2 Phi'
    const double coef = 0.25 * k * k * x - L * (L + 1.0) / x +
                        0.5 * std::sqrt(p.mu) * Omega / p.hbar + 0.5 / p.a;
    const ComplexScalar resid = x * Ppp + 2.0 * Pp + coef * Pv;
    if (scale_out)
        *scale_out = std::abs(x * Ppp) + 2.0 * std::abs(Pp) +
                     (std::abs(0.25 * k * k * x) + std::abs(L * (L + 1.0) / x) +
                      std::abs(0.5 * std::sqrt(p.mu) * Omega / p.hbar) +
                      0.5 / p.a) *
                         std::abs(Pv);
    return std::abs(resid);
}

ComplexScalar parabolic_basis(double k, const ParaLabel& label, const ParaPoint& pt,
                              const PhysParams& p) {
    validate_L(label.L);
    if (std::abs(label.m) > label.L + 1e-12 || std::abs(label.mp) > label.L + 1e-12)
        throw std::domain_error("parabolic_basis: |m|, |mp| must be <= L");
    const double norm = std::sqrt((2.0 * label.L + 1.0) / (2.0 * pi * pi));
    const ComplexScalar C = norm_constant(k, label.Omega, label.L, p);
    const ComplexScalar f1 = phi_function(k, label.Omega, label.L, pt.xi, p);
    const ComplexScalar f2 = phi_function(k, -label.Omega, label.L, pt.eta, p);
    const ComplexScalar D =
        sf::wigner_D(label.L, label.m, label.mp, pt.alpha, pt.beta, pt.gamma);
    return norm * C * f1 * f2 * D;
}

}  // namespace coulomb5::parabolic
