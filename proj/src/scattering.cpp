#include "coulomb5/scattering.hpp"

#include <cmath>

#include "coulomb5/special.hpp"

namespace coulomb5::scattering {

namespace {

ComplexScalar cgamma(ComplexScalar z) { return std::exp(sf::log_gamma(z)); }

}  // namespace

ComplexScalar separation_constant(double k, const PhysParams& p) {
    if (!(k > 0.0)) throw std::domain_error("separation_constant: k must be positive");
    const double rmu = std::sqrt(p.mu);
    return ComplexScalar(-p.hbar / (p.a * rmu), -2.0 * p.hbar * k / rmu);
}

ScatteringSolution solution(double k, const PhysParams& p) {
    if (!(k > 0.0)) throw std::domain_error("solution: k must be positive");
    const double nu = 1.0 / (p.a * k);
    ScatteringSolution s;
    s.k = k;
    s.a = p.a;
    s.C_k = std::exp(0.5 * pi * nu) * cgamma(ComplexScalar(2.0, -nu));
    return s;
}

ComplexScalar scattering_state(double k, double xi, double eta, const PhysParams& p) {
    if (xi < 0.0 || eta < 0.0)
        throw std::domain_error("scattering_state: xi, eta must be >= 0");
    const double nu = 1.0 / (p.a * k);
    const ScatteringSolution s = solution(k, p);
    const double x0 = 0.5 * k * (xi - eta);
    const ComplexScalar plane(std::cos(x0), std::sin(x0));
    const auto kum = sf::kummer_f(ComplexScalar(0.0, nu), ComplexScalar(2.0, 0.0),
                                  ComplexScalar(0.0, k * eta));
    return s.C_k * plane * kum.value;
}

AsymptoticDecomposition asymptotic_state(double k, double r, double theta,
                                         const PhysParams& p, int n_incident,
                                         int n_scattered, double threshold) {
    if (!(theta > 0.0))
        throw std::domain_error("asymptotic_state: forward direction theta = 0 diverges");
    if (!(r > 0.0)) throw std::domain_error("asymptotic_state: r must be positive");
    const double nu = 1.0 / (p.a * k);
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double eta = r * (1.0 - std::cos(theta));  // = 2 r sin^2(theta/2)
    const double keta = k * eta;
    if (keta < threshold)
        throw ThresholdError("asymptotic_state: k*eta below asymptotic threshold");

    const ComplexScalar ia(0.0, 1.0);
    // incident: e^{i k x0 - i nu ln(k eta)} G(i nu; i nu - 1; -i k eta)
    const double x0 = r * std::cos(theta);
    const ComplexScalar inc_phase =
        std::exp(ia * (k * x0 - nu * std::log(keta)));
    const ComplexScalar g_inc = sf::kummer_g_asymptotic(
        ComplexScalar(0.0, nu), ComplexScalar(-1.0, nu), ComplexScalar(0.0, -keta),
        n_incident);
    const ComplexScalar incident = inc_phase * g_inc;

    // scattered: f(theta)/r^2 e^{i(kr + nu ln 2kr)} with the coefficient
    // that matches the exact state (sin^-4 denominator),
    //   f = -Gamma(2-i nu)/(Gamma(i nu) 4 k^2 sin^4(theta/2))
    //       e^{2 i nu ln sin(theta/2)} G(2 - i nu; 1 - i nu; i k eta).
    const ComplexScalar g_sc = sf::kummer_g_asymptotic(
        ComplexScalar(2.0, -nu), ComplexScalar(1.0, -nu), ComplexScalar(0.0, keta),
        n_scattered);
    const ComplexScalar f =
        -cgamma(ComplexScalar(2.0, -nu)) / cgamma(ComplexScalar(0.0, nu)) /
        (4.0 * k * k * s2 * s2) *
        std::exp(ia * (2.0 * nu * std::log(std::sin(0.5 * theta)))) * g_sc;
    const ComplexScalar out_phase =
        std::exp(ia * (k * r + nu * std::log(2.0 * k * r)));
    AsymptoticDecomposition d;
    d.incident = incident;
    d.f_theta = f;
    d.scattered = f / (r * r) * out_phase;
    return d;
}

ComplexScalar amplitude(double k, double theta, const PhysParams& p) {
    if (!(theta > 0.0))
        throw std::domain_error("amplitude: forward direction theta = 0 diverges");
    const double nu = 1.0 / (p.a * k);
    const double s = std::sin(0.5 * theta);
    const ComplexScalar ia(0.0, 1.0);
    return ComplexScalar(1.0, -p.a * k) / (4.0 * p.a * p.a * std::pow(k, 4) * s * s) *
           std::exp(sf::log_gamma(ComplexScalar(2.0, -nu)) -
                    sf::log_gamma(ComplexScalar(2.0, nu))) *
           std::exp(ia * (2.0 * nu * std::log(s)));
}

double cross_section(double k, double theta, const PhysParams& p) {
    if (!(theta > 0.0))
        throw std::domain_error("cross_section: forward direction theta = 0 diverges");
    const double s = std::sin(0.5 * theta);
    const double ak = p.a * k;
    return (1.0 + ak * ak) /
           (16.0 * std::pow(p.a, 4) * std::pow(k, 8) * std::pow(s, 8));
}

}  // namespace coulomb5::scattering
