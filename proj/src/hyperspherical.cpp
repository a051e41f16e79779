#include "coulomb5/hyperspherical.hpp"

#include <cmath>
#include <stdexcept>

#include "coulomb5/special.hpp"

namespace coulomb5::hyperspherical {

namespace {

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// 2L as a validated nonnegative integer.
int twice_L(double L) {
    long long t = 0;
    if (!half_integer(L, t) || t < 0)
        throw std::domain_error("hyperspherical: L must be a nonnegative half-integer");
    return static_cast<int>(t);
}

void validate_pair(int lam, double L) {
    int L2 = twice_L(L);
    if (lam < L2)
        throw std::domain_error("hyperspherical: lam must be >= 2L");
}

}  // namespace

HyperPoint to_hyperspherical(const R5Point& p) {
    const auto& x = p.x;
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    const double r = std::sqrt(r2);
    if (!(r > 0.0)) throw std::domain_error("to_hyperspherical: |x| must be positive");
    const double rho1 = std::hypot(x[1], x[2]);
    const double rho2 = std::hypot(x[3], x[4]);
    const double s = std::hypot(rho1, rho2);
    if (s == 0.0)
        throw SingularLocusError(
            "to_hyperspherical: theta in {0, pi}, Euler angles undefined");

    HyperPoint h;
    h.r = r;
    h.theta = std::atan2(s, x[0]);
    h.beta = 2.0 * std::atan2(rho1, rho2);
    const double phi1 = rho1 > 0.0 ? std::atan2(x[1], x[2]) : 0.0;
    const double phi2 = rho2 > 0.0 ? std::atan2(x[3], x[4]) : 0.0;
    double alpha = phi1 + phi2;  // in (-2pi, 2pi]
    double gamma = phi2 - phi1;  // in (-2pi, 2pi]

    // Canonical box: alpha in [0,2pi), gamma in [0,4pi). The two angles
    // live on the lattice quotient (alpha,gamma) ~ (alpha+2pi j,
    // gamma+2pi l) with j = l (mod 2), so the gamma shift must match the
    // parity of the alpha shift.
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
    h.alpha = alpha;
    h.gamma = gamma;
    return h;
}

R5Point from_hyperspherical(const HyperPoint& h) {
    const double st = std::sin(h.theta);
    const double ct = std::cos(h.theta);
    const double sb = std::sin(0.5 * h.beta);
    const double cb = std::cos(0.5 * h.beta);
    const double pm = 0.5 * (h.alpha - h.gamma);
    const double pp = 0.5 * (h.alpha + h.gamma);
    std::array<double, 5> x{};
    x[0] = h.r * ct;
    x[1] = h.r * st * sb * std::sin(pm);
    x[2] = h.r * st * sb * std::cos(pm);
    x[3] = h.r * st * cb * std::sin(pp);
    x[4] = h.r * st * cb * std::cos(pp);
    return R5Point::from_cartesian(x);
}

double z_function(int lam, double L, double theta) {
    validate_pair(lam, L);
    const int L2 = twice_L(L);
    const int n = lam - L2;  // Gegenbauer degree
    // log prefactor: 2^{2L+1} Gamma(2L+3/2)
    //   sqrt((2 lam + 3)(lam-2L)! / (2 pi (lam+2L+2)!))
    const double lnpref = (L2 + 1) * std::log(2.0) + std::lgamma(L2 + 1.5) +
                          0.5 * (std::log(2.0 * lam + 3.0) + std::lgamma(n + 1.0) -
                                 std::log(2.0 * pi) - std::lgamma(lam + L2 + 3.0));
    const double st = std::sin(theta);
    return std::exp(lnpref) * ipow(st, L2) * sf::gegenbauer(n, L2 + 1.5, std::cos(theta));
}

double z_ode_residual(int lam, double L, double theta) {
    validate_pair(lam, L);
    const double h = 1e-4;
    auto Z = [&](double t) { return z_function(lam, L, t); };
    auto d1 = [&](double hh) { return (Z(theta + hh) - Z(theta - hh)) / (2.0 * hh); };
    auto d2 = [&](double hh) {
        return (Z(theta + hh) - 2.0 * Z(theta) + Z(theta - hh)) / (hh * hh);
    };
    const double zp = (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
    const double h2 = 1e-3;
    const double zpp = (4.0 * d2(0.5 * h2) - d2(h2)) / 3.0;
    const double st = std::sin(theta);
    const double eig = static_cast<double>(lam) * (lam + 3.0);
    return std::abs(zpp + 3.0 * (std::cos(theta) / st) * zp +
                    (eig - 4.0 * L * (L + 1.0) / (st * st)) * Z(theta));
}

double phase_shift(double k, int lam, const PhysParams& p) {
    if (!(k > 0.0)) throw std::domain_error("phase_shift: k must be positive");
    if (lam < 0) throw std::domain_error("phase_shift: lam must be >= 0");
    const double nu = 1.0 / (p.a * k);
    return sf::log_gamma(ComplexScalar(lam + 2.0, -nu)).imag();
}

ComplexScalar radial_continuum(double k, int lam, double r, const PhysParams& p) {
    if (!(k > 0.0)) throw std::domain_error("radial_continuum: k must be positive");
    if (lam < 0) throw std::domain_error("radial_continuum: lam must be >= 0");
    if (r < 0.0) throw std::domain_error("radial_continuum: r must be >= 0");
    const double nu = 1.0 / (p.a * k);
    // (-i)^lam (2ikr)^lam = (2kr)^lam exactly; all positive magnitudes
    // are folded into one exponential to dodge overflow.
    const double ln_gamma_abs =
        sf::log_gamma(ComplexScalar(lam + 2.0, -nu)).real();
    const double ln_amp_base = std::log(4.0) + 2.0 * std::log(k) + 0.5 * pi * nu +
                               ln_gamma_abs - std::lgamma(2.0 * lam + 4.0);
    if (r == 0.0) return lam == 0 ? ComplexScalar(std::exp(ln_amp_base)) : ComplexScalar(0.0);
    const double amp = std::exp(ln_amp_base + lam * std::log(2.0 * k * r));
    const ComplexScalar phase(std::cos(k * r), -std::sin(k * r));
    const auto kum = sf::kummer_f(ComplexScalar(lam + 2.0, nu),
                                  ComplexScalar(2.0 * lam + 4.0, 0.0),
                                  ComplexScalar(0.0, 2.0 * k * r));
    return amp * phase * kum.value;
}

double radial_asymptotic(double k, int lam, double r, const PhysParams& p) {
    if (!(r > 0.0)) throw std::domain_error("radial_asymptotic: r must be positive");
    const double nu = 1.0 / (p.a * k);
    const double arg = k * r + nu * std::log(2.0 * k * r) - 0.5 * pi * (lam + 1.0) +
                       phase_shift(k, lam, p);
    return 2.0 / (r * r) * std::sin(arg);
}

double radial_ode_residual(double k, int lam, double r, const PhysParams& p,
                           double* scale_out) {
    if (!(r > 0.0)) throw std::domain_error("radial_ode_residual: r must be positive");
    auto R = [&](double rr) { return radial_continuum(k, lam, rr, p); };
    // steps resolve the k-oscillation; Richardson brings both
    // derivatives to 4th order
    const double h1 = 1e-4 * std::min(1.0, 1.0 / k) * std::max(1.0, r);
    const double h2 = 1e-3 * std::min(1.0, 1.0 / k) * std::max(1.0, r);
    auto d1 = [&](double hh) { return (R(r + hh) - R(r - hh)) / (2.0 * hh); };
    auto d2 = [&](double hh) {
        return (R(r + hh) - 2.0 * R(r) + R(r - hh)) / (hh * hh);
    };
    const ComplexScalar Rp = (4.0 * d1(0.5 * h1) - d1(h1)) / 3.0;
    const ComplexScalar Rpp = (4.0 * d2(0.5 * h2) - d2(h2)) / 3.0;
    const ComplexScalar Rv = R(r);
    const double lamterm = static_cast<double>(lam) * (lam + 3.0) / (r * r);
    const ComplexScalar resid = Rpp + (4.0 / r) * Rp +
                                (k * k + 2.0 / (p.a * r) - lamterm) * Rv;
    if (scale_out)
        *scale_out = std::abs(Rpp) + std::abs(4.0 / r * Rp) + std::abs(k * k * Rv) +
                     std::abs(2.0 / (p.a * r) * Rv) + std::abs(lamterm * Rv);
    return std::abs(resid);
}

ComplexScalar basis_function(double k, const HyperLabel& label, const HyperPoint& h,
                             const PhysParams& p) {
    validate_pair(label.lam, label.L);
    const double st = std::sin(h.theta);
    if (h.theta == 0.0 || h.theta == pi || st == 0.0) {
        if (label.L != 0.0)
            throw SingularLocusError(
                "basis_function: Euler angles undefined at sin(theta) = 0 for L > 0");
        // L = 0 sector: D^0 = 1, Z finite; continuous limit.
        const double norm = std::sqrt(1.0 / (2.0 * pi * pi));
        return norm * radial_continuum(k, label.lam, h.r, p) *
               z_function(label.lam, 0.0, h.theta);
    }
    const double norm = std::sqrt((2.0 * label.L + 1.0) / (2.0 * pi * pi));
    const ComplexScalar D =
        sf::wigner_D(label.L, label.m, label.mp, h.alpha, h.beta, h.gamma);
    return norm * radial_continuum(k, label.lam, h.r, p) *
           z_function(label.lam, label.L, h.theta) * D;
}

}  // namespace coulomb5::hyperspherical
