#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace coulomb5 {

using ComplexScalar = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Cartesian point in the 8-dimensional oscillator configuration space.
// Coordinates carry (length)^{1/2} units so that r = |u|^2 is a length.
struct R8Point {
    std::array<double, 8> u{};

    double norm2() const {
        double s = 0.0;
        for (double v : u) s += v * v;
        return s;
    }
};

// Cartesian point in the 5-dimensional Coulomb configuration space.
// r is stored with the coordinates; r^2 == sum x_i^2 up to roundoff.
struct R5Point {
    std::array<double, 5> x{};
    double r = 0.0;

    static R5Point from_cartesian(const std::array<double, 5>& x) {
        R5Point p;
        p.x = x;
        double s = 0.0;
        for (double v : x) s += v * v;
        p.r = std::sqrt(s);
        return p;
    }
};

// Hyperspherical coordinates (r, theta, alpha, beta, gamma).
// Ranges: r >= 0, theta in [0,pi], alpha in [0,2pi), beta in [0,pi],
// gamma in [0,4pi). The doubled gamma range realizes the SU(2) double
// cover, which is why half-integer L is admitted downstream.
struct HyperPoint {
    double r = 0.0;
    double theta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Parabolic coordinates (xi, eta, alpha, beta, gamma), xi = r + x0,
// eta = r - x0; Euler angles shared with HyperPoint.
struct ParaPoint {
    double xi = 0.0;
    double eta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Physical parameter set in the fixed internal convention hbar = mu = 1.
// a is the Bohr radius hbar^2/(mu e^2) and k the wavenumber, so the only
// free knobs are (a, k); e^2 = hbar^2/(mu a) is derived.
struct PhysParams {
    double a = 1.0;
    double k = 1.0;
    double hbar = 1.0;
    double mu = 1.0;
    double e2 = 1.0;

    static PhysParams from_ak(double a, double k) {
        if (!(a > 0.0) || !(k > 0.0))
            throw std::domain_error("PhysParams: a and k must be positive");
        PhysParams p;
        p.a = a;
        p.k = k;
        p.hbar = 1.0;
        p.mu = 1.0;
        p.e2 = p.hbar * p.hbar / (p.mu * a);
        return p;
    }

    // Sommerfeld-type Coulomb strength 1/(a k).
    double nu() const { return 1.0 / (a * k); }
    // Continuum energy eps = hbar^2 k^2 / (2 mu).
    double energy() const { return hbar * hbar * k * k / (2.0 * mu); }
};

// Quantum-number tuple for the hyperspherical basis. L, m, mp are
// half-integers stored as doubles; lam runs over 2L, 2L+1, ...
struct HyperLabel {
    int lam = 0;
    double L = 0.0;
    double m = 0.0;
    double mp = 0.0;
};

// Quantum-number tuple for the parabolic basis; Omega is the real
// separation constant of the generic (non-scattering) basis.
struct ParaLabel {
    double Omega = 0.0;
    double L = 0.0;
    double m = 0.0;
    double mp = 0.0;
};

// Coordinate singularity: the requested point lies where the Euler
// angles (or the parabolic sheet) degenerate and the value is not
// pointwise defined.
struct SingularLocusError : std::domain_error {
    using std::domain_error::domain_error;
};

// Value plus an estimated absolute error and the number of series terms
// consumed; returned by the confluent hypergeometric evaluator.
struct AccuracyReport {
    ComplexScalar value{};
    double est_abs_error = 0.0;
    int terms_used = 0;
};

// Returns true when v is an exact multiple of 1/2 (within tol) and
// writes the doubled integer into twice.
inline bool half_integer(double v, long long& twice, double tol = 1e-9) {
    double t = 2.0 * v;
    double r = std::nearbyint(t);
    if (std::abs(t - r) > tol) return false;
    twice = static_cast<long long>(r);
    return true;
}

}  // namespace coulomb5
