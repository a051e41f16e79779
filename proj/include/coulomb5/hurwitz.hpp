#pragma once

// The quadratic map R^8 -> R^5 (octonionic Kustaanheimo-Stiefel
// analogue), the su(2) operators J_a that generate its fiber, and
// numerical verification of the operator identities that tie the
// 8-dimensional repulsive oscillator to the 5-dimensional Coulomb
// problem:
//   |u|^4 = |x(u)|^2                   (spheres map to spheres)
//   Delta_8 = 4 r Delta_5 - (4/r) J^2  (Laplacian decomposition)
//   [J_a, J_b] = i eps_{abc} J_c       (su(2) commutators)
// together with the duality residual: psi solving the 5D Coulomb
// problem at energy eps, pulled back through the map, solves the 8D
// repulsive oscillator at energy E with eps = mu omega^2 / 8 and
// E = 4 e^2.

#include <array>
#include <functional>
#include <stdexcept>

#include "coulomb5/types.hpp"

namespace coulomb5::hurwitz {

struct StepSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-difference policy for fields without analytic partials.
// First derivatives: central differences at h = step1 * max(1, |u|inf)
// with one Richardson halving; second derivatives use step2 (a larger
// step, since /h^2 roundoff would otherwise eat the 1e-7 contracts).
struct FdOptions {
    double step1 = 1e-4;
    double step2 = 1e-3;
    bool richardson = true;
    double fd_tol = 1e-5;  // apply_J throws StepSizeError above this estimate
};

R5Point hurwitz_map(const R8Point& u);

// | |u|^4 - |x(u)|^2 |, identically zero in exact arithmetic.
double euler_identity_residual(const R8Point& u);

// Complex scalar field on R^8 with optional analytic partials. The
// operator identities need first and second derivatives; polynomial
// test fields supply them exactly, everything else falls back to
// central differences per FdOptions.
struct ScalarField8 {
    std::function<ComplexScalar(const R8Point&)> value;
    std::function<std::array<ComplexScalar, 8>(const R8Point&)> gradient;  // may be null
    std::function<std::array<std::array<ComplexScalar, 8>, 8>(const R8Point&)>
        hessian;  // may be null

    static ScalarField8 constant(ComplexScalar v);
    // coef * prod_i u_i^{powers[i]}, with exact derivatives.
    static ScalarField8 monomial(const std::array<int, 8>& powers,
                                 ComplexScalar coef = 1.0);
    static ScalarField8 from_function(std::function<ComplexScalar(const R8Point&)> f);
};

// (J_a f)(u), a in {1,2,3}; first-order operator, analytic gradient
// preferred. Throws StepSizeError when the finite-difference error
// estimate exceeds FdOptions::fd_tol.
ComplexScalar apply_J(int a, const ScalarField8& f, const R8Point& u,
                      const FdOptions& opt = {});

// |([J_a, J_b] - i eps_{abc} J_c) f(u)|.
double commutator_residual(int a, int b, const ScalarField8& f, const R8Point& u,
                           const FdOptions& opt = {});

// |Delta_8 (f5 o map)(u) - 4 r (Delta_5 f5)(x(u))|. The J^2 term of the
// decomposition vanishes identically on fields pulled back from R^5.
// lap5 supplies an analytic 5D Laplacian; when null it is computed by
// central differences as well. Requires u != 0.
double laplacian_identity_residual(const std::function<ComplexScalar(const R5Point&)>& f5,
                                   const R8Point& u, const FdOptions& opt = {},
                                   const std::function<ComplexScalar(const R5Point&)>* lap5 = nullptr);

// Parameter set tying the oscillator (omega, E) to the Coulomb side
// (eps, e2); the duality constructor enforces eps = mu omega^2/8 and
// E = 4 e2.
struct DualityParams {
    double omega = 0.0;
    double E = 0.0;
    double eps = 0.0;
    double e2 = 0.0;
    double mu = 1.0;
    double hbar = 1.0;

    static DualityParams from_coulomb(const PhysParams& p) {
        DualityParams d;
        d.mu = p.mu;
        d.hbar = p.hbar;
        d.e2 = p.e2;
        d.eps = p.energy();
        d.omega = std::sqrt(8.0 * d.eps / d.mu);
        d.E = 4.0 * d.e2;
        return d;
    }
};

// Residual of the 8D repulsive-oscillator equation
//   (-hbar^2/(2 mu) Delta_8 - mu omega^2 u^2 / 2) Psi = E Psi
// applied to Psi(u) = psi5(x(u)). J generalizes to the J(J+1) tower
// (fiber eigenvalue folded in algebraically); only J = 0 ships with a
// verified solution source. scale_out, when non-null, receives the
// local equation-term scale (second-derivative dominated) used for
// relative comparisons. Requires u != 0.
double duality_residual(const std::function<ComplexScalar(const R5Point&)>& psi5,
                        const DualityParams& dp, const R8Point& u, double J = 0.0,
                        const FdOptions& opt = {}, double* scale_out = nullptr);

}  // namespace coulomb5::hurwitz
