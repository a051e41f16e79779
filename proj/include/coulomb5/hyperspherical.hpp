#pragma once

// Hyperspherical coordinates (r, theta, alpha, beta, gamma) on R^5 and
// the continuum basis
//   psi_{k lam L m mp} = sqrt((2L+1)/(2 pi^2)) R_{k lam}(r) Z_{lam L}(theta)
//                        D^L_{m mp}(alpha, beta, gamma),
// with Z built from Gegenbauer polynomials, R from the confluent
// hypergeometric function, and the Coulomb phase shifts
// delta_lam = arg Gamma(lam + 2 - i/(ak)).
//
// Angle conventions:
//   x0        = r cos(theta)
//   x2 + i x1 = r sin(theta) sin(beta/2) e^{i(alpha-gamma)/2}
//   x4 + i x3 = r sin(theta) cos(beta/2) e^{i(alpha+gamma)/2}
// with theta in [0,pi], alpha in [0,2pi), beta in [0,pi], gamma in
// [0,4pi). The (alpha,gamma) pair is defined modulo the lattice
// (2pi j, 2pi l), j = l (mod 2); to_hyperspherical returns the unique
// representative in the canonical box.

#include "coulomb5/types.hpp"

namespace coulomb5::hyperspherical {

// Inverts the parametrization above. Throws SingularLocusError when
// x1 = x2 = x3 = x4 = 0 (theta in {0, pi}, Euler angles undefined) and
// std::domain_error at x = 0. beta-degenerate points (sin beta = 0) are
// fine: the remaining angle pair is canonicalized with phi_1 or phi_2
// set to zero.
HyperPoint to_hyperspherical(const R5Point& x);

R5Point from_hyperspherical(const HyperPoint& h);

// Z_{lam L}(theta): normalized so that the square integrates to 1
// against sin^3(theta) d(theta) on [0, pi]. lam runs over
// 2L, 2L+1, ...; L is a half-integer >= 0. Prefactors are assembled in
// log space, so large lam does not overflow.
double z_function(int lam, double L, double theta);

// Angular eigenvalue check helper: Z satisfies
//   Z'' + 3 cot(theta) Z' + [lam(lam+3) - 4L(L+1)/sin^2 theta] Z = 0.
// (Exposed for the verification suites.)
double z_ode_residual(int lam, double L, double theta);

// Coulomb phase shift delta_lam = arg Gamma(lam + 2 - i/(a k)) on the
// branch continuous in 1/(ak) (equal to the principal value on the
// exercised domain and satisfying the gamma recurrence
// delta_{lam+1} - delta_lam = -arctan(1/(ak(lam+2))) for all lam).
double phase_shift(double k, int lam, const PhysParams& p);

// Continuum radial function
//   R_{k lam}(r) = C_{k lam} (2ikr)^lam / (2 lam + 3)!
//                  e^{-ikr} F(lam + 2 + i/(ak); 2 lam + 4; 2ikr),
//   C_{k lam}    = (-i)^lam 4 k^2 e^{pi/(2ak)} |Gamma(lam + 2 - i/(ak))|.
// delta-normalized in k: the large-r envelope of r^2 R is 2. The value
// is mathematically real ((-i)^lam cancels the i^lam of (2ikr)^lam);
// the imaginary part is returned as computed and stays below 1e-9
// relative. r = 0 is admitted for lam >= 1 (value 0) and lam = 0
// (finite limit).
ComplexScalar radial_continuum(double k, int lam, double r, const PhysParams& p);

// Large-r form (2/r^2) sin(kr + (1/ak) ln(2kr) - pi(lam+1)/2 + delta_lam).
// Requires r > 0.
double radial_asymptotic(double k, int lam, double r, const PhysParams& p);

// Residual of the radial ODE
//   R'' + (4/r) R' + [k^2 + 2/(a r) - lam(lam+3)/r^2] R = 0
// at r, by Richardson-extrapolated central differences on
// radial_continuum; scale_out (when non-null) receives the sum of the
// magnitudes of the ODE terms for relative comparison.
double radial_ode_residual(double k, int lam, double r, const PhysParams& p,
                           double* scale_out = nullptr);

// Full basis function psi_{k lam L m mp}(h). Label validation: lam >= 2L
// with lam - 2L a nonnegative integer, |m|, |mp| <= L, all of m, mp, L
// on the same integer/half-integer lattice. At sin(theta) = 0 the L = 0
// value is returned by continuous limit; L > 0 throws
// SingularLocusError.
ComplexScalar basis_function(double k, const HyperLabel& label, const HyperPoint& h,
                             const PhysParams& p);

}  // namespace coulomb5::hyperspherical
