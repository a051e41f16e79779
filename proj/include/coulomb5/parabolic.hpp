#pragma once

// Parabolic coordinates xi = r + x0, eta = r - x0 on R^5 (Euler angles
// shared with the hyperspherical chart) and the separable continuum
// basis
//   psi_{k Omega L m mp} = sqrt((2L+1)/(2 pi^2)) C_{k Omega L}
//                          Phi_{k Omega L}(xi) Phi_{k -Omega L}(eta)
//                          D^L_{m mp}(alpha, beta, gamma),
// where Omega is the real separation constant of the two radial-type
// ODEs
//   (1/x) d/dx (x^2 Phi') + [k^2 x/4 - L(L+1)/x
//                            +- sqrt(mu) Omega/(2 hbar) + 1/(2a)] Phi = 0
// (upper sign for the xi-equation, lower for eta). Omega enters only
// through the dimensionless sigma = sqrt(mu) Omega / (2 hbar k); a
// complex-Omega overload of Phi exists because the scattering state
// continues Omega off the real axis.

#include "coulomb5/types.hpp"

namespace coulomb5::parabolic {

// xi = r + x0, eta = r - x0, angles as in to_hyperspherical. On the
// axis xi*eta = 0 the Euler angles are undefined; the default returns
// the canonical representative with all angles zero, strict = true
// throws SingularLocusError instead. x = 0 maps to xi = eta = 0.
ParaPoint to_parabolic(const R5Point& x, bool strict = false);

R5Point from_parabolic(const ParaPoint& pt);

// Phi_{k Omega L}(x) = (ikx)^L / (2L+1)! e^{-ikx/2}
//                      F(L+1 + i/(2ak) + i sigma; 2L+2; ikx).
// Half-integer L uses the principal branch (ikx)^L = (kx)^L e^{i pi L/2}
// for kx > 0. Requires x >= 0 and half-integer L >= 0.
ComplexScalar phi_function(double k, double Omega, double L, double x,
                           const PhysParams& p);

// Same with complex separation constant (analytic continuation used by
// the scattering module).
ComplexScalar phi_function(double k, ComplexScalar Omega, double L, double x,
                           const PhysParams& p);

// Normalization constant
//   C_{k Omega L} = (-1)^L sqrt(hbar^2 k^3 / (2 pi mu)) e^{pi/(2ak)}
//     |Gamma(L+1 - i/(2ak) - i sigma) Gamma(L+1 - i/(2ak) + i sigma)|,
// assembled in log space. (-1)^L is e^{i pi L} for half-integer L.
ComplexScalar norm_constant(double k, double Omega, double L, const PhysParams& p);

// Residual of the Omega-equation (upper sign) applied to
// Phi_{k Omega L} at x > 0, by Richardson-extrapolated central
// differences; the eta-side equation is the same check at -Omega.
// scale_out receives the sum of term magnitudes.
double phi_ode_residual(double k, double Omega, double L, double x,
                        const PhysParams& p, double* scale_out = nullptr);

// Full parabolic basis function at pt.
ComplexScalar parabolic_basis(double k, const ParaLabel& label, const ParaPoint& pt,
                              const PhysParams& p);

}  // namespace coulomb5::parabolic
