#pragma once

// Independent numerical oracles for the test suite. Each reproduces a
// quantity the library computes, by a different algorithm, so agreement
// is evidence rather than tautology:
//  * kummer_by_ode: Taylor-series marching of the confluent
//    hypergeometric ODE along a ray (no series/asymptotic switch).
//  * simpson: adaptive Simpson quadrature (independent of the
//    Gauss-Legendre rules used in the library checks).
//  * log_gamma_stirling: shifted Stirling series (independent of the
//    Lanczos evaluation).
//  * radial_series_shape: Frobenius series of the radial ODE, fixing
//    the solution up to normalization.

#include <functional>

#include "coulomb5/types.hpp"

namespace oracles {

using coulomb5::ComplexScalar;

// F(a;c;z) by marching the ODE z F'' + (c - z) F' - a F = 0 from a
// series evaluation at |z| = 0.5 outward along the ray to z. Step radius
// stays below half the distance to the z = 0 singularity, so each local
// Taylor expansion converges geometrically.
ComplexScalar kummer_by_ode(ComplexScalar a, ComplexScalar c, ComplexScalar z);

// Adaptive Simpson integral of f over [a, b].
double simpson(const std::function<double(double)>& f, double a, double b,
               double tol = 1e-12);

// Principal-branch log-gamma for Re z > 0 via upward shift to Re >= 9
// and the Stirling asymptotic series with Bernoulli coefficients.
ComplexScalar log_gamma_stirling(ComplexScalar z);

// Frobenius solution r^lam sum b_n r^n of the radial equation
//   R'' + (4/r) R' + [k^2 + 2/(a r) - lam(lam+3)/r^2] R = 0
// normalized by b_0 = 1 (shape only; the library fixes normalization by
// the delta-in-k convention instead).
double radial_series_shape(double k, int lam, double a, double r, int nmax = 240);

}  // namespace oracles
