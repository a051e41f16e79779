#pragma once

// Gauss-Legendre rules on [-1,1], nodes by Newton iteration on P_n with
// the asymptotic Chebyshev-angle starting guess. Nodes/weights converge
// to ~1e-15; adequate for every quadrature contract in this project.

#include <cmath>
#include <cstddef>
#include <vector>

#include "coulomb5/types.hpp"

namespace coulomb5 {

struct GaussLegendre {
    std::vector<double> x;  // nodes in (-1,1), ascending
    std::vector<double> w;  // weights

    explicit GaussLegendre(std::size_t n) : x(n), w(n) {
        for (std::size_t i = 0; i < n; ++i) {
            double t = std::cos(pi * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(n) + 0.5));
            double p2 = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * static_cast<double>(j) + 1.0) * t * p1 -
                          static_cast<double>(j) * p2) /
                         (static_cast<double>(j) + 1.0);
                }
                double dp = static_cast<double>(n) * (t * p0 - p1) / (t * t - 1.0);
                double dt = p0 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                p2 = p1;
                p1 = p0;
                p0 = ((2.0 * static_cast<double>(j) + 1.0) * t * p1 -
                      static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            double dp = static_cast<double>(n) * (t * p0 - p1) / (t * t - 1.0);
            x[n - 1 - i] = t;
            w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }

    // integral of f over [a,b]; summation order is the fixed node order.
    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double c = 0.5 * (b - a), m = 0.5 * (a + b);
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(m + c * x[i]);
        return c * s;
    }

    template <class F>
    ComplexScalar integrate_complex(F&& f, double a, double b) const {
        const double c = 0.5 * (b - a), m = 0.5 * (a + b);
        ComplexScalar s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(m + c * x[i]);
        return c * s;
    }
};

}  // namespace coulomb5
