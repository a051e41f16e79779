#include "coulomb5/hurwitz.hpp"

#include <cmath>

namespace coulomb5::hurwitz {

namespace {

// J_a = (i/2) sum_{mu,nu} M[a][mu][nu] u_mu d/du_nu with M in {-1,0,+1},
// transcribed from the explicit first-order operators.
struct JTerm {
    int mu, nu, sign;
};

constexpr JTerm kJ1[] = {{1, 0, +1}, {0, 1, -1}, {3, 2, +1}, {2, 3, -1},
                         {5, 4, +1}, {4, 5, -1}, {7, 6, +1}, {6, 7, -1}};
constexpr JTerm kJ2[] = {{2, 0, +1}, {3, 1, -1}, {0, 2, -1}, {1, 3, +1},
                         {6, 4, -1}, {7, 5, +1}, {4, 6, +1}, {5, 7, -1}};
constexpr JTerm kJ3[] = {{3, 0, +1}, {2, 1, +1}, {1, 2, -1}, {0, 3, -1},
                         {7, 4, -1}, {6, 5, -1}, {5, 6, +1}, {4, 7, +1}};

const JTerm* j_terms(int a) {
    switch (a) {
        case 1: return kJ1;
        case 2: return kJ2;
        case 3: return kJ3;
        default: throw std::domain_error("apply_J: operator index must be 1, 2 or 3");
    }
}

using Grad8 = std::array<ComplexScalar, 8>;
using Hess8 = std::array<std::array<ComplexScalar, 8>, 8>;

double fd_scale(const R8Point& u) {
    double m = 1.0;
    for (double v : u.u) m = std::max(m, std::abs(v));
    return m;
}

ComplexScalar eval_shift(const std::function<ComplexScalar(const R8Point&)>& f,
                         R8Point u, int i, double h) {
    u.u[static_cast<std::size_t>(i)] += h;
    return f(u);
}

// Central first derivative, optionally Richardson-extrapolated
// (4th order); est_out receives a truncation-error estimate.
ComplexScalar fd_d1(const std::function<ComplexScalar(const R8Point&)>& f,
                    const R8Point& u, int i, const FdOptions& opt,
                    double* est_out = nullptr) {
    const double h = opt.step1 * fd_scale(u);
    auto d1 = [&](double hh) {
        return (eval_shift(f, u, i, hh) - eval_shift(f, u, i, -hh)) / (2.0 * hh);
    };
    ComplexScalar coarse = d1(h);
    if (!opt.richardson) {
        if (est_out) *est_out = 0.0;
        return coarse;
    }
    ComplexScalar fine = d1(0.5 * h);
    ComplexScalar rich = (4.0 * fine - coarse) / 3.0;
    if (est_out) *est_out = std::abs(fine - coarse) / 3.0;
    return rich;
}

ComplexScalar fd_d2(const std::function<ComplexScalar(const R8Point&)>& f,
                    const R8Point& u, int i, const FdOptions& opt) {
    const double h = opt.step2 * fd_scale(u);
    const ComplexScalar f0 = f(u);
    auto d2 = [&](double hh) {
        return (eval_shift(f, u, i, hh) - 2.0 * f0 + eval_shift(f, u, i, -hh)) /
               (hh * hh);
    };
    ComplexScalar coarse = d2(h);
    if (!opt.richardson) return coarse;
    ComplexScalar fine = d2(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

ComplexScalar fd_cross(const std::function<ComplexScalar(const R8Point&)>& f,
                       const R8Point& u, int i, int j, const FdOptions& opt) {
    const double h = opt.step2 * fd_scale(u);
    auto shift2 = [&](double hi, double hj) {
        R8Point v = u;
        v.u[static_cast<std::size_t>(i)] += hi;
        v.u[static_cast<std::size_t>(j)] += hj;
        return f(v);
    };
    auto dij = [&](double hh) {
        return (shift2(hh, hh) - shift2(hh, -hh) - shift2(-hh, hh) + shift2(-hh, -hh)) /
               (4.0 * hh * hh);
    };
    ComplexScalar coarse = dij(h);
    if (!opt.richardson) return coarse;
    ComplexScalar fine = dij(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

Grad8 field_gradient(const ScalarField8& f, const R8Point& u, const FdOptions& opt,
                     double* est_out = nullptr) {
    if (f.gradient) {
        if (est_out) *est_out = 0.0;
        return f.gradient(u);
    }
    Grad8 g{};
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        double e = 0.0;
        g[static_cast<std::size_t>(i)] = fd_d1(f.value, u, i, opt, &e);
        worst = std::max(worst, e);
    }
    if (est_out) *est_out = worst;
    return g;
}

Hess8 field_hessian(const ScalarField8& f, const R8Point& u, const FdOptions& opt) {
    if (f.hessian) return f.hessian(u);
    Hess8 h{};
    for (int i = 0; i < 8; ++i) {
        h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            fd_d2(f.value, u, i, opt);
        for (int j = i + 1; j < 8; ++j) {
            ComplexScalar v = fd_cross(f.value, u, i, j, opt);
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            h[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    return h;
}

// (J_a J_b f)(u) from gradient and hessian:
//   J_a J_b = -(1/4) [ sum M^a_{mu nu} M^b_{nu sig} u_mu d_sig
//                    + sum M^a_{mu nu} M^b_{rho sig} u_mu u_rho d^2_{nu sig} ].
ComplexScalar apply_JJ(int a, int b, const R8Point& u, const Grad8& g, const Hess8& h) {
    const JTerm* ta = j_terms(a);
    const JTerm* tb = j_terms(b);
    ComplexScalar s = 0.0;
    for (int p = 0; p < 8; ++p) {
        const auto& A = ta[p];
        for (int q = 0; q < 8; ++q) {
            const auto& B = tb[q];
            const double c = static_cast<double>(A.sign * B.sign);
            if (A.nu == B.mu)
                s += c * u.u[static_cast<std::size_t>(A.mu)] *
                     g[static_cast<std::size_t>(B.nu)];
            s += c * u.u[static_cast<std::size_t>(A.mu)] *
                 u.u[static_cast<std::size_t>(B.mu)] *
                 h[static_cast<std::size_t>(A.nu)][static_cast<std::size_t>(B.nu)];
        }
    }
    return -0.25 * s;
}

}  // namespace

R5Point hurwitz_map(const R8Point& p) {
    const auto& u = p.u;
    std::array<double, 5> x{};
    x[0] = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3] - u[4] * u[4] -
           u[5] * u[5] - u[6] * u[6] - u[7] * u[7];
    x[1] = 2.0 * (u[0] * u[4] + u[1] * u[5] - u[2] * u[6] - u[3] * u[7]);
    x[2] = 2.0 * (u[0] * u[5] - u[1] * u[4] + u[2] * u[7] - u[3] * u[6]);
    // Relative sign of the two products in the x4 + i x3 component is
    // fixed by requiring the Euler identity |u|^4 = |x|^2 and the fiber
    // conditions J_a x_i = 0; the opposite sign violates both.
    x[3] = 2.0 * (u[0] * u[6] + u[1] * u[7] + u[2] * u[4] + u[3] * u[5]);
    x[4] = 2.0 * (u[0] * u[7] - u[1] * u[6] - u[2] * u[5] + u[3] * u[4]);
    return R5Point::from_cartesian(x);
}

double euler_identity_residual(const R8Point& u) {
    const double n2 = u.norm2();
    const R5Point x = hurwitz_map(u);
    double x2 = 0.0;
    for (double v : x.x) x2 += v * v;
    return std::abs(n2 * n2 - x2);
}

ScalarField8 ScalarField8::constant(ComplexScalar v) {
    ScalarField8 f;
    f.value = [v](const R8Point&) { return v; };
    f.gradient = [](const R8Point&) { return Grad8{}; };
    f.hessian = [](const R8Point&) { return Hess8{}; };
    return f;
}

ScalarField8 ScalarField8::monomial(const std::array<int, 8>& powers, ComplexScalar coef) {
    for (int p : powers)
        if (p < 0) throw std::domain_error("ScalarField8::monomial: negative power");
    auto eval = [powers, coef](const R8Point& u) {
        ComplexScalar v = coef;
        for (int i = 0; i < 8; ++i)
            for (int p = 0; p < powers[static_cast<std::size_t>(i)]; ++p)
                v *= u.u[static_cast<std::size_t>(i)];
        return v;
    };
    auto partial = [powers, coef](const R8Point& u, int d1, int d2) {
        // derivative of the monomial in coordinates d1 (and d2 when >= 0)
        std::array<int, 8> pw = powers;
        ComplexScalar v = coef;
        for (int d : {d1, d2}) {
            if (d < 0) continue;
            int& p = pw[static_cast<std::size_t>(d)];
            if (p == 0) return ComplexScalar(0.0);
            v *= static_cast<double>(p);
            --p;
        }
        for (int i = 0; i < 8; ++i)
            for (int p = 0; p < pw[static_cast<std::size_t>(i)]; ++p)
                v *= u.u[static_cast<std::size_t>(i)];
        return v;
    };
    ScalarField8 f;
    f.value = eval;
    f.gradient = [partial](const R8Point& u) {
        Grad8 g{};
        for (int i = 0; i < 8; ++i) g[static_cast<std::size_t>(i)] = partial(u, i, -1);
        return g;
    };
    f.hessian = [partial](const R8Point& u) {
        Hess8 h{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    partial(u, i, j);
        return h;
    };
    return f;
}

ScalarField8 ScalarField8::from_function(std::function<ComplexScalar(const R8Point&)> f) {
    ScalarField8 s;
    s.value = std::move(f);
    return s;
}

ComplexScalar apply_J(int a, const ScalarField8& f, const R8Point& u,
                      const FdOptions& opt) {
    double est = 0.0;
    Grad8 g = field_gradient(f, u, opt, &est);
    if (est > opt.fd_tol)
        throw StepSizeError("apply_J: finite-difference error estimate exceeds tolerance");
    const JTerm* t = j_terms(a);
    ComplexScalar s = 0.0;
    for (int p = 0; p < 8; ++p)
        s += static_cast<double>(t[p].sign) * u.u[static_cast<std::size_t>(t[p].mu)] *
             g[static_cast<std::size_t>(t[p].nu)];
    return ComplexScalar(0.0, 0.5) * s;
}

double commutator_residual(int a, int b, const ScalarField8& f, const R8Point& u,
                           const FdOptions& opt) {
    j_terms(a);
    j_terms(b);
    Grad8 g = field_gradient(f, u, opt);
    Hess8 h = field_hessian(f, u, opt);
    ComplexScalar comm = apply_JJ(a, b, u, g, h) - apply_JJ(b, a, u, g, h);
    // eps_{abc}: nonzero only for a != b, cyclic sign.
    ComplexScalar target = 0.0;
    if (a != b) {
        int c = 6 - a - b;
        double eps = ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1))
                         ? 1.0
                         : -1.0;
        const JTerm* tc = j_terms(c);
        ComplexScalar jc = 0.0;
        for (int p = 0; p < 8; ++p)
            jc += static_cast<double>(tc[p].sign) *
                  u.u[static_cast<std::size_t>(tc[p].mu)] *
                  g[static_cast<std::size_t>(tc[p].nu)];
        target = ComplexScalar(0.0, 1.0) * eps * ComplexScalar(0.0, 0.5) * jc;
    }
    return std::abs(comm - target);
}

double laplacian_identity_residual(const std::function<ComplexScalar(const R5Point&)>& f5,
                                   const R8Point& u, const FdOptions& opt,
                                   const std::function<ComplexScalar(const R5Point&)>* lap5) {
    const R5Point x = hurwitz_map(u);
    if (!(x.r > 0.0))
        throw std::domain_error("laplacian_identity_residual: singular at u = 0");
    auto pulled = [&f5](const R8Point& v) { return f5(hurwitz_map(v)); };
    ComplexScalar lap8 = 0.0;
    for (int i = 0; i < 8; ++i) lap8 += fd_d2(pulled, u, i, opt);

    ComplexScalar l5;
    if (lap5) {
        l5 = (*lap5)(x);
    } else {
        l5 = 0.0;
        const double h = opt.step2 * std::max(1.0, x.r);
        const ComplexScalar f0 = f5(x);
        for (int i = 0; i < 5; ++i) {
            auto d2 = [&](double hh) {
                std::array<double, 5> xp = x.x, xm = x.x;
                xp[static_cast<std::size_t>(i)] += hh;
                xm[static_cast<std::size_t>(i)] -= hh;
                return (f5(R5Point::from_cartesian(xp)) - 2.0 * f0 +
                        f5(R5Point::from_cartesian(xm))) /
                       (hh * hh);
            };
            ComplexScalar coarse = d2(h);
            l5 += opt.richardson ? (4.0 * d2(0.5 * h) - coarse) / 3.0 : coarse;
        }
    }
    return std::abs(lap8 - 4.0 * x.r * l5);
}

double duality_residual(const std::function<ComplexScalar(const R5Point&)>& psi5,
                        const DualityParams& dp, const R8Point& u, double J,
                        const FdOptions& opt, double* scale_out) {
    const double r = u.norm2();
    if (!(r > 0.0)) throw std::domain_error("duality_residual: singular at u = 0");
    auto psi8 = [&psi5](const R8Point& v) { return psi5(hurwitz_map(v)); };
    ComplexScalar lap8 = 0.0;
    for (int i = 0; i < 8; ++i) lap8 += fd_d2(psi8, u, i, opt);
    const ComplexScalar val = psi8(u);

    const double kin = dp.hbar * dp.hbar / (2.0 * dp.mu);
    const ComplexScalar kinetic = -kin * (lap8 - (4.0 / r) * J * (J + 1.0) * val);
    const ComplexScalar potential = -0.5 * dp.mu * dp.omega * dp.omega * r * val;
    const ComplexScalar resid = kinetic + potential - dp.E * val;
    if (scale_out)
        *scale_out = std::abs(kin * lap8) + std::abs(potential) + std::abs(dp.E * val);
    return std::abs(resid);
}

}  // namespace coulomb5::hurwitz
