#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "coulomb5/hurwitz.hpp"
#include "coulomb5/hyperspherical.hpp"
#include "doctest.h"

namespace hw = coulomb5::hurwitz;
using coulomb5::ComplexScalar;
using coulomb5::R5Point;
using coulomb5::R8Point;
using C = ComplexScalar;

namespace {
R8Point mk(std::initializer_list<double> v) {
    R8Point u;
    int i = 0;
    for (double x : v) u.u[i++] = x;
    return u;
}
}  // namespace

TEST_CASE("hurwitz_map hand-computed values") {
    // e_0 maps to the positive x0 axis.
    auto x = hw::hurwitz_map(mk({1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(x.x[0] == 1.0);
    for (int i = 1; i < 5; ++i) CHECK(x.x[i] == 0.0);

    // u0 = u4 = 1 lands on the x1 axis with |x| = |u|^2 = 2.
    x = hw::hurwitz_map(mk({1, 0, 0, 0, 1, 0, 0, 0}));
    CHECK(x.x[0] == 0.0);
    CHECK(x.x[1] == 2.0);
    CHECK(x.x[2] == 0.0);
    CHECK(x.x[3] == 0.0);
    CHECK(x.x[4] == 0.0);

    // u3 = u7 = 1: x0 = 0, x1 = -2 (the -u3 u7 term), rest 0.
    x = hw::hurwitz_map(mk({0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(x.x[0] == 0.0);
    CHECK(x.x[1] == -2.0);
    CHECK(x.x[2] == 0.0);
    CHECK(x.x[3] == 0.0);
    CHECK(x.x[4] == 0.0);

    // A generic point: r must equal |u|^2 and the map must be stored
    // consistently with from_cartesian.
    const R8Point u = mk({0.3, -1.1, 0.7, 0.2, -0.4, 0.9, -0.6, 0.5});
    x = hw::hurwitz_map(u);
    CHECK(std::abs(x.r - u.norm2()) < 1e-14 * u.norm2());
}

TEST_CASE("euler identity residual on a deterministic sweep") {
    CHECK(hw::euler_identity_residual(mk({1, 1, 1, 1, 1, 1, 1, 1})) == 0.0);
    std::mt19937_64 eng(7);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int t = 0; t < 2000; ++t) {
        R8Point u;
        for (auto& v : u.u) v = d(eng);
        const double n2 = u.norm2();
        CHECK(hw::euler_identity_residual(u) <= 1e-12 * std::max(1.0, n2 * n2));
    }
}

TEST_CASE("antipodal points map to the same x") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int t = 0; t < 64; ++t) {
        R8Point u, v;
        for (int i = 0; i < 8; ++i) {
            u.u[i] = d(eng);
            v.u[i] = -u.u[i];
        }
        const auto xu = hw::hurwitz_map(u);
        const auto xv = hw::hurwitz_map(v);
        for (int i = 0; i < 5; ++i) CHECK(xu.x[i] == xv.x[i]);
    }
}

TEST_CASE("apply_J on an analytic monomial matches the hand value") {
    // J_1 includes the term pairing u_1 with d/du_0, so on f = u0^2 it
    // gives i u0 u1 in this operator normalization.
    const auto f = hw::ScalarField8::monomial({2, 0, 0, 0, 0, 0, 0, 0});
    const R8Point u = mk({0.8, -0.6, 0.3, 0.1, 0.5, -0.2, 0.7, 0.4});
    const C got = hw::apply_J(1, f, u);
    CHECK(std::abs(got - C(0.0, u.u[0] * u.u[1])) < 1e-13);
}

TEST_CASE("fiber generators annihilate pulled-back fields") {
    // Fields of the form f(u) = g(x(u)) are constant along the fiber.
    const R8Point u = mk({0.9, 0.2, -0.5, 0.4, -0.7, 0.3, 0.6, -0.1});
    for (int comp = 0; comp < 5; ++comp) {
        const auto f = hw::ScalarField8::from_function([comp](const R8Point& q) {
            return C(hw::hurwitz_map(q).x[comp], 0.0);
        });
        for (int a = 1; a <= 3; ++a) {
            CHECK(std::abs(hw::apply_J(a, f, u)) < 1e-9 * std::max(1.0, u.norm2()));
        }
    }
}

TEST_CASE("apply_J propagates finite-difference failure as StepSizeError") {
    const auto f = hw::ScalarField8::from_function(
        [](const R8Point& q) { return C(q.u[0] * q.u[1], 0.0); });
    hw::FdOptions opt;
    opt.fd_tol = 1e-30;  // unreachable estimate forces the throw
    CHECK_THROWS_AS((void)hw::apply_J(1, f, mk({1, 1, 0, 0, 0, 0, 0, 0}), opt),
                    hw::StepSizeError);
}

TEST_CASE("commutator residual and argument validation") {
    const auto f = hw::ScalarField8::monomial({1, 0, 0, 1, 0, 0, 0, 0});
    const R8Point u = mk({0.5, 1.2, -0.3, 0.8, 0.1, -0.9, 0.4, -0.2});
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            CHECK(hw::commutator_residual(a, b, f, u) < 1e-10);
        }
    }
    CHECK_THROWS_AS((void)hw::commutator_residual(0, 1, f, u), std::domain_error);
    CHECK_THROWS_AS((void)hw::commutator_residual(1, 4, f, u), std::domain_error);
}

TEST_CASE("laplacian factorization on polynomial fields") {
    // Delta_5 x1 = 0, pulled back: Delta_8(x1 o map) must vanish against
    // the 4 r Delta_5 term.
    hw::FdOptions opt;
    opt.step2 = 8e-3;  // polynomial fields: larger step only cuts roundoff
    auto f_x1 = [](const R5Point& x) { return C(x.x[1], 0.0); };
    auto f_r2 = [](const R5Point& x) { return C(x.r * x.r, 0.0); };
    const std::function<ComplexScalar(const R5Point&)> lap_r2 =
        [](const R5Point&) { return C(10.0, 0.0); };

    std::mt19937_64 eng(23);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 24; ++t) {
        R8Point u;
        double n2 = 0.0;
        do {
            for (auto& v : u.u) v = d(eng);
            n2 = u.norm2();
        } while (n2 < 0.25);
        CHECK(hw::laplacian_identity_residual(f_x1, u, opt) < 1e-7);
        CHECK(hw::laplacian_identity_residual(f_r2, u, opt, &lap_r2) < 1e-7);
    }
    CHECK_THROWS_AS((void)hw::laplacian_identity_residual(f_x1, R8Point{}, opt),
                    std::domain_error);
}

TEST_CASE("duality parameters tie the two sides") {
    const auto p = coulomb5::PhysParams::from_ak(1.0, 1.0);
    const auto dp = hw::DualityParams::from_coulomb(p);
    CHECK(dp.eps == 0.5);
    CHECK(dp.omega == 2.0);
    CHECK(dp.E == 4.0);
    CHECK(dp.e2 == 1.0);
    // eps = mu omega^2 / 8 by construction.
    CHECK(std::abs(dp.eps - dp.mu * dp.omega * dp.omega / 8.0) < 1e-15);
}

TEST_CASE("coulomb continuum solution pulled back solves the oscillator") {
    const auto p = coulomb5::PhysParams::from_ak(1.0, 1.0);
    const auto dp = hw::DualityParams::from_coulomb(p);
    auto psi5 = [&p](const R5Point& x) {
        return coulomb5::hyperspherical::radial_continuum(1.0, 0, x.r, p);
    };
    std::mt19937_64 eng(31);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 8; ++t) {
        R8Point u;
        double n2 = 0.0;
        do {
            for (auto& v : u.u) v = d(eng);
            n2 = u.norm2();
        } while (n2 < 0.7 || n2 > 1.4);
        double scale = 0.0;
        const double resid = hw::duality_residual(psi5, dp, u, 0.0, {}, &scale);
        CHECK(resid < 1e-5 * scale);
    }
}
