// Serial vs OpenMP timing on representative kernels. The parallel
// kernels are chunked so both modes must agree bit for bit; any
// mismatch is a bug and fails the run (exit 1).

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "coulomb5/hurwitz.hpp"
#include "coulomb5/parallel.hpp"
#include "coulomb5/runner.hpp"
#include "coulomb5/types.hpp"

namespace {

using coulomb5::R8Point;
namespace par = coulomb5::par;
namespace run = coulomb5::run;

// Hash-based uniforms: no stored samples, identical for any schedule.
double u01(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x = x ^ (x >> 31);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool report(const char* name, double serial_s, double openmp_s, bool identical) {
    std::printf("%-22s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   %s\n", name,
                serial_s, openmp_s, openmp_s > 0.0 ? serial_s / openmp_s : 0.0,
                identical ? "bit-identical" : "MISMATCH");
    return identical;
}

bool rows_equal(const run::Table& a, const run::Table& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].size() != b.rows[i].size()) return false;
        for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
            const double x = a.rows[i][j], y = b.rows[i][j];
            if (x != y && !(x != x && y != y)) return false;  // NaN == NaN here
        }
    }
    return true;
}

}  // namespace

int main() {
    std::printf("workers (openmp mode): %d\n", par::worker_count(par::Mode::openmp));
    bool ok = true;

    // Quadratic map sweep: cheap per item, stresses the chunked reduction.
    {
        const std::size_t n = 4000000;
        auto kernel = [&](par::Mode mode) {
            return par::reduce_max(
                n,
                [](std::size_t i) {
                    R8Point u;
                    for (int j = 0; j < 8; ++j)
                        u.u[j] = -2.0 + 4.0 * u01(static_cast<std::uint64_t>(i) * 8 + j);
                    return coulomb5::hurwitz::euler_identity_residual(u);
                },
                mode);
        };
        double rs = 0.0, ro = 0.0;
        const double ts = timed([&] { rs = kernel(par::Mode::serial); });
        const double to = timed([&] { ro = kernel(par::Mode::openmp); });
        ok &= report("euler-sweep", ts, to, rs == ro);
    }

    // Radial table: moderate per-item cost, for_each into fixed slots.
    {
        run::RunConfig cfg;
        cfg.lam_max = 3;
        cfg.grid = {0.5, 60.0, 20000, 2};
        run::Table a, b;
        cfg.mode = par::Mode::serial;
        const double ts = timed([&] { a = run::radial_table(cfg); });
        cfg.mode = par::Mode::openmp;
        const double to = timed([&] { b = run::radial_table(cfg); });
        ok &= report("radial-table", ts, to, rows_equal(a, b));
    }

    // Five-coordinate PDE residuals: heavy per item (dozens of basis
    // evaluations each).
    {
        const std::size_t n = 96;
        const auto p = coulomb5::PhysParams::from_ak(1.0, 1.0);
        auto kernel = [&](par::Mode mode) {
            return par::reduce_max(
                n,
                [&](std::size_t i) {
                    coulomb5::HyperPoint h;
                    h.r = 0.8 + 6.0 * u01(i * 5 + 0);
                    h.theta = 0.5 + (coulomb5::pi - 1.0) * u01(i * 5 + 1);
                    h.alpha = 2.0 * coulomb5::pi * u01(i * 5 + 2);
                    h.beta = 0.5 + (coulomb5::pi - 1.0) * u01(i * 5 + 3);
                    h.gamma = 4.0 * coulomb5::pi * u01(i * 5 + 4);
                    const coulomb5::HyperLabel lbl{2, 1.0, 1.0, 0.0};
                    return run::hyper_pde_residual(1.0, lbl, h, p);
                },
                mode);
        };
        double rs = 0.0, ro = 0.0;
        const double ts = timed([&] { rs = kernel(par::Mode::serial); });
        const double to = timed([&] { ro = kernel(par::Mode::openmp); });
        ok &= report("hyper-pde-residuals", ts, to, rs == ro);
    }

    // Scattering field grid with asymptotic splits.
    {
        run::RunConfig cfg;
        cfg.grid = {30.0, 90.0, 160, 120};
        run::Table a, b;
        cfg.mode = par::Mode::serial;
        const double ts = timed([&] { a = run::scatter_field_table(cfg); });
        cfg.mode = par::Mode::openmp;
        const double to = timed([&] { b = run::scatter_field_table(cfg); });
        ok &= report("scatter-field", ts, to, rows_equal(a, b));
    }

    if (!ok) {
        std::printf("FAIL: serial/openmp results differ\n");
        return 1;
    }
    std::printf("all kernels bit-identical across modes\n");
    return 0;
}
