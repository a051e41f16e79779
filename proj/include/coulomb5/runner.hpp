#pragma once

// Verification suites and table generation behind the CLI. Everything
// here is deterministic for a fixed config: randomized sweeps draw from
// a seeded generator into pre-allocated arrays before any parallel
// phase, reductions combine fixed-size chunks in index order, and the
// emitted files never contain wall-clock times.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "coulomb5/parallel.hpp"
#include "coulomb5/types.hpp"

namespace coulomb5::run {

struct Check {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// One report per driver invocation; overall pass iff every check
// passes. `info` carries reported-but-not-asserted quantities (e.g. the
// amplitude/cross-section ratio law exponent data).
struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, double>> info;
    double wall_time_s = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct GridSpec {
    double r_min = 1.0;
    double r_max = 10.0;
    int n_r = 50;
    int n_theta = 18;
};

struct RunConfig {
    double a = 1.0;
    double k = 1.0;
    int lam_max = 3;
    GridSpec grid;
    std::string format = "csv";  // csv | json
    std::string out;             // empty: console only
    std::uint64_t seed = 12345;
    std::map<std::string, double> tol_overrides;
    par::Mode mode = par::Mode::openmp;

    PhysParams phys() const { return PhysParams::from_ak(a, k); }
    // override if present, else the default; throws on unknown name
    double tolerance(const std::string& name) const;
};

// Named default tolerances; --tol NAME=VALUE overrides entries.
const std::map<std::string, double>& default_tolerances();

// Throws std::invalid_argument on out-of-range grids, unknown formats,
// or tolerance overrides whose names are not in default_tolerances().
void validate_config(const RunConfig& cfg);

// Runs every verification suite (identity sweeps, operator identities,
// special-function invariants, PDE/ODE residuals, asymptotics,
// coordinate round-trips).
VerificationReport run_verify(const RunConfig& cfg);

// Basis-focused subset: the hyperspherical radial/angular/PDE suites,
// or (parabolic = true) the parabolic ODE/PDE/exchange suites.
VerificationReport run_basis_check(const RunConfig& cfg, bool parabolic);

// ---- residual helpers shared by run_verify and the acceptance tests --

// Residual of the Schrodinger equation in hyperspherical coordinates,
// evaluated on basis_function by central differences in all five
// coordinates (the angular operator is applied by differencing, not by
// substituting its eigenvalue). Relative to the local term scale.
double hyper_pde_residual(double k, const HyperLabel& label, const HyperPoint& h,
                          const PhysParams& p);

// Same for the parabolic basis at a ParaPoint.
double parabolic_pde_residual(double k, const ParaLabel& label, const ParaPoint& pt,
                              const PhysParams& p);

// Same for the L = 0 scattering state at (xi, eta).
double scattering_pde_residual(double k, double xi, double eta, const PhysParams& p);

// |envelope(r^2 R_{k lam}/2) - 1| measured over one oscillation cycle
// starting at kr0 (dense sampling plus parabolic peak refinement).
double radial_envelope_deviation(double k, int lam, double kr0, const PhysParams& p);

// ---- tables ----------------------------------------------------------

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// r, lambda, R, R_asymptotic, abs_diff, delta_lambda over the r-grid and
// lambda = 0..lam_max.
Table radial_table(const RunConfig& cfg);

// theta, amp_re, amp_im, abs_f_sq, xsec_printed, ratio on a theta grid
// excluding 0 and including pi.
Table xsec_table(const RunConfig& cfg);

// r, theta, xi, eta, psi_re, psi_im, abs_psi_sq, inc_re, inc_im,
// scat_re, scat_im, split_rel_err. Rows with eta = 0 carry the
// incident-only values; rows with 0 < k*eta below the asymptotic
// threshold leave the split columns NaN.
Table scatter_field_table(const RunConfig& cfg);

// ---- serialization ---------------------------------------------------

// Shortest round-trip decimal form of v.
std::string format_double(double v);

// '#'-prefixed config echo placed as the first line of CSV output.
std::string meta_line(const RunConfig& cfg, const std::string& subcommand);

void write_table_csv(std::ostream& os, const Table& t, const std::string& meta);
void write_table_json(std::ostream& os, const Table& t, const RunConfig& cfg,
                      const std::string& subcommand);

// Report serialization: CSV columns name,value,tolerance,status (info
// rows carry status "info" and an empty tolerance); JSON mirrors the
// struct. Wall time is deliberately omitted from both.
void write_report_csv(std::ostream& os, const VerificationReport& r,
                      const std::string& meta);
void write_report_json(std::ostream& os, const VerificationReport& r,
                       const RunConfig& cfg);

// Console rendering (one PASS/FAIL line per check, then a summary with
// wall time).
void print_report(std::ostream& os, const VerificationReport& r);

}  // namespace coulomb5::run
