// coulomb5 command line: verification suites and table generation for
// the 5D Coulomb continuum, its oscillator dual, and Rutherford
// scattering. Exit codes: 0 success, 1 check failure, 2 usage or
// configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coulomb5/runner.hpp"

namespace {

using coulomb5::run::RunConfig;
using coulomb5::run::Table;
using coulomb5::run::VerificationReport;

bool parse_grid_r(const std::string& s, coulomb5::run::GridSpec& g) {
    std::istringstream is(s);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(is, part, ':')) parts.push_back(part);
    if (parts.size() != 3) return false;
    try {
        std::size_t used = 0;
        g.r_min = std::stod(parts[0], &used);
        if (used != parts[0].size()) return false;
        g.r_max = std::stod(parts[1], &used);
        if (used != parts[1].size()) return false;
        g.n_r = std::stoi(parts[2], &used);
        if (used != parts[2].size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool parse_tols(const std::vector<std::string>& kvs, RunConfig& cfg) {
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) return false;
        const std::string name = kv.substr(0, eq);
        try {
            std::size_t used = 0;
            const double v = std::stod(kv.substr(eq + 1), &used);
            if (used != kv.size() - eq - 1) return false;
            cfg.tol_overrides[name] = v;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

int emit_report(const VerificationReport& rep, const RunConfig& cfg) {
    coulomb5::run::print_report(std::cout, rep);
    if (!cfg.out.empty()) {
        std::ofstream os(cfg.out);
        if (!os) {
            std::cerr << "config error: cannot open output file: " << cfg.out << "\n";
            return 2;
        }
        if (cfg.format == "csv")
            coulomb5::run::write_report_csv(os, rep,
                                            coulomb5::run::meta_line(cfg, rep.suite));
        else
            coulomb5::run::write_report_json(os, rep, cfg);
    }
    return rep.pass() ? 0 : 1;
}

int emit_table(const Table& t, const RunConfig& cfg, const std::string& subcommand) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            std::cerr << "config error: cannot open output file: " << cfg.out << "\n";
            return 2;
        }
        os = &file;
    }
    if (cfg.format == "csv")
        coulomb5::run::write_table_csv(*os, t, coulomb5::run::meta_line(cfg, subcommand));
    else
        coulomb5::run::write_table_json(*os, t, cfg, subcommand);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"5D Coulomb continuum: verification suites and tables (hbar = mu = 1, "
                 "e^2 = 1/a)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string grid_r, mode_str = "openmp";
    std::vector<std::string> tol_kv;
    bool parabolic = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.a, "Bohr radius a > 0 (default 1)");
        sub->add_option("--k", cfg.k, "wavenumber k > 0 (default 1)");
        sub->add_option("--lam-max", cfg.lam_max, "largest lambda in sweeps/tables");
        sub->add_option("--grid-r", grid_r, "radial grid as min:max:n");
        sub->add_option("--grid-theta", cfg.grid.n_theta, "number of theta grid points");
        sub->add_option("--format", cfg.format, "output format: csv or json");
        sub->add_option("--out", cfg.out, "output file path (tables default to stdout)");
        sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
        sub->add_option("--tol", tol_kv, "tolerance override NAME=VALUE (repeatable)");
        sub->add_option("--mode", mode_str, "parallel mode: openmp or serial");
    };

    auto* verify = app.add_subcommand("verify", "run every verification suite");
    auto* radial = app.add_subcommand("radial-table",
                                      "radial function vs its asymptotic form");
    auto* basis = app.add_subcommand("basis-check", "basis-function residual suites");
    basis->add_flag("--parabolic", parabolic, "check the parabolic basis instead");
    auto* xsec = app.add_subcommand("xsec", "amplitude and cross-section table");
    auto* field = app.add_subcommand("scatter-field",
                                     "scattering state on an (r, theta) grid");
    for (auto* s : {verify, radial, basis, xsec, field}) add_common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!grid_r.empty() && !parse_grid_r(grid_r, cfg.grid)) {
        std::cerr << "config error: --grid-r expects min:max:n\n";
        return 2;
    }
    if (!parse_tols(tol_kv, cfg)) {
        std::cerr << "config error: --tol expects NAME=VALUE\n";
        return 2;
    }
    if (mode_str == "serial")
        cfg.mode = coulomb5::par::Mode::serial;
    else if (mode_str == "openmp")
        cfg.mode = coulomb5::par::Mode::openmp;
    else {
        std::cerr << "config error: --mode expects openmp or serial\n";
        return 2;
    }

    try {
        coulomb5::run::validate_config(cfg);
        if (*verify) return emit_report(coulomb5::run::run_verify(cfg), cfg);
        if (*basis)
            return emit_report(coulomb5::run::run_basis_check(cfg, parabolic), cfg);
        if (*radial) return emit_table(coulomb5::run::radial_table(cfg), cfg, "radial-table");
        if (*xsec) return emit_table(coulomb5::run::xsec_table(cfg), cfg, "xsec");
        if (*field)
            return emit_table(coulomb5::run::scatter_field_table(cfg), cfg, "scatter-field");
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
