#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "coulomb5/runner.hpp"
#include "doctest.h"
#include "json.hpp"

namespace run = coulomb5::run;
using coulomb5::par::Mode;

namespace {
run::RunConfig base_cfg() {
    run::RunConfig cfg;
    cfg.mode = Mode::serial;
    return cfg;
}
}  // namespace

TEST_CASE("tolerance lookup: defaults, overrides, unknown names") {
    auto cfg = base_cfg();
    CHECK(cfg.tolerance("euler") == 1e-12);
    CHECK(cfg.tolerance("ratio_law") == 1e-12);
    cfg.tol_overrides["euler"] = 1e-3;
    CHECK(cfg.tolerance("euler") == 1e-3);
    CHECK_THROWS_AS((void)cfg.tolerance("no_such_check"), std::invalid_argument);
}

TEST_CASE("validate_config rejects each malformed field") {
    CHECK_NOTHROW(run::validate_config(base_cfg()));
    auto bad = base_cfg();
    bad.a = 0.0;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.k = -1.0;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.lam_max = 61;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.grid.r_min = 0.0;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.grid.r_max = bad.grid.r_min;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.grid.n_r = 1;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.grid.n_theta = 1;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.format = "yaml";
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.tol_overrides["no_such_check"] = 1e-3;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
    bad = base_cfg();
    bad.tol_overrides["euler"] = -1.0;
    CHECK_THROWS_AS(run::validate_config(bad), std::invalid_argument);
}

TEST_CASE("format_double round-trips every value through strtod") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02e23, -0.0, 2.0,
                     0.000123456789012345678, -1.7976931348623157e308}) {
        const std::string s = run::format_double(v);
        const double back = std::strtod(s.c_str(), nullptr);
        CHECK(back == v);
        if (std::signbit(v)) CHECK(std::signbit(back));
    }
    CHECK(run::format_double(std::nan("")) == "nan");
}

TEST_CASE("meta_line carries the full configuration") {
    auto cfg = base_cfg();
    cfg.tol_overrides["euler"] = 1e-10;
    const std::string m = run::meta_line(cfg, "verify");
    CHECK(m.rfind("# coulomb5 verify ", 0) == 0);
    CHECK(m.find(" a=1 ") != std::string::npos);
    CHECK(m.find(" grid_r=1:10:50 ") != std::string::npos);
    CHECK(m.find(" seed=12345 ") != std::string::npos);
    CHECK(m.find(" mode=serial") != std::string::npos);
    CHECK(m.find(" tol:euler=1e-10") != std::string::npos);
}

TEST_CASE("radial_table layout and asymptotic columns") {
    auto cfg = base_cfg();
    cfg.lam_max = 0;
    cfg.grid.n_r = 2;
    auto t = run::radial_table(cfg);
    CHECK(t.columns.size() == 6);
    CHECK(t.rows.size() == 2);
    CHECK(t.rows[0][0] == 1.0);
    CHECK(t.rows[1][0] == 10.0);

    // delta_lambda is independent of r; the asymptotic-difference column
    // collapses at large kr (pointwise values oscillate through phase
    // zeros, so compare grid maxima, not neighbors).
    cfg.lam_max = 1;
    cfg.grid = {120.0, 400.0, 5, 18};
    t = run::radial_table(cfg);
    CHECK(t.rows.size() == 10);
    double far_max = 0.0;
    for (int lam : {0, 1}) {
        const std::size_t off = static_cast<std::size_t>(lam) * 5;
        for (int i = 1; i < 5; ++i) CHECK(t.rows[off + i][5] == t.rows[off][5]);
        CHECK(t.rows[off][1] == static_cast<double>(lam));
        for (int i = 0; i < 5; ++i) far_max = std::max(far_max, t.rows[off + i][4]);
    }
    cfg.grid = {1.0, 10.0, 5, 18};
    const auto near = run::radial_table(cfg);
    double near_max = 0.0;
    for (const auto& row : near.rows) near_max = std::max(near_max, row[4]);
    CHECK(far_max < 1e-2 * near_max);
}

TEST_CASE("xsec_table excludes forward direction and obeys the exact laws") {
    auto cfg = base_cfg();
    cfg.grid.n_theta = 4;
    const auto t = run::xsec_table(cfg);
    CHECK(t.rows.size() == 4);
    CHECK(t.rows[0][0] == doctest::Approx(coulomb5::pi / 4).epsilon(1e-15));
    CHECK(t.rows[3][0] == doctest::Approx(coulomb5::pi).epsilon(1e-15));
    // Backscattering at a = k = 1: (1 + 1)/16 = 0.125.
    CHECK(t.rows[3][4] == 0.125);
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
        const double theta = t.rows[j][0];
        CHECK(std::abs(t.rows[j][5] - std::pow(std::sin(theta / 2), 4)) < 1e-12);
        if (j > 0) CHECK(t.rows[j][4] < t.rows[j - 1][4]);
    }
}

TEST_CASE("scatter_field_table split semantics") {
    auto cfg = base_cfg();
    cfg.a = 2.0;
    cfg.grid = {400.0, 500.0, 3, 5};
    const auto t = run::scatter_field_table(cfg);
    CHECK(t.rows.size() == 15);
    const auto& columns = t.columns;
    CHECK(columns.size() == 12);
    for (const auto& row : t.rows) {
        const double theta = row[1];
        const double eta = row[3];
        if (eta == 0.0) {
            // Forward axis: the state is purely incident by convention.
            CHECK(row[7] == row[4]);
            CHECK(row[9] == 0.0);
            CHECK(row[11] == 0.0);
        } else {
            CHECK(cfg.k * eta >= 50.0);
            CHECK(row[11] <= 3e-2);
            CHECK(std::isfinite(row[7]));
        }
        CHECK(theta >= 0.0);
        CHECK(theta <= coulomb5::pi);
    }

    // Below the asymptotic threshold the split columns are NaN, the
    // exact state is still tabulated.
    cfg.grid = {1.0, 2.0, 2, 3};
    const auto s = run::scatter_field_table(cfg);
    bool saw_nan = false;
    for (const auto& row : s.rows) {
        CHECK(std::isfinite(row[4]));
        if (row[3] > 0.0 && cfg.k * row[3] < 50.0) {
            CHECK(std::isnan(row[7]));
            CHECK(std::isnan(row[11]));
            saw_nan = true;
        }
    }
    CHECK(saw_nan);
}

TEST_CASE("run_verify passes at defaults and is seed-deterministic") {
    auto cfg = base_cfg();
    const auto r1 = run::run_verify(cfg);
    const auto r2 = run::run_verify(cfg);
    CHECK(r1.pass());
    CHECK(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i) {
        CHECK(r1.checks[i].name == r2.checks[i].name);
        CHECK(r1.checks[i].max_residual == r2.checks[i].max_residual);
    }
    CHECK(r1.info.size() == r2.info.size());
    for (std::size_t i = 0; i < r1.info.size(); ++i) {
        CHECK(r1.info[i].second == r2.info[i].second);
    }
}

TEST_CASE("forced tolerance override fails the report") {
    auto cfg = base_cfg();
    cfg.tol_overrides["euler"] = 1e-30;
    const auto r = run::run_verify(cfg);
    CHECK_FALSE(r.pass());
}

TEST_CASE("basis-check subsets pass") {
    auto cfg = base_cfg();
    const auto hyper = run::run_basis_check(cfg, false);
    CHECK(hyper.pass());
    CHECK(!hyper.checks.empty());
    const auto para = run::run_basis_check(cfg, true);
    CHECK(para.pass());
    CHECK(!para.checks.empty());
    // The two subsets exercise different suites.
    CHECK(hyper.checks[0].name != para.checks[0].name);
}

TEST_CASE("csv and json writers") {
    auto cfg = base_cfg();
    cfg.lam_max = 0;
    cfg.grid.n_r = 2;
    const auto t = run::radial_table(cfg);

    std::ostringstream csv;
    run::write_table_csv(csv, t, run::meta_line(cfg, "radial-table"));
    const std::string text = csv.str();
    CHECK(text.rfind("# coulomb5 radial-table ", 0) == 0);
    CHECK(text.find("\nr,lambda,R,R_asymptotic,abs_diff,delta_lambda\n") !=
          std::string::npos);
    // meta + header + one line per row
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);

    std::ostringstream js;
    run::write_table_json(js, t, cfg, "radial-table");
    const auto parsed = nlohmann::json::parse(js.str());
    CHECK(parsed["meta"]["subcommand"] == "radial-table");
    CHECK(parsed["meta"]["a"] == 1.0);
    CHECK(parsed["columns"].size() == 6);
    CHECK(parsed["rows"].size() == 2);
    CHECK(parsed["rows"][0][0] == 1.0);

    auto vcfg = base_cfg();
    const auto rep = run::run_verify(vcfg);
    std::ostringstream rcsv;
    run::write_report_csv(rcsv, rep, run::meta_line(vcfg, "verify"));
    const std::string rtext = rcsv.str();
    CHECK(rtext.find("name,value,tolerance,status") != std::string::npos);
    CHECK(rtext.find(",pass") != std::string::npos);
    CHECK(rtext.find(",,info") != std::string::npos);

    std::ostringstream rjs;
    run::write_report_json(rjs, rep, vcfg);
    const auto rparsed = nlohmann::json::parse(rjs.str());
    CHECK(rparsed["overall_pass"] == true);
    CHECK(rparsed["checks"].size() == rep.checks.size());
    CHECK(rparsed["checks"][0].contains("max_residual"));
}

TEST_CASE("verify report is identical between serial and openmp modes") {
    auto cfg = base_cfg();
    cfg.mode = Mode::serial;
    const auto rs = run::run_verify(cfg);
    cfg.mode = Mode::openmp;
    const auto ro = run::run_verify(cfg);
    REQUIRE(rs.checks.size() == ro.checks.size());
    for (std::size_t i = 0; i < rs.checks.size(); ++i) {
        CHECK(rs.checks[i].max_residual == ro.checks[i].max_residual);
    }
}
