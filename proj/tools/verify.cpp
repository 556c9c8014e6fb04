#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "contactgeo/errors.hpp"
#include "contactgeo/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification suites for contact hypersurface geometry"};
    app.name("verify");
    app.set_help_flag("--help", "print usage"); // frees -h/--h for the stencil option

    std::string suite;
    std::string format = "json";
    contactgeo::SuiteParams params;

    std::string suites;
    for (const std::string& s : contactgeo::suite_names()) suites += (suites.empty() ? "" : "|") + s;

    app.add_option("suite", suite, "one of: " + suites)->required();
    app.add_option("--n", params.n, "ambient complex dimension");
    app.add_option("--r", params.r, "radius");
    app.add_option("--case", params.case_id, "dual-quadric case")->check(CLI::Range(1, 3));
    app.add_option("--h", params.h, "finite-difference stencil / ODE step");
    app.add_option("--grid", params.grid, "grid size or trial count");
    app.add_option("--seed", params.seed, "RNG seed (default 0)");
    app.add_option("--format", format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", params.tol, "override every report tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::vector<contactgeo::CheckReport> reports = contactgeo::run_suite(suite, params);
        if (format == "csv") std::cout << contactgeo::csv_header() << '\n';
        bool all_pass = true;
        for (const contactgeo::CheckReport& report : reports) {
            all_pass = all_pass && report.pass;
            if (format == "csv") {
                std::cout << contactgeo::to_csv_row(report) << '\n';
            } else {
                std::cout << nlohmann::json(report).dump() << '\n';
            }
        }
        return all_pass ? 0 : 1;
    } catch (const contactgeo::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const contactgeo::GeometryError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 3;
    }
}
