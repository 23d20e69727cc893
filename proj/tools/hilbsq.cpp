#include "hilbsq/commands.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>

using hilbsq::Report;
namespace cli = hilbsq::cli;

int main(int argc, char** argv) {
    CLI::App app{"Pell equations, K3 Picard lattices and involutions of Hilbert squares"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print the report as JSON");

    std::function<Report()> run;
    std::string a, b;

    auto* pell = app.add_subcommand("pell", "Solve x^2 - d y^2 = m");
    pell->add_option("d", a)->required();
    pell->add_option("m", b)->required();
    pell->callback([&] { run = [&] { return cli::cmd_pell(a, b); }; });

    auto* bcns = app.add_subcommand("bcns", "Automorphisms of S^[2] for Pic(S) = <2t>");
    bcns->add_option("t", a)->required();
    bcns->callback([&] { run = [&] { return cli::cmd_automorphism(a); }; });

    auto* family = app.add_subcommand("family", "Rows of the A or B family of t values");
    family->add_option("name", a)->required();
    family->add_option("bound", b)->required();
    family->callback([&] { run = [&] { return cli::cmd_family(a, b); }; });

    auto* beauville = app.add_subcommand("beauville", "Beauville involutions on S_n^[2]");
    beauville->add_option("n", a)->required();
    beauville->callback([&] { run = [&] { return cli::cmd_beauville(a); }; });

    auto* theorem2 = app.add_subcommand("theorem2", "Invariant lattice of the non-natural involution");
    theorem2->add_option("n", a)->required();
    theorem2->callback([&] { run = [&] { return cli::cmd_involution(a); }; });

    auto* info = app.add_subcommand("lattice-info", "Invariants of a named lattice or a JSON Gram file");
    info->add_option("lattice", a)->required();
    info->callback([&] { run = [&] { return cli::cmd_lattice_info(a); }; });

    auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
    verify->callback([&] { run = [] { return cli::cmd_verify_all(); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    }

    try {
        const Report report = run();
        if (json) {
            std::cout << hilbsq::Json(report).dump(2) << '\n';
        } else {
            std::cout << hilbsq::render_text(report);
        }
        return cli::exit_code(report);
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitCheckFailure;
    }
}
