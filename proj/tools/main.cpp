#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modinv/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"modular invariant evaluator and closed-form inverter"};
    app.require_subcommand(1);

    modinv::CliConfig cfg;
    app.add_option("--digits", cfg.digits, "significant digits in printed values")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "verification tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--klein", cfg.klein, "use the Klein normalization (j(i) = 1728)");

    std::string tau_literal;
    auto* jeval = app.add_subcommand("jeval", "evaluate j at a point of the upper half-plane");
    jeval->add_option("tau", tau_literal, "complex literal, e.g. 0.5+2i")->required();

    std::string x_literal;
    auto* jinv = app.add_subcommand("jinv", "invert j: find tau with j(tau) = x");
    jinv->add_option("x", x_literal, "complex literal")->required();

    std::string json_path;
    auto* verify = app.add_subcommand("verify", "check the built-in table of special values");
    verify->add_option("--json", json_path, "write a JSON report to this path");

    long samples = 0;
    auto* roundtrip = app.add_subcommand("roundtrip", "random invert-then-evaluate sweep");
    roundtrip->add_option("--samples", samples, "number of random samples")
        ->required()
        ->check(CLI::PositiveNumber);
    roundtrip->add_option("--seed", cfg.seed, "sweep seed")->capture_default_str();

    std::string out_path;
    auto* figure = app.add_subcommand("figure", "write the fundamental-domain figure as SVG");
    figure->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return modinv::kExitUsage;
    }

    if (jeval->parsed()) return modinv::cmd_jeval(tau_literal, cfg, std::cout, std::cerr);
    if (jinv->parsed()) return modinv::cmd_jinv(x_literal, cfg, std::cout, std::cerr);
    if (verify->parsed()) return modinv::cmd_verify(cfg, json_path, std::cout, std::cerr);
    if (roundtrip->parsed()) return modinv::cmd_roundtrip(samples, cfg, std::cout, std::cerr);
    if (figure->parsed()) return modinv::cmd_figure(out_path, cfg, std::cout, std::cerr);
    return modinv::kExitUsage;
}
