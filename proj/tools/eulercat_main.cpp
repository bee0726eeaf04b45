// Command line front end. All real logic lives in the library's cmd_*
// functions so the tests can drive them without spawning processes.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "eulercat/cli.hpp"

namespace {

std::optional<std::string> opt_of(const CLI::App* cmd, const std::string& flag,
                                  const std::string& value) {
    if (cmd->count(flag) > 0) return value;
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler characteristics of finite categories"};
    app.require_subcommand(1);

    std::string report_path;
    std::string report_format;
    std::size_t report_terms = 8;
    auto* report = app.add_subcommand("report", "Print the full invariant report for one input");
    report->add_option("-i,--input", report_path, "matrix or category file")->required();
    report->add_option("--format", report_format, "override format detection")
        ->check(CLI::IsMember({"matrix", "category"}));
    report->add_option("--terms", report_terms, "series coefficients to include (default 8)")
        ->check(CLI::PositiveNumber);

    std::string series_path;
    std::string series_format;
    std::size_t series_count = 8;
    auto* series = app.add_subcommand("series", "Print leading power-series coefficients");
    series->add_option("-i,--input", series_path, "matrix or category file")->required();
    series->add_option("--format", series_format, "override format detection")
        ->check(CLI::IsMember({"matrix", "category"}));
    series->add_option("-n,--terms", series_count, "number of coefficients (default 8)")
        ->check(CLI::PositiveNumber);

    std::string verify_path;
    std::string verify_format;
    auto* verify = app.add_subcommand("verify", "Run the cross-checks and report pass/fail");
    verify->add_option("-i,--input", verify_path, "matrix or category file")->required();
    verify->add_option("--format", verify_format, "override format detection")
        ->check(CLI::IsMember({"matrix", "category"}));

    std::string examples_filter;
    auto* examples = app.add_subcommand("examples", "Recompute the built-in example catalogue");
    examples->add_option("--filter", examples_filter, "only entries whose name or group matches");

    std::size_t gen_dim = 0;
    std::uint64_t gen_max_entry = 3;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a random category-style count matrix");
    gen->add_option("-m,--objects", gen_dim, "matrix dimension")->required();
    gen->add_option("--max-entry", gen_max_entry, "largest hom-set size (default 3, minimum 2)");
    gen->add_option("--seed", gen_seed, "RNG seed (default 0)");
    gen->add_option("-o,--output", gen_out, "write to this file instead of stdout");

    std::string check_path;
    std::uint64_t check_budget = 10;
    std::string check_witness;
    auto* check = app.add_subcommand("check-matrix",
                                     "Decide whether some finite category has this count matrix");
    check->add_option("-i,--input", check_path, "matrix file")->required();
    check->add_option("--budget", check_budget, "largest arrow total searched (default 10)");
    check->add_option("--emit-witness", check_witness, "write a witness category here (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; genuine usage errors are input errors.
        const int rc = app.exit(e);
        return rc == 0 ? eulercat::kExitOk : eulercat::kExitInputError;
    }

    try {
        if (report->parsed()) {
            return eulercat::cmd_report(report_path, opt_of(report, "--format", report_format),
                                        report_terms, std::cout, std::cerr);
        }
        if (series->parsed()) {
            return eulercat::cmd_series(series_path, opt_of(series, "--format", series_format),
                                        series_count, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            return eulercat::cmd_verify(verify_path, opt_of(verify, "--format", verify_format),
                                        std::cout, std::cerr);
        }
        if (examples->parsed()) {
            return eulercat::cmd_examples(examples_filter, std::cout);
        }
        if (gen->parsed()) {
            return eulercat::cmd_gen(gen_dim, gen_max_entry, gen_seed,
                                     opt_of(gen, "--output", gen_out), std::cout, std::cerr);
        }
        if (check->parsed()) {
            return eulercat::cmd_check_matrix(check_path, check_budget,
                                              opt_of(check, "--emit-witness", check_witness),
                                              std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return eulercat::kExitCheckFailed;
    }
    return eulercat::kExitInputError;
}
