// skewcc: classify skew constacyclic codes over small finite fields.
//
// Subcommands: classes, equiv, witness, codes, mindist, isometry, sweep,
// field-info. Elements are entered and printed as packed integers
// (sum_i c_i p^i); --pretty renders them as powers of xi.
//
// Exit codes: 0 success (for equiv/witness/isometry: the pair is
// equivalent), 1 not equivalent, 2 usage or validation error, 3 enumeration
// budget exceeded.

#include <CLI11.hpp>
#include <iostream>

#include "skewcc/cli.hpp"

namespace {

void add_field_options(CLI::App* cmd, skewcc::RunConfig& cfg) {
    cmd->add_option("--field", cfg.field, "field designator p^r, e.g. 2^3")->required();
    cmd->add_option("--modulus", cfg.modulus,
                    "modulus as a base-p packed integer (default: smallest irreducible)");
    cmd->add_option("--s", cfg.s, "Frobenius exponent, sigma(a) = a^(p^s)");
    cmd->add_flag("--json", cfg.json_mode, "emit JSON instead of a table");
    cmd->add_flag("--pretty", cfg.pretty, "render elements as powers of xi in table mode");
}

void add_budget_options(CLI::App* cmd, skewcc::RunConfig& cfg) {
    cmd->add_option("--budget", cfg.codeword_budget,
                    "enumeration budget for codewords and divisor scans")
        ->check(CLI::PositiveNumber);
}

int emit(const skewcc::CommandResult& res, bool json_mode) {
    if (json_mode)
        std::cout << res.data.dump(2) << "\n";
    else
        std::cout << res.table;
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew constacyclic code laboratory"};
    app.require_subcommand(1);

    skewcc::RunConfig cfg;
    using Runner = skewcc::CommandResult (*)(const skewcc::RunConfig&);
    Runner runner = nullptr;

    CLI::App* classes = app.add_subcommand("classes", "count and list the equivalence classes of F_q*");
    add_field_options(classes, cfg);
    classes->add_option("--n", cfg.n, "code length")->required();
    classes->callback([&] { runner = skewcc::cmd_classes; });

    CLI::App* equiv = app.add_subcommand("equiv", "decide whether lambda and mu are equivalent");
    add_field_options(equiv, cfg);
    equiv->add_option("--n", cfg.n, "code length")->required();
    equiv->add_option("--lambda", cfg.lambda, "first constant (packed encoding)")->required();
    equiv->add_option("--mu", cfg.mu, "second constant (packed encoding)")->required();
    equiv->callback([&] { runner = skewcc::cmd_equiv; });

    CLI::App* witness = app.add_subcommand("witness", "find the smallest witness alpha with lambda N_n(alpha) = mu");
    add_field_options(witness, cfg);
    witness->add_option("--n", cfg.n, "code length")->required();
    witness->add_option("--lambda", cfg.lambda, "first constant (packed encoding)")->required();
    witness->add_option("--mu", cfg.mu, "second constant (packed encoding)")->required();
    witness->callback([&] { runner = skewcc::cmd_witness; });

    CLI::App* codes = app.add_subcommand("codes", "enumerate all codes of length n over the quotient");
    add_field_options(codes, cfg);
    add_budget_options(codes, cfg);
    codes->add_option("--n", cfg.n, "code length")->required();
    codes->add_option("--lambda", cfg.lambda, "shift constant (packed encoding)")->required();
    codes->callback([&] { runner = skewcc::cmd_codes; });

    CLI::App* mindist = app.add_subcommand("mindist", "minimum distance and weight distribution of one code");
    add_field_options(mindist, cfg);
    add_budget_options(mindist, cfg);
    mindist->add_option("--n", cfg.n, "code length")->required();
    mindist->add_option("--lambda", cfg.lambda, "shift constant (packed encoding)")->required();
    mindist->add_option("--g", cfg.g_csv, "generator, CSV of encodings lowest degree first")->required();
    mindist->callback([&] { runner = skewcc::cmd_mindist; });

    CLI::App* isometry = app.add_subcommand("isometry", "map a code over mu to its image over lambda");
    add_field_options(isometry, cfg);
    add_budget_options(isometry, cfg);
    isometry->add_option("--n", cfg.n, "code length")->required();
    isometry->add_option("--lambda", cfg.lambda, "target constant (packed encoding)")->required();
    isometry->add_option("--mu", cfg.mu, "source constant (packed encoding)")->required();
    isometry->add_option("--g", cfg.g_csv, "generator of the source code, CSV")->required();
    isometry->callback([&] { runner = skewcc::cmd_isometry; });

    CLI::App* sweep = app.add_subcommand("sweep", "class counts over a range of lengths");
    add_field_options(sweep, cfg);
    sweep->add_option("--n-from", cfg.n_from, "first length (default 1)");
    sweep->add_option("--n-to", cfg.n_to, "last length")->required();
    sweep->callback([&] { runner = skewcc::cmd_sweep; });

    CLI::App* field_info = app.add_subcommand("field-info", "modulus, primitive element and log table");
    add_field_options(field_info, cfg);
    field_info->callback([&] { runner = skewcc::cmd_field_info; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.divisor_budget = cfg.codeword_budget;
    try {
        return emit(runner(cfg), cfg.json_mode);
    } catch (const skewcc::EnumerationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const skewcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
