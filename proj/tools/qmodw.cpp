// qmodw: exact simulator and checker for Hamming-weight-mod-m query algorithms.

#include <iostream>

#include <CLI11.hpp>

#include "qmodw/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact simulation of quantum query algorithms for the Hamming weight modulo m"};
    app.require_subcommand(1);

    qmodw::RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Run the algorithm on one input and print a JSON report");
    run_cmd->add_option("--x", run.x, "Input bit string, x_1 first")->required();
    run_cmd->add_option("--m", run.m, "Modulus (2^a 3^b)")->required();
    run_cmd->add_flag("--trace", run.trace, "Attach the query transcript");

    qmodw::SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustively verify all inputs up to a length, CSV output");
    sweep_cmd->add_option("--n-max", sweep.n_max, "Largest input length")->required();
    sweep_cmd->add_option("--moduli", sweep.moduli, "Comma separated moduli")->delimiter(',')->required();
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (default: QMODW_THREADS or all cores)");

    qmodw::VerifyStatesOptions verify;
    auto* verify_cmd = app.add_subcommand("verify-states", "Recompute the mod-3 circuit states and diff against the fixture");
    verify_cmd->add_option("--format", verify.format, "table | json")->check(CLI::IsMember({"table", "json"}));
    verify_cmd->add_option("--fixture", verify.fixture_path, "Alternative fixture file (JSON)");

    qmodw::GramOptions gram;
    auto* gram_cmd = app.add_subcommand("gram", "Print the Gram matrix of the mod-3 final states");
    gram_cmd->add_flag("--closed-form", gram.closed_form, "Also check both closed-form expressions on all 64 pairs");
    gram_cmd->add_option("--format", gram.format, "grid | json")->check(CLI::IsMember({"grid", "json"}));

    qmodw::LowerBoundOptions lower;
    auto* lower_cmd = app.add_subcommand("lower-bound", "Zero-weight counting bound for MOD_m");
    lower_cmd->add_option("--n", lower.n, "Input length");
    lower_cmd->add_option("--m", lower.m, "Modulus");
    lower_cmd->add_flag("--sweep", lower.sweep, "Emit the table for all 2 <= m <= n <= n-max");
    lower_cmd->add_option("--n-max", lower.n_max, "Largest n for --sweep (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qmodw::kExitUsage;
    }

    if (run_cmd->parsed()) return qmodw::cmd_run(run, std::cout, std::cerr);
    if (sweep_cmd->parsed()) return qmodw::cmd_sweep(sweep, std::cout, std::cerr);
    if (verify_cmd->parsed()) return qmodw::cmd_verify_states(verify, std::cout, std::cerr);
    if (gram_cmd->parsed()) return qmodw::cmd_gram(gram, std::cout, std::cerr);
    if (lower_cmd->parsed()) return qmodw::cmd_lower_bound(lower, std::cout, std::cerr);
    return qmodw::kExitUsage;
}
