#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    using namespace collatzbits::cli;

    CLI::App app{"Bit-level reduced Collatz stepping, length prediction and sieving"};
    app.require_subcommand(1);

    std::string step_value;
    bool step_trace = false;
    auto* step = app.add_subcommand("step", "One reduced Collatz step of an odd value");
    step->add_option("value", step_value, "odd value, decimal or 0b-prefixed binary")->required();
    step->add_flag("--trace", step_trace, "print the automaton transcript");

    TrajOptions traj_opts;
    auto* traj = app.add_subcommand("traj", "Odd-only trajectory down to 1");
    traj->add_option("start", traj_opts.start, "odd start value")->required();
    traj->add_flag("--accel", traj_opts.accel, "jump whole ascending runs");
    traj->add_flag("--matrix", traj_opts.matrix, "fixed-column bit matrix, lowest zero marked *0");
    traj->add_option("--max-steps", traj_opts.max_steps, "step limit")->capture_default_str();
    traj->add_option("--format", traj_opts.format, "table|csv|jsonl")->capture_default_str();

    PredictOptions predict_opts;
    auto* predict = app.add_subcommand("predict", "Bit-length change predictions vs the actual step");
    predict->add_option("value", predict_opts.value, "odd value");
    predict->add_option("--range", predict_opts.range, "lo..hi");
    predict->add_flag("--all", predict_opts.all, "with --range, print every row");
    predict->add_option("--workers", predict_opts.workers, "worker threads")->capture_default_str();
    predict->add_option("--format", predict_opts.format, "table|csv|jsonl")->capture_default_str();

    VerifyCliOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run every per-value check over an odd range");
    verify->add_option("--range", verify_opts.range, "lo..hi")->required();
    verify->add_option("--checkpoint", verify_opts.checkpoint, "checkpoint file (resumed if compatible)");
    verify->add_option("--workers", verify_opts.workers, "worker threads")->capture_default_str();
    verify->add_option("--batch", verify_opts.batch, "values per checkpoint flush")->capture_default_str();
    verify->add_option("--max-batches", verify_opts.max_batches, "stop after this many batches");

    SieveOptions sieve_opts;
    auto* sieve = app.add_subcommand("sieve", "Minimal-counterexample candidates up to a limit");
    sieve->add_option("limit", sieve_opts.limit, "upper limit")->required();
    sieve->add_flag("--certify", sieve_opts.certify, "check each candidate drops below itself");
    sieve->add_flag("--explain", sieve_opts.explain, "list rejected values with the rules they violate");
    sieve->add_option("--step-cap", sieve_opts.step_cap, "step cap for --certify")->capture_default_str();

    BenchOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "Plain vs accelerated trajectories over an odd range");
    bench->add_option("--range", bench_opts.range, "lo..hi")->required();
    bench->add_option("--reps", bench_opts.reps, "repetitions")->capture_default_str();
    bench->add_option("--max-steps", bench_opts.max_steps, "step limit")->capture_default_str();

    auto* examples = app.add_subcommand("examples", "Reproduce the worked example tables A-D");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*step) return cmd_step(step_value, step_trace, std::cout);
        if (*traj) return cmd_traj(traj_opts, std::cout, std::cerr);
        if (*predict) return cmd_predict(predict_opts, std::cout, std::cerr);
        if (*verify) return cmd_verify(verify_opts, std::cout, std::cerr);
        if (*sieve) return cmd_sieve(sieve_opts, std::cout);
        if (*bench) return cmd_bench(bench_opts, std::cout);
        if (*examples) return cmd_examples(std::cout);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
