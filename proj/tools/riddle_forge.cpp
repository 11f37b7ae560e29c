#include <iostream>

#include <CLI11.hpp>

#include "riddle/cli.hpp"
#include "riddle/errors.hpp"
#include "riddle/weighing.hpp"

int main(int argc, char** argv) {
    using namespace riddle;

    CLI::App app{"Closed-form puzzle solver with brute-force verification"};
    app.require_subcommand(1);

    cli::SolveOptions solve_opts;
    std::vector<std::string> paths;
    std::string format = "text";
    std::string out_path;
    auto* solve = app.add_subcommand("solve", "Solve every puzzle in the given files");
    solve->add_option("files", paths, "Puzzle files")->required();
    solve->add_flag("--check", solve_opts.check, "Run the independent oracle next to each formula");
    solve->add_flag("--explain", solve_opts.explain, "Print the formula substitution step by step");
    solve->add_flag("--ceil-subjects", solve_opts.ceil_subjects, "Round subject counts up to whole numbers");
    solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    solve->add_option("--out", out_path, "Write the output to a file instead of stdout");

    cli::SweepRequest sweep_req;
    auto* sweep = app.add_subcommand("sweep", "Compare formulas against oracles over a range of instances");
    sweep->require_subcommand(1);
    auto* sw_weigh = sweep->add_subcommand("weighing", "Weighing formula vs minimax, N = 2..max");
    sw_weigh->add_option("--max", sweep_req.max_objects, "Largest object count (at most 6561)");
    auto* sw_pigeon = sweep->add_subcommand("pigeonhole", "Draw formula vs adversary on small drawers");
    sw_pigeon->add_option("--colors", sweep_req.max_colors, "Largest number of colors (at most 4)");
    sw_pigeon->add_option("--max-count", sweep_req.max_count, "Largest per-color count (at most 6)");
    sw_pigeon->add_option("--max-required", sweep_req.max_required, "Largest required run (at most 4)");
    auto* sw_transfer = sweep->add_subcommand("transfer", "Transfer formula survey against exact enumeration");
    sw_transfer->add_option("--max-n", sweep_req.max_n, "Largest size of container A (at most 8)");
    sw_transfer->add_option("--max-d", sweep_req.max_d, "Largest size of container B (at most 8)");
    std::string report_path;
    sw_transfer->add_option("--report", report_path, "Write the survey CSV here");

    std::int64_t objects = 1;
    std::string tree_format = "text";
    auto* strategy = app.add_subcommand("strategy", "Print the weighing decision tree for N objects");
    strategy->add_option("--objects", objects, "Number of objects")->required();
    strategy->add_option("--format", tree_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            solve_opts.format = format == "json" ? cli::OutputFormat::json : cli::OutputFormat::text;
            if (!out_path.empty())
                solve_opts.out_path = out_path;
            return cli::cmd_solve(paths, solve_opts, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            if (sw_pigeon->parsed())
                sweep_req.kind = cli::SweepKind::pigeonhole;
            else if (sw_transfer->parsed())
                sweep_req.kind = cli::SweepKind::transfer;
            if (!report_path.empty())
                sweep_req.report_path = report_path;
            return cli::cmd_sweep(sweep_req, std::cout, std::cerr);
        }
        const StrategyPtr tree = build_strategy(WeighingInstance(objects));
        std::cout << (tree_format == "json" ? cli::strategy_to_json(*tree) : strategy_to_text(*tree));
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
