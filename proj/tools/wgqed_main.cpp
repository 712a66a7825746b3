// wgqed: spectra, spectral features, emitter counting, separation/rate
// inversion, and strain/temperature sensing for emitter chains coupled to a
// 1D waveguide.
//
//   wgqed <command> --config <file> [--out <file>] [--grid-points N] [--seed N]
//
// Exit codes: 0 success, 2 validation error, 3 numerical error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wgqed/commands.hpp"

namespace {

struct Args {
    std::string config_path;
    std::string out_path;
    std::size_t grid_points = 0;
    long seed = 0;  // reserved; every algorithm is deterministic
};

int run(const std::string& command, const Args& args) {
    using namespace wgqed;
    const Command cmd = parse_command(command);
    const ScenarioConfig config = parse_config_file(args.config_path);
    RunOptions options;
    if (args.grid_points > 0) options.grid_points = args.grid_points;

    const RunOutput result = run_command(cmd, config, options);
    for (const auto& msg : result.diagnostics) std::cerr << msg << "\n";
    if (!args.out_path.empty())
        emit_plot_data(result.table, args.out_path, command, config.config_hash);
    result.table.write(std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"waveguide-QED spectroscopy toolkit"};
    app.require_subcommand(1);

    Args args;
    std::vector<CLI::App*> subs;
    for (const char* name : {"spectrum", "features", "count", "invert", "sense"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", args.config_path, "scenario config file (JSON)")
            ->required();
        sub->add_option("--out", args.out_path, "also write the table to this file");
        sub->add_option("--grid-points", args.grid_points,
                        "override the detuning grid density");
        sub->add_option("--seed", args.seed,
                        "reserved, unused (all algorithms deterministic)");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), args);
    } catch (const wgqed::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wgqed::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
