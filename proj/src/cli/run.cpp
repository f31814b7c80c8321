#include "casson/cli/run.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "casson/cli/commands.hpp"
#include "casson/cli/sweep.hpp"
#include "casson/errors.hpp"

namespace casson::cli {

namespace {

std::string read_input(const std::string& path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorCode::ParseError, "cannot read " + path);
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Casson-type invariants", "casson"};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();

    std::string input;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name, "Compute the " + name + " report");
        sub->add_option("--input", input, "Input JSON file ('-' for stdin)")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
    }
    std::string family, range;
    auto* sweep = app.add_subcommand("sweep", "Run a congruence sweep over a family");
    sweep->add_option("--family", family, "Family name")->required()->check(CLI::IsMember(family_names()));
    sweep->add_option("--range", range, "Range spec key=v1,v2,a..b;...");
    sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    const bool json = format == "json";

    try {
        if (sweep->parsed()) {
            const auto table = run_sweep(family, range);
            if (json)
                out << to_json(table).dump(2) << "\n";
            else
                out << render_human(table);
            return table.failures() ? kExitCongruenceFailure : kExitOk;
        }
        const std::string command = app.get_subcommands().front()->get_name();
        const auto result = run_command(command, read_input(input));
        if (json)
            out << to_json(result.report).dump(2) << "\n";
        else
            out << render_human(result.report);
        if (result.input_rejected)
            return kExitInputError;
        return result.report.all_flags_hold() ? kExitOk : kExitCongruenceFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace casson::cli
