// ptele: command-line front end for parallel telescoping.
//
//   ptele paratele problem.txt --verify --format json
//
// Exit status: 0 success, 1 no parallel telescoper exists, 2 input error,
// 3 internal error.

#include <CLI11.hpp>
#include <iostream>

#include "driver.hpp"

int main(int argc, char** argv) {
    using namespace ptel::cli;
    CLI::App app{"Parallel telescopers for hyperexponential functions"};
    app.require_subcommand(1);
    Options opt;
    std::string file;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "Problem file")->required();
        sub->add_flag("--verify", opt.verify, "Re-check every defining identity by direct arithmetic");
        sub->add_option("--max-order", opt.max_order, "Largest telescoper order searched")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--quiet", opt.quiet, "Print only the operator");
        sub->add_flag("--timings", opt.timings, "Report wall-clock timings");
    };
    std::vector<std::pair<std::string, CLI::App*>> subs;
    auto* tele = app.add_subcommand("telescope", "Minimal telescoper of one input with respect to one parameter");
    tele->add_option("--input", opt.input, "Input name (default: first input)");
    tele->add_option("--var", opt.var, "Parameter name (default: first parameter)");
    subs.emplace_back("telescope", tele);
    subs.emplace_back("paratele", app.add_subcommand("paratele", "Parallel telescoper of all inputs"));
    subs.emplace_back("exists", app.add_subcommand("exists", "Decide whether a parallel telescoper exists"));
    subs.emplace_back("ppv", app.add_subcommand("ppv", "Defining operator of the PPV group of D_i(Y) = f_i"));
    subs.emplace_back("run", app.add_subcommand("run", "Run the task named in the file"));
    for (auto& [name, sub] : subs) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    for (auto& [name, sub] : subs)
        if (sub->parsed()) return run_file(name, file, opt, std::cout, std::cerr);
    return kExitInput;
}
