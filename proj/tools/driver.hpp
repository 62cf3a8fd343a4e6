#pragma once

#include <ostream>
#include <string>

#include "problem.hpp"
#include "ptel/telescope.hpp"

namespace ptel::cli {

struct Options {
    std::string format = "text";  // text | json
    bool verify = false;
    bool quiet = false;
    bool timings = false;
    int max_order = kDefaultMaxOrder;
    std::string input;  // telescope: input name, default first input
    std::string var;    // telescope: parameter name, default x_1
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs `command` (telescope, paratele, exists, ppv, or run for the file's
/// own task) and writes the report.  Library errors are reported on `err`
/// (and as JSON on `out` in json mode) and mapped to exit codes.
int run_command(const std::string& command, const Problem& pb, const Options& opt, std::ostream& out,
                std::ostream& err);

/// Loads `path` and runs the command, mapping load errors too.
int run_file(const std::string& command, const std::string& path, const Options& opt, std::ostream& out,
             std::ostream& err);

}  // namespace ptel::cli
