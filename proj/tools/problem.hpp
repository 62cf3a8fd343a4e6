#pragma once

// Line-oriented problem files:
//
//   vars: t, x1, x2
//   term h: dlog t = -1/(2*t)
//   let c = t/(x1+x2+t)
//   input f1 = c * h
//   input f2 = 1/x2
//   input f2 += 1 * e
//   task: paratele
//
// Omitted dlog entries are zero.  An input without "* TERM" lives over the
// trivial term; "+=" adds a further part.  Input i belongs to parameter x_i.
// "#" starts a comment.

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptel/hyperexp.hpp"
#include "ptel/text.hpp"
#include "ptel/variables.hpp"

namespace ptel::cli {

struct Input {
    std::string name;
    HElement value;
};

struct Task {
    std::string kind;  // telescope | paratele | exists | ppv
    std::vector<std::string> args;
};

struct Problem {
    Variables vars = Variables::standard(1);
    std::map<std::string, TermRef, std::less<>> terms;
    Bindings lets;
    std::vector<Input> inputs;
    std::optional<Task> task;

    const Input& input(std::string_view name) const;
};

/// Throws SyntaxError, UnknownVariable or InputError.
Problem load_problem(std::istream& in);
Problem load_problem_file(const std::string& path);

}  // namespace ptel::cli
