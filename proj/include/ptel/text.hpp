#pragma once

// Text rendering and parsing of rational functions, operators and
// hyperexponential elements.  Rendering is deterministic and parse(render(v))
// reproduces v exactly.  Operators use the symbol Dt for d/dt, e.g.
// "8*t^3*Dt^3 - 12*t^2*Dt^2 + 18*t*Dt - 15".

#include <map>
#include <string>
#include <string_view>

#include "ptel/ratfun.hpp"
#include "ptel/variables.hpp"

namespace ptel {

class OreOp;
class HElement;

/// Named rational-function macros usable inside expressions.
using Bindings = std::map<std::string, RatFun, std::less<>>;

/// Throws SyntaxError (with line/column) or UnknownVariable.
RatFun parse_ratfun(std::string_view text, const Variables& vars, const Bindings& bindings = {}, int line = 1,
                    int column = 1);
/// Operator expressions: rational-function expressions plus the symbol Dt;
/// products are operator products, so "Dt*t" is t*Dt + 1.
OreOp parse_operator(std::string_view text, const Variables& vars, int line = 1, int column = 1);

std::string render(const MPoly& p, const Variables& vars);
std::string render(const RatFun& f, const Variables& vars);
std::string render(const OreOp& op, const Variables& vars);
/// Parts joined as "(coeff)*label + ..."; the zero element renders as "0".
std::string render(const HElement& e, const Variables& vars);

}  // namespace ptel
