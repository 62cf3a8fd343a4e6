#include "ptel/text.hpp"

#include <sstream>

#include "ptel/errors.hpp"
#include "ptel/expr_parser.hpp"
#include "ptel/hyperexp.hpp"
#include "ptel/ore.hpp"

namespace ptel {

namespace {

struct RatFunOps {
    using Value = RatFun;
    const Variables& vars;
    const Bindings& bindings;

    Value integer(const BigInt& n) { return RatFun(Rat(n)); }
    Value identifier(std::string_view name, int line, int column) {
        if (auto i = vars.index_of(name)) return RatFun::variable(*i);
        if (auto it = bindings.find(name); it != bindings.end()) return it->second;
        throw UnknownVariable(std::to_string(line) + ":" + std::to_string(column) + ": unknown variable '" +
                              std::string(name) + "'");
    }
    Value add(const Value& a, const Value& b, int, int) { return a + b; }
    Value sub(const Value& a, const Value& b, int, int) { return a - b; }
    Value mul(const Value& a, const Value& b, int, int) { return a * b; }
    Value div(const Value& a, const Value& b, int line, int column) {
        if (b.is_zero()) throw SyntaxError("division by zero", line, column);
        return a / b;
    }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, unsigned e, int, int) { return a.pow(int(e)); }
};

struct OreOps {
    using Value = OreOp;
    const Variables& vars;

    Value integer(const BigInt& n) { return OreOp(RatFun(Rat(n))); }
    Value identifier(std::string_view name, int line, int column) {
        if (name == "Dt") return OreOp::D();
        if (auto i = vars.index_of(name)) return OreOp(RatFun::variable(*i));
        throw UnknownVariable(std::to_string(line) + ":" + std::to_string(column) + ": unknown variable '" +
                              std::string(name) + "'");
    }
    Value add(const Value& a, const Value& b, int, int) { return a + b; }
    Value sub(const Value& a, const Value& b, int, int) { return a - b; }
    Value mul(const Value& a, const Value& b, int, int) { return a * b; }
    Value div(const Value& a, const Value& b, int line, int column) {
        if (b.order() != 0) throw SyntaxError("division by an operator or by zero", line, column);
        return a * OreOp(1 / b.coeff(0));
    }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, unsigned e, int, int) {
        OreOp r(1);
        for (unsigned i = 0; i < e; ++i) r = r * a;
        return r;
    }
};

// Sign-free rendering of a coefficient that is followed by "*symbol".
std::string render_factor(const RatFun& c, const Variables& vars) {
    std::string s = render(c, vars);
    if (c.is_polynomial() && c.num().size() > 1) s = "(" + s + ")";
    return s;
}

bool negative(const RatFun& c) { return c.num().leading_coefficient() < 0; }

std::string render_monomial(const Monomial& m, const Variables& vars) {
    std::string s;
    for (int i = 0; i < vars.count(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.name(i);
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

bool single_variable_power(const MPoly& p) {
    if (p.size() != 1 || p.leading().coeff != 1) return false;
    int vars = 0;
    for (auto e : p.leading().mono.exps) vars += e != 0;
    return vars == 1;
}

}  // namespace

RatFun parse_ratfun(std::string_view text, const Variables& vars, const Bindings& bindings, int line, int column) {
    RatFunOps ops{vars, bindings};
    return ExprParser<RatFunOps>(ops, text, line, column).parse();
}

std::string render(const MPoly& p, const Variables& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono = render_monomial(t.mono, vars);
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
    }
    return out;
}

std::string render(const RatFun& f, const Variables& vars) {
    if (f.is_polynomial()) return render(f.num(), vars);
    std::string num = render(f.num(), vars);
    if (f.num().size() > 1) num = "(" + num + ")";
    std::string den = render(f.den(), vars);
    if (!single_variable_power(f.den())) den = "(" + den + ")";
    return num + "/" + den;
}

OreOp parse_operator(std::string_view text, const Variables& vars, int line, int column) {
    OreOps ops{vars};
    return ExprParser<OreOps>(ops, text, line, column).parse();
}

std::string render(const OreOp& op, const Variables& vars) {
    if (op.is_zero()) return "0";
    std::string out;
    for (int i = op.order(); i >= 0; --i) {
        RatFun c = op.coeff(i);
        if (c.is_zero()) continue;
        bool neg = negative(c);
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string d = i == 0 ? "" : i == 1 ? "Dt" : "Dt^" + std::to_string(i);
        if (d.empty())
            out += neg ? render_factor(c, vars) : render(c, vars);
        else if (c.is_one())
            out += d;
        else
            out += render_factor(c, vars) + "*" + d;
    }
    return out;
}

std::string render(const HElement& e, const Variables& vars) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& p : e.parts()) {
        if (!out.empty()) out += " + ";
        out += "(" + render(p.coeff, vars) + ")*" + p.term->label();
    }
    return out;
}

}  // namespace ptel
