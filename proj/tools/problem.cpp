#include "problem.hpp"

#include <cctype>
#include <fstream>

#include "ptel/errors.hpp"

namespace ptel::cli {

namespace {

struct Piece {
    std::string text;
    int column;  // 1-based column of text[0]
};

bool is_ident(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

Piece trim(const Piece& p) {
    std::size_t b = 0, e = p.text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(p.text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1]))) --e;
    return {p.text.substr(b, e - b), p.column + int(b)};
}

Piece slice(const Piece& p, std::size_t from, std::size_t to = std::string::npos) {
    return trim({p.text.substr(from, to == std::string::npos ? std::string::npos : to - from), p.column + int(from)});
}

// Splits at `sep` outside parentheses.
std::vector<Piece> split_top(const Piece& p, char sep) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < p.text.size(); ++i) {
        char c = p.text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(slice(p, start, i));
            start = i + 1;
        }
    }
    out.push_back(slice(p, start));
    return out;
}

class Loader {
public:
    Problem run(std::istream& in) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            Piece p = trim({raw, 1});
            if (p.text.empty()) continue;
            statement(p);
        }
        if (!have_vars_) fail("missing vars: line", 1);
        return std::move(pb_);
    }

private:
    [[noreturn]] void fail(const std::string& msg, int column) const { throw SyntaxError(msg, line_, column); }

    void statement(const Piece& p) {
        auto colon = p.text.find(':');
        auto word_end = p.text.find_first_of(" :=+");
        std::string head = p.text.substr(0, word_end);
        if (head == "vars" && colon != std::string::npos) return vars(slice(p, colon + 1));
        if (!have_vars_) fail("vars: must come first", p.column);
        if (head == "term") return term(slice(p, 4));
        if (head == "let") return let(slice(p, 3));
        if (head == "input") return input(slice(p, 5));
        if (head == "task" && colon != std::string::npos) return task(slice(p, colon + 1));
        fail("unknown statement '" + head + "'", p.column);
    }

    void vars(const Piece& p) {
        if (have_vars_) fail("vars: given twice", p.column);
        std::vector<std::string> names;
        for (const auto& n : split_top(p, ',')) {
            if (!is_ident(n.text)) fail("bad variable name '" + n.text + "'", n.column);
            names.push_back(n.text);
        }
        pb_.vars = Variables(names);
        have_vars_ = true;
    }

    void check_fresh(const Piece& name) const {
        if (!is_ident(name.text)) fail("bad name '" + name.text + "'", name.column);
        if (pb_.vars.index_of(name.text) || name.text == "Dt") fail("'" + name.text + "' is reserved", name.column);
        if (pb_.terms.count(name.text) || pb_.lets.count(name.text))
            fail("'" + name.text + "' is already defined", name.column);
    }

    RatFun expr(const Piece& p) const {
        if (p.text.empty()) fail("missing expression", p.column);
        return parse_ratfun(p.text, pb_.vars, pb_.lets, line_, p.column);
    }

    void term(const Piece& p) {
        auto colon = p.text.find(':');
        if (colon == std::string::npos) fail("expected 'term NAME: dlog VAR = EXPR, ...'", p.column);
        Piece name = slice(p, 0, colon);
        check_fresh(name);
        std::vector<RatFun> logd(std::size_t(pb_.vars.count()));
        std::vector<bool> seen(logd.size());
        Piece body = slice(p, colon + 1);
        if (!body.text.empty())
            for (const auto& entry : split_top(body, ',')) {
                auto eq = entry.text.find('=');
                if (entry.text.rfind("dlog", 0) != 0 || eq == std::string::npos)
                    fail("expected 'dlog VAR = EXPR'", entry.column);
                Piece var = slice(entry, 4, eq);
                auto v = pb_.vars.index_of(var.text);
                if (!v) throw UnknownVariable(std::to_string(line_) + ":" + std::to_string(var.column) +
                                              ": unknown variable '" + var.text + "'");
                if (seen[std::size_t(*v)]) fail("dlog " + var.text + " given twice", var.column);
                seen[std::size_t(*v)] = true;
                logd[std::size_t(*v)] = expr(slice(entry, eq + 1));
            }
        pb_.terms.emplace(name.text, make_term(name.text, std::move(logd)));
    }

    void let(const Piece& p) {
        auto eq = p.text.find('=');
        if (eq == std::string::npos) fail("expected 'let NAME = EXPR'", p.column);
        Piece name = slice(p, 0, eq);
        check_fresh(name);
        pb_.lets.emplace(name.text, expr(slice(p, eq + 1)));
    }

    void input(const Piece& p) {
        auto eq = p.text.find('=');
        if (eq == std::string::npos) fail("expected 'input NAME = EXPR [* TERM]'", p.column);
        bool append = eq > 0 && p.text[eq - 1] == '+';
        Piece name = slice(p, 0, append ? eq - 1 : eq);
        Piece rhs = slice(p, eq + 1);
        HElement value = part(rhs);
        for (auto& in : pb_.inputs)
            if (in.name == name.text) {
                if (!append) fail("input '" + name.text + "' already defined; use += to add a part", name.column);
                in.value = in.value + value;
                return;
            }
        if (append) fail("input '" + name.text + "' is not defined yet", name.column);
        if (!is_ident(name.text)) fail("bad name '" + name.text + "'", name.column);
        if (int(pb_.inputs.size()) >= pb_.vars.n()) fail("more inputs than parameters", name.column);
        pb_.inputs.push_back({name.text, value});
    }

    HElement part(const Piece& rhs) {
        auto factors = split_top(rhs, '*');
        if (factors.size() > 1) {
            const Piece& last = factors.back();
            if (auto it = pb_.terms.find(last.text); it != pb_.terms.end()) {
                auto star = rhs.text.size() - last.text.size();
                while (star > 0 && rhs.text[star - 1] != '*') --star;
                return HElement(expr(slice(rhs, 0, star - 1)), it->second);
            }
        }
        if (auto it = pb_.terms.find(rhs.text); it != pb_.terms.end()) return HElement(RatFun(1), it->second);
        if (!trivial_) trivial_ = trivial_term(pb_.vars.count());
        return HElement(expr(rhs), trivial_);
    }

    void task(const Piece& p) {
        if (pb_.task) fail("task: given twice", p.column);
        std::vector<std::string> words;
        std::string w;
        for (char c : p.text + " ") {
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (!w.empty()) words.push_back(w);
                w.clear();
            } else {
                w += c;
            }
        }
        if (words.empty()) fail("empty task", p.column);
        const std::string& kind = words[0];
        if (kind != "telescope" && kind != "paratele" && kind != "exists" && kind != "ppv")
            fail("unknown task '" + kind + "'", p.column);
        pb_.task = Task{kind, {words.begin() + 1, words.end()}};
    }

    Problem pb_;
    TermRef trivial_;
    bool have_vars_ = false;
    int line_ = 0;
};

}  // namespace

const Input& Problem::input(std::string_view name) const {
    for (const auto& in : inputs)
        if (in.name == name) return in;
    throw InputError("unknown input '" + std::string(name) + "'");
}

Problem load_problem(std::istream& in) { return Loader().run(in); }

Problem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return load_problem(in);
}

}  // namespace ptel::cli
