#include "driver.hpp"

#include <chrono>
#include <functional>
#include <json.hpp>

#include "ptel/errors.hpp"
#include "ptel/paratele.hpp"
#include "ptel/ppv.hpp"

namespace ptel::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Report {
    explicit Report(std::string t = {}) : task(std::move(t)) {}

    std::string task;
    std::optional<OreOp> op;
    std::optional<bool> minimal;
    std::optional<HElement> certificate;
    std::vector<std::pair<std::string, std::string>> extra;  // e.g. group, monic
    std::optional<bool> verified;
    std::vector<std::pair<std::string, double>> timings;     // milliseconds
};

class VerificationFailed : public Error {
public:
    explicit VerificationFailed(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

template <class F>
auto timed(Report& rep, const char* phase, F&& f) {
    auto start = Clock::now();
    auto finish = [&] {
        rep.timings.emplace_back(phase, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
    };
    if constexpr (std::is_void_v<decltype(f())>) {
        f();
        finish();
    } else {
        auto r = f();
        finish();
        return r;
    }
}

void verify(Report& rep, bool ok) {
    if (!ok) throw VerificationFailed("verification failed: defining identity does not hold");
    rep.verified = true;
}

std::vector<HElement> all_inputs(const Problem& pb) {
    if (pb.inputs.empty()) throw InputError("no inputs given");
    std::vector<HElement> f;
    for (const auto& in : pb.inputs) f.push_back(in.value);
    return f;
}

Report do_telescope(const Problem& pb, const Options& opt, const std::vector<std::string>& args) {
    std::string input_name = !opt.input.empty() ? opt.input : args.size() > 0 ? args[0] : "";
    std::string var_name = !opt.var.empty() ? opt.var : args.size() > 1 ? args[1] : "";
    if (pb.inputs.empty()) throw InputError("no inputs given");
    const Input& in = input_name.empty() ? pb.inputs.front() : pb.input(input_name);
    int z = 1;
    if (!var_name.empty()) {
        auto v = pb.vars.index_of(var_name);
        if (!v || *v == 0) throw UnknownVariable("unknown parameter '" + var_name + "'");
        z = *v;
    }
    Report rep("telescope");
    TelescopeResult r = timed(rep, "compute", [&] { return min_telescoper(in.value, z, opt.max_order); });
    rep.op = r.l;
    rep.minimal = true;
    rep.certificate = r.g;
    if (opt.verify) timed(rep, "verify", [&] { verify(rep, verify_telescoper(in.value, z, r)); });
    return rep;
}

Report do_paratele(const Problem& pb, const Options& opt) {
    auto f = all_inputs(pb);
    Report rep("paratele");
    auto r = timed(rep, "compute", [&] { return paratele_general(f, opt.max_order); });
    rep.op = r.l;
    rep.minimal = r.minimal;
    rep.certificate = r.g;
    if (opt.verify) timed(rep, "verify", [&] { verify(rep, verify_parallel(f, r)); });
    return rep;
}

Report do_exists(const Problem& pb, const Options& opt) {
    auto f = all_inputs(pb);
    Report rep("exists");
    auto p = timed(rep, "compute", [&] { return existence_check(f); });
    if (!p) throw NoParallelTelescoperExists("no parallel telescoper exists");
    rep.op = *p;
    rep.extra.emplace_back("exists", "true");
    if (opt.verify)
        timed(rep, "verify", [&] {
            bool ok = !p->is_zero() && p->in_kt();
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i + 1; j < f.size(); ++j)
                    ok = ok && op_apply(*p, d_apply(f[j], int(i) + 1) - d_apply(f[i], int(j) + 1)).is_zero();
            verify(rep, ok);
        });
    return rep;
}

Report do_ppv(const Problem& pb, const Options& opt) {
    std::vector<RatFun> f;
    for (const auto& in : pb.inputs) {
        if (in.value.is_zero()) {
            f.emplace_back();
            continue;
        }
        if (in.value.parts().size() != 1 || !in.value.parts().front().term->is_trivial())
            throw InputError("ppv inputs must be rational functions");
        f.push_back(in.value.parts().front().coeff);
    }
    Report rep("ppv");
    auto r = timed(rep, "compute", [&] { return ppv_defining_operator(f, pb.vars, opt.max_order); });
    rep.op = r.l;
    rep.minimal = true;
    rep.certificate = HElement(r.g, trivial_term(pb.vars.count()));
    rep.extra.emplace_back("monic", render(r.monic, pb.vars));
    rep.extra.emplace_back("group", r.group_description);
    if (opt.verify)
        timed(rep, "verify", [&] {
            bool ok = r.l.in_kt();
            for (std::size_t i = 0; i < f.size(); ++i) {
                RatFun lhs;
                RatFun d = f[i];
                for (int k = 0; k <= r.l.order(); ++k) {
                    lhs += r.l.coeff(k) * d;
                    d = derive(d, 0);
                }
                ok = ok && lhs == derive(r.g, int(i) + 1);
            }
            verify(rep, ok);
        });
    return rep;
}

Json certificate_json(const HElement& g, const Variables& vars) {
    Json arr = Json::array();
    for (const auto& part : g.parts()) arr.push_back({{"coeff", render(part.coeff, vars)}, {"term", part.term->label()}});
    return arr;
}

void emit(const Report& rep, const Problem& pb, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        Json j;
        j["task"] = rep.task;
        if (rep.op) {
            j["operator"] = render(*rep.op, pb.vars);
            j["order"] = rep.op->order();
        }
        if (rep.certificate) j["certificate"] = certificate_json(*rep.certificate, pb.vars);
        if (rep.minimal) j["minimal"] = *rep.minimal;
        for (const auto& [k, v] : rep.extra) {
            if (v == "true")
                j[k] = true;
            else
                j[k] = v;
        }
        if (rep.verified) j["verified"] = *rep.verified;
        if (opt.timings) {
            Json t = Json::object();
            for (const auto& [k, v] : rep.timings) t[k + "_ms"] = v;
            j["timings"] = t;
        }
        out << j.dump(2) << '\n';
        return;
    }
    if (opt.quiet) {
        if (rep.op) out << render(*rep.op, pb.vars) << '\n';
        return;
    }
    out << "task: " << rep.task << '\n';
    if (rep.op) {
        out << "operator: " << render(*rep.op, pb.vars) << '\n';
        out << "order: " << rep.op->order() << '\n';
    }
    if (rep.minimal) out << "minimal: " << (*rep.minimal ? "true" : "false") << '\n';
    for (const auto& [k, v] : rep.extra) out << k << ": " << v << '\n';
    if (rep.certificate) out << "certificate: " << render(*rep.certificate, pb.vars) << '\n';
    if (rep.verified) out << "verified: yes\n";
    if (opt.timings)
        for (const auto& [k, v] : rep.timings) out << "time " << k << ": " << v << " ms\n";
}

int report_error(const std::string& msg, int code, const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.format == "json") {
        Json j;
        j["error"] = msg;
        j["exit"] = code;
        out << j.dump(2) << '\n';
    } else if (code == kExitNegative) {
        out << msg << '\n';
    }
    if (code != kExitNegative || opt.format == "json") err << "error: " << msg << '\n';
    return code;
}

int guarded(const Options& opt, std::ostream& out, std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const Error& e) {
        return report_error(e.what(), int(e.kind()), opt, out, err);
    } catch (const std::exception& e) {
        return report_error(std::string("internal error: ") + e.what(), kExitInternal, opt, out, err);
    }
}

}  // namespace

int run_command(const std::string& command, const Problem& pb, const Options& opt, std::ostream& out,
                std::ostream& err) {
    return guarded(opt, out, err, [&] {
        std::string kind = command;
        std::vector<std::string> args;
        if (kind == "run") {
            if (!pb.task) throw InputError("file has no task: line");
            kind = pb.task->kind;
            args = pb.task->args;
        } else if (pb.task && pb.task->kind == kind) {
            args = pb.task->args;
        }
        Report rep;
        if (kind == "telescope")
            rep = do_telescope(pb, opt, args);
        else if (kind == "paratele")
            rep = do_paratele(pb, opt);
        else if (kind == "exists")
            rep = do_exists(pb, opt);
        else if (kind == "ppv")
            rep = do_ppv(pb, opt);
        else
            throw InputError("unknown command '" + kind + "'");
        emit(rep, pb, opt, out);
    });
}

int run_file(const std::string& command, const std::string& path, const Options& opt, std::ostream& out,
             std::ostream& err) {
    std::optional<Problem> pb;
    int code = guarded(opt, out, err, [&] { pb = load_problem_file(path); });
    if (code != kExitOk) return code;
    return run_command(command, *pb, opt, out, err);
}

}  // namespace ptel::cli
