#include "ptel/hyperexp.hpp"

#include <algorithm>

#include "ptel/errors.hpp"
#include "ptel/residues.hpp"

namespace ptel {

HTerm::HTerm(std::string label, std::vector<RatFun> logd) : label_(std::move(label)), logd_(std::move(logd)) {
    if (logd_.empty()) throw InputError("term '" + label_ + "' has an empty log-derivative vector");
    if (!is_integrable(logd_)) throw InputError("term '" + label_ + "' is not integrable");
}

bool HTerm::is_trivial() const {
    return std::all_of(logd_.begin(), logd_.end(), [](const RatFun& r) { return r.is_zero(); });
}

TermRef make_term(std::string label, std::vector<RatFun> logd) {
    return std::make_shared<const HTerm>(std::move(label), std::move(logd));
}

TermRef trivial_term(int nvars, std::string label) {
    return make_term(std::move(label), std::vector<RatFun>(std::size_t(nvars)));
}

bool is_integrable(const std::vector<RatFun>& logd) {
    for (std::size_t a = 0; a < logd.size(); ++a)
        for (std::size_t b = a + 1; b < logd.size(); ++b)
            if (derive(logd[a], int(b)) != derive(logd[b], int(a))) return false;
    return true;
}

std::optional<RatFun> is_similar(const HTerm& h1, const HTerm& h2) {
    if (h1.nvars() != h2.nvars()) throw InvariantBreach("comparing terms over different variable sets");
    const int n = h1.nvars();
    std::vector<RatFun> s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) s[std::size_t(v)] = h1.r(v) - h2.r(v);
    // Build q one variable at a time; factors free of v are found later.
    RatFun q(1);
    for (int v = 0; v < n; ++v) {
        RatFun rest = s[std::size_t(v)] - derive(q, v) / q;
        if (rest.is_zero()) continue;
        auto qv = log_derivative_preimage(rest, v);
        if (!qv) return std::nullopt;
        q *= *qv;
    }
    for (int v = 0; v < n; ++v)
        if (derive(q, v) != s[std::size_t(v)] * q) return std::nullopt;
    return q;
}

HElement::HElement(const RatFun& c, TermRef h) {
    if (!c.is_zero()) parts_.push_back({c, std::move(h)});
}

HElement HElement::from_distinct_parts(std::vector<HPart> parts) {
    HElement e;
    for (auto& p : parts)
        if (!p.coeff.is_zero()) e.parts_.push_back(std::move(p));
    return e;
}

HElement HElement::operator-() const {
    HElement r = *this;
    for (auto& p : r.parts_) p.coeff = -p.coeff;
    return r;
}

HElement operator+(HElement a, const HElement& b) {
    for (const auto& p : b.parts_) a.add(p.coeff, p.term);
    return a;
}

HElement operator*(const RatFun& s, const HElement& e) {
    if (s.is_zero()) return HElement();
    HElement r = e;
    for (auto& p : r.parts_) p.coeff *= s;
    return r;
}

void HElement::add(const RatFun& c, const TermRef& h) {
    if (c.is_zero()) return;
    auto merge = [&](std::size_t i, const RatFun& delta) {
        parts_[i].coeff += delta;
        if (parts_[i].coeff.is_zero()) parts_.erase(parts_.begin() + std::ptrdiff_t(i));
    };
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i].term == h || parts_[i].term->logd() == h->logd()) return merge(i, c);
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (auto q = is_similar(*h, *parts_[i].term)) return merge(i, c * *q);
    parts_.push_back({c, h});
}

std::optional<RatFun> HElement::coefficient_over(const TermRef& base) const {
    RatFun c;
    for (const auto& p : parts_) {
        if (p.term == base || p.term->logd() == base->logd()) {
            c += p.coeff;
        } else if (auto q = is_similar(*p.term, *base)) {
            c += p.coeff * *q;
        } else {
            return std::nullopt;
        }
    }
    return c;
}

HElement d_apply(const HElement& e, int v) {
    std::vector<HPart> out;
    for (const auto& p : e.parts()) out.push_back({derive(p.coeff, v) + p.coeff * p.term->r(v), p.term});
    return HElement::from_distinct_parts(std::move(out));
}

HElement op_apply(const OreOp& l, const HElement& e) {
    std::vector<HPart> out;
    for (const auto& p : e.parts()) {
        const RatFun& rt = p.term->r(kVarT);
        RatFun power = p.coeff, sum;
        for (int j = 0; j <= l.order(); ++j) {
            if (j > 0) power = derive(power, kVarT) + power * rt;
            if (!l.coeff(j).is_zero()) sum += l.coeff(j) * power;
        }
        out.push_back({sum, p.term});
    }
    return HElement::from_distinct_parts(std::move(out));
}

std::optional<LogSplit> split_log_derivative(const RatFun& rt, std::vector<std::string>* notes) {
    if (rt.is_zero()) return LogSplit{MPoly(Rat(1)), RatFun()};
    const MPoly& den = rt.den();
    MPoly p(Rat(1));
    if (den.degree(kVarT) > 0) {
        KSplit split = split_k_factors(den);
        if (split.x_part.degree(kVarT) > 0) {
            auto sf = squarefree(split.x_part, kVarT);
            if (sf.size() != 1 || sf[0].multiplicity != 1) return std::nullopt;
            MPoly cofactor = divide_exact(den, split.x_part);
            auto pieces = integer_residues(rt.num(), cofactor, split.x_part, kVarT, notes);
            if (!pieces) return std::nullopt;
            for (const auto& piece : *pieces) {
                if (piece.residue <= 0) return std::nullopt;
                p *= piece.factor.pow(unsigned(piece.residue.get_ui()));
            }
        }
    }
    RatFun r = rt - derive(RatFun(p), kVarT) / RatFun(p);
    if (!is_in_kt(r)) return std::nullopt;
    return LogSplit{p.normalized(), r};
}

std::optional<OreOp> kt_annihilator(const HElement& e) {
    if (e.is_zero()) return OreOp(1);
    if (e.parts().size() > 1) throw MultiPartElement("kt_annihilator needs a single-part element");
    const HPart& part = e.parts().front();
    RatFun rt = derive(part.coeff, kVarT) / part.coeff + part.term->r(kVarT);
    auto split = split_log_derivative(rt);
    if (!split) return std::nullopt;
    return twist(OreOp::D(split->p.degree(kVarT) + 1), split->r);
}

std::vector<std::vector<TermRef>> similarity_classes(const std::vector<HElement>& elements) {
    std::vector<std::vector<TermRef>> classes;
    for (const auto& e : elements)
        for (const auto& p : e.parts()) {
            bool placed = false;
            for (auto& cls : classes) {
                if (std::find(cls.begin(), cls.end(), p.term) != cls.end()) {
                    placed = true;
                    break;
                }
                if (cls.front()->logd() == p.term->logd() || is_similar(*p.term, *cls.front())) {
                    cls.push_back(p.term);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({p.term});
        }
    return classes;
}

}  // namespace ptel
