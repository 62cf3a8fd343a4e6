#pragma once

// Hyperexponential terms given by their logarithmic-derivative vectors, and
// elements of the module they generate.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptel/ore.hpp"
#include "ptel/ratfun.hpp"

namespace ptel {

/// A term h with derive_v(h) / h = logd[v] for v = t, x1, ..., xn.
class HTerm {
public:
    /// Throws InputError when the vector is not integrable.
    HTerm(std::string label, std::vector<RatFun> logd);

    const std::string& label() const { return label_; }
    const std::vector<RatFun>& logd() const { return logd_; }
    const RatFun& r(int v) const { return logd_[std::size_t(v)]; }
    int nvars() const { return int(logd_.size()); }
    bool is_trivial() const;

private:
    std::string label_;
    std::vector<RatFun> logd_;
};

using TermRef = std::shared_ptr<const HTerm>;

TermRef make_term(std::string label, std::vector<RatFun> logd);
/// The term 1 (all logarithmic derivatives zero).
TermRef trivial_term(int nvars, std::string label = "1");

/// derive_b(logd[a]) == derive_a(logd[b]) for all a, b.
bool is_integrable(const std::vector<RatFun>& logd);

/// q with derive_v(q) / q = r_v(h1) - r_v(h2) for all v, i.e. h1 = q * h2,
/// if such a rational q exists.  q is a quotient of normalized polynomials,
/// so is_similar(h2, h1) == 1 / q and the ratios compose exactly.
std::optional<RatFun> is_similar(const HTerm& h1, const HTerm& h2);

struct HPart {
    RatFun coeff;
    TermRef term;
};

/// Finite sums of coefficient * term over pairwise non-similar terms.
class HElement {
public:
    HElement() = default;
    HElement(const RatFun& c, TermRef h);
    /// Parts over pairwise non-similar terms (not rechecked); zero
    /// coefficients are dropped.
    static HElement from_distinct_parts(std::vector<HPart> parts);

    bool is_zero() const { return parts_.empty(); }
    const std::vector<HPart>& parts() const { return parts_; }

    HElement operator-() const;
    friend HElement operator+(HElement a, const HElement& b);
    friend HElement operator-(const HElement& a, const HElement& b) { return a + (-b); }
    /// Scalar multiple.
    friend HElement operator*(const RatFun& s, const HElement& e);
    /// Exact equality as module elements.
    bool operator==(const HElement& o) const { return (*this - o).is_zero(); }

    /// Adds c * h, merging with a part over a similar term.
    void add(const RatFun& c, const TermRef& h);

    /// This element written over base: the coefficient c with e == c * base.
    /// nullopt if some part is not similar to base.
    std::optional<RatFun> coefficient_over(const TermRef& base) const;

private:
    std::vector<HPart> parts_;
};

/// D_v(e) = sum (derive_v(c) + c * r_v) * h.
HElement d_apply(const HElement& e, int v);
/// L(e) with Dt^j(c * h) = T^j(c) * h, T(c) = derive_t(c) + c * r_t.
HElement op_apply(const OreOp& l, const HElement& e);

struct LogSplit {
    MPoly p;   // polynomial in t over Q(x)
    RatFun r;  // in Q(t)
};

/// r_t = derive_t(p) / p + r with p in Q(x)[t] and r in Q(t), if possible.
std::optional<LogSplit> split_log_derivative(const RatFun& rt, std::vector<std::string>* notes = nullptr);

/// Nonzero L in Q(t)<Dt> with L(e) = 0 for a single-part e, if one exists;
/// 1 for e = 0.  Throws MultiPartElement for two or more parts.
std::optional<OreOp> kt_annihilator(const HElement& e);

/// Terms referenced by the elements grouped by similarity, in order of
/// first appearance.
std::vector<std::vector<TermRef>> similarity_classes(const std::vector<HElement>& elements);

}  // namespace ptel
