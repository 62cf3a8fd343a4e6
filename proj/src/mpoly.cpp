#include "ptel/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "ptel/errors.hpp"

namespace ptel {

// ---------------------------------------------------------------------------
// Monomial

unsigned Monomial::total() const {
    unsigned s = 0;
    for (auto e : exps) s += e;
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(exps[i]) + other.exps[i];
        if (s > std::numeric_limits<std::uint16_t>::max())
            throw InvariantBreach("exponent overflow in monomial product");
        r.exps[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exps[i] = static_cast<std::uint16_t>(other.exps[i] - exps[i]);
    return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    return 0;
}

namespace {

bool term_before(const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; }

}  // namespace

// ---------------------------------------------------------------------------
// MPoly basics

MPoly::MPoly(const Rat& c) {
    if (sgn(c) != 0) terms_.push_back(Term{Monomial{}, c});
}

MPoly MPoly::variable(int v) {
    Monomial m;
    m.exps[v] = 1;
    return monomial(Rat(1), m);
}

MPoly MPoly::monomial(const Rat& c, const Monomial& m) {
    MPoly p;
    if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
    return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    MPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total() == 0); }

bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.total() == 0 && terms_[0].coeff == 1; }

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    const Term& last = terms_.back();
    return last.mono.total() == 0 ? last.coeff : Rat(0);
}

int MPoly::degree(int v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, int(t.mono.exps[v]));
    return d;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : int(terms_.front().mono.total()); }

bool MPoly::depends_on(int v) const {
    for (const auto& t : terms_)
        if (t.mono.exps[v] != 0) return true;
    return false;
}

std::uint32_t MPoly::var_mask() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_)
        for (int i = 0; i < kMaxVars; ++i)
            if (t.mono.exps[i] != 0) m |= 1u << i;
    return m;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = grlex_compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (subtract) out.back().coeff = -out.back().coeff;
        } else {
            Rat s = subtract ? Rat(a[i].coeff - b[j].coeff) : Rat(a[i].coeff + b[j].coeff);
            if (sgn(s) != 0) out.push_back(Term{a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    if (b.terms_.size() == 1 && b.terms_[0].mono.total() == 0) return a * b.terms_[0].coeff;
    if (a.terms_.size() == 1 && a.terms_[0].mono.total() == 0) return b * a.terms_[0].coeff;
    if (b.terms_.size() == 1) {
        // Multiplying by a monomial preserves the order.
        MPoly r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.push_back(Term{t.mono * b.terms_[0].mono, t.coeff * b.terms_[0].coeff});
        return r;
    }
    if (a.terms_.size() == 1) return b * a;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) prod.push_back(Term{x.mono * y.mono, x.coeff * y.coeff});
    return MPoly::from_terms(std::move(prod));
}

bool MPoly::operator==(const MPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

MPoly MPoly::derivative(int v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exps[v] == 0) continue;
        Term d = t;
        d.coeff *= t.mono.exps[v];
        d.mono.exps[v] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coefficients(int v) const {
    std::vector<std::vector<Term>> buckets(std::max(0, degree(v)) + 1);
    for (const auto& t : terms_) {
        Term c = t;
        int k = c.mono.exps[v];
        c.mono.exps[v] = 0;
        buckets[k].push_back(std::move(c));
    }
    std::vector<MPoly> out;
    out.reserve(buckets.size());
    // Removing one variable keeps relative grlex order only up to ties, so re-sort.
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    if (terms_.empty()) out.clear();
    return out;
}

MPoly MPoly::from_coefficients(int v, std::span<const MPoly> coeffs) {
    std::vector<Term> all;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms_) {
            Term c = t;
            c.mono.exps[v] = static_cast<std::uint16_t>(c.mono.exps[v] + k);
            all.push_back(std::move(c));
        }
    }
    return from_terms(std::move(all));
}

MPoly MPoly::coefficient(int v, int k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exps[v] != k) continue;
        Term c = t;
        c.mono.exps[v] = 0;
        out.push_back(std::move(c));
    }
    return from_terms(std::move(out));
}

MPoly MPoly::substitute(int v, const Rat& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term c = t;
        unsigned e = c.mono.exps[v];
        c.mono.exps[v] = 0;
        if (e) {
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e);
            mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e);
            c.coeff *= p;
        }
        out.push_back(std::move(c));
    }
    return from_terms(std::move(out));
}

MPoly MPoly::substitute(int v, const MPoly& value) const {
    auto cs = coefficients(v);
    MPoly r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
    return r;
}

Rat MPoly::unit() const {
    if (terms_.empty()) return Rat(1);
    BigInt l = 1, g = 0;
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const auto& t : terms_) {
        BigInt n = t.coeff.get_num() * (l / t.coeff.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rat u(g, l);
    u.canonicalize();
    if (sgn(terms_.front().coeff) < 0) u = -u;
    return u;
}

MPoly MPoly::normalized() const {
    if (terms_.empty()) return *this;
    Rat u = unit();
    if (u == 1) return *this;
    MPoly r = *this;
    Rat inv = 1 / u;
    for (auto& t : r.terms_) t.coeff *= inv;
    return r;
}

// ---------------------------------------------------------------------------
// Division

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (p.is_zero()) return MPoly();
    if (q.is_constant()) return p * (1 / q.constant_value());
    for (int v = 0; v < kMaxVars; ++v)
        if (q.degree(v) > p.degree(v)) return std::nullopt;
    const Term& lq = q.leading();
    Rat inv = 1 / lq.coeff;
    MPoly rem = p;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lq.mono.divides(lr.mono)) return std::nullopt;
        Term t{lq.mono.quotient_of(lr.mono), lr.coeff * inv};
        rem -= MPoly::monomial(t.coeff, t.mono) * q;
        quot.push_back(std::move(t));
    }
    return MPoly::from_terms(std::move(quot));
}

MPoly divide_exact(const MPoly& p, const MPoly& q) {
    auto r = try_divide(p, q);
    if (!r) throw InvariantBreach("inexact polynomial division");
    return std::move(*r);
}

int multiplicity(const MPoly& p, const MPoly& f) {
    int k = 0;
    MPoly cur = p;
    while (true) {
        auto q = try_divide(cur, f);
        if (!q) return k;
        ++k;
        cur = std::move(*q);
    }
}

// ---------------------------------------------------------------------------
// GCD (recursive, primitive polynomial remainder sequences)

namespace {

using UVec = std::vector<MPoly>;

void trim(UVec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int udeg(const UVec& a) { return int(a.size()) - 1; }

MPoly uv_content(const UVec& a) {
    MPoly g;
    for (const auto& c : a) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Sparse pseudo-remainder: lc(B)^k * A mod B for a suitable k.
UVec prem(UVec r, const UVec& b) {
    const int db = udeg(b);
    const MPoly& lb = b.back();
    while (udeg(r) >= db) {
        MPoly lr = r.back();
        const int shift = udeg(r) - db;
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
        r.pop_back();
        trim(r);
    }
    return r;
}

void make_primitive(UVec& a, int v) {
    MPoly c = uv_content(a);
    if (!c.is_one())
        for (auto& x : a) x = divide_exact(x, c);
    Rat u = MPoly::from_coefficients(v, a).unit();
    if (u != 1) {
        Rat inv = 1 / u;
        for (auto& x : a) x *= inv;
    }
}

MPoly prs_gcd(UVec a, UVec b, int v) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (true) {
        UVec r = prem(a, b);
        if (r.empty()) return MPoly::from_coefficients(v, b);
        if (udeg(r) == 0) return MPoly(Rat(1));
        a = std::move(b);
        make_primitive(r, v);
        b = std::move(r);
    }
}

MPoly monomial_gcd(const Term& m, const MPoly& q) {
    Monomial g = m.mono;
    for (const auto& t : q.terms())
        for (int i = 0; i < kMaxVars; ++i) g.exps[i] = std::min(g.exps[i], t.mono.exps[i]);
    return MPoly::monomial(Rat(1), g);
}

// Gcd over Z of polynomials with integer coefficients: integer gcd of the
// contents times the normalized gcd.
MPoly integer_gcd(const MPoly& a, const MPoly& b) {
    BigInt ca = 0, cb = 0;
    for (const auto& t : a.terms()) ca = ::gcd(ca, BigInt(t.coeff.get_num()));
    for (const auto& t : b.terms()) cb = ::gcd(cb, BigInt(t.coeff.get_num()));
    BigInt c = ::gcd(ca, cb);
    return gcd(a, b) * Rat(c);
}

BigInt height(const MPoly& p) {
    BigInt h = 0;
    for (const auto& t : p.terms()) {
        BigInt c = abs(t.coeff.get_num());
        if (c > h) h = c;
    }
    return h;
}

// Symmetric xi-adic expansion of the integer coefficients of g in powers of v.
MPoly xi_adic(const MPoly& g, const BigInt& xi, int v) {
    std::vector<Term> out;
    BigInt half = xi / 2;
    for (const auto& t : g.terms()) {
        BigInt c = t.coeff.get_num();
        for (unsigned i = 0; c != 0; ++i) {
            BigInt d = c % xi;
            if (d > half) d -= xi;
            if (d < -half) d += xi;
            if (d != 0) {
                Monomial m = t.mono;
                m.exps[std::size_t(v)] = std::uint16_t(i);
                out.push_back({m, Rat(d)});
            }
            c = (c - d) / xi;
        }
    }
    return MPoly::from_terms(std::move(out));
}

// Heuristic gcd: evaluate v at a large integer, recurse, and lift the image
// back by xi-adic expansion.  Inputs are normalized; a lifted candidate is
// accepted only if it divides both inputs.
std::optional<MPoly> heuristic_gcd(const MPoly& a, const MPoly& b, int v) {
    BigInt xi = 2 * std::min(height(a), height(b)) + 29;
    const int deg = std::max(a.degree(v), b.degree(v));
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::size_t(deg + 1) > 20000) return std::nullopt;
        MPoly ae = a.substitute(v, Rat(xi)), be = b.substitute(v, Rat(xi));
        if (ae.is_zero() || be.is_zero()) return std::nullopt;
        MPoly g = xi_adic(integer_gcd(ae, be), xi, v);
        if (!g.is_zero()) {
            g = g.normalized();
            if (try_divide(a, g) && try_divide(b, g)) return g;
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return MPoly(Rat(1));
    if (a.size() == 1) return monomial_gcd(a.leading(), b);
    if (b.size() == 1) return monomial_gcd(b.leading(), a);

    const std::uint32_t ma = a.var_mask(), mb = b.var_mask();
    for (int v = 0; v < kMaxVars; ++v) {
        const std::uint32_t bit = 1u << v;
        if ((ma & bit) && !(mb & bit)) return gcd(content(a, v), b);
        if ((mb & bit) && !(ma & bit)) return gcd(a, content(b, v));
    }

    if (a.size() >= b.size()) {
        if (try_divide(a, b)) return b.normalized();
    } else if (try_divide(b, a)) {
        return a.normalized();
    }

    int v = -1, best = std::numeric_limits<int>::max();
    for (int i = 0; i < kMaxVars; ++i) {
        if (!(ma & (1u << i))) continue;
        int d = std::max(a.degree(i), b.degree(i));
        if (d < best) {
            best = d;
            v = i;
        }
    }
    MPoly an = a.normalized(), bn = b.normalized();
    if (auto g = heuristic_gcd(an, bn, v)) return *g;
    UVec ca = an.coefficients(v), cb = bn.coefficients(v);
    MPoly conta = uv_content(ca), contb = uv_content(cb);
    MPoly cont = gcd(conta, contb);
    for (auto& x : ca) x = divide_exact(x, conta);
    for (auto& x : cb) x = divide_exact(x, contb);
    MPoly g = prs_gcd(std::move(ca), std::move(cb), v);
    return (cont * g).normalized();
}

MPoly lcm(const MPoly& p, const MPoly& q) {
    if (p.is_zero() || q.is_zero()) return MPoly();
    return (p * divide_exact(q, gcd(p, q))).normalized();
}

MPoly content(const MPoly& p, int v) {
    if (p.is_zero()) return MPoly();
    return uv_content(p.coefficients(v));
}

MPoly primitive_part(const MPoly& p, int v) {
    if (p.is_zero()) return p;
    return divide_exact(p, content(p, v)).normalized();
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun) and coprime bases

std::vector<SquarefreeFactor> squarefree(const MPoly& p, int v) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    MPoly a = primitive_part(p, v);
    if (a.degree(v) <= 0) return out;
    MPoly da = a.derivative(v);
    MPoly b = gcd(a, da);
    MPoly c = divide_exact(a, b);
    MPoly d = divide_exact(da, b) - c.derivative(v);
    for (int i = 1; c.degree(v) > 0; ++i) {
        MPoly g = gcd(c, d);
        if (g.degree(v) > 0) out.push_back({g.normalized(), i});
        c = divide_exact(c, g);
        d = divide_exact(d, g) - c.derivative(v);
    }
    return out;
}

std::vector<MPoly> coprime_base(const std::vector<MPoly>& polys, int v) {
    std::vector<MPoly> basis;
    std::vector<MPoly> work;
    for (auto it = polys.rbegin(); it != polys.rend(); ++it)
        if (!it->is_zero()) work.push_back(*it);
    while (!work.empty()) {
        MPoly a = std::move(work.back());
        work.pop_back();
        if (a.degree(v) <= 0) continue;
        a = primitive_part(a, v);
        bool absorbed = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis[j] == a) {
                absorbed = true;
                break;
            }
            MPoly g = gcd(a, basis[j]);
            if (g.degree(v) <= 0) continue;
            MPoly b = std::move(basis[j]);
            basis.erase(basis.begin() + std::ptrdiff_t(j));
            work.push_back(divide_exact(b, g));
            work.push_back(divide_exact(a, g));
            work.push_back(g);
            absorbed = true;
            break;
        }
        if (!absorbed) basis.push_back(std::move(a));
    }
    return basis;
}

}  // namespace ptel
