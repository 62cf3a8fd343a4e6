#include "ptel/residues.hpp"

#include <algorithm>
#include <map>

#include "ptel/errors.hpp"
#include "ptel/linalg.hpp"
#include "ptel/upoly.hpp"

namespace ptel {

namespace {

constexpr long kRootSearchLimit = 1000000;

// Matrix of multiplication by g in K[v]/(s); column j holds v^j * g mod s.
Matrix multiplication_matrix(const KPoly& g, const KPoly& s) {
    const int d = s.degree();
    Matrix m(static_cast<std::size_t>(d), Vector(static_cast<std::size_t>(d)));
    KPoly x = mod(g, s);
    const KPoly shift(s.var(), {RatFun(), RatFun(1)});
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[std::size_t(i)][std::size_t(j)] = x.coeff(i);
        x = mod(shift * x, s);
    }
    return m;
}

// Coefficients (constant term first) of the polynomial through the points
// (k, ys[k]), k = 0..ys.size()-1.
std::vector<RatFun> interpolate(const std::vector<RatFun>& ys) {
    const std::size_t n = ys.size();
    std::vector<RatFun> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Lagrange basis polynomial for node i with rational coefficients.
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * long(j);
            }
            basis = std::move(next);
            denom *= long(i) - long(j);
        }
        for (std::size_t k = 0; k < n; ++k)
            if (basis[k] != 0) out[k] += ys[i] * RatFun(basis[k] / denom);
    }
    return out;
}

// Integer roots of a univariate polynomial over Q given by its coefficients
// (stored as an MPoly in variable 0).
std::vector<BigInt> integer_roots(const MPoly& g) {
    std::vector<BigInt> roots;
    if (g.degree(0) <= 0) return roots;
    MPoly p = g.normalized();
    std::vector<MPoly> cs = p.coefficients(0);
    std::size_t low = 0;
    while (cs[low].is_zero()) ++low;
    if (low > 0) roots.push_back(0);
    if (low + 1 == cs.size()) return roots;
    BigInt a0 = abs(BigInt(cs[low].constant_value().get_num()));
    BigInt an = abs(BigInt(cs.back().constant_value().get_num()));
    // Cauchy bound on the absolute value of the roots.
    BigInt bound = 0;
    for (std::size_t k = low; k + 1 < cs.size(); ++k) {
        BigInt c = abs(BigInt(cs[k].constant_value().get_num()));
        BigInt q = c / an + 1;
        if (q > bound) bound = q;
    }
    bound += 1;
    if (a0 < bound) bound = a0;
    // Residues of the inputs handled here are small; the search is capped.
    if (bound > kRootSearchLimit) bound = kRootSearchLimit;
    auto is_root = [&](const BigInt& m) {
        Rat v = 0;
        for (std::size_t k = cs.size(); k-- > 0;) v = v * Rat(m) + (cs[k].is_zero() ? Rat(0) : cs[k].constant_value());
        return v == 0;
    };
    for (BigInt m = 1; m <= bound; ++m) {
        if (a0 % m != 0) continue;
        if (is_root(m)) roots.push_back(m);
        if (is_root(-m)) roots.push_back(-m);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// p with every variable except v replaced by point values depending on seed.
MPoly specialize_except(const MPoly& p, int v, int seed) {
    static constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    MPoly out = p;
    for (int w = 0; w < kMaxVars; ++w) {
        if (w == v || !out.depends_on(w)) continue;
        out = out.substitute(w, Rat(kPrimes[(w + 3 * seed) % 16] * (seed % 2 ? -1 : 1), 1 + seed / 2));
    }
    return out;
}

// det(M_a - Z M_b) over Q after specialization, as a polynomial in variable
// 0; nullopt when the point lowers deg s or the polynomial vanishes.
std::optional<MPoly> specialized_char_poly(const MPoly& num, const MPoly& b, const MPoly& s, int v, int seed) {
    MPoly ss = specialize_except(s, v, seed);
    if (ss.degree(v) != s.degree(v)) return std::nullopt;
    const KPoly ks = KPoly::from_mpoly(ss, v);
    const KPoly ka = mod(KPoly::from_mpoly(specialize_except(num, v, seed), v), ks);
    const KPoly kb = mod(KPoly::from_mpoly(specialize_except(b, v, seed), v), ks);
    const int d = ks.degree();
    Matrix ma = multiplication_matrix(ka, ks), mb = multiplication_matrix(kb, ks);
    std::vector<RatFun> values;
    for (int z = 0; z <= d; ++z) {
        Matrix m = ma;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m[std::size_t(i)][std::size_t(j)] -= mb[std::size_t(i)][std::size_t(j)] * RatFun(z);
        values.push_back(determinant(std::move(m)));
    }
    std::vector<Term> terms;
    std::vector<RatFun> chi = interpolate(values);
    for (std::size_t k = 0; k < chi.size(); ++k) {
        if (chi[k].is_zero()) continue;
        Term t{Monomial{}, chi[k].constant_value()};
        t.mono.exps[0] = std::uint16_t(k);
        terms.push_back(t);
    }
    if (terms.empty()) return std::nullopt;
    return MPoly::from_terms(std::move(terms));
}

// c with a == c * b, if any; b is nonzero.
std::optional<RatFun> proportional(const KPoly& a, const KPoly& b) {
    if (a.degree() != b.degree()) return a.is_zero() ? std::optional<RatFun>(RatFun()) : std::nullopt;
    RatFun c = a.lc() / b.lc();
    for (int k = 0; k < b.degree(); ++k)
        if (a.coeff(k) != c * b.coeff(k)) return std::nullopt;
    return c;
}

}  // namespace

std::vector<ResiduePiece> integer_residue_pieces(const MPoly& num, const MPoly& cofactor, const MPoly& s, int v,
                                                 bool* complete, std::vector<std::string>* notes) {
    *complete = false;
    const KPoly ks = KPoly::from_mpoly(s, v);
    const MPoly b = cofactor * s.derivative(v);
    const KPoly ka = mod(KPoly::from_mpoly(num, v), ks);
    const KPoly kb = mod(KPoly::from_mpoly(b, v), ks);

    // Constant residue function: a = c * b mod s, and since both sides are
    // reduced this means the coefficient vectors are proportional.
    if (auto c = proportional(ka, kb)) {
        if (!c->is_constant() || c->constant_value().get_den() != 1) return {};
        *complete = true;
        return {{s.normalized(), BigInt(c->constant_value().get_num())}};
    }

    // Candidates are the integer roots of the characteristic polynomial
    // det(M_a - Z M_b) of the residue function with every other variable
    // fixed: a constant residue survives any specialization that keeps deg s.
    // Each candidate is then confirmed generically below.
    const int d = ks.degree();
    std::optional<MPoly> chi, chi2;
    for (int attempt = 0; attempt < 16 && !chi2; ++attempt) {
        auto c = specialized_char_poly(num, b, s, v, attempt);
        if (!c) continue;
        if (!chi)
            chi = c;
        else
            chi2 = c;
    }
    if (!chi) throw InvariantBreach("no admissible specialization for the residue polynomial");
    const MPoly& g = *chi;
    std::vector<ResiduePiece> pieces;
    int covered = 0;
    for (const BigInt& m : integer_roots(g)) {
        MPoly piece = gcd(s, num - b * Rat(m));
        if (piece.degree(v) <= 0) continue;
        covered += piece.degree(v);
        pieces.push_back({piece, m});
    }
    *complete = covered == s.degree(v);
    if (!*complete && notes && chi2 && !(chi->normalized() == chi2->normalized()))
        notes->push_back("residue function with non-constant values at a factor of degree " + std::to_string(d));
    return pieces;
}

std::optional<std::vector<ResiduePiece>> integer_residues(const MPoly& num, const MPoly& cofactor, const MPoly& s, int v,
                                                          std::vector<std::string>* notes) {
    bool complete = false;
    auto pieces = integer_residue_pieces(num, cofactor, s, v, &complete, notes);
    if (!complete) return std::nullopt;
    return pieces;
}

std::optional<RatFun> log_derivative_preimage(const RatFun& f, int v, std::vector<std::string>* notes) {
    if (f.is_zero()) return RatFun(1);
    const MPoly& den = f.den();
    if (!den.depends_on(v)) return std::nullopt;
    if (f.num().degree(v) >= den.degree(v)) return std::nullopt;
    MPoly cont = content(den, v);
    MPoly s = divide_exact(den, cont);
    auto sf = squarefree(s, v);
    if (sf.size() != 1 || sf[0].multiplicity != 1) return std::nullopt;
    auto pieces = integer_residues(f.num(), cont, s, v, notes);
    if (!pieces) return std::nullopt;
    RatFun q(1);
    for (const auto& p : *pieces) q *= RatFun(p.factor).pow(int(p.residue.get_si()));
    if (derive(q, v) != f * q) return std::nullopt;
    return q;
}

}  // namespace ptel
