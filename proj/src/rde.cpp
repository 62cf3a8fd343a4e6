#include "ptel/rde.hpp"

#include <algorithm>

#include "ptel/errors.hpp"
#include "ptel/linalg.hpp"
#include "ptel/residues.hpp"

namespace ptel {

namespace {

// Largest positive integer residue of w at the roots of the squarefree
// factor s, where s divides den(w) exactly once.
long largest_integer_residue(const RatFun& w, const MPoly& s, int z) {
    MPoly cofactor = divide_exact(w.den(), s);
    bool complete = false;
    long best = 0;
    for (const auto& piece : integer_residue_pieces(w.num(), cofactor, s, z, &complete))
        if (piece.residue > best) best = piece.residue.get_si();
    return best;
}

MPoly denominator_bound(const ParamRdeProblem& pb) {
    const int z = pb.z;
    MPoly dphi(Rat(1));
    for (const auto& phi : pb.rhs) dphi = lcm(dphi, phi.den());
    const MPoly& dw = pb.w.den();
    std::vector<MPoly> inputs;
    for (const MPoly* p : {&dw, static_cast<const MPoly*>(&dphi)})
        if (p->degree(z) > 0)
            for (const auto& f : squarefree(*p, z)) inputs.push_back(f.factor);
    MPoly d(Rat(1));
    for (const MPoly& pi : coprime_base(inputs, z)) {
        const int kw = multiplicity(dw, pi), ke = multiplicity(dphi, pi);
        long bound = 0;
        if (kw >= 2) {
            bound = std::max(0, ke - kw);
        } else if (kw == 1) {
            bound = std::max<long>({0L, long(ke) - 1, largest_integer_residue(pb.w, pi, z)});
        } else {
            bound = std::max(0, ke - 1);
        }
        if (bound > 0) d *= pi.pow(unsigned(bound));
    }
    return d;
}

}  // namespace

ParamRdeSolutionSpace param_rde(const ParamRdeProblem& pb) {
    const int z = pb.z;
    ParamRdeSolutionSpace out;
    out.denominator = denominator_bound(pb);
    const RatFun d(out.denominator);

    // u = y / d turns the equation into A y' + B y = sum e_i C_i with
    // polynomial A, B, C_i.
    const RatFun bigw = pb.w - derive(d, z) / d;
    MPoly m = bigw.den();
    std::vector<RatFun> scaled;
    for (const auto& phi : pb.rhs) {
        scaled.push_back(d * phi);
        m = lcm(m, scaled.back().den());
    }
    const RatFun rm(m);
    const MPoly a = m;
    const MPoly b = (rm * bigw).num();
    std::vector<MPoly> c;
    int degc = -1;
    for (const auto& s : scaled) {
        RatFun ci = rm * s;
        if (!ci.is_polynomial()) throw InvariantBreach("param_rde: right-hand side not cleared");
        c.push_back(ci.num());
        if (!c.back().is_zero()) degc = std::max(degc, c.back().degree(z));
    }

    // Degree bound at infinity.
    const int dega = a.degree(z), degb = b.is_zero() ? -1 : b.degree(z);
    int n = -1;
    if (b.is_zero()) {
        // A y' = sum e_i C_i; constants always solve the homogeneous part.
        n = degc < 0 ? 0 : std::max(degc - dega + 1, 0);
    } else if (degb > dega - 1) {
        n = degc - degb;
    } else if (degb < dega - 1) {
        // Degree >= 1 is ruled by A y', degree 0 by B y.
        n = degc < 0 ? -1 : std::max(degc - dega + 1, degb <= degc ? 0 : -1);
    } else {
        n = degc < 0 ? -1 : degc - degb;
        RatFun root = -RatFun(b.coefficient(z, degb)) / RatFun(a.coefficient(z, dega));
        if (root.is_constant()) {
            Rat r = root.constant_value();
            if (r.get_den() == 1 && r >= 0) n = std::max(n, int(r.get_num().get_si()));
        } else {
            out.indicial_fallback = true;
        }
    }
    out.degree_bound = n;

    // Unknowns: e_0..e_rho, then y_n, ..., y_0.
    const int ne = int(pb.rhs.size());
    const int ny = std::max(n + 1, 0);
    const int ncols = ne + ny;
    std::vector<std::vector<MPoly>> columns;
    for (int i = 0; i < ne; ++i) columns.push_back((-c[std::size_t(i)]).coefficients(z));
    const MPoly zv = MPoly::variable(z);
    for (int j = n; j >= 0; --j) {
        MPoly zj = zv.pow(unsigned(j));
        MPoly col = a * zj.derivative(z) + b * zj;
        columns.push_back(col.coefficients(z));
    }
    std::size_t nrows = 0;
    for (const auto& col : columns) nrows = std::max(nrows, col.size());
    Matrix mat(nrows, Vector(static_cast<std::size_t>(ncols)));
    for (int k = 0; k < ncols; ++k)
        for (std::size_t r = 0; r < columns[std::size_t(k)].size(); ++r)
            mat[r][std::size_t(k)] = RatFun(columns[std::size_t(k)][r]);

    for (const Vector& v : nullspace(mat, ncols)) {
        RdeSolution s;
        s.e.assign(v.begin(), v.begin() + ne);
        RatFun y;
        for (int j = n; j >= 0; --j) {
            const RatFun& coef = v[std::size_t(ne + (n - j))];
            if (!coef.is_zero()) y += coef * RatFun(zv.pow(unsigned(j)));
        }
        s.u = y / d;
        out.basis.push_back(std::move(s));
    }
    return out;
}

bool satisfies(const ParamRdeProblem& pb, const RdeSolution& s) {
    RatFun lhs = derive(s.u, pb.z) + pb.w * s.u;
    for (std::size_t i = 0; i < pb.rhs.size(); ++i) {
        if (s.e[i].depends_on(pb.z)) return false;
        lhs -= s.e[i] * pb.rhs[i];
    }
    return lhs.is_zero();
}

}  // namespace ptel
