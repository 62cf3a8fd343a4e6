#include <doctest.h>

#include "ptel/linalg.hpp"
#include "ptel/rde.hpp"
#include "qlinalg.hpp"
#include "support.hpp"

using namespace ptel;
using namespace ptel::test;

namespace {

constexpr int kZ = 1;

// Rank over Q(t, x2) of the vectors (e_0..e_rho, u) after writing u over a
// common denominator; used to compare spans of solution sets.
int span_rank(const std::vector<RdeSolution>& sols) {
    if (sols.empty()) return 0;
    MPoly den(Rat(1));
    for (const auto& s : sols) den = lcm(den, s.u.den());
    Matrix m;
    std::size_t width = 0;
    std::vector<std::vector<RatFun>> rows;
    for (const auto& s : sols) {
        std::vector<RatFun> row = s.e;
        for (const auto& c : (s.u * RatFun(den)).num().coefficients(kZ)) row.push_back(RatFun(c));
        width = std::max(width, row.size());
        rows.push_back(std::move(row));
    }
    // Columns are solutions, so the rank is that of the transpose.
    for (auto& r : rows) r.resize(width);
    Matrix t(width, Vector(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) t[j][i] = rows[i][j];
    return int(rref(t, int(rows.size())).pivots.size());
}

// Everything below works in Q(z) after fixing t and x2 to rationals.
struct Specialized {
    RatFun w;
    std::vector<RatFun> rhs;
};

std::optional<RatFun> specialize(const RatFun& f, const Rat& t0, const Rat& x20) {
    MPoly den = f.den().substitute(0, t0).substitute(2, x20);
    if (den.is_zero()) return std::nullopt;
    return RatFun(f.num().substitute(0, t0).substitute(2, x20), den);
}

std::vector<Rat> poly_coeffs(const MPoly& p, std::size_t len) {
    std::vector<Rat> out(len, Rat(0));
    auto cs = p.coefficients(kZ);
    if (cs.size() > len) throw std::runtime_error("oracle: polynomial longer than expected");
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) out[k] = cs[k].constant_value();
    return out;
}

// Brute-force dense ansatz u = N / D with D = den(w)^a * lcm(den phi)^b and
// deg N <= 10, over Q(z).  Returns the (e, u) pairs of a nullspace basis.
std::vector<std::pair<std::vector<Rat>, RatFun>> ansatz_solutions(const Specialized& sp, unsigned a, unsigned b) {
    MPoly dphi(Rat(1));
    for (const auto& phi : sp.rhs) dphi = lcm(dphi, phi.den());
    MPoly d = sp.w.den().pow(a) * dphi.pow(b);
    const int ne = int(sp.rhs.size()), nn = 11;
    std::vector<RatFun> cols;
    for (const auto& phi : sp.rhs) cols.push_back(-phi);
    const RatFun rd(d);
    for (int j = 0; j < nn; ++j) {
        RatFun b = RatFun(MPoly::variable(kZ).pow(unsigned(j))) / rd;
        cols.push_back(derive(b, kZ) + sp.w * b);
    }
    MPoly common(Rat(1));
    for (const auto& c : cols) common = lcm(common, c.den());
    std::vector<MPoly> polys;
    std::size_t len = 1;
    for (const auto& c : cols) {
        polys.push_back((c * RatFun(common)).num());
        len = std::max<std::size_t>(len, std::size_t(std::max(0, polys.back().degree(kZ)) + 1));
    }
    std::vector<QRow> m(len, QRow(cols.size(), Rat(0)));
    for (std::size_t k = 0; k < polys.size(); ++k) {
        auto cs = poly_coeffs(polys[k], len);
        for (std::size_t r = 0; r < len; ++r) m[r][k] = cs[r];
    }
    std::vector<std::pair<std::vector<Rat>, RatFun>> out;
    for (const auto& v : q_nullspace(m, cols.size())) {
        std::vector<Rat> e(v.begin(), v.begin() + ne);
        MPoly num;
        for (int j = 0; j < nn; ++j) num += MPoly::variable(kZ).pow(unsigned(j)) * v[std::size_t(ne + j)];
        out.emplace_back(e, RatFun(num, d));
    }
    return out;
}

// Rank over Q of the specialized vectors (e, u * den) for a list of
// solutions over Q(z).
int q_span_rank(const std::vector<std::pair<std::vector<Rat>, RatFun>>& sols) {
    if (sols.empty()) return 0;
    MPoly den(Rat(1));
    for (const auto& s : sols) den = lcm(den, s.second.den());
    std::vector<MPoly> nums;
    std::size_t len = 1;
    for (const auto& s : sols) {
        nums.push_back((s.second * RatFun(den)).num());
        len = std::max<std::size_t>(len, std::size_t(std::max(0, nums.back().degree(kZ)) + 1));
    }
    std::vector<QRow> rows;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        QRow r = sols[i].first;
        for (const auto& c : poly_coeffs(nums[i], len)) r.push_back(c);
        rows.push_back(std::move(r));
    }
    return q_rank(rows);
}

ParamRdeProblem random_problem(Random& rnd) {
    ParamRdeProblem pb{kZ, RatFun(), {}};
    switch (rnd.uniform(0, 3)) {
        case 0:
            break;
        case 1: {
            RatFun q(rnd.poly(2, 2, 2), rnd.poly(2, 2, 2));
            pb.w = derive(q, kZ) / q;
            break;
        }
        case 2:
            pb.w = RatFun(rnd.poly(2, 1, 2), rnd.nonconstant_poly(2, 2, 2));
            break;
        default:
            pb.w = RatFun(MPoly(rnd.small_rat(3))) / RatFun(MPoly::variable(kZ) + MPoly::variable(0));
            break;
    }
    RatFun u0(rnd.poly(2, 2, 2), rnd.poly(2, 2, 2));
    pb.rhs.push_back(derive(u0, kZ) + pb.w * u0);
    pb.rhs.push_back(RatFun(rnd.poly(2, 1, 2), rnd.poly(2, 1, 2)));
    if (rnd.uniform(0, 1)) pb.rhs.push_back(RatFun(rnd.poly(2, 1, 2), rnd.poly(2, 2, 2)));
    return pb;
}

}  // namespace

TEST_SUITE("rde") {
    TEST_CASE("antiderivative of a constant") {
        ParamRdeProblem pb{kZ, RatFun(), {R("1")}};
        auto space = param_rde(pb);
        REQUIRE(space.basis.size() == 2);
        for (const auto& s : space.basis) CHECK(satisfies(pb, s));
        std::vector<RdeSolution> expected{{{R("1")}, R("x1")}, {{R("0")}, R("1")}};
        CHECK(span_rank(space.basis) == 2);
        auto both = space.basis;
        both.insert(both.end(), expected.begin(), expected.end());
        CHECK(span_rank(both) == 2);
    }

    TEST_CASE("telescoping equation of the rational example") {
        ParamRdeProblem pb{kZ, R("-1/(x1+x2+t)"), {R("1"), R("(x1+x2)/(t*(x1+x2+t))")}};
        auto space = param_rde(pb);
        REQUIRE(space.basis.size() == 2);
        for (const auto& s : space.basis) CHECK(satisfies(pb, s));
        std::vector<RdeSolution> expected{{{R("-1"), R("t")}, R("t")}, {{R("0"), R("0")}, R("x1+x2+t")}};
        for (const auto& s : expected) CHECK(satisfies(pb, s));
        auto both = space.basis;
        both.insert(both.end(), expected.begin(), expected.end());
        CHECK(span_rank(both) == 2);
        CHECK(span_rank(expected) == 2);
    }

    TEST_CASE("no rational antiderivative of 1/z") {
        ParamRdeProblem pb{kZ, RatFun(), {R("1/x1")}};
        auto space = param_rde(pb);
        REQUIRE(!space.basis.empty());
        for (const auto& s : space.basis) {
            CHECK(s.e[0].is_zero());
            CHECK(satisfies(pb, s));
        }
    }

    TEST_CASE("pole orders forced by residues") {
        // u = 1/z^2 solves u' + (2/z) u = 0.
        ParamRdeProblem pb{kZ, R("2/x1"), {R("1")}};
        auto space = param_rde(pb);
        for (const auto& s : space.basis) CHECK(satisfies(pb, s));
        std::vector<RdeSolution> withh = space.basis;
        withh.push_back({{R("0")}, R("1/x1^2")});
        CHECK(span_rank(withh) == span_rank(space.basis));
        // u = z^3 solves u' - (3/z) u = 0; found through the indicial root at infinity.
        ParamRdeProblem pb2{kZ, R("-3/x1"), {R("t")}};
        auto space2 = param_rde(pb2);
        std::vector<RdeSolution> with2 = space2.basis;
        with2.push_back({{R("0")}, R("x1^3")});
        CHECK(span_rank(with2) == span_rank(space2.basis));
    }

    TEST_CASE("scaling by a z-free factor keeps the dimension") {
        Random rnd(99);
        for (int iter = 0; iter < 10; ++iter) {
            ParamRdeProblem pb = random_problem(rnd);
            ParamRdeProblem scaled = pb;
            RatFun s(rnd.poly(1, 2, 2), rnd.poly(1, 1, 2));
            for (auto& phi : scaled.rhs) phi *= s;
            CHECK(param_rde(pb).basis.size() == param_rde(scaled).basis.size());
        }
    }

    TEST_CASE("completeness against a dense ansatz") {
        Random rnd(1234);
        for (int iter = 0; iter < 25; ++iter) {
            ParamRdeProblem pb = random_problem(rnd);
            auto space = param_rde(pb);
            for (const auto& s : space.basis) CHECK(satisfies(pb, s));
            CHECK(span_rank(space.basis) == int(space.basis.size()));

            // Fix t and x2 at a point where nothing degenerates.
            Rat t0 = frac(rnd.uniform(50, 400), rnd.uniform(1, 7));
            Rat x20 = frac(rnd.uniform(-400, -50), rnd.uniform(1, 7));
            Specialized sp;
            bool ok = true;
            auto w = specialize(pb.w, t0, x20);
            ok = ok && w;
            if (ok) sp.w = *w;
            for (const auto& phi : pb.rhs) {
                auto v = specialize(phi, t0, x20);
                ok = ok && v;
                if (ok) sp.rhs.push_back(*v);
            }
            std::vector<std::pair<std::vector<Rat>, RatFun>> returned;
            for (const auto& s : space.basis) {
                std::vector<Rat> e;
                for (const auto& ei : s.e) {
                    auto v = specialize(ei, t0, x20);
                    ok = ok && v && v->is_constant();
                    if (ok) e.push_back(v->constant_value());
                }
                auto u = specialize(s.u, t0, x20);
                ok = ok && u;
                if (ok) returned.emplace_back(e, *u);
            }
            REQUIRE(ok);
            std::vector<std::pair<std::vector<Rat>, RatFun>> brute;
            for (unsigned a = 0; a <= 3; ++a)
                for (unsigned b = 0; b <= 3; ++b)
                    for (auto& s : ansatz_solutions(sp, a, b)) brute.push_back(std::move(s));
            // The ansatz contains the planted solution, so it is never empty.
            CHECK(!brute.empty());
            const int r1 = q_span_rank(returned);
            CHECK(r1 == int(returned.size()));
            auto all = returned;
            all.insert(all.end(), brute.begin(), brute.end());
            CHECK_MESSAGE(q_span_rank(all) == r1, "w = " << S(pb.w));
        }
    }
}
