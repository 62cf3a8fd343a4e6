#include <doctest.h>

#include "oracle.hpp"
#include "ptel/errors.hpp"
#include "ptel/paratele.hpp"
#include "support.hpp"

using namespace ptel;
using namespace ptel::test;

namespace {

std::vector<HElement> over(const std::vector<RatFun>& coeffs, const TermRef& h) {
    std::vector<HElement> out;
    for (const auto& c : coeffs) out.emplace_back(c, h);
    return out;
}

std::vector<HElement> sqrt_pair() {
    TermRef h = sqrt_term();
    return {HElement(R(kC1), h), HElement(R(kC2), h)};
}

bool oracle_lower(Random& rnd, const std::vector<RatFun>& coeffs, const HTerm& h, int order) {
    std::vector<int> active;
    for (std::size_t i = 0; i < coeffs.size(); ++i) active.push_back(int(i) + 1);
    for (int attempt = 0;; ++attempt) {
        std::vector<Rat> point;
        for (int v = 0; v < h.nvars(); ++v) point.push_back(frac(rnd.uniform(-40, 40), rnd.uniform(1, 9)));
        try {
            return brute_force_telescoper(coeffs, h, active, order, point, {6, 2});
        } catch (const std::domain_error&) {
            if (attempt > 20) throw;
        }
    }
}

}  // namespace

TEST_SUITE("paratele") {
    TEST_CASE("single input is the minimal telescoper") {
        TermRef one = trivial_term(3);
        auto r = paratele_similar({R("t/(x1+x2+t)")}, one);
        CHECK(r.l == O("t*Dt - 1"));
        CHECK(r.minimal);
        CHECK(r.l == min_telescoper(HElement(R("t/(x1+x2+t)"), one), 1).l);
    }

    TEST_CASE("rational system") {
        TermRef one = trivial_term(3);
        std::vector<RatFun> f{R("t/(x1+x2+t)"), R("(t*x2+t^2+x1+x2+t)/((x1+x2+t)*(x2+t))")};
        auto r = paratele_similar(f, one);
        CHECK(r.l == O("t*Dt^2"));
        CHECK(verify_parallel(over(f, one), r));
        CHECK(paratele_compatible(over(f, one)).l == r.l);
    }

    TEST_CASE("images of the non-compatible pair") {
        auto hs = sqrt_pair();
        OreOp p = O("2*t*Dt + 1");
        TermRef h = sqrt_term();
        std::vector<RatFun> coeffs;
        for (const auto& e : hs) coeffs.push_back(*op_apply(p, e).coefficient_over(h));
        auto r = paratele_similar(coeffs, h);
        CHECK(r.l == O("8*t^3*Dt^3 - 12*t^2*Dt^2 + 18*t*Dt - 15"));
        CHECK(verify_parallel(over(coeffs, h), r));
    }

    TEST_CASE("existence examples") {
        TermRef one = trivial_term(3);
        auto compatible = existence_check(over({R("t/(x1+x2+t)"), R("(t*x2+t^2+x1+x2+t)/((x1+x2+t)*(x2+t))")}, one));
        REQUIRE(compatible);
        CHECK(*compatible == OreOp(1));

        auto p = existence_check(sqrt_pair());
        REQUIRE(p);
        CHECK(p->normalized() == O("2*t*Dt + 1"));

        TermRef e = make_term("e", {R("x1"), R("t"), RatFun()});
        CHECK_FALSE(existence_check({HElement(), HElement(R("1"), e)}).has_value());
        CHECK_THROWS_AS(paratele_general({HElement(), HElement(R("1"), e)}), NoParallelTelescoperExists);
    }

    TEST_CASE("general path on the non-compatible pair") {
        auto hs = sqrt_pair();
        CHECK_THROWS_AS(paratele_compatible(hs), NotCompatible);
        CHECK_THROWS_AS(paratele_similar({R(kC1), R(kC2)}, sqrt_term()), NotCompatible);
        auto r = paratele_general(hs);
        CHECK_FALSE(r.minimal);
        CHECK(r.l.order() == 4);
        CHECK(r.l.normalized() == (O("8*t^3*Dt^3 - 12*t^2*Dt^2 + 18*t*Dt - 15") * O("2*t*Dt + 1")).normalized());
        CHECK(verify_parallel(hs, r));
    }

    TEST_CASE("two similarity classes") {
        TermRef one = trivial_term(3);
        TermRef e = make_term("e", {RatFun(), RatFun(), R("1")});
        std::vector<HElement> f{HElement(R("1/x1"), one), HElement(R("1"), e)};
        auto r = paratele_compatible(f);
        CHECK(r.l == O("Dt"));
        CHECK(r.minimal);
        CHECK(verify_parallel(f, r));
    }

    TEST_CASE("exact systems have order zero") {
        Random rnd(31337);
        for (int iter = 0; iter < 10; ++iter) {
            TermRef h = rnd.term(3);
            RatFun u(rnd.poly(3, 3, 3), rnd.poly(3, 2, 3));
            HElement q(u, h);
            std::vector<HElement> f{d_apply(q, 1), d_apply(q, 2)};
            auto r = paratele_compatible(f);
            CHECK(r.l == OreOp(1));
            CHECK(d_apply(r.g - q, 1).is_zero());
            CHECK(d_apply(r.g - q, 2).is_zero());
        }
    }

    TEST_CASE("zero inputs") {
        TermRef one = trivial_term(3);
        auto r = paratele_similar({RatFun(), R("1/x2")}, one);
        CHECK(r.l == O("Dt"));
        CHECK(verify_parallel(over({RatFun(), R("1/x2")}, one), r));
        CHECK(paratele_similar({RatFun(), RatFun()}, one).l == OreOp(1));
    }

    TEST_CASE("random log-potential families") {
        Random rnd(2718);
        int nontrivial = 0;
        for (int iter = 0; iter < 8; ++iter) {
            TermRef h = rnd.t_term(3);
            std::vector<RatFun> coeffs = rnd.log_family(3, h);
            auto f = over(coeffs, h);
            auto r = paratele_compatible(f);
            CHECK(verify_parallel(f, r));
            CHECK(r.minimal);
            if (r.l.order() > 0) {
                ++nontrivial;
                CHECK_FALSE(oracle_lower(rnd, coeffs, *h, r.l.order() - 1));
            }
            // Every single-input minimal telescoper right-divides L.
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i].is_zero()) continue;
                OreOp li = min_telescoper(f[i], int(i) + 1).l;
                CHECK(right_divmod(r.l, li).remainder.is_zero());
            }
            OreOp extra = O("Dt^2 + t*Dt + 1/t");
            CHECK(verify_parallel(f, {extra * r.l, op_apply(extra, r.g), false}));
            CHECK(right_divmod(extra * r.l, r.l).remainder.is_zero());
            // Presentation through a similar term.
            RatFun q(rnd.poly(3, 1, 2), rnd.poly(3, 1, 2));
            std::vector<RatFun> logd = h->logd();
            for (int v = 0; v < 3; ++v) logd[std::size_t(v)] += derive(q, v) / q;
            std::vector<RatFun> shifted;
            for (const auto& c : coeffs) shifted.push_back(c / q);
            CHECK(paratele_similar(shifted, make_term("hq", logd)).l.normalized() == r.l.normalized());
        }
        CHECK(nontrivial > 0);
    }
}
