#include <doctest.h>

#include "ptel/errors.hpp"
#include "ptel/hyperexp.hpp"
#include "ptel/residues.hpp"
#include "support.hpp"

using namespace ptel;
using namespace ptel::test;

namespace {

std::vector<RatFun> shifted(const std::vector<RatFun>& logd, const RatFun& q) {
    std::vector<RatFun> out = logd;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += derive(q, int(v)) / q;
    return out;
}

}  // namespace

TEST_SUITE("hyperexp") {
    TEST_CASE("derivation examples") {
        TermRef h = sqrt_term();
        CHECK(d_apply(HElement(), 1).is_zero());
        CHECK(d_apply(HElement(R("1"), h), 0) == HElement(R("-1/(2*t)"), h));
        HElement diff = d_apply(HElement(R(kC1), h), 2) - d_apply(HElement(R(kC2), h), 1);
        CHECK(diff == HElement(R("-1"), h));
        REQUIRE(diff.parts().size() == 1);
        CHECK(diff.parts()[0].coeff == R("-1"));
    }

    TEST_CASE("operator application examples") {
        TermRef h = sqrt_term();
        CHECK(op_apply(O("2*t*Dt + 1"), HElement(R("-1"), h)).is_zero());
        HElement e(R(kC1), h);
        CHECK(op_apply(OreOp(1), e) == e);
        TermRef one = trivial_term(3);
        HElement f1(R("t/(x1+x2+t)"), one);
        HElement lhs = op_apply(O("t*Dt - 1"), f1);
        CHECK(lhs == HElement(R("-t^2/(x1+x2+t)^2"), one));
        CHECK(lhs == d_apply(HElement(R("t^2/(x1+x2+t)"), one), 1));
    }

    TEST_CASE("similarity examples") {
        TermRef h = sqrt_term();
        auto self = is_similar(*h, *h);
        REQUIRE(self);
        CHECK(self->is_one());

        RatFun q = R("t/(x1+1)");
        std::vector<RatFun> base{R("x2 + 1/t"), R("1/(x1+x2)"), R("t + 1/(x1+x2)")};
        REQUIRE(is_integrable(base));
        TermRef h1 = make_term("h1", base), h2 = make_term("h2", shifted(base, q));
        auto found = is_similar(*h2, *h1);
        REQUIRE(found);
        RatFun ratio = *found / q;
        CHECK(ratio.is_constant());
        for (int v = 0; v < 3; ++v) CHECK(derive(*found, v) == (h2->r(v) - h1->r(v)) * *found);

        TermRef ex1 = make_term("e", {RatFun(), R("1"), RatFun()});
        CHECK(!is_similar(*ex1, *trivial_term(3)));
        CHECK(!is_similar(*trivial_term(3), *ex1));
    }

    TEST_CASE("split_log_derivative examples") {
        auto a = split_log_derivative(R("-1/(2*t)"));
        REQUIRE(a);
        CHECK(a->p.is_one());
        CHECK(a->r == R("-1/(2*t)"));
        auto b = split_log_derivative(R("1/(t+x1+x2)"));
        REQUIRE(b);
        CHECK(b->p == P("t+x1+x2"));
        CHECK(b->r.is_zero());
        CHECK(!split_log_derivative(R("x1/(t-1)")));
        auto c = split_log_derivative(R("2/(t+x1) + 2*t/(t^2-x2) + 3 + 1/(2*t)"));
        REQUIRE(c);
        CHECK(c->p == P("(t+x1)^2*(t^2-x2)"));
        CHECK(c->r == R("3 + 1/(2*t)"));
        CHECK(!split_log_derivative(R("-1/(t+x1)")));
        CHECK(!split_log_derivative(R("1/(t+x1)^2")));
        CHECK(!split_log_derivative(R("x1")));
    }

    TEST_CASE("log-derivative preimages with several residues") {
        auto q = log_derivative_preimage(R("1/(t+x1) + 2/(t-x1) - 3/(t^2+x2)*2*t"), 0);
        REQUIRE(q);
        CHECK(*q == R("(t+x1)*(t-x1)^2/(t^2+x2)^3"));
        CHECK(!log_derivative_preimage(R("1/(t+x1) + 1/2/(t-x1)"), 0));
        CHECK(!log_derivative_preimage(R("x2/(t+x1)"), 0));
        CHECK(!log_derivative_preimage(R("t/(t+x1)"), 0));
    }

    TEST_CASE("kt_annihilator examples") {
        TermRef h = sqrt_term();
        auto p = kt_annihilator(HElement(R("-1"), h));
        REQUIRE(p);
        CHECK(*p == O("2*t*Dt + 1"));
        auto z = kt_annihilator(HElement());
        REQUIRE(z);
        CHECK(*z == OreOp(1));
        TermRef etx = make_term("E", {R("x1"), R("t"), RatFun()});
        CHECK(!kt_annihilator(HElement(R("1"), etx)));
        HElement two = HElement(R("1"), h) + HElement(R("1"), etx);
        CHECK_THROWS_AS(kt_annihilator(two), MultiPartElement);
    }

    TEST_CASE("similarity class examples") {
        TermRef h = sqrt_term();
        CHECK(similarity_classes({HElement(R(kC1), h), HElement(R(kC2), h)}).size() == 1);
        TermRef one = trivial_term(3), ex1 = make_term("e", {RatFun(), R("1"), RatFun()});
        CHECK(similarity_classes({HElement(R("1"), one), HElement(R("1"), ex1)}).size() == 2);
        TermRef hidden = make_term("g", shifted(one->logd(), R("(t+x2)/(x1-3)")));
        auto classes = similarity_classes({HElement(R("1"), one), HElement(R("x1"), ex1), HElement(R("t"), hidden)});
        REQUIRE(classes.size() == 2);
        CHECK(classes[0].size() == 2);
        CHECK(classes[0][1] == hidden);
    }

    TEST_CASE("non-integrable vectors are rejected") {
        CHECK_THROWS_AS(make_term("bad", {R("x1"), RatFun(), RatFun()}), InputError);
        CHECK(is_integrable({R("x1"), R("t"), RatFun()}));
    }

    TEST_CASE("module laws on random elements") {
        Random rnd(555);
        for (int iter = 0; iter < 25; ++iter) {
            TermRef h = rnd.term(3);
            CHECK(is_integrable(h->logd()));
            HElement e(rnd.ratfun(3, 2, 2), h), f(rnd.ratfun(3, 2, 2), h);
            CHECK(d_apply(d_apply(e, 0), 1) == d_apply(d_apply(e, 1), 0));
            CHECK(d_apply(d_apply(e, 1), 2) == d_apply(d_apply(e, 2), 1));
            OreOp a = O(render(OreOp({RatFun(rnd.poly(1, 2, 2)), RatFun(rnd.poly(2, 1, 2))}), vars2()));
            OreOp b = OreOp({RatFun(rnd.poly(1, 1, 2)), RatFun(1), RatFun(rnd.poly(1, 1, 1))});
            CHECK(op_apply(a * b, e) == op_apply(a, op_apply(b, e)));
            CHECK(op_apply(a, e + f) == op_apply(a, e) + op_apply(a, f));
            RatFun c(rnd.small_rat());
            CHECK(op_apply(a, c * e) == c * op_apply(a, e));
        }
    }

    TEST_CASE("similarity is an equivalence on random families") {
        Random rnd(8080);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<RatFun> seed = rnd.logd(3);
            RatFun q1 = rnd.ratfun(3, 2, 2), q2 = rnd.ratfun(3, 2, 2);
            TermRef h0 = make_term("h0", seed), h1 = make_term("h1", shifted(seed, q1)),
                    h2 = make_term("h2", shifted(shifted(seed, q1), q2));
            auto a = is_similar(*h1, *h0), b = is_similar(*h2, *h1), c = is_similar(*h2, *h0), ai = is_similar(*h0, *h1);
            REQUIRE(a);
            REQUIRE(b);
            REQUIRE(c);
            REQUIRE(ai);
            CHECK((*a / q1).is_constant());
            CHECK(*ai == 1 / *a);
            CHECK(*c == *a * *b);
            // Merging over similar terms keeps a single part.
            HElement m = HElement(R("1"), h0) + HElement(R("1"), h2);
            CHECK(m.parts().size() <= 1);
        }
    }

    TEST_CASE("split and annihilator properties") {
        Random rnd(424242);
        int successes = 0;
        for (int iter = 0; iter < 30; ++iter) {
            TermRef h = rnd.term(3, "h", false);
            HElement e(rnd.ratfun(3, 2, 2), h);
            const HPart& part = e.parts().front();
            RatFun rt = derive(part.coeff, 0) / part.coeff + h->r(0);
            auto split = split_log_derivative(rt);
            if (split) {
                CHECK(derive(RatFun(split->p), 0) / RatFun(split->p) + split->r == rt);
                CHECK(is_in_kt(split->r));
            }
            auto l = kt_annihilator(e);
            CHECK(bool(l) == bool(split));
            if (l) {
                ++successes;
                CHECK(l->in_kt());
                CHECK(op_apply(*l, e).is_zero());
            }
        }
        CHECK(successes > 5);
    }
}
