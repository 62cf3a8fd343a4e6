#include <doctest.h>

#include "ptel/errors.hpp"
#include "ptel/paratele.hpp"
#include "ptel/ppv.hpp"
#include "support.hpp"

using namespace ptel;
using namespace ptel::test;

namespace {

// The operator between "(" and ")(a)" of a group description.
std::string group_operator(const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(")(a)");
    REQUIRE(open != std::string::npos);
    REQUIRE(close != std::string::npos);
    return text.substr(open + 1, close - open - 1);
}

bool certifies(const std::vector<RatFun>& f, const PpvResult& r) {
    TermRef one = trivial_term(3);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!(op_apply(r.l, HElement(f[i], one)) == HElement(derive(r.g, int(i) + 1), one))) return false;
    return true;
}

}  // namespace

TEST_SUITE("ppv") {
    TEST_CASE("rational system with a second-order group") {
        std::vector<RatFun> f{R("t/(x1+x2+t)"), R("(t*x2+t^2+x1+x2+t)/((x1+x2+t)*(x2+t))")};
        auto r = ppv_defining_operator(f, vars2());
        CHECK(render(r.l, vars2()) == "t*Dt^2");
        CHECK(r.monic == O("Dt^2"));
        CHECK(r.group_description == "{ a ∈ F : (Dt^2)(a) = 0 }");
        CHECK(certifies(f, r));
        CHECK(r.l.in_kt());
    }

    TEST_CASE("exact system has the trivial group") {
        RatFun q = R("(t^2+x1)/(x2-t*x1)");
        std::vector<RatFun> f{derive(q, 1), derive(q, 2)};
        auto r = ppv_defining_operator(f, vars2());
        CHECK(r.l == OreOp(1));
        CHECK(derive(r.g - q, 1).is_zero());
        CHECK(derive(r.g - q, 2).is_zero());
        CHECK(r.group_description == "{ a ∈ F : (1)(a) = 0 }");
    }

    TEST_CASE("single equation") {
        auto r = ppv_defining_operator({R("1/x1")}, vars2());
        CHECK(r.l == O("Dt"));
        CHECK(certifies({R("1/x1")}, r));
    }

    TEST_CASE("incompatible system") {
        CHECK_THROWS_AS(ppv_defining_operator({R("x2"), R("0")}, vars2()), IncompatibleSystem);
        CHECK_THROWS_AS(ppv_defining_operator({}, vars2()), InputError);
    }

    TEST_CASE("random systems: agreement, certificate and group round trip") {
        Random rnd(1618);
        TermRef one = trivial_term(3);
        for (int iter = 0; iter < 10; ++iter) {
            RatFun u(rnd.poly(3, 2, 3), rnd.poly(3, 2, 2));
            MPoly p = rnd.nonconstant_poly(3, 2, 2);
            std::vector<RatFun> f;
            for (int v = 1; v <= 2; ++v) f.push_back(derive(u, v) + RatFun(p.derivative(v), p));
            auto r = ppv_defining_operator(f, vars2());
            CHECK(certifies(f, r));
            CHECK(r.l.in_kt());
            CHECK(r.l == paratele_compatible({HElement(f[0], one), HElement(f[1], one)}).l);
            CHECK(O(group_operator(r.group_description)) == r.monic);
        }
    }
}
