#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgahom/growth.hpp"
#include "testutil.hpp"

#include <set>

using namespace dgahom;

TEST_CASE("torsion counts flow through the lattice quotient") {
    CHECK(torsion_count(1).count == 2);
    CHECK(torsion_count(5).count == 10);
    CHECK(torsion_count(-3).count == 6);
    CHECK(torsion_count(0).unbounded);
    for (long d = 1; d <= 20; ++d) {
        TorsionCount t = torsion_count(d);
        REQUIRE_FALSE(t.unbounded);
        CHECK(t.count == 2 * d);
    }
}

TEST_CASE("density counts by exact enumeration") {
    CHECK(density_count(1, 0, Rat(3)) == 7);
    CHECK(density_count(1, 1, Rat(1)) == 5);
    CHECK_THROWS_AS(density_count(0, 0, Rat(2)), DegenerateDirectionError);

    // monotone in R, symmetric under negation and coordinate swap
    testutil::Rng rng(31);
    std::uniform_int_distribution<long> a(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        long a1 = a(rng), a2 = a(rng);
        if (a1 == 0 && a2 == 0) continue;
        Int c5 = density_count(a1, a2, Rat(5));
        Int c8 = density_count(a1, a2, Rat(8));
        CHECK(c5 <= c8);
        CHECK(density_count(-a1, -a2, Rat(5)) == c5);
        CHECK(density_count(a2, a1, Rat(5)) == c5);
    }
}

TEST_CASE("growth counts: the closed form and the totient identity") {
    GrowthReport d1 = growth_count(1);
    CHECK(d1.count == 2);
    GrowthReport d2 = growth_count(2);
    CHECK(d2.count == 24);
    REQUIRE(d2.terms.size() == 3);
    CHECK(d2.terms[0] == 8);
    CHECK(d2.terms[1] == 8);
    CHECK(d2.terms[2] == 8);

    for (long D : {1L, 2L, 3L, 7L, 25L, 100L, 200L}) {
        GrowthReport r = growth_count(D, true);
        REQUIRE(r.oracle.has_value());
        CHECK(r.count == *r.oracle);
    }
}

TEST_CASE("totient table matches the definition") {
    auto phi = totient_table(200);
    for (long n = 1; n <= 200; ++n) {
        long count = 0;
        for (long k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        CHECK(phi[n] == count);
    }
}

TEST_CASE("gcd proportions sit inside the stated bounds") {
    GcdProportion p = gcd_proportion_bounds(10, 1);
    CHECK(p.observed == Rat(63, 100));
    CHECK(p.ok);

    GcdProportion pk = gcd_proportion_bounds(7, 7);
    CHECK(pk.observed == Rat(1, 49));
    CHECK(pk.ok);

    GcdProportion p7 = gcd_proportion_bounds(10000, 7);
    CHECK(p7.observed <= Rat(1, 49));
    CHECK(p7.ok);
}

TEST_CASE("ball count bound evaluation") {
    BallBoundInput trivial{{0, 0}, {{}, {}}, Rat(5)};
    CHECK(ball_count_bound(trivial) == 1);

    BallBoundInput one{{1}, {{Rat(1), Rat(2)}}, Rat(3)};  // R * (1 + 2R)
    CHECK(ball_count_bound(one) == Rat(21));

    BallBoundInput bad{{1}, {{Rat(1), Rat(-2)}}, Rat(3)};
    CHECK_THROWS_AS(ball_count_bound(bad), ValidationError);
}

TEST_CASE("ball bound dominates the enumerated class count") {
    // stage data for [S^3 x S^4, S^4]: two one-dimensional cohomology stages,
    // with the degree-7 fiber bounded by a linear polynomial
    for (long r = 1; r <= 20; ++r) {
        BallBoundInput in{{1, 1}, {{Rat(1), Rat(2)}, {Rat(1), Rat(2)}}, Rat(r)};
        Rat bound = ball_count_bound(in);
        Int count = product_pair_ball_count(Rat(r));
        CHECK(Rat(count) <= bound);
    }
}

TEST_CASE("lipschitz proxy scales like the degree root") {
    const FreeCDGA& x = *builtin_model("s3xs4").algebra;
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    RepresentativeSpace w = construct_W(x, builtin_model("s4"));

    DGAMap zero = DGAMap::zero(s4, x);
    CHECK(lipschitz_proxy(zero, w) == NthRoot{Rat(0), 1});

    Element y = x.gen_element("y");
    for (long d : {2L, 5L, 16L}) {
        DGAMap phi(&s4, &x, {Rat(d) * y, solve_d(x, Rat(d * d) * (y * y))});
        REQUIRE(phi.valid());
        NthRoot proxy = lipschitz_proxy(phi, w);
        // the degree-4 data scales as d^{1/4}, but the forced degree-7 image
        // d^2 z dominates: max(d^{1/4}, (d^2)^{1/7}) = (d^2)^{1/7} for d >= 2
        CHECK(proxy == NthRoot{Rat(d * d), 7});
        CHECK(NthRoot{Rat(d), 4} < proxy);
        CHECK(proxy.approx() == doctest::Approx(std::pow(double(d * d), 1.0 / 7)));
    }

    // a Hopf-invariant-only map scales as h^{1/7}
    Element xy = x.gen_element("x") * y;
    DGAMap hopf(&s4, &x, {x.zero(), Rat(9) * xy});
    REQUIRE(hopf.valid());
    CHECK(lipschitz_proxy(hopf, w) == NthRoot{Rat(9), 7});

    // exact comparisons through cross powers: 2^{1/4} < 9^{1/7} iff 2^7 < 9^4
    CHECK(NthRoot{Rat(2), 4} < NthRoot{Rat(9), 7});
    CHECK_FALSE(NthRoot{Rat(9), 7} < NthRoot{Rat(2), 4});
}

TEST_CASE("growth report serialization") {
    GrowthReport r = growth_count(2, true);
    std::string j = growth_report_json(r);
    CHECK(j.find("\"count\":\"24\"") != std::string::npos);
    CHECK(growth_report_csv(r) == "2,24,8,8,8,24");
}
