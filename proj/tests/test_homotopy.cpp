#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgahom/homotopy.hpp"
#include "dgahom/models.hpp"
#include "testutil.hpp"

using namespace dgahom;

TEST_CASE("fiberwise integration formulas") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element a = s4.gen_element("a");  // degree 4, even

    CHECK(int_0_t(IntervalElement::dt_term(a)) == IntervalElement::from_element(a, 1));
    CHECK(int_0_t(IntervalElement::from_element(a, 3)).is_zero());
    CHECK(int_0_1(IntervalElement::dt_term(a, 2)) == Rat(1, 3) * a);
    CHECK(int_0_1(IntervalElement::from_element(a, 2)).is_zero());

    const FreeCDGA& s3 = *builtin_model("s3").algebra;
    Element x = s3.gen_element("x");  // degree 3, odd: sign (-1)^{deg} applies
    CHECK(int_0_t(IntervalElement::dt_term(x)) ==
          Rat(-1) * IntervalElement::from_element(x, 1));
    CHECK(int_0_1(IntervalElement::dt_term(x)) == -x);
}

TEST_CASE("Stokes identities hold exactly on random interval elements") {
    for (const auto& id : builtin_model_ids()) {
        const FreeCDGA& alg = *builtin_model(id).algebra;
        testutil::Rng rng(101);
        for (int trial = 0; trial < 250; ++trial) {
            IntervalElement u = testutil::random_interval(alg, rng);
            // d(int_0^t u) + int_0^t du = u - u|_0 (x) 1
            IntervalElement lhs1 = interval_differential(int_0_t(u)) + int_0_t(interval_differential(u));
            IntervalElement rhs1 = u - IntervalElement::from_element(u.restrict(0));
            CHECK(lhs1 == rhs1);
            // d(int_0^1 u) + int_0^1 du = u|_1 - u|_0
            Element lhs2 = alg.differential(int_0_1(u)) + int_0_1(interval_differential(u));
            Element rhs2 = u.restrict(1) - u.restrict(0);
            CHECK(lhs2 == rhs2);
        }
    }
}

TEST_CASE("constant homotopies restrict to their map") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    const FreeCDGA& w = *builtin_model("s3xs4").algebra;
    Element ia = Rat(2) * w.gen_element("y");
    Element ib = solve_d(w, ia * ia);
    DGAMap f(&s4, &w, {ia, ib});
    REQUIRE(f.valid());
    Homotopy h = Homotopy::constant(f);
    CHECK(is_homotopy(h, f, f));
    CHECK(h.restrict(0) == f);
    CHECK(h.restrict(1) == f);
    // endpoints that disagree are rejected
    DGAMap g(&s4, &w, {w.zero(), w.zero()});
    CHECK_FALSE(is_homotopy(h, f, g));
}

TEST_CASE("interval algebra is associative and d squares to zero") {
    testutil::Rng rng(5);
    const FreeCDGA& alg = *builtin_model("s3x(s4vs4)").algebra;
    std::uniform_int_distribution<unsigned> deg(0, alg.truncation_degree());
    std::uniform_int_distribution<unsigned> pow(0, 2);
    auto small_interval = [&]() {
        IntervalElement u(&alg);
        u = u + IntervalElement::from_element(testutil::random_homogeneous(alg, deg(rng), rng),
                                              pow(rng));
        u = u + IntervalElement::dt_term(testutil::random_homogeneous(alg, deg(rng), rng),
                                         pow(rng));
        return u;
    };
    for (int trial = 0; trial < 60; ++trial) {
        IntervalElement u = small_interval();
        IntervalElement v = small_interval();
        IntervalElement w = small_interval();
        CHECK((u * v) * w == u * (v * w));
        CHECK(interval_differential(interval_differential(u)).is_zero());
    }
}

TEST_CASE("example-2 homotopy shape validates only on the line") {
    // H(a) = a1 y1 + a2 y2 + p x dt, H(b) = z-part + (b1 - 2 p a1 t) x y1 + ...
    const FreeCDGA& w = *builtin_model("s3x(s4vs4)").algebra;
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element y1 = w.gen_element("y1"), y2 = w.gen_element("y2"), x = w.gen_element("x");

    auto hom = [&](Rat a1, Rat a2, Rat b1, Rat b2) {
        Element ia = a1 * y1 + a2 * y2;
        Element ib = solve_d(w, ia * ia) + b1 * (x * y1) + b2 * (x * y2);
        return DGAMap(&s4, &w, {ia, ib});
    };

    // on the line: (b1, b2) = 2p (a1, a2) for rational p
    Rat a1 = 3, a2 = 2, p = Rat(1, 2);
    Rat b1 = 2 * p * a1, b2 = 2 * p * a2;
    DGAMap f = hom(a1, a2, b1, b2);  // Hopf data (b1, b2)
    DGAMap g = hom(a1, a2, 0, 0);
    REQUIRE(f.valid());
    REQUIRE(g.valid());

    IntervalElement Ha = IntervalElement::from_element(a1 * y1 + a2 * y2) +
                         IntervalElement::dt_term(p * x);
    IntervalElement Hb =
        IntervalElement::from_element(solve_d(w, (a1 * y1 + a2 * y2) * (a1 * y1 + a2 * y2))) +
        IntervalElement::from_element(b1 * (x * y1) + b2 * (x * y2)) +
        IntervalElement::from_element(Rat(-2) * p * a1 * (x * y1) + Rat(-2) * p * a2 * (x * y2), 1);
    Homotopy H(&s4, &w, {Ha, Hb});
    CHECK(is_homotopy(H, f, g));

    // off the line the same shape cannot satisfy the chain condition
    DGAMap f_bad = hom(a1, a2, 1, 0);  // a1 b2 != a2 b1
    bool found = false;
    for (int num = -6; num <= 6 && !found; ++num) {
        Rat q(num, 2);
        IntervalElement Ba = IntervalElement::from_element(a1 * y1 + a2 * y2) +
                             IntervalElement::dt_term(q * x);
        IntervalElement Bb =
            IntervalElement::from_element(f_bad.image(1)) +
            IntervalElement::from_element(Rat(-2) * q * a1 * (x * y1) + Rat(-2) * q * a2 * (x * y2),
                                          1);
        Homotopy B(&s4, &w, {Ba, Bb});
        if (is_homotopy(B, f_bad, hom(a1, a2, 0, 0))) found = true;
    }
    CHECK_FALSE(found);
}

TEST_CASE("boxplus adds eta componentwise") {
    const FreeCDGA& w = *builtin_model("s3xs4").algebra;
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element y = w.gen_element("y"), x = w.gen_element("x");
    DGAMap phi(&s4, &w, {Rat(3) * y, solve_d(w, Rat(9) * (y * y))});
    REQUIRE(phi.valid());

    // level-1 classes over the 4-stage: eta(a) in degree 3
    ClassElement f1(phi, 1, {x, w.zero()});
    ClassElement f2(phi, 1, {x, w.zero()});
    ClassElement sum = boxplus(f1, f2);
    CHECK(sum.eta()[0] == Rat(2) * x);

    ClassElement zero(phi, 1, {w.zero(), w.zero()});
    CHECK(boxplus(f1, zero).eta()[0] == x);
    CHECK(boxplus(f1, f2).eta()[0] == boxplus(f2, f1).eta()[0]);

    DGAMap other(&s4, &w, {Rat(2) * y, solve_d(w, Rat(4) * (y * y))});
    ClassElement g(other, 1, {x, w.zero()});
    CHECK_THROWS_AS(boxplus(f1, g), BaseMismatchError);
    ClassElement lvl4(phi, 4, {w.unit(), w.zero()});
    CHECK_THROWS_AS(boxplus(f1, lvl4), LevelMismatchError);
}

TEST_CASE("iota_k expands eta through the twisted Leibniz rule") {
    const FreeCDGA& w = *builtin_model("s3xs4").algebra;
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    // level classes live over the degree-4 stage <a> of the codomain model
    auto stage = prefix_algebra(s4, 1);
    Element y = w.gen_element("y"), x = w.gen_element("x");
    Rat alpha = 5;
    DGAMap phi(stage.get(), &w, {alpha * y});
    REQUIRE(phi.valid());

    ClassElement f(phi, 1, {x});
    REQUIRE(f.valid());
    // V = {b} with db = a^2: eta(a^2) = 2 alpha x y
    Element db = transport_prefix(s4.differential_of(1), *stage);
    auto cochain = iota_k(f, {db});
    REQUIRE(cochain.size() == 1);
    CHECK(cochain[0] == Rat(2) * alpha * (x * y));

    // linearity: doubling eta doubles the cochain
    ClassElement f2(phi, 1, {Rat(2) * x});
    CHECK(iota_k(f2, {db})[0] == Rat(2) * cochain[0]);

    // zero eta gives the zero cochain
    ClassElement z(phi, 1, {w.zero()});
    CHECK(iota_k(z, {db})[0].is_zero());

    // group homomorphism under boxplus
    CHECK(iota_k(boxplus(f, f2), {db})[0] == cochain[0] + iota_k(f2, {db})[0]);
}

TEST_CASE("weight scaling endomorphisms") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    DGAMap idm = weight_scaling(s4, Rat(1));
    CHECK(idm == DGAMap::identity(s4));

    DGAMap t3 = weight_scaling(s4, Rat(3));
    CHECK(t3.image(0) == Rat(3) * s4.gen_element("a"));
    CHECK(t3.image(1) == Rat(9) * s4.gen_element("b"));
    CHECK(t3.valid());

    // composition law phi_s . phi_t = phi_{st}
    testutil::Rng rng(9);
    for (int i = 0; i < 25; ++i) {
        Rat s = testutil::random_rat(rng);
        Rat t = testutil::random_rat(rng);
        if (s == 0 || t == 0) continue;
        CHECK(compose(weight_scaling(s4, s), weight_scaling(s4, t)) ==
              weight_scaling(s4, s * t));
    }

    // weights (1,1) make db = a^2 inhomogeneous
    auto bad = parse_model(
        "gen a 4 1\n"
        "gen b 7 1\n"
        "d a = 0\n"
        "d b = a^2\n",
        8, "bad-weights");
    CHECK_THROWS_AS(weight_scaling(*bad, Rat(2)), WeightInhomogeneousDifferentialError);

    auto unweighted = parse_model("gen a 4\nd a = 0\n", 8, "none");
    CHECK_THROWS_AS(weight_scaling(*unweighted, Rat(2)), MissingWeightsError);
}

TEST_CASE("t-power cap rejects runaway polynomials") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element a = s4.gen_element("a");
    CHECK_THROWS_AS(IntervalElement::from_element(a, t_power_cap() + 1), TPowerCapError);
    IntervalElement high = IntervalElement::from_element(s4.unit(), t_power_cap());
    CHECK_THROWS_AS(high * IntervalElement::from_element(s4.unit(), 1), TPowerCapError);
}
