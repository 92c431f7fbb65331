#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgahom/cdga.hpp"
#include "dgahom/models.hpp"
#include "testutil.hpp"

using namespace dgahom;

TEST_CASE("odd generators square to zero") {
    const FreeCDGA& s3 = *builtin_model("s3").algebra;
    Element x = s3.gen_element("x");
    CHECK((x * x).is_zero());
}

TEST_CASE("even generator squares survive") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element a = s4.gen_element("a");
    Element a2 = a * a;
    REQUIRE(a2.terms().size() == 1);
    CHECK(a2.terms()[0].second == 1);
    CHECK(a2.degree() == 8u);
}

TEST_CASE("Koszul sign on a degree-4 triple product") {
    // three even generators of degree 4: (y1 y2) * y1 = y1^2 y2 with sign +1
    auto alg = parse_model(
        "gen y1 4\n"
        "gen y2 4\n"
        "gen y3 4\n",
        12, "evens");
    Element y1 = alg->gen_element("y1"), y2 = alg->gen_element("y2");
    Element lhs = (y1 * y2) * y1;
    Element expected = alg->make({{Monomial({{0, 2}, {1, 1}}), Rat(1)}});
    CHECK(lhs == expected);
}

TEST_CASE("Koszul sign for odd generators") {
    auto alg = parse_model(
        "gen u 3\n"
        "gen v 3\n",
        8, "odds");
    Element u = alg->gen_element("u"), v = alg->gen_element("v");
    CHECK(v * u == -(u * v));
    CHECK((u * v) * u == alg->zero());
}

TEST_CASE("differential of builtin models") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element b = s4.gen_element("b");
    CHECK(differential(b) == s4.gen_element("a") * s4.gen_element("a"));
    CHECK(differential(s4.unit()).is_zero());

    const FreeCDGA& x = *builtin_model("s3x(s4vs4)").algebra;
    CHECK(differential(x.gen_element("z12")) ==
          x.gen_element("y1") * x.gen_element("y2"));
}

TEST_CASE("basis enumeration matches an independent multiset enumerator") {
    // independent oracle: odometer over exponent vectors
    auto enumerate = [](const FreeCDGA& a, unsigned n) {
        std::vector<Monomial> out;
        unsigned g = a.generator_count();
        std::vector<unsigned> exps(g, 0);
        while (true) {
            unsigned deg = 0;
            bool ok = true;
            for (unsigned i = 0; i < g; ++i) {
                deg += exps[i] * a.generators()[i].degree;
                if (a.generators()[i].degree % 2 == 1 && exps[i] > 1) ok = false;
            }
            if (ok && deg == n) {
                std::vector<Monomial::Factor> f;
                for (unsigned i = 0; i < g; ++i)
                    if (exps[i]) f.emplace_back(i, exps[i]);
                out.emplace_back(std::move(f));
            }
            // odometer step, capped per-generator exponent
            unsigned i = 0;
            for (; i < g; ++i) {
                unsigned cap = n / a.generators()[i].degree + 1;
                if (++exps[i] <= cap) break;
                exps[i] = 0;
            }
            if (i == g) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    for (const auto& id : builtin_model_ids()) {
        const FreeCDGA& a = *builtin_model(id).algebra;
        for (unsigned n = 0; n <= a.truncation_degree(); ++n)
            CHECK(a.basis(n) == enumerate(a, n));
    }

    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    CHECK(s4.basis(8) == std::vector<Monomial>{Monomial({{0, 2}})});
    CHECK(s4.basis(0) == std::vector<Monomial>{Monomial::unit()});
    // degree 11 would hold a*b but the algebra is truncated at 8
    CHECK_THROWS_AS(s4.basis(11), DegreeOutOfRangeError);
}

TEST_CASE("graded commutativity and Leibniz, randomized") {
    testutil::Rng rng(7);
    const FreeCDGA& alg = *builtin_model("s3x(s4vs4)").algebra;
    std::uniform_int_distribution<unsigned> deg(0, alg.truncation_degree());
    for (int trial = 0; trial < 1200; ++trial) {
        unsigned du = deg(rng), dv = deg(rng);
        Element u = testutil::random_homogeneous(alg, du, rng);
        Element v = testutil::random_homogeneous(alg, dv, rng);
        Rat sign = (du * dv) % 2 == 0 ? 1 : -1;
        CHECK(u * v == sign * (v * u));
        CHECK(differential(u * v) ==
              differential(u) * v + (du % 2 == 0 ? Rat(1) : Rat(-1)) * (u * differential(v)));
        CHECK(differential(differential(u)).is_zero());
    }
}

TEST_CASE("check_cdga reports violations") {
    CHECK(check_cdga(*builtin_model("s4").algebra).valid());

    // degree mismatch: db = a needs deg(a) = deg(b) + 1
    auto bad = FreeCDGA::create({{"a", 4, {}}, {"b", 7, {}}}, 8);
    bad->set_differential(1, bad->gen_element("a"));
    CHECK_FALSE(bad->check().valid());
    CHECK_THROWS_AS(bad->freeze(), ValidationError);

    // da = b violates the introduction order
    auto bad2 = FreeCDGA::create({{"a", 4, {}}, {"b", 5, {}}}, 8);
    bad2->set_differential(0, bad2->gen_element("b"));
    CHECK_FALSE(bad2->check().valid());

    auto ok = FreeCDGA::create({{"v", 4, {}}, {"u", 3, {}}}, 8);
    // du = v is a valid (non-minimal) differential once ordered correctly
    ok->set_differential(1, ok->gen_element("v"));
    CHECK(ok->check().valid());
}

TEST_CASE("truncation overflow flag is sticky") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element a = s4.gen_element("a");
    Element b = s4.gen_element("b");
    Element over = a * b;  // degree 11 > 8
    CHECK(over.is_zero());
    CHECK(over.truncation_overflow());
    CHECK((over + a).truncation_overflow());
    CHECK_FALSE((a * a).truncation_overflow());
}

TEST_CASE("mixed algebra operands are rejected") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    const FreeCDGA& s3 = *builtin_model("s3").algebra;
    CHECK_THROWS_AS(s4.multiply(s4.gen_element("a"), s3.gen_element("x")), MixedAlgebraError);
}

TEST_CASE("model format round trip is canonical") {
    testutil::Rng rng(11);
    for (const auto& id : builtin_model_ids()) {
        const FreeCDGA& a = *builtin_model(id).algebra;
        std::string text = write_model(a);
        auto reparsed = parse_model(text, a.truncation_degree(), a.label());
        CHECK(write_model(*reparsed) == text);
        CHECK(reparsed->generator_count() == a.generator_count());
        for (unsigned g = 0; g < a.generator_count(); ++g) {
            CHECK(reparsed->generators()[g].name == a.generators()[g].name);
            CHECK(reparsed->generators()[g].degree == a.generators()[g].degree);
            CHECK(reparsed->generators()[g].weight == a.generators()[g].weight);
            CHECK(reparsed->differential_of(g).to_string() ==
                  a.differential_of(g).to_string());
        }
    }
    // rational coefficients round trip
    auto m = parse_model(
        "gen a 2\n"
        "gen b 3\n"
        "d b = -3/2*a^2\n",
        8, "frac");
    CHECK(write_model(*m) == write_model(*parse_model(write_model(*m), 8, "frac")));
    CHECK(m->differential_of(1) == Rat(-3, 2) * (m->gen_element("a") * m->gen_element("a")));
}

TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS_AS(parse_model("gen a 0\n", 8), ValidationError);
    CHECK_THROWS_AS(parse_model("gen a 4\nd a = q\n", 8), ParseError);
    CHECK_THROWS_AS(parse_model("nonsense\n", 8), ParseError);
}

TEST_CASE("extension order groups same-degree runs") {
    const auto& m = builtin_model("s3x(s4vs4)");
    REQUIRE(m.extension_order.size() == 3);
    CHECK(m.extension_order[0].degree == 3);
    CHECK(m.extension_order[1].degree == 4);
    CHECK(m.extension_order[1].gen_indices.size() == 2);
    CHECK(m.extension_order[2].degree == 7);
    CHECK(m.extension_order[2].gen_indices.size() == 3);
}
