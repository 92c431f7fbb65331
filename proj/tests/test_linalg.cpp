#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgahom/linalg.hpp"
#include "dgahom/map.hpp"
#include "dgahom/models.hpp"
#include "testutil.hpp"

using namespace dgahom;

TEST_CASE("rank-nullity on every model differential") {
    for (const auto& id : builtin_model_ids()) {
        const FreeCDGA& a = *builtin_model(id).algebra;
        for (unsigned n = 0; n + 1 <= a.truncation_degree(); ++n) {
            QMatrix d = d_matrix(a, n);
            CHECK(rank(d) + nullspace(d).size() == d.cols());
        }
    }
}

TEST_CASE("sphere cohomology dimensions") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    std::vector<std::size_t> expect = {1, 0, 0, 0, 1, 0, 0, 0};
    for (unsigned n = 0; n + 1 <= 8; ++n) {
        CohomologySpace h = cohomology(s4, n);
        CHECK(h.dimension == expect[n]);
    }
    CohomologySpace h4 = cohomology(s4, 4);
    REQUIRE(h4.dimension == 1);
    CHECK(h4.representatives[0] == s4.gen_element("a"));
    CHECK(cohomology(s4, 0).representatives[0] == s4.unit());
    CHECK_THROWS_AS(cohomology(s4, 8), DegreeOutOfRangeError);
}

TEST_CASE("Kunneth dimensions for the product model") {
    const FreeCDGA& m = *builtin_model("s3xs4").algebra;
    std::vector<std::size_t> expect = {1, 0, 0, 1, 1, 0, 0, 1};  // degrees 0..7
    for (unsigned n = 0; n <= 7; ++n) CHECK(cohomology(m, n).dimension == expect[n]);
}

TEST_CASE("projection kills exact elements and is the identity on representatives") {
    const FreeCDGA& m = *builtin_model("s3xs4").algebra;
    CohomologySpace h7 = cohomology(m, 7);
    REQUIRE(h7.dimension == 1);
    Element xy = m.gen_element("x") * m.gen_element("y");
    auto coords = h7.project(xy);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] == 1);
    // a representative shifted by an exact element projects identically
    const FreeCDGA& w = *builtin_model("s3x(s4vs4)").algebra;
    CohomologySpace wh8 = cohomology(w, 7);
    (void)wh8;
    CohomologySpace wh7 = cohomology(w, 7);
    REQUIRE(wh7.dimension == 2);
    Element rep = w.gen_element("x") * w.gen_element("y2");
    auto c2 = wh7.project(rep);
    CHECK(((c2[0] == 0 && c2[1] == 1) || (c2[0] == 1 && c2[1] == 0)));
}

TEST_CASE("solve_d picks deterministic antiderivatives") {
    const FreeCDGA& m = *builtin_model("s3xs4").algebra;
    Element y = m.gen_element("y");
    CHECK(solve_d(m, y * y) == m.gen_element("z"));

    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    Element a = s4.gen_element("a");
    CHECK(solve_d(s4, a * a) == s4.gen_element("b"));
    CHECK_THROWS_AS(solve_d(s4, a), NotExactError);
}

TEST_CASE("solve_d solves randomized coboundaries") {
    testutil::Rng rng(3);
    const FreeCDGA& m = *builtin_model("s3x(s4vs4)").algebra;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<unsigned> deg(1, m.truncation_degree() - 1);
        Element x = testutil::random_homogeneous(m, deg(rng), rng);
        Element b = differential(x);
        if (b.is_zero()) continue;
        Element solved = solve_d(m, b);
        CHECK(differential(solved) == b);
    }
}

TEST_CASE("relative cohomology of the identity cone is trivial") {
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    DGAMap id = DGAMap::identity(s4);
    for (unsigned n = 1; n + 1 <= 8; ++n) CHECK(relative_cohomology(id, n).dimension == 0);
}

TEST_CASE("relative cohomology examples") {
    // free algebra on one degree-4 generator, mapped to the ground field
    auto a4 = parse_model("gen a 4\nd a = 0\n", 9, "free-a4");
    auto ground = parse_model("", 9, "ground");
    DGAMap to_ground = DGAMap::zero(*a4, *ground);
    CHECK(relative_cohomology(to_ground, 4).dimension == 1);

    // inclusion <a> -> M_{S^4}: in degree 8 the cone class (a^2, b) survives,
    // matching the long exact sequence with H^8(S^4) = 0
    auto s4big = parse_model(
        "gen a 4\n"
        "gen b 7\n"
        "d a = 0\n"
        "d b = a^2\n",
        9, "s4-deg9");
    auto a4b = parse_model("gen a 4\nd a = 0\n", 9, "free-a4-bis");
    DGAMap incl(a4b.get(), s4big.get(), {s4big->gen_element("a")});
    REQUIRE(incl.valid());
    ConeCohomology h8 = relative_cohomology(incl, 8);
    CHECK(h8.dimension == 1);
    // long exact sequence rank bookkeeping around degree 8:
    // H^7(B) -> H^8(cone) -> H^8(A) -> H^8(B) with dims 0, ?, 1, 0
    CHECK(cohomology(*s4big, 7).dimension == 0);
    CHECK(cohomology(*a4b, 8).dimension == 1);
    CHECK(cohomology(*s4big, 8).dimension == 0);
}

TEST_CASE("long exact sequence alternating sums vanish on model cones") {
    // for phi: A -> B, sum of (-1)^n [dim H^n(A) - dim H^n(B) - dim H^n(cone)]
    // telescopes; check exactness-style rank identities degreewise:
    // dim H^n(cone) = dim ker(H^n A -> H^n B) + dim coker(H^{n-1} A -> H^{n-1} B)
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    const FreeCDGA& w = *builtin_model("s3x(s4vs4)").algebra;
    Element im_a = w.gen_element("y1") + Rat(2) * w.gen_element("y2");
    Element im_b = solve_d(w, im_a * im_a);
    DGAMap phi(&s4, &w, {im_a, im_b});
    REQUIRE(phi.valid());
    for (unsigned n = 1; n + 1 <= 7; ++n) {
        CohomologySpace ha = cohomology(s4, n);
        CohomologySpace hb = cohomology(w, n);
        CohomologySpace ha1 = cohomology(s4, n == 0 ? 0 : n - 1);
        CohomologySpace hb1 = cohomology(w, n == 0 ? 0 : n - 1);
        // induced map on H^n and H^{n-1}
        auto induced_rank = [&](const CohomologySpace& src, const CohomologySpace& dst) {
            if (src.dimension == 0 || dst.dimension == 0) return std::size_t(0);
            std::vector<std::vector<Rat>> cols;
            for (const auto& r : src.representatives) cols.push_back(dst.project(phi.apply(r)));
            QMatrix m(dst.dimension, cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t i = 0; i < dst.dimension; ++i) m.at(i, j) = cols[j][i];
            return rank(m);
        };
        std::size_t rk_n = induced_rank(ha, hb);
        std::size_t rk_n1 = induced_rank(ha1, hb1);
        std::size_t expect = (ha.dimension - rk_n) + (hb1.dimension - rk_n1);
        CHECK(relative_cohomology(phi, n).dimension == expect);
    }
}

TEST_CASE("smith normal form and lattice quotients") {
    ZMatrix m(1, 1);
    m.at(0, 0) = 14;
    auto q = integer_normal_form(m);
    CHECK(q.finite());
    CHECK(q.order() == 14);

    ZMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    auto qi = integer_normal_form(id);
    CHECK(qi.order() == 1);

    ZMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    auto qd = integer_normal_form(d);
    REQUIRE(qd.invariant_factors.size() == 2);
    CHECK(qd.invariant_factors[0] == 1);
    CHECK(qd.invariant_factors[1] == 6);
    CHECK(qd.order() == 6);

    ZMatrix rect(2, 1);
    rect.at(0, 0) = 5;
    auto qr = integer_normal_form(rect);
    CHECK_FALSE(qr.finite());
    CHECK(qr.rank_deficit == 1);
}

TEST_CASE("smith normal form order equals |det| on random square matrices") {
    testutil::Rng rng(17);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = trial % 2 == 0 ? 2 : 3;
        ZMatrix m(n, n);
        QMatrix qm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int e = entry(rng);
                m.at(i, j) = e;
                qm.at(i, j) = e;
            }
        // independent oracle: fraction-free determinant via rational elimination
        Rat det = 1;
        {
            QMatrix a = qm;
            bool singular = false;
            for (std::size_t col = 0, row = 0; col < n && row < n; ++col, ++row) {
                std::size_t p = row;
                while (p < n && a.at(p, col) == 0) ++p;
                if (p == n) {
                    singular = true;
                    break;
                }
                if (p != row) {
                    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(row, j));
                    det = -det;
                }
                det *= a.at(row, col);
                for (std::size_t i = row + 1; i < n; ++i) {
                    Rat f = a.at(i, col) / a.at(row, col);
                    for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
                }
            }
            if (singular) det = 0;
        }
        auto q = integer_normal_form(m);
        if (det == 0) {
            CHECK_FALSE(q.finite());
        } else {
            REQUIRE(q.finite());
            CHECK(Rat(q.order()) == abs_rat(det));
        }
        // divisibility chain
        for (std::size_t k = 0; k + 1 < q.invariant_factors.size(); ++k)
            CHECK(q.invariant_factors[k + 1] % q.invariant_factors[k] == 0);
    }
}

TEST_CASE("coset_norm_min basics") {
    CHECK(coset_norm_min({Rat(3)}, {}) == 3);
    CHECK(coset_norm_min({Rat(3)}, {{Rat(1)}}) == 0);
    CHECK(coset_norm_min({Rat(1), Rat(1)}, {{Rat(1), Rat(-1)}}) == 1);
    CHECK(coset_norm_min({Rat(5), Rat(-5)}, {{Rat(1), Rat(1)}}) == 5);
    CHECK(coset_norm_min({Rat(2), Rat(0), Rat(0)}, {{Rat(1), Rat(1), Rat(0)}}) == 1);
}

TEST_CASE("coset_norm_min agrees with a candidate-vertex oracle") {
    // oracle: the minimum of max_i |v_i + (S l)_i| is attained where several
    // coordinates tie; solve all pairs of tie equations for 1..2 lambdas.
    testutil::Rng rng(23);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t dim = 3;
        std::size_t k = 1 + (trial % 2);
        std::vector<Rat> v(dim);
        for (auto& c : v) c = entry(rng);
        // spans in general position: full row rank keeps the minimization
        // coercive, so the tie-point candidate set below is complete
        std::vector<std::vector<Rat>> span;
        do {
            span.assign(k, std::vector<Rat>(dim));
            for (auto& row : span)
                for (auto& c : row) c = entry(rng);
        } while (rank(QMatrix::from_columns(span, dim)) < k);

        Rat best;
        bool have = false;
        auto consider = [&](const std::vector<Rat>& lambda) {
            Rat worst = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                Rat x = v[i];
                for (std::size_t j = 0; j < k; ++j) x += lambda[j] * span[j][i];
                Rat a = abs_rat(x);
                if (a > worst) worst = a;
            }
            if (!have || worst < best) {
                best = worst;
                have = true;
            }
        };
        consider(std::vector<Rat>(k, Rat(0)));
        if (k == 1) {
            // ties |v_i + l s_i| = |v_j + l s_j| over sign choices
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    for (int si = -1; si <= 1; si += 2)
                        for (int sj = -1; sj <= 1; sj += 2) {
                            // si (v_i + l s_i) = sj (v_j + l s_j)
                            Rat a = Rat(si) * span[0][i] - Rat(sj) * span[0][j];
                            Rat b = Rat(sj) * v[j] - Rat(si) * v[i];
                            if (a != 0) consider({b / a});
                        }
            // stationary points where a single coordinate vanishes
            for (std::size_t i = 0; i < dim; ++i)
                if (span[0][i] != 0) consider({-v[i] / span[0][i]});
        } else {
            // solve 2x2 tie systems over coordinate pairs and signs
            for (std::size_t i1 = 0; i1 < dim; ++i1)
                for (std::size_t i2 = 0; i2 < dim; ++i2)
                    for (std::size_t i3 = 0; i3 < dim; ++i3)
                        for (int s1 = -1; s1 <= 1; s1 += 2)
                            for (int s2 = -1; s2 <= 1; s2 += 2)
                                for (int s3 = -1; s3 <= 1; s3 += 2) {
                                    // s1 row(i1) = s2 row(i2), s1 row(i1) = s3 row(i3)
                                    QMatrix m(2, 2);
                                    std::vector<Rat> rhs(2);
                                    for (std::size_t j = 0; j < 2; ++j) {
                                        m.at(0, j) =
                                            Rat(s1) * span[j][i1] - Rat(s2) * span[j][i2];
                                        m.at(1, j) =
                                            Rat(s1) * span[j][i1] - Rat(s3) * span[j][i3];
                                    }
                                    rhs[0] = Rat(s2) * v[i2] - Rat(s1) * v[i1];
                                    rhs[1] = Rat(s3) * v[i3] - Rat(s1) * v[i1];
                                    auto sol = solve(m, rhs);
                                    if (sol) consider(*sol);
                                }
        }
        CHECK(coset_norm_min(v, span) == best);
    }
}
