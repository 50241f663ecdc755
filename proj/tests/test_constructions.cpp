#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/constructions.hpp>
#include <catalg/field.hpp>

#include "fixtures.hpp"

using namespace catalg;

TEST_CASE("category algebra of the four-morphism source") {
    auto d = fx::example43b<Rational>().F.source;
    auto a = category_algebra<Rational>(d);
    REQUIRE(a.dim() == 4);
    CHECK(validate_algebra(a).empty());
    // f2 * f1 = f1, f2 * f2 = 1y, f1 * f2 = 0 (not composable)
    CHECK(a.multiply(unit_vec<Rational>(4, 3), unit_vec<Rational>(4, 2)) ==
          unit_vec<Rational>(4, 2));
    CHECK(a.multiply(unit_vec<Rational>(4, 3), unit_vec<Rational>(4, 3)) ==
          unit_vec<Rational>(4, 1));
    CHECK(is_zero_vec(a.multiply(unit_vec<Rational>(4, 2), unit_vec<Rational>(4, 3))));
    CHECK(a.unit == Vec<Rational>{Rational(1), Rational(1), Rational(0), Rational(0)});
}

TEST_CASE("skew category algebra is a graded algebra of the right size") {
    auto s = fx::example43b<Rational>().S;
    auto skew = skew_category_algebra(s);
    CHECK(skew.algebra.dim() == 8);
    CHECK(validate_algebra(skew.algebra).empty());
    CHECK(validate_graded(skew).empty());

    // (f2, e1) * (f1, e2): S(f2)(e2) = e1, e1 . e1 = e1, degree f2 o f1 = f1
    auto sb = skew_basis(s);
    Vec<Rational> prod = skew.algebra.multiply(unit_vec<Rational>(8, sb.index(3, 0)),
                                               unit_vec<Rational>(8, sb.index(2, 1)));
    CHECK(prod == unit_vec<Rational>(8, sb.index(2, 0)));
}

TEST_CASE("object tensor algebra multiplies componentwise") {
    auto s = fx::example43b<Rational>().S;
    auto t = object_tensor_algebra(s);
    REQUIRE(t.dim() == 4);
    CHECK(validate_algebra(t).empty());
    ObjectTensorBasis<Rational> tb(s);
    // (e1 (x) e2) * (e1 (x) e1) = e1 (x) 0 = 0
    CHECK(is_zero_vec(t.multiply(unit_vec<Rational>(4, tb.index({0, 1})),
                                 unit_vec<Rational>(4, tb.index({0, 0})))));
    CHECK(t.multiply(unit_vec<Rational>(4, tb.index({0, 1})),
                     unit_vec<Rational>(4, tb.index({0, 1}))) ==
          unit_vec<Rational>(4, tb.index({0, 1})));
}

TEST_CASE("the structure twisting map passes all axioms on every fixture") {
    auto run = [](const catalg::Precosheaf<Rational>& s) {
        TwistedSetup<Rational> setup;
        build_paper_twisting_map(s, setup);
        CHECK(validate_twisting_map(setup.twist).empty());
    };
    run(fx::example43b<Rational>().S);
    run(fx::monoid_c2<Rational>().S);
    run(fx::poset_chain3<Rational>().S);
    run(fx::groupoid_c2_to_triv<Rational>().S);
    run(fx::parallel_collapse<Rational>().S);
}

TEST_CASE("the flip is a twisting map and a broken map is rejected") {
    auto a = product_of_fields<Rational>(2);
    auto b = cyclic_group_algebra<Rational>(2);
    auto flip = flip_twisting_map(a, b);
    CHECK(validate_twisting_map(flip).empty());
    CHECK(validate_algebra(twisted_tensor_product(flip)).empty());

    flip.map(0, 0) += Rational(1); // break a unit axiom
    CHECK_FALSE(validate_twisting_map(flip).empty());
    CHECK_THROWS_AS(twisted_tensor_product(flip), std::invalid_argument);
}

TEST_CASE("twisted tensor product and the skew embedding") {
    auto run = [](const fx::Fixture<Rational>& fixture, bool expect_bijective) {
        const auto& s = fixture.S;
        TwistedSetup<Rational> setup;
        build_paper_twisting_map(s, setup);
        auto twisted = twisted_tensor_product(setup.twist);
        CHECK(validate_algebra(twisted).empty());

        auto skew = skew_category_algebra(s);
        auto emb = psi_embedding(s);
        AlgebraHom<Rational> psi_hom{&skew.algebra, &twisted, emb.psi};
        CHECK(validate_hom(psi_hom).empty());
        CHECK(rank(emb.psi) == skew.algebra.dim());
        CHECK(emb.phi * emb.psi == Matrix<Rational>::identity(skew.algebra.dim()));
        if (expect_bijective) {
            CHECK(skew.algebra.dim() == twisted.dim());
            CHECK(rank(emb.psi) == twisted.dim());
        }
    };
    run(fx::example43b<Rational>(), false);
    run(fx::monoid_c2<Rational>(), true); // one object: the embedding is onto
    run(fx::poset_chain3<Rational>(), false);
}

TEST_CASE("diagonal comultiplication is multiplicative but not unital") {
    auto d = fx::example43b<Rational>().F.source;
    auto report = check_weak_bialgebra_unit_failure<Rational>(d);
    CHECK(report.delta_multiplicative);
    CHECK_FALSE(report.unit_axiom_holds);

    auto one_object = fx::monoid_c2<Rational>().F.source;
    auto ok = check_weak_bialgebra_unit_failure<Rational>(one_object);
    CHECK(ok.delta_multiplicative);
    CHECK(ok.unit_axiom_holds);
}
