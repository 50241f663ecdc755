#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/algebra.hpp>
#include <catalg/constructions.hpp>
#include <catalg/field.hpp>

#include "fixtures.hpp"

using namespace catalg;

TEST_CASE("preset algebras satisfy the axioms") {
    CHECK(validate_algebra(field_algebra<Rational>()).empty());
    CHECK(validate_algebra(product_of_fields<Rational>(3)).empty());
    CHECK(validate_algebra(matrix_algebra<Rational>(2)).empty());
    CHECK(validate_algebra(cyclic_group_algebra<Rational>(4)).empty());
}

TEST_CASE("validate_algebra names the broken axiom") {
    auto a = product_of_fields<Rational>(2);
    SUBCASE("broken unit") {
        a.unit = {Rational(1), Rational(0)};
        CHECK_FALSE(validate_algebra(a).empty());
    }
    SUBCASE("broken associativity") {
        a.struct_consts[0][1] = {Rational(0), Rational(1)}; // e1 e2 := e2
        auto report = validate_algebra(a);
        CHECK_FALSE(report.empty());
    }
}

TEST_CASE("left and right multiplication matrices match the product") {
    auto a = matrix_algebra<Rational>(2);
    Vec<Rational> u = unit_vec<Rational>(4, 1); // E12
    Vec<Rational> v = unit_vec<Rational>(4, 2); // E21
    CHECK(a.left_mult(u).apply(v) == a.multiply(u, v));
    CHECK(a.right_mult(v).apply(u) == a.multiply(u, v));
    CHECK(a.multiply(u, v) == unit_vec<Rational>(4, 0)); // E12 E21 = E11
}

TEST_CASE("homomorphism validation") {
    auto k2 = product_of_fields<Rational>(2);
    auto k = field_algebra<Rational>();
    Matrix<Rational> proj(1, 2);
    proj(0, 0) = Rational(1);
    AlgebraHom<Rational> h{&k2, &k, proj};
    CHECK(validate_hom(h).empty());
    proj(0, 1) = Rational(1); // e1 + e2 -> 2, no longer multiplicative
    AlgebraHom<Rational> bad{&k2, &k, proj};
    CHECK_FALSE(validate_hom(bad).empty());
}

TEST_CASE("fixture precosheaves validate") {
    CHECK(validate_precosheaf(fx::example43b<Rational>().S).empty());
    CHECK(validate_precosheaf(fx::monoid_c2<Rational>().S).empty());
    CHECK(validate_precosheaf(fx::groupoid_c2_to_triv<Rational>().S).empty());
    CHECK(validate_precosheaf(fx::poset_chain3<Rational>().S).empty());
    CHECK(validate_precosheaf(fx::parallel_collapse<Rational>().S).empty());
}

TEST_CASE("precosheaf validation localizes failures") {
    auto s = fx::example43b<Rational>().S;
    s.mor_map[3](0, 0) = Rational(1); // f2 no longer a hom (nor functorial)
    auto report = validate_precosheaf(s);
    REQUIRE_FALSE(report.empty());
    bool names_f2 = false;
    for (const auto& line : report)
        if (line.find("f2") != std::string::npos) names_f2 = true;
    CHECK(names_f2);
}

TEST_CASE("precosheaf to module round trip recovers everything") {
    auto run = [](const catalg::Precosheaf<Rational>& s) {
        auto m = precosheaf_to_module(s);
        CHECK(validate_module(m).empty());
        auto back = module_to_precosheaf(m);
        REQUIRE(back.dims.size() == s.obj_alg.size());
        for (std::size_t x = 0; x < s.obj_alg.size(); ++x)
            CHECK(back.dims[x] == s.obj_alg[x].dim());
        REQUIRE(back.mor_map.size() == s.mor_map.size());
        for (std::size_t f = 0; f < s.mor_map.size(); ++f)
            CHECK(back.mor_map[f] == s.mor_map[f]);
    };
    run(fx::example43b<Rational>().S);
    run(fx::monoid_c2<Rational>().S);
    run(fx::groupoid_c2_to_triv<Rational>().S);
    run(fx::poset_chain3<Rational>().S);
    run(fx::parallel_collapse<Rational>().S);
}

TEST_CASE("graded validation flags stray components") {
    auto fixture = fx::example43b<Rational>();
    GradedAlgebra<Rational> g;
    g.algebra = category_algebra<Rational>(fixture.F.source);
    g.grading_category = fixture.F.source;
    for (std::size_t f = 0; f < 4; ++f) g.degree.push_back(f);
    CHECK(validate_graded(g).empty());
    g.algebra.struct_consts[2][0][1] = Rational(1); // f1 * 1x gains a 1y part
    CHECK_FALSE(validate_graded(g).empty());
}
