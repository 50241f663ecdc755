#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/field.hpp>
#include <catalg/fincat.hpp>

#include "fixtures.hpp"

#include <algorithm>

using namespace catalg;

namespace {
bool contains_substr(const ValidationReport& r, const std::string& needle) {
    return std::any_of(r.begin(), r.end(), [&](const std::string& line) {
        return line.find(needle) != std::string::npos;
    });
}
} // namespace

TEST_CASE("fixture categories and functors validate") {
    auto check = [](const Functor& F) {
        CHECK(validate_category(F.source).empty());
        CHECK(validate_category(F.target).empty());
        CHECK(validate_functor(F).empty());
    };
    check(fx::example43b<Rational>().F);
    check(fx::monoid_c2<Rational>().F);
    check(fx::groupoid_c2_to_triv<Rational>().F);
    check(fx::poset_chain3<Rational>().F);
    check(fx::parallel_collapse<Rational>().F);
}

TEST_CASE("category validation names the broken axiom and witnesses") {
    auto d = fx::example43b<Rational>().F.source;

    SUBCASE("missing composite") {
        d.comp.erase({3, 2});
        CHECK(contains_substr(validate_category(d), "missing composite f2 o f1"));
    }
    SUBCASE("wrong composite breaks associativity") {
        d.comp[{3, 2}] = 1; // f2 o f1 := 1y has the wrong domain
        auto report = validate_category(d);
        CHECK(contains_substr(report, "f2 o f1"));
        CHECK_FALSE(report.empty());
    }
    SUBCASE("composite on a non-composable pair") {
        d.comp[{2, 1}] = 2; // f1 o 1y is not composable (1y ends at y)
        CHECK(contains_substr(validate_category(d), "non-composable pair"));
    }
    SUBCASE("identity law violation") {
        d.comp[{1, 3}] = 1; // 1y o f2 := 1y
        CHECK(contains_substr(validate_category(d), "left identity law fails for f2"));
    }
}

TEST_CASE("functor validation catches structure violations") {
    auto F = fx::example43b<Rational>().F;
    SUBCASE("composition not preserved") {
        F.mor_map[3] = 2; // send f2 to f1', breaking dom/cod
        CHECK_FALSE(validate_functor(F).empty());
    }
    SUBCASE("identity not preserved") {
        F.mor_map[0] = 1;
        CHECK(contains_substr(validate_functor(F), "identity not preserved"));
    }
}

TEST_CASE("functor traits on the fixtures") {
    auto t = functor_traits(fx::example43b<Rational>().F);
    CHECK(t.injective_on_objects);
    CHECK(t.surjective_on_morphisms);
    CHECK_FALSE(t.injective_on_morphisms);

    auto id = functor_traits(fx::poset_chain3<Rational>().F);
    CHECK(id.injective_on_morphisms);
    CHECK(id.surjective_on_objects);
}

TEST_CASE("fiber partition groups morphisms with the same image") {
    auto F = fx::example43b<Rational>().F;
    auto p = sim_partition(F);
    REQUIRE(p.classes.size() == 3);
    CHECK(p.class_of[1] == p.class_of[3]); // 1y and f2 both land on 1y'
    CHECK(p.class_of[0] != p.class_of[2]);

    auto idy = id_class(F, 1);
    CHECK(idy == std::vector<std::size_t>{1, 3});
    CHECK(id_class(F, 0) == std::vector<std::size_t>{0});
}

TEST_CASE("class-equality condition holds and fails where expected") {
    CHECK(check_condition_423(fx::example43b<Rational>().F).holds);
    CHECK(check_condition_423(fx::monoid_c2<Rational>().F).holds);
    CHECK(check_condition_423(fx::groupoid_c2_to_triv<Rational>().F).holds);
    CHECK(check_condition_423(fx::poset_chain3<Rational>().F).holds);

    auto report = check_condition_423(fx::parallel_collapse<Rational>().F);
    REQUIRE_FALSE(report.holds);
    REQUIRE_FALSE(report.witnesses.empty());
    const auto& w = report.witnesses.front();
    CHECK((w.morphism == "f" || w.morphism == "g"));
    CHECK(w.fiber_class == std::vector<std::string>{"f", "g"});
    CHECK(w.composite_class.size() == 1);
}

TEST_CASE("induction profile is enforced") {
    Functor not_surjective = fx::example43b<Rational>().F;
    not_surjective.source = not_surjective.target;
    not_surjective.obj_map = {0, 1};
    not_surjective.mor_map = {0, 1, 2};
    CHECK(validate_functor(not_surjective).empty());
    // drop f1' from the image by sending it to an identity: no longer a functor,
    // so instead restrict the source to identities only
    Functor partial;
    partial.source = point_category();
    partial.target = fx::example43b<Rational>().F.target;
    partial.obj_map = {0};
    partial.mor_map = {0};
    CHECK_THROWS_AS(require_induction_profile(partial), std::invalid_argument);
}

TEST_CASE("opposite category is an involution") {
    auto d = fx::poset_chain3<Rational>().F.source;
    auto op = opposite_category(d);
    CHECK(validate_category(op).empty());
    CHECK(op.dom(3) == 1);
    CHECK(op.cod(3) == 0);
    auto back = opposite_category(op);
    CHECK(back.comp == d.comp);
}
