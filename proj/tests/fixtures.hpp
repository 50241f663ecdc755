// Concrete functor + precosheaf instances used across the test suite.
// These are built directly in C++ so they can serve as oracles for the
// workbench parser and the bundled fixture files.
#pragma once

#include <array>

#include <catalg/algebra.hpp>
#include <catalg/fincat.hpp>
#include <catalg/matrix.hpp>

namespace fx {

using catalg::FinCategory;
using catalg::Functor;
using catalg::Matrix;

template <typename K>
struct Fixture {
    Functor F;
    catalg::Precosheaf<K> S;
};

inline FinCategory make_category(std::vector<std::string> objects,
                                 std::vector<FinCategory::Morphism> morphisms,
                                 std::vector<std::size_t> identities,
                                 std::vector<std::array<std::size_t, 3>> composites) {
    FinCategory c;
    c.objects = std::move(objects);
    c.morphisms = std::move(morphisms);
    c.identities = std::move(identities);
    catalg::add_identity_composites(c);
    for (auto [g, f, gf] : composites) c.comp[{g, f}] = gf;
    return c;
}

template <typename K>
Matrix<K> mat(std::size_t rows, std::size_t cols, std::vector<int> entries) {
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = K(entries[i * cols + j]);
    return m;
}

/// Two-object source with a non-identity endomorphism f2 of y collapsed
/// onto the identity; the k x k precosheaf with f2 acting as the swap.
template <typename K>
Fixture<K> example43b() {
    FinCategory d = make_category(
        {"x", "y"},
        {{"1x", 0, 0}, {"1y", 1, 1}, {"f1", 0, 1}, {"f2", 1, 1}},
        {0, 1},
        {{3, 2, 2}, {3, 3, 1}}); // f2 o f1 = f1, f2 o f2 = 1y
    FinCategory c = make_category(
        {"x'", "y'"},
        {{"1x'", 0, 0}, {"1y'", 1, 1}, {"f1'", 0, 1}},
        {0, 1}, {});
    Fixture<K> out;
    out.F = Functor{d, c, {0, 1}, {0, 1, 2, 1}};
    out.S.category = d;
    out.S.obj_alg = {catalg::product_of_fields<K>(2), catalg::product_of_fields<K>(2)};
    out.S.mor_map = {Matrix<K>::identity(2), Matrix<K>::identity(2),
                     mat<K>(2, 2, {1, 0, 1, 0}), mat<K>(2, 2, {0, 1, 1, 0})};
    return out;
}

/// One-object monoid C2 with the identity functor; k x k with the swap.
template <typename K>
Fixture<K> monoid_c2() {
    FinCategory d = make_category(
        {"x"}, {{"1", 0, 0}, {"g", 0, 0}}, {0}, {{1, 1, 0}});
    Fixture<K> out;
    out.F = catalg::identity_functor(d);
    out.S.category = d;
    out.S.obj_alg = {catalg::product_of_fields<K>(2)};
    out.S.mor_map = {Matrix<K>::identity(2), mat<K>(2, 2, {0, 1, 1, 0})};
    return out;
}

/// The same C2, collapsed onto the one-object one-morphism category.
template <typename K>
Fixture<K> groupoid_c2_to_triv() {
    FinCategory d = make_category(
        {"x"}, {{"1", 0, 0}, {"g", 0, 0}}, {0}, {{1, 1, 0}});
    FinCategory c = make_category({"x'"}, {{"1x'", 0, 0}}, {0}, {});
    Fixture<K> out;
    out.F = Functor{d, c, {0}, {0, 0}};
    out.S.category = d;
    out.S.obj_alg = {catalg::product_of_fields<K>(2)};
    out.S.mor_map = {Matrix<K>::identity(2), mat<K>(2, 2, {0, 1, 1, 0})};
    return out;
}

/// Chain x <= y <= z with the identity functor; k x k at the bottom,
/// k above, the unique composite filled in.
template <typename K>
Fixture<K> poset_chain3() {
    FinCategory d = make_category(
        {"x", "y", "z"},
        {{"1x", 0, 0}, {"1y", 1, 1}, {"1z", 2, 2}, {"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}},
        {0, 1, 2},
        {{4, 3, 5}}); // b o a = c
    Fixture<K> out;
    out.F = catalg::identity_functor(d);
    out.S.category = d;
    out.S.obj_alg = {catalg::product_of_fields<K>(2), catalg::field_algebra<K>(),
                     catalg::field_algebra<K>()};
    out.S.mor_map = {Matrix<K>::identity(2), Matrix<K>::identity(1), Matrix<K>::identity(1),
                     mat<K>(1, 2, {1, 0}), mat<K>(1, 1, {1}), mat<K>(1, 2, {1, 0})};
    return out;
}

/// Two parallel arrows collapsed onto one: the class-equality condition
/// fails, which gates off the quotient construction.
template <typename K>
Fixture<K> parallel_collapse() {
    FinCategory d = make_category(
        {"x", "y"},
        {{"1x", 0, 0}, {"1y", 1, 1}, {"f", 0, 1}, {"g", 0, 1}},
        {0, 1}, {});
    FinCategory c = make_category(
        {"x'", "y'"},
        {{"1x'", 0, 0}, {"1y'", 1, 1}, {"h", 0, 1}},
        {0, 1}, {});
    Fixture<K> out;
    out.F = Functor{d, c, {0, 1}, {0, 1, 2, 2}};
    out.S = catalg::constant_precosheaf<K>(d);
    return out;
}

} // namespace fx
