#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/field.hpp>
#include <catalg/matrix.hpp>

#include <random>

using namespace catalg;

namespace {
bool gfp_ready = [] { GFp::set_modulus(101); return true; }();

template <typename K>
Matrix<K> from_ints(std::size_t rows, std::size_t cols, std::vector<int> entries) {
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = K(entries[i * cols + j]);
    return m;
}
} // namespace

TEST_CASE("scalar parsing handles integers and fractions") {
    CHECK(parse_scalar<Rational>("-3/2") == Rational(-3) / 2);
    CHECK(parse_scalar<Rational>("7") == Rational(7));
    CHECK(parse_scalar<GFp>("-1") == GFp(100));
    CHECK(parse_scalar<GFp>("1/2") == GFp(51)); // 2 * 51 = 102 = 1 mod 101
    CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<Rational>("2x"), std::invalid_argument);
    CHECK_THROWS_AS(GFp::set_modulus(100), std::invalid_argument);
}

TEST_CASE("rank and kernel satisfy rank-nullity") {
    auto m = from_ints<Rational>(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0});
    CHECK(rank(m) == 2);
    auto ker = kernel(m);
    CHECK(ker.dim() == 2);
    for (const auto& v : ker.basis()) CHECK(is_zero_vec(m.apply(v)));
    CHECK(image(m).dim() == 2);
}

TEST_CASE("randomized rank-nullity over both fields") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> entries(4 * 6);
        for (auto& e : entries) e = bit(rng);
        auto mq = from_ints<Rational>(4, 6, entries);
        auto mp = from_ints<GFp>(4, 6, entries);
        CHECK(rank(mq) + kernel(mq).dim() == 6);
        CHECK(rank(mp) + kernel(mp).dim() == 6);
        // all 4x4 minors of a 0/1 matrix are below 101 in absolute value,
        // so the ranks agree on the nose
        CHECK(rank(mq) == rank(mp));
    }
}

TEST_CASE("subspace membership and coordinates") {
    Subspace<Rational> s(3, {{Rational(1), Rational(1), Rational(0)},
                             {Rational(0), Rational(2), Rational(2)}});
    CHECK(s.dim() == 2);
    Vec<Rational> v{Rational(2), Rational(3), Rational(1)};
    REQUIRE(s.contains(v));
    CHECK(s.from_coordinates(*s.coordinates(v)) == v);
    CHECK_FALSE(s.contains({Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("intersection of coordinate planes is the axis") {
    Subspace<Rational> a(3, {{Rational(1), Rational(0), Rational(0)},
                             {Rational(0), Rational(1), Rational(0)}});
    Subspace<Rational> b(3, {{Rational(0), Rational(1), Rational(0)},
                             {Rational(0), Rational(0), Rational(1)}});
    auto both = a.intersect(b);
    CHECK(both.dim() == 1);
    CHECK(both.contains({Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("quotient map sections the projection") {
    Subspace<Rational> n(3, {{Rational(1), Rational(1), Rational(1)}});
    auto qm = quotient_map(3, n);
    REQUIRE(qm.proj.rows() == 2);
    CHECK(qm.proj * qm.section == Matrix<Rational>::identity(2));
    for (const auto& v : n.basis()) CHECK(is_zero_vec(qm.proj.apply(v)));
    CHECK(kernel(qm.proj).dim() == 1);
}

TEST_CASE("simultaneous fixed space of the swap is the diagonal") {
    auto swap = from_ints<Rational>(2, 2, {0, 1, 1, 0});
    auto fixed = simultaneous_fixed_space<Rational>({swap}, 2);
    CHECK(fixed.dim() == 1);
    CHECK(fixed.contains({Rational(1), Rational(1)}));
    CHECK(simultaneous_fixed_space<Rational>({}, 2).dim() == 2);
}
