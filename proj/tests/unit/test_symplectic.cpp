#include <doctest.h>

#include "qoperad/error.hpp"
#include "qoperad/symplectic.hpp"

using namespace qoperad;

TEST_CASE("vector space arithmetic is base-p big-endian") {
    const VectorSpace v{3, 2};
    CHECK(v.size() == 9);
    // (1, 2) + (2, 2) = (0, 1).
    CHECK(v.add(5, 8) == 1);
    CHECK(v.add(v.neg(7), 7) == 0);
}

TEST_CASE("omega grids") {
    const AlmostSymplectic black(2, 1, {2, 2, 2, 2});
    const auto g = omega_to_grid(black);
    CHECK(g.cell_colors(1) == std::vector<unsigned>{1, 1, 1, 1});
    CHECK(g.arity() == 0);
    CHECK(grid_to_omega(g, 1) == black);
    CHECK_THROWS_AS(AlmostSymplectic(2, 1, {2, 0, 0, 0}), Error);
    CHECK_THROWS_AS(AlmostSymplectic(2, 1, {1, 2, 2, 2}), Error);
}

TEST_CASE("algebra action 4x4 fixture") {
    const LittleSquareTuple quarter({RationalRect{0, Rational(1, 2), 0, Rational(1, 2)}});
    const std::vector<AlmostSymplectic> black{AlmostSymplectic(2, 1, {2, 2, 2, 2})};
    const auto all = algebra_action(quarter, black);
    CHECK(all.exponent() == 2);
    CHECK(all.table() == std::vector<unsigned>(16, 2));
    const std::vector<AlmostSymplectic> diag{AlmostSymplectic(2, 1, {0, 2, 2, 0})};
    CHECK(algebra_action(quarter, diag).table() ==
          std::vector<unsigned>{0, 2, 2, 2, 2, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("action errors") {
    const std::vector<AlmostSymplectic> one{AlmostSymplectic(2, 1, {2, 2, 2, 2})};
    try {
        algebra_action(LittleSquareTuple::identity(), one);
        FAIL("expected NotStrict");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotStrict);
    }
    const auto sq = ColoredPArySquare::from_tuple(3, LittleSquareTuple({RationalRect{0, Rational(1, 3), 0, Rational(1, 3)}}));
    try {
        algebra_action(sq, one);
        FAIL("expected PrimeMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::PrimeMismatch);
    }
}

TEST_CASE("Hochschild coboundary") {
    const VectorSpace v{3, 2};
    std::vector<unsigned> bilinear(81), constant(81, 2);
    for (std::size_t u = 0; u < 9; ++u)
        for (std::size_t w = 0; w < 9; ++w) bilinear[u * 9 + w] = ((u / 3) * (w % 3) + 2 * (u % 3) * (w % 3)) % 3;
    CHECK_FALSE(coboundary_witness(v, bilinear, 3).has_value());
    CHECK_FALSE(coboundary_witness(v, constant, 3).has_value());
    std::vector<unsigned> bump(81, 0);
    bump[1 * 9 + 1] = 1;
    CHECK(coboundary_witness(v, bump, 3).has_value());
}

TEST_CASE("central extension loops") {
    const auto zero = AlmostSymplectic::unchecked(3, 1, std::vector<unsigned>(9, 0));
    const auto group = loop_from_omega(zero);
    CHECK(group.identity_ok);
    CHECK_FALSE(group.nonassociative.has_value());
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) CHECK(group.table(a, b) == group.table(b, a));

    const AlmostSymplectic omega(3, 1, {0, 1, 2, 1, 0, 1, 2, 2, 1});
    const auto loop = loop_from_omega(omega);
    CHECK(is_quasigroup(loop.table));
    const auto w = coboundary_witness(omega.space(), half_omega(omega), 3);
    CHECK(w.has_value() == loop.nonassociative.has_value());
    if (loop.nonassociative) {
        const auto [a, b, c] = *loop.nonassociative;
        CHECK(loop.table(loop.table(a, b), c) != loop.table(a, loop.table(b, c)));
    }
}

TEST_CASE("polarization for p = 2") {
    const AlmostSymplectic omega(2, 1, {0, 2, 2, 0});
    CHECK(polarize(omega) == std::vector<unsigned>{0, 2, 0, 0});
    const auto loop = loop_from_beta(omega.space(), polarize(omega));
    CHECK(loop.center == 4);
    CHECK(is_quasigroup(loop.table));
}
