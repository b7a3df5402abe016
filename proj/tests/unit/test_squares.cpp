#include <doctest.h>

#include "qoperad/error.hpp"
#include "qoperad/squares.hpp"

using namespace qoperad;

namespace {

RationalRect rect(Rational x0, Rational x1, Rational y0, Rational y1) { return {x0, x1, y0, y1}; }
const Rational kHalf(1, 2);

}  // namespace

TEST_CASE("composition is exact affine substitution") {
    const LittleSquareTuple c({rect(0, kHalf, 0, kHalf)});
    const auto r = compose_squares(c, 0, c);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == rect(0, Rational(1, 4), 0, Rational(1, 4)));
    CHECK(compose_squares(c, 0, LittleSquareTuple::identity()) == c);
    CHECK(compose_squares(LittleSquareTuple::identity(), 0, c) == c);
}

TEST_CASE("overlapping squares are rejected") {
    CHECK_THROWS_AS(LittleSquareTuple({rect(0, kHalf, 0, kHalf), rect(Rational(1, 4), 1, 0, kHalf)}), Error);
    CHECK_NOTHROW(LittleSquareTuple({rect(0, kHalf, 0, kHalf), rect(kHalf, 1, 0, kHalf)}));
    CHECK_THROWS_AS(LittleSquareTuple({rect(0, 0, 0, kHalf)}), Error);
}

TEST_CASE("grid exponents") {
    const std::vector<RationalRect> half{rect(0, kHalf, 0, kHalf)};
    CHECK(grid_exponent(half, 2) == std::optional<unsigned>(1));
    const std::vector<RationalRect> eighths{rect(0, Rational(3, 8), 0, kHalf)};
    CHECK(grid_exponent(eighths, 2) == std::optional<unsigned>(3));
    const std::vector<RationalRect> thirds{rect(0, Rational(1, 3), 0, 1)};
    CHECK_FALSE(grid_exponent(thirds, 2).has_value());
    CHECK(grid_exponent(thirds, 3) == std::optional<unsigned>(1));
}

TEST_CASE("strictness") {
    CHECK_FALSE(is_strict(LittleSquareTuple::identity()));
    CHECK(is_strict(LittleSquareTuple()));
    const LittleSquareTuple q({rect(0, kHalf, 0, kHalf)});
    CHECK(is_strict(q));
    const auto cells = rasterize(q.rects(), 2, 1);
    CHECK(cells == std::vector<bool>{true, false, false, false});
    // A full bottom row leaves no free cell in that row.
    CHECK_FALSE(is_strict(LittleSquareTuple({rect(0, kHalf, 0, kHalf), rect(kHalf, 1, 0, kHalf)})));
}

TEST_CASE("colored squares") {
    const Rational third(1, 3);
    // Region 1 is the left strip, region 0 one full cell, region 2 the rest.
    const ColoredPArySquare q(3, LittleSquareTuple({rect(third, 2 * third, 0, third)}),
                              {{rect(0, third, 0, 1)}, {rect(2 * third, 1, 0, 1), rect(third, 2 * third, third, 1)}});
    const ColoredPArySquare inner(3, LittleSquareTuple({rect(0, 1, third, 1)}), {{}, {rect(0, 1, 0, third)}});
    const auto out = compose_colored(q, 0, inner);
    CHECK(out.region(1) == q.region(1));
    REQUIRE(out.region(2).size() == 3);
    CHECK(out.region(2).back() == rect(third, 2 * third, 0, Rational(1, 9)));
    CHECK(out.c0()[0] == rect(third, 2 * third, Rational(1, 9), third));

    CHECK_THROWS_AS(ColoredPArySquare(3, LittleSquareTuple({rect(0, third, 0, third)}), {{}, {}}), Error);
    const auto plain = ColoredPArySquare::from_tuple(2, LittleSquareTuple({rect(0, kHalf, 0, kHalf)}));
    CHECK(plain.cell_colors(1) == std::vector<unsigned>{0, 1, 1, 1});
    CHECK(plain.grid_exponent() == 1);
}

TEST_CASE("composition with an all-zero identity part keeps the outer layout") {
    const auto outer = ColoredPArySquare::from_tuple(2, LittleSquareTuple({rect(0, kHalf, 0, kHalf)}));
    const ColoredPArySquare unit(2, LittleSquareTuple::identity(), {{}});
    const auto out = compose_colored(outer, 0, unit);
    CHECK(out.c0() == outer.c0());
    CHECK(out.region(1) == outer.region(1));
}
