#include <doctest.h>

#include <set>

#include "qoperad/error.hpp"
#include "qoperad/loops.hpp"

using namespace qoperad;

TEST_CASE("groups are Moufang loops") {
    for (std::size_t s = 1; s <= 6; ++s) {
        const auto z = FiniteMagma::cyclic(s);
        CHECK(is_quasigroup(z));
        CHECK(is_loop(z));
        CHECK(is_moufang(z));
        CHECK(z.identity() == std::optional<std::size_t>(0));
    }
}

TEST_CASE("repeated row entry is not a quasigroup") {
    const FiniteMagma m({{0, 0, 1}, {1, 2, 0}, {2, 1, 2}});
    CHECK_FALSE(is_quasigroup(m));
    CHECK_FALSE(is_loop(m));
    CHECK_THROWS_AS(FiniteMagma({{0, 3}, {1, 0}}), Error);
}

TEST_CASE("a + 2b over Z/5 is a quasigroup without identity") {
    std::vector<std::vector<std::size_t>> t(5, std::vector<std::size_t>(5));
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) t[a][b] = (a + 2 * b) % 5;
    const FiniteMagma m(t);
    CHECK(is_quasigroup(m));
    CHECK_FALSE(m.identity().has_value());
    CHECK_FALSE(is_loop(m));
}

TEST_CASE("order-5 non-associative loop") {
    const FiniteMagma m({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
    CHECK(is_loop(m));
    // There are no non-associative Moufang loops of order below 12.
    const auto w = moufang_witness(m);
    REQUIRE(w.has_value());
    const auto [a, b, c, d] = *w;
    CHECK(m(m(a, b), m(c, d)) != m(a, m(m(b, c), d)));
    CHECK_FALSE(is_moufang(m));
}

TEST_CASE("designs from cyclic loops") {
    const auto d1 = design_from_loop(FiniteMagma::cyclic(1));
    CHECK(d1.point_count() == 3);
    CHECK(d1.lines.size() == 1);
    const auto d2 = design_from_loop(FiniteMagma::cyclic(2));
    CHECK(d2.point_count() == 6);
    CHECK(d2.lines.size() == 4);
    const auto d3 = design_from_loop(FiniteMagma::cyclic(3));
    CHECK(d3.point_count() == 9);
    REQUIRE(d3.lines.size() == 9);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto &l : d3.lines) {
        CHECK((l[0] / 3 == 0 && l[1] / 3 == 1 && l[2] / 3 == 2));
        CHECK((l[0] % 3 + l[1] % 3 + l[2] % 3) % 3 == 0);
        pairs.insert({l[0], l[1]});
    }
    CHECK(pairs.size() == 9);
}

TEST_CASE("design graphs") {
    const auto empty = design_graph(LatinDesign{});
    CHECK(empty.vertex_count == 0);
    CHECK(empty.flags.empty());
    const auto corolla = design_graph(design_from_loop(FiniteMagma::cyclic(1)));
    CHECK(corolla.vertex_count == 1);
    CHECK(corolla.flags.size() == 3);
    const auto g = design_graph(design_from_loop(FiniteMagma::cyclic(2)));
    CHECK(g.vertex_count == 4);
    CHECK(g.flags.size() == 12);
    std::vector<std::size_t> fiber(4, 0);
    for (std::size_t f = 0; f < g.flags.size(); ++f) {
        ++fiber[g.boundary[f]];
        CHECK(g.involution[f] == f);
    }
    CHECK(fiber == std::vector<std::size_t>{3, 3, 3, 3});
}
