#include <doctest.h>

#include <algorithm>

#include "qoperad/error.hpp"
#include "qoperad/trees.hpp"

using namespace qoperad;

namespace {

PlanarRootedTree balanced4() {
    const auto c2 = PlanarRootedTree::corolla(2);
    const std::vector<PlanarRootedTree> subs{c2, c2};
    return graft(c2, subs);
}

}  // namespace

TEST_CASE("graft with unit subtrees is the identity") {
    const auto c2 = PlanarRootedTree::corolla(2);
    const std::vector<PlanarRootedTree> units{PlanarRootedTree::unit(), PlanarRootedTree::unit()};
    CHECK(graft(c2, units) == c2);
}

TEST_CASE("grafting two corollas gives the balanced 4-leaf tree") {
    const auto t = balanced4();
    CHECK(t.leaf_count() == 4);
    CHECK(t.vertex_count() == 7);
    CHECK(t.edge_count() == 6);
    std::size_t inner = 0;
    for (std::size_t v = 0; v < t.vertex_count(); ++v) inner += t.is_leaf(v) ? 0 : 1;
    CHECK(inner == 3);
    CHECK(t.canonical() == "((**)(**))");
    CHECK(PlanarRootedTree::parse(t.canonical()) == t);
}

TEST_CASE("graft is associative on nested corollas") {
    const auto c2 = PlanarRootedTree::corolla(2), c3 = PlanarRootedTree::corolla(3), u = PlanarRootedTree::unit();
    const std::vector<PlanarRootedTree> inner{c2, u, c2};
    const std::vector<PlanarRootedTree> first{c3, u};
    // (c2 ∘ (c3, u)) ∘ (c2, u, c2, u)  vs  c2 ∘ (c3 ∘ (c2, u, c2), u)
    const std::vector<PlanarRootedTree> leaves{c2, u, c2, u};
    const auto lhs = graft(graft(c2, first), leaves);
    const std::vector<PlanarRootedTree> second{graft(c3, inner), u};
    CHECK(lhs == graft(c2, second));
}

TEST_CASE("insert units") {
    const auto t = balanced4();
    CHECK(insert(PlanarRootedTree::unit(), 0, t) == t);
    for (std::size_t i = 0; i < t.leaf_count(); ++i) CHECK(insert(t, i, PlanarRootedTree::unit()) == t);
    CHECK_THROWS_AS(insert(t, 4, t), Error);
}

TEST_CASE("leaf paths") {
    CHECK(leaf_path(PlanarRootedTree::unit(), 0).empty());
    CHECK(leaf_path(PlanarRootedTree::corolla(3), 2).size() == 1);
    const auto t = balanced4();
    auto path = leaf_path(t, 2);
    REQUIRE(path.size() == 2);
    std::sort(path.begin(), path.end());
    // Preorder: 0 root, 1 (2 3), 4 (5 6); the third leaf is 5 under inner vertex 4.
    CHECK(path == std::vector<PlanarRootedTree::Vertex>{4, 5});
}

TEST_CASE("contractions") {
    CHECK(enumerate_contractions(PlanarRootedTree::corolla(4)).empty());
    const auto t = balanced4();
    const auto terms = enumerate_contractions(t);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].edge == 1);
    CHECK(terms[0].tree.canonical() == "(**(**))");
    CHECK(terms[0].sign == 1);
    // Three edges (1, 2, 3) precede edge 4.
    CHECK(terms[1].edge == 4);
    CHECK(terms[1].tree.canonical() == "((**)**)");
    CHECK(terms[1].sign == -1);
    CHECK(contract_edge(t, 1).leaf_count() == 4);
}

TEST_CASE("reduced tree counts") {
    // Schröder numbers of planar trees without unary vertices.
    CHECK(all_reduced_trees(1).size() == 1);
    CHECK(all_reduced_trees(2).size() == 1);
    CHECK(all_reduced_trees(3).size() == 3);
    CHECK(all_reduced_trees(4).size() == 11);
    CHECK(all_reduced_trees(5).size() == 45);
}
