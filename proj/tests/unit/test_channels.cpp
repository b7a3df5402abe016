#include <doctest.h>

#include "qoperad/channels.hpp"
#include "qoperad/error.hpp"
#include "qoperad/measurement.hpp"
#include "qoperad/qstate_operad.hpp"

using namespace qoperad;

TEST_CASE("unit channel is the identity") {
    std::mt19937_64 rng(1);
    const auto rho = random_density(3, rng);
    CHECK(max_abs_diff(apply_channel(TreeKrausChannel::unit(3), rho).matrix(), rho.matrix()) == 0.0);
    const std::vector<DensityMatrix> one{rho};
    CHECK(max_abs_diff(algebra_action(TreeKrausChannel::unit(3), one).matrix(), rho.matrix()) <= 1e-14);
}

TEST_CASE("projective corolla equals the projective channel") {
    std::mt19937_64 rng(2);
    const auto rho = random_density(4, rng);
    const auto pm = ProjectiveMeasurement::from_blocks(std::vector<std::size_t>{1, 3});
    const auto ch = TreeKrausChannel::projective(pm.projectors());
    CHECK(max_abs_diff(apply_channel(ch, rho).matrix(), project_channel(pm, rho).output.matrix()) <= 1e-14);
}

TEST_CASE("two-level channel equals the flat Kraus channel of path products") {
    std::mt19937_64 rng(3);
    const auto tree = PlanarRootedTree::parse("((**)*(***))");
    const auto ch = TreeKrausChannel::random(tree, 3, rng);
    CHECK(ch.vertex_defect() <= 1e-12);
    CHECK(ch.kraus_defect() <= 1e-12);
    const auto rho = random_density(3, rng);
    Matrix expected = Matrix::Zero(3, 3);
    for (auto leaf : tree.leaves()) {
        // Product along the path from the leaf up to the root.
        Matrix a = Matrix::Identity(3, 3);
        for (auto v = leaf; tree.parent(v).has_value(); v = *tree.parent(v)) a = a * ch.op(v);
        expected += a * rho.matrix() * a.adjoint();
    }
    CHECK(max_abs_diff(apply_channel(ch, rho).matrix(), expected) <= 1e-13);
}

TEST_CASE("vertex normalization is enforced") {
    const auto tree = PlanarRootedTree::corolla(2);
    std::vector<Matrix> ops(3, Matrix::Identity(2, 2));
    CHECK_THROWS_AS(TreeKrausChannel(tree, 2, ops), Error);
}

TEST_CASE("composition with unit parts and corolla of corollas") {
    std::mt19937_64 rng(4);
    const auto outer = TreeKrausChannel::random(PlanarRootedTree::corolla(2), 2, rng);
    const std::vector<TreeKrausChannel> units{TreeKrausChannel::unit(2), TreeKrausChannel::unit(2)};
    const auto same = compose_qc(outer, units);
    CHECK(same.tree() == outer.tree());
    for (std::size_t v = 1; v < same.tree().vertex_count(); ++v) CHECK(max_abs_diff(same.op(v), outer.op(v)) == 0.0);

    const auto inner = TreeKrausChannel::random(PlanarRootedTree::corolla(2), 2, rng);
    const std::vector<TreeKrausChannel> parts{inner, TreeKrausChannel::unit(2)};
    const auto composed = compose_qc(outer, parts);
    CHECK(composed.tree().canonical() == "((**)*)");
    CHECK(composed.kraus_defect() <= 1e-12);
    // Outer leaf edge on top of the inner leaf edges.
    CHECK(max_abs_diff(composed.leaf_operator(0), inner.op(1) * outer.op(1)) <= 1e-14);
    CHECK(max_abs_diff(composed.leaf_operator(2), outer.op(2)) <= 1e-14);
}

TEST_CASE("differential terms satisfy both normalizations") {
    std::mt19937_64 rng(5);
    const auto ch = TreeKrausChannel::random(PlanarRootedTree::corolla(4), 2, rng);
    const auto d = differential(ch);
    CHECK_FALSE(d.terms.empty());
    for (const auto &t : d.terms) {
        CHECK(t.channel.vertex_defect() <= 1e-8);
        CHECK(t.channel.kraus_defect() <= 1e-8);
        CHECK(t.channel.tree().leaf_count() == 4);
    }
    CHECK(differential(TreeKrausChannel::random(PlanarRootedTree::corolla(2), 2, rng)).terms.empty());
}

TEST_CASE("algebra action with coordinate projectors weighs by Tr(P_i rho_i)") {
    const auto pm = ProjectiveMeasurement::from_blocks(std::vector<std::size_t>{1, 1});
    const auto ch = TreeKrausChannel::projective(pm.projectors());
    const std::vector<DensityMatrix> states{DensityMatrix::diagonal(std::vector<double>{0.6, 0.4}),
                                            DensityMatrix::diagonal(std::vector<double>{0.2, 0.8})};
    // Weights 0.6 and 0.8, normalized by 1.4.
    const auto out = algebra_action(ch, states).matrix();
    CHECK(out(0, 0).real() == doctest::Approx(0.6 / 1.4));
    CHECK(out(1, 1).real() == doctest::Approx(0.8 / 1.4));
}

TEST_CASE("convex mixtures") {
    std::mt19937_64 rng(6);
    const auto a = TreeKrausChannel::random(PlanarRootedTree::corolla(2), 2, rng);
    const auto b = TreeKrausChannel::random(PlanarRootedTree::corolla(2), 2, rng);
    const auto rho = random_density(2, rng);
    const auto one = convex_combine(ProbVector::unit(), {a});
    CHECK(max_abs_diff(apply_convex(one, rho).matrix(), apply_channel(a, rho).matrix()) <= 1e-15);
    const auto mix = convex_combine(ProbVector({0.5, 0.5}), {a, b});
    const Matrix avg = 0.5 * (apply_channel(a, rho).matrix() + apply_channel(b, rho).matrix());
    CHECK(max_abs_diff(apply_convex(mix, rho).matrix(), avg) <= 1e-15);
    const std::vector<FormalChannelSum> parts{mix, one};
    const auto composed = compose_sum(mix, parts);
    CHECK(composed.terms.size() == 4);
    CHECK(is_convex(composed));
    double total = 0;
    for (const auto &t : composed.terms) total += t.coeff;
    CHECK(total == doctest::Approx(1.0));
}
