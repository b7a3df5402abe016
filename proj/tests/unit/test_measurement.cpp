#include <doctest.h>

#include <cmath>

#include "qoperad/error.hpp"
#include "qoperad/measurement.hpp"
#include "qoperad/qstate_operad.hpp"

using namespace qoperad;

namespace {

Matrix masked(const Matrix &m, const std::vector<std::size_t> &blocks) {
    std::vector<std::size_t> id;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t k = 0; k < blocks[b]; ++k) id.push_back(b);
    Matrix out = m;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (id[static_cast<std::size_t>(r)] != id[static_cast<std::size_t>(c)]) out(r, c) = 0;
    return out;
}

}  // namespace

TEST_CASE("projector validation") {
    Matrix p = Matrix::Zero(2, 2);
    p(0, 0) = 1;
    CHECK(is_orthogonal_projector(p));
    CHECK_FALSE(is_orthogonal_projector(p * 0.5));
    CHECK_THROWS_AS(ProjectiveMeasurement(std::vector<Matrix>{p}), Error);
    CHECK_NOTHROW(ProjectiveMeasurement(std::vector<Matrix>{p, Matrix::Identity(2, 2) - p}));
}

TEST_CASE("block channel is the block mask") {
    std::mt19937_64 rng(2);
    const auto rho = random_density(4, rng);
    for (const auto &blocks : {std::vector<std::size_t>{2, 1, 1}, std::vector<std::size_t>{2, 2}}) {
        CHECK(max_abs_diff(block_channel(blocks, rho).matrix(), masked(rho.matrix(), blocks)) <= 1e-15);
        const auto pm = ProjectiveMeasurement::from_blocks(blocks);
        CHECK(max_abs_diff(project_channel(pm, rho).output.matrix(), masked(rho.matrix(), blocks)) <= 1e-14);
    }
    const std::vector<std::size_t> whole{4};
    CHECK(max_abs_diff(block_channel(whole, rho).matrix(), rho.matrix()) == 0.0);
    const std::vector<std::size_t> ones{1, 1, 1, 1};
    CHECK(max_abs_diff(block_channel(ones, rho).matrix(), DensityMatrix::diagonal(diag_prob(rho).values()).matrix()) <=
          1e-15);
}

TEST_CASE("two refinements of the (1,1,2) split collapse to the flat channel") {
    std::mt19937_64 rng(9);
    const auto rho = random_density(4, rng);
    const std::vector<std::size_t> blocks{1, 1, 2};
    const auto flat = project_channel(ProjectiveMeasurement::from_blocks(blocks), rho);
    for (const char *shape : {"((**)*)", "(*(**))", "(***)"}) {
        const auto t = MeasurementTree::from_blocks(PlanarRootedTree::parse(shape), blocks);
        const auto r = tree_proj_channel(t, rho);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(std::abs(r.probs[i] - flat.probs[i]) <= 1e-12);
            double prod = 1;
            for (double f : r.path_factors[i]) prod *= f;
            CHECK(std::abs(prod - r.probs[i]) <= 1e-12);
            REQUIRE(r.outcomes[i].has_value());
            CHECK(max_abs_diff(r.outcomes[i]->matrix(), flat.outcomes[i]->matrix()) <= 1e-12);
        }
    }
}

TEST_CASE("zero-probability branches are pruned") {
    const std::vector<double> d{0.5, 0.5, 0.0, 0.0};
    const auto rho = DensityMatrix::diagonal(d);
    const std::vector<std::size_t> blocks{1, 1, 2};
    const auto r = tree_proj_channel(MeasurementTree::from_blocks(PlanarRootedTree::parse("(*(**))"), blocks), rho);
    CHECK(r.probs[2] == 0.0);
    CHECK_FALSE(r.outcomes[2].has_value());
    CHECK(r.probs[0] + r.probs[1] == doctest::Approx(1.0));
}

TEST_CASE("quantum tree entropy fixtures") {
    const auto leaf = MeasurementTree::from_blocks(PlanarRootedTree::unit(), std::vector<std::size_t>{3});
    std::mt19937_64 rng(4);
    const auto rho = random_density(3, rng);
    CHECK(tree_entropy_quantum(EntropyFamily::shannon(), leaf, rho) ==
          doctest::Approx(quantum_entropy(EntropyFamily::shannon(), rho)));

    const std::vector<double> d{0.5, 0.25, 0.25};
    const auto t = MeasurementTree::from_blocks(PlanarRootedTree::corolla(2), std::vector<std::size_t>{1, 2});
    CHECK(tree_entropy_quantum(EntropyFamily::tsallis(2), t, DensityMatrix::diagonal(d)) == doctest::Approx(0.75));
    CHECK(tree_entropy_quantum(EntropyFamily::renyi(2), t, DensityMatrix::diagonal(d)) ==
          doctest::Approx(1.5 * std::log(2.0)));

    // von Neumann: S(block channel output), whatever the tree.
    const auto r4 = random_density(4, rng);
    const std::vector<std::size_t> blocks{1, 1, 2};
    const double expected = quantum_entropy(EntropyFamily::shannon(), block_channel(blocks, r4));
    for (const char *shape : {"((**)*)", "(*(**))", "(***)"})
        CHECK(tree_entropy_quantum(EntropyFamily::shannon(),
                                   MeasurementTree::from_blocks(PlanarRootedTree::parse(shape), blocks),
                                   r4) == doctest::Approx(expected).epsilon(1e-12));
}
