#include <algorithm>
#include <cmath>

#include "qoperad/measurement.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

std::vector<std::size_t> random_blocks(std::size_t dim, std::size_t parts, std::mt19937_64 &rng) {
    std::vector<std::size_t> cuts;
    for (std::size_t i = 1; i < dim; ++i) cuts.push_back(i);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::size_t> blocks;
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
        blocks.push_back(c - prev);
        prev = c;
    }
    blocks.push_back(dim - prev);
    return blocks;
}

/// A state with no weight on block `empty`, so that branch must be pruned.
DensityMatrix state_avoiding(std::span<const std::size_t> blocks, std::size_t empty, std::mt19937_64 &rng) {
    std::size_t n = 0, begin = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i == empty) begin = n;
        n += blocks[i];
    }
    const Matrix g = random_gaussian_matrix(n, n, rng);
    Matrix m = g * g.adjoint();
    const auto b = static_cast<Eigen::Index>(begin), k = static_cast<Eigen::Index>(blocks[empty]);
    m.middleRows(b, k).setZero();
    m.middleCols(b, k).setZero();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(m));
}

void collapse(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    std::size_t c = 0;
    for (std::size_t t = 0; t < count(30, scale); ++t) {
        const std::size_t dim = uniform_size(rng, 4, 6);
        const std::size_t parts = uniform_size(rng, 4, dim);
        const auto blocks = random_blocks(dim, parts, rng);
        const DensityMatrix rho =
            t % 5 == 4 ? state_avoiding(blocks, uniform_size(rng, 0, parts - 1), rng) : random_density(dim, rng);
        const auto flat = project_channel(ProjectiveMeasurement::from_blocks(blocks), rho);
        auto trees = all_reduced_trees(parts);
        std::shuffle(trees.begin(), trees.end(), rng);
        trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(trees.size(), 6)), trees.end());
        for (const auto &tree : trees) {
            rec.begin_case(c++, tree.canonical() + " rho=" + format_matrix(rho.matrix()));
            const auto mt = MeasurementTree::from_blocks(tree, blocks);
            const auto result = tree_proj_channel(mt, rho);
            for (std::size_t i = 0; i < parts; ++i) {
                const std::string leaf = " leaf " + std::to_string(i);
                rec.near("probability" + leaf, result.probs[i], flat.probs[i], 1e-9);
                rec.holds("pruning agrees" + leaf, result.outcomes[i].has_value() == flat.outcomes[i].has_value());
                if (result.outcomes[i] && flat.outcomes[i])
                    rec.near("outcome" + leaf, result.outcomes[i]->matrix(), flat.outcomes[i]->matrix(), 1e-9);
                double product = 1.0;
                for (double f : result.path_factors[i]) product *= f;
                const double direct = (mt.projector(tree.leaves()[i]) * rho.matrix()).trace().real();
                rec.near("telescoping product" + leaf, product, std::max(direct, 0.0), 1e-9);
            }
        }
    }
}

DensityMatrix zero_pad(const DensityMatrix &rho, std::size_t extra) {
    const auto n = static_cast<Eigen::Index>(rho.dim());
    Matrix m = Matrix::Zero(n + static_cast<Eigen::Index>(extra), n + static_cast<Eigen::Index>(extra));
    m.topLeftCorner(n, n) = rho.matrix();
    return DensityMatrix(std::move(m));
}

void tree_entropy(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    const auto vn = EntropyFamily::shannon();
    std::size_t c = 0;
    for (std::size_t t = 0; t < count(20, scale); ++t) {
        const std::size_t dim = uniform_size(rng, 3, 6);
        const std::size_t parts = uniform_size(rng, 2, std::min<std::size_t>(dim, 4));
        const auto blocks = random_blocks(dim, parts, rng);
        const DensityMatrix rho = random_density(dim, rng);
        const double expected = quantum_entropy(vn, block_channel(blocks, rho));
        for (const auto &tree : all_reduced_trees(parts)) {
            rec.begin_case(c++, tree.canonical() + " rho=" + format_matrix(rho.matrix()));
            rec.near("von Neumann tree entropy equals entropy of the block channel",
                     tree_entropy_quantum(vn, MeasurementTree::from_blocks(tree, blocks), rho), expected, 1e-9);
        }
    }

    // Two-leaf fixtures evaluated by hand.
    struct Fixture {
        Matrix rho;
        std::vector<std::size_t> blocks;
        EntropyFamily family;
        double value;
    };
    Matrix diag = Matrix::Zero(3, 3);
    diag(0, 0) = 0.5;
    diag(1, 1) = diag(2, 2) = 0.25;
    Matrix coh = Matrix::Zero(3, 3);
    coh(0, 0) = 0.5;
    coh(0, 1) = coh(1, 0) = 0.25;
    coh(1, 1) = coh(2, 2) = 0.25;
    const std::vector<Fixture> fixtures{
        {diag, {1, 2}, EntropyFamily::tsallis(2.0), 0.75},
        {diag, {1, 2}, EntropyFamily::renyi(2.0), 1.5 * std::log(2.0)},
        {coh, {2, 1}, EntropyFamily::tsallis(2.0), 13.0 / 24.0},
        {coh, {2, 1}, EntropyFamily::renyi(2.0), std::log(8.0 / 5.0) + 0.75 * std::log(9.0 / 7.0)},
    };
    for (const auto &f : fixtures) {
        rec.begin_case(c++, format_matrix(f.rho));
        rec.near("two-leaf fixture",
                 tree_entropy_quantum(f.family, MeasurementTree::from_blocks(PlanarRootedTree::corolla(2), f.blocks),
                                      DensityMatrix(f.rho)),
                 f.value, 1e-9);
    }

    for (std::size_t t = 0; t < count(50, scale); ++t) {
        const DensityMatrix rho = random_density(uniform_size(rng, 1, 4), rng);
        const DensityMatrix padded = zero_pad(rho, uniform_size(rng, 1, 3));
        rec.begin_case(c++, format_matrix(rho.matrix()));
        for (const auto &fam : {vn, EntropyFamily::renyi(2.0), EntropyFamily::tsallis(0.5)})
            rec.near("entropy unchanged by zero padding", quantum_entropy(fam, padded), quantum_entropy(fam, rho),
                     1e-9);
    }
}

}  // namespace

void register_measurement_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"measurement-collapse", "measurement_trees",
                   "tree-refined projective channels equal the flat channel; telescoping along leaf paths", collapse});
    out.push_back({"quantum-tree-entropy", "measurement_trees",
                   "von Neumann tree entropy is tree independent; Renyi/Tsallis fixtures; zero-padding coherence",
                   tree_entropy});
}

}  // namespace qoperad::verify
