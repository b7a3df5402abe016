#include "qoperad/measurement.hpp"

#include <numeric>

#include "qoperad/error.hpp"

namespace qoperad {

namespace {

double max_entry(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Pi rho Pi / Tr(Pi rho) made exactly Hermitian, or nothing if the trace is negligible.
std::optional<DensityMatrix> collapse(const Matrix &proj, const Matrix &rho, double &prob) {
    const Matrix unnormalized = proj * rho * proj;
    prob = unnormalized.trace().real();
    if (prob <= kBranchTol) {
        prob = 0.0;
        return std::nullopt;
    }
    Matrix m = unnormalized / prob;
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(m));
}

}  // namespace

Matrix coordinate_projector(std::size_t n, std::size_t begin, std::size_t len) {
    require(begin + len <= n, ErrorCode::IndexOutOfRange, "coordinate block exceeds dimension");
    Matrix p = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = begin; i < begin + len; ++i) p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    return p;
}

bool is_orthogonal_projector(const Matrix &p) {
    return p.rows() == p.cols() && hermiticity_defect(p) <= kProjTol && max_entry(p * p - p) <= kProjTol;
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Matrix> projectors) : projectors_(std::move(projectors)) {
    require(!projectors_.empty(), ErrorCode::InvalidInput, "measurement needs at least one projector");
    dim_ = static_cast<std::size_t>(projectors_[0].rows());
    Matrix sum = Matrix::Zero(projectors_[0].rows(), projectors_[0].cols());
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
        const Matrix &p = projectors_[i];
        require(static_cast<std::size_t>(p.rows()) == dim_ && static_cast<std::size_t>(p.cols()) == dim_,
                ErrorCode::DimensionMismatch, "projectors must share one dimension");
        require(is_orthogonal_projector(p), ErrorCode::InvalidInput,
                "measurement element " + std::to_string(i) + " is not an orthogonal projector");
        for (std::size_t j = 0; j < i; ++j)
            require(max_entry(p * projectors_[j]) <= kProjTol, ErrorCode::InvalidInput,
                    "measurement elements are not mutually orthogonal");
        sum += p;
    }
    const auto n = static_cast<Eigen::Index>(dim_);
    require(max_entry(sum - Matrix::Identity(n, n)) <= kProjTol, ErrorCode::InvalidInput,
            "measurement elements do not sum to the identity");
}

ProjectiveMeasurement ProjectiveMeasurement::from_blocks(std::span<const std::size_t> blocks) {
    const std::size_t n = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
    std::vector<Matrix> ps;
    std::size_t offset = 0;
    for (std::size_t k : blocks) {
        require(k >= 1, ErrorCode::InvalidInput, "block sizes must be positive");
        ps.push_back(coordinate_projector(n, offset, k));
        offset += k;
    }
    return ProjectiveMeasurement(std::move(ps));
}

ProjectionResult project_channel(const ProjectiveMeasurement &measurement, const DensityMatrix &rho) {
    require(measurement.dim() == rho.dim(), ErrorCode::DimensionMismatch, "measurement and state dimensions differ");
    std::vector<double> probs;
    std::vector<std::optional<DensityMatrix>> outcomes;
    Matrix output = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (const Matrix &p : measurement.projectors()) {
        output += p * rho.matrix() * p;
        double prob = 0.0;
        outcomes.push_back(collapse(p, rho.matrix(), prob));
        probs.push_back(prob);
    }
    output = 0.5 * (output + output.adjoint()).eval();
    return {std::move(probs), std::move(outcomes), DensityMatrix(std::move(output))};
}

DensityMatrix block_channel(std::span<const std::size_t> blocks, const DensityMatrix &rho) {
    const std::size_t total = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
    require(total == rho.dim(), ErrorCode::DimensionMismatch,
            "blocks sum to " + std::to_string(total) + ", state has dimension " + std::to_string(rho.dim()));
    Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    Eigen::Index offset = 0;
    for (std::size_t k : blocks) {
        require(k >= 1, ErrorCode::InvalidInput, "block sizes must be positive");
        const auto len = static_cast<Eigen::Index>(k);
        out.block(offset, offset, len, len) = rho.matrix().block(offset, offset, len, len);
        offset += len;
    }
    return DensityMatrix(std::move(out));
}

MeasurementTree::MeasurementTree(PlanarRootedTree tree, std::vector<Matrix> projectors)
    : tree_(std::move(tree)), projectors_(std::move(projectors)) {
    require(projectors_.size() == tree_.vertex_count(), ErrorCode::ArityMismatch,
            "need one projector per vertex");
    dim_ = static_cast<std::size_t>(projectors_[0].rows());
    const auto n = static_cast<Eigen::Index>(dim_);
    require(max_entry(projectors_[0] - Matrix::Identity(n, n)) <= kProjTol, ErrorCode::InvalidInput,
            "root projector must be the identity");
    for (std::size_t v = 0; v < tree_.vertex_count(); ++v) {
        const Matrix &p = projectors_[v];
        require(p.rows() == n && p.cols() == n, ErrorCode::DimensionMismatch, "projector dimensions differ");
        require(is_orthogonal_projector(p), ErrorCode::InvalidInput,
                "vertex " + std::to_string(v) + " does not carry an orthogonal projector");
        if (tree_.is_leaf(v)) continue;
        Matrix sum = Matrix::Zero(n, n);
        for (auto c : tree_.children(v)) sum += projectors_[c];
        require(max_entry(sum - p) <= kProjTol, ErrorCode::InvalidInput,
                "children's projectors do not sum to the projector of vertex " + std::to_string(v));
    }
}

MeasurementTree MeasurementTree::from_blocks(const PlanarRootedTree &tree, std::span<const std::size_t> blocks) {
    const auto &leaves = tree.leaves();
    require(blocks.size() == leaves.size(), ErrorCode::ArityMismatch,
            "tree has " + std::to_string(leaves.size()) + " leaves but " + std::to_string(blocks.size()) +
                " blocks were given");
    const std::size_t n = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
    std::vector<std::size_t> offsets(blocks.size());
    std::size_t acc = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        require(blocks[i] >= 1, ErrorCode::InvalidInput, "block sizes must be positive");
        if (auto lbl = tree.label(leaves[i]))
            require(*lbl == static_cast<int>(blocks[i]), ErrorCode::InvalidInput,
                    "leaf label disagrees with block size");
        offsets[i] = acc;
        acc += blocks[i];
    }
    std::vector<Matrix> projectors;
    projectors.reserve(tree.vertex_count());
    for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
        // Leaves below v are consecutive in left-to-right order.
        const auto below = tree.leaves_below(v);
        const std::size_t first = tree.leaf_position(below.front());
        const std::size_t last = tree.leaf_position(below.back());
        projectors.push_back(coordinate_projector(n, offsets[first], offsets[last] + blocks[last] - offsets[first]));
    }
    return MeasurementTree(tree, std::move(projectors));
}

MeasurementTree MeasurementTree::from_projectors(const PlanarRootedTree &tree, std::vector<Matrix> projectors) {
    return MeasurementTree(tree, std::move(projectors));
}

ProjectiveMeasurement MeasurementTree::leaf_measurement() const {
    std::vector<Matrix> ps;
    for (auto leaf : tree_.leaves()) ps.push_back(projectors_[leaf]);
    return ProjectiveMeasurement(std::move(ps));
}

TreeProjectionResult tree_proj_channel(const MeasurementTree &tree, const DensityMatrix &rho) {
    require(tree.dim() == rho.dim(), ErrorCode::DimensionMismatch, "measurement tree and state dimensions differ");
    const auto &t = tree.tree();
    const std::size_t n_leaves = t.leaf_count();
    TreeProjectionResult result{std::vector<double>(n_leaves, 0.0),
                                std::vector<std::optional<DensityMatrix>>(n_leaves), {}};
    result.path_factors.resize(n_leaves);

    struct Frame {
        PlanarRootedTree::Vertex v;
        DensityMatrix state;
        double mass;
        std::vector<double> factors;
    };
    std::vector<Frame> stack{{t.root(), rho, 1.0, {}}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (t.is_leaf(f.v)) {
            const std::size_t i = t.leaf_position(f.v);
            result.probs[i] = f.mass;
            result.outcomes[i] = std::move(f.state);
            result.path_factors[i] = std::move(f.factors);
            continue;
        }
        for (auto c : t.children(f.v)) {
            double prob = 0.0;
            auto next = collapse(tree.projector(c), f.state.matrix(), prob);
            auto factors = f.factors;
            factors.push_back(prob);
            if (!next) {
                for (auto leaf : t.leaves_below(c)) result.path_factors[t.leaf_position(leaf)] = factors;
                continue;
            }
            stack.push_back({c, std::move(*next), f.mass * prob, std::move(factors)});
        }
    }
    return result;
}

namespace {

double entropy_at(const EntropyFamily &family, const MeasurementTree &tree, PlanarRootedTree::Vertex v,
                  const DensityMatrix &state) {
    const auto &t = tree.tree();
    if (t.is_leaf(v)) return quantum_entropy(family, state);
    std::vector<double> probs;
    double sub = 0.0;
    for (auto c : t.children(v)) {
        double prob = 0.0;
        auto next = collapse(tree.projector(c), state.matrix(), prob);
        probs.push_back(prob);
        if (next) sub += prob * entropy_at(family, tree, c, *next);
    }
    return entropy_of_weights(family, probs) + sub;
}

}  // namespace

double tree_entropy_quantum(const EntropyFamily &family, const MeasurementTree &tree, const DensityMatrix &rho) {
    require(tree.dim() == rho.dim(), ErrorCode::DimensionMismatch, "measurement tree and state dimensions differ");
    return entropy_at(family, tree, tree.tree().root(), rho);
}

}  // namespace qoperad
