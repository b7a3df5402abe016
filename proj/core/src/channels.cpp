#include "qoperad/channels.hpp"

#include <cmath>

#include "qoperad/error.hpp"

namespace qoperad {

namespace {

using Vertex = PlanarRootedTree::Vertex;

Matrix identity(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return Matrix::Identity(d, d);
}

double max_entry(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

TreeKrausChannel::TreeKrausChannel(PlanarRootedTree tree, std::size_t dim, std::vector<Matrix> ops)
    : tree_(std::move(tree)), dim_(dim), ops_(std::move(ops)) {
    require(dim_ >= 1, ErrorCode::InvalidInput, "channel dimension must be >= 1");
    require(ops_.size() == tree_.vertex_count(), ErrorCode::ArityMismatch,
            "expected one operator slot per vertex (" + std::to_string(tree_.vertex_count()) + "), got " +
                std::to_string(ops_.size()));
    ops_[0] = Matrix();
    const auto n = static_cast<Eigen::Index>(dim_);
    for (Vertex e = 1; e < ops_.size(); ++e)
        require(ops_[e].rows() == n && ops_[e].cols() == n, ErrorCode::DimensionMismatch,
                "edge " + std::to_string(e) + " operator has the wrong shape");
    require(vertex_defect() <= kChannelTol, ErrorCode::InvariantViolation,
            "edge operators are not normalized at some vertex");
}

TreeKrausChannel TreeKrausChannel::unit(std::size_t dim) {
    return TreeKrausChannel(PlanarRootedTree::unit(), dim, {Matrix()});
}

TreeKrausChannel TreeKrausChannel::random(const PlanarRootedTree &tree, std::size_t dim, std::mt19937_64 &rng) {
    std::vector<Matrix> ops(tree.vertex_count());
    const auto n = static_cast<Eigen::Index>(dim);
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        const auto &kids = tree.children(v);
        if (kids.empty()) continue;
        const auto k = static_cast<Eigen::Index>(kids.size());
        const Matrix isometry = random_unitary(static_cast<std::size_t>(k * n), rng).leftCols(n);
        for (Eigen::Index j = 0; j < k; ++j) ops[kids[static_cast<std::size_t>(j)]] = isometry.middleRows(j * n, n);
    }
    return TreeKrausChannel(tree, dim, std::move(ops));
}

TreeKrausChannel TreeKrausChannel::projective(std::span<const Matrix> projectors) {
    require(!projectors.empty(), ErrorCode::InvalidInput, "need at least one projector");
    std::vector<Matrix> ops{Matrix()};
    ops.insert(ops.end(), projectors.begin(), projectors.end());
    return TreeKrausChannel(PlanarRootedTree::corolla(projectors.size()), static_cast<std::size_t>(projectors[0].rows()),
                            std::move(ops));
}

Matrix TreeKrausChannel::leaf_operator(std::size_t leaf) const {
    Matrix a = identity(dim_);
    for (Vertex e : leaf_path(tree_, leaf)) a = a * ops_[e];
    return a;
}

std::vector<Matrix> TreeKrausChannel::kraus_operators() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < arity(); ++i) out.push_back(leaf_operator(i));
    return out;
}

double TreeKrausChannel::vertex_defect() const {
    double worst = 0.0;
    for (Vertex v = 0; v < tree_.vertex_count(); ++v) {
        const auto &kids = tree_.children(v);
        if (kids.empty()) continue;
        Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
        for (Vertex e : kids) sum += ops_[e].adjoint() * ops_[e];
        worst = std::max(worst, max_entry(sum - identity(dim_)));
    }
    return worst;
}

double TreeKrausChannel::kraus_defect() const {
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (const Matrix &a : kraus_operators()) sum += a.adjoint() * a;
    return max_entry(sum - identity(dim_));
}

Matrix apply_channel_raw(const TreeKrausChannel &channel, const Matrix &m) {
    require(static_cast<std::size_t>(m.rows()) == channel.dim() && m.rows() == m.cols(), ErrorCode::DimensionMismatch,
            "state dimension differs from channel dimension");
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (const Matrix &a : channel.kraus_operators()) out += a * m * a.adjoint();
    return out;
}

DensityMatrix apply_channel(const TreeKrausChannel &channel, const DensityMatrix &rho) {
    Matrix out = apply_channel_raw(channel, rho.matrix());
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

TreeKrausChannel compose_qc(const TreeKrausChannel &outer, std::span<const TreeKrausChannel> parts) {
    require(parts.size() == outer.arity(), ErrorCode::ArityMismatch,
            "outer channel has " + std::to_string(outer.arity()) + " leaves, got " + std::to_string(parts.size()) +
                " parts");
    std::vector<PlanarRootedTree> trees;
    for (const auto &p : parts) {
        require(p.dim() == outer.dim(), ErrorCode::DimensionMismatch, "channels must share one dimension");
        trees.push_back(p.tree());
    }
    GraftResult g = graft_with_origin(outer.tree(), trees);
    const auto &outer_leaves = outer.tree().leaves();
    std::vector<Matrix> ops(g.tree.vertex_count());
    for (Vertex w = 1; w < ops.size(); ++w) {
        const VertexOrigin &o = g.origin[w];
        if (o.source == VertexOrigin::kOuter) {
            ops[w] = outer.op(o.vertex);
        } else if (o.vertex == 0) {
            // Root of a grafted part: it sits on the outer leaf's edge.
            ops[w] = outer.op(outer_leaves[static_cast<std::size_t>(o.source)]);
        } else {
            ops[w] = parts[static_cast<std::size_t>(o.source)].op(o.vertex);
        }
    }
    return TreeKrausChannel(std::move(g.tree), outer.dim(), std::move(ops));
}

bool is_convex(const FormalChannelSum &sum) {
    double total = 0.0;
    for (const auto &t : sum.terms) {
        if (t.coeff < 0.0) return false;
        total += t.coeff;
    }
    return !sum.terms.empty() && std::abs(total - 1.0) <= 1e-12;
}

FormalChannelSum differential(const TreeKrausChannel &channel) {
    FormalChannelSum out;
    const std::size_t n = channel.dim();
    for (Expansion &x : enumerate_expansions(channel.tree())) {
        const PlanarRootedTree &t2 = x.result.tree;
        const auto &kids = channel.tree().children(x.split_vertex);
        Matrix b_s = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t j = x.block_begin; j < x.block_end; ++j) b_s += channel.op(kids[j]).adjoint() * channel.op(kids[j]);
        const Matrix b_t = identity(n) - b_s;
        const double n_s = static_cast<double>(x.block_end - x.block_begin);

        std::vector<Matrix> ops(t2.vertex_count());
        const Vertex fresh = x.result.edge;
        ops[fresh] = psd_sqrt(0.5 * (b_s + b_s.adjoint()));
        for (Vertex w = 1; w < ops.size(); ++w) {
            if (w == fresh) continue;
            const Matrix &a = channel.op(x.origin[w].vertex);
            if (t2.parent(w) == fresh) {
                Matrix target = a.adjoint() * a + b_t / n_s;
                ops[w] = psd_sqrt(0.5 * (target + target.adjoint()));
            } else {
                ops[w] = a;
            }
        }
        out.terms.push_back({static_cast<double>(x.result.sign), TreeKrausChannel(t2, n, std::move(ops))});
    }
    return out;
}

DensityMatrix algebra_action(const TreeKrausChannel &channel, std::span<const DensityMatrix> states) {
    require(states.size() == channel.arity(), ErrorCode::ArityMismatch,
            "channel has " + std::to_string(channel.arity()) + " leaves, got " + std::to_string(states.size()) +
                " states");
    const auto n = static_cast<Eigen::Index>(channel.dim());
    Matrix acc = Matrix::Zero(n, n);
    double total = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        require(states[i].dim() == channel.dim(), ErrorCode::DimensionMismatch, "state dimension differs from channel");
        const Matrix a = channel.leaf_operator(i);
        const double w = (a.adjoint() * a * states[i].matrix()).trace().real();
        if (w <= 1e-12) continue;
        // p_i * A rho A* / w_i with p_i = w_i / total, so only the division by total remains.
        acc += a * states[i].matrix() * a.adjoint();
        total += w;
    }
    require(total > 0.0, ErrorCode::InvalidInput, "all algebra-action weights vanish");
    acc /= total;
    acc = 0.5 * (acc + acc.adjoint()).eval();
    return DensityMatrix(std::move(acc));
}

FormalChannelSum convex_combine(const ProbVector &weights, std::vector<TreeKrausChannel> channels) {
    require(weights.size() == channels.size(), ErrorCode::ArityMismatch, "one weight per channel required");
    FormalChannelSum out;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        require(channels[i].dim() == channels[0].dim(), ErrorCode::DimensionMismatch,
                "channels must share one dimension");
        out.terms.push_back({weights[i], std::move(channels[i])});
    }
    return out;
}

Matrix apply_sum(const FormalChannelSum &sum, const Matrix &m) {
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (const auto &t : sum.terms) out += t.coeff * apply_channel_raw(t.channel, m);
    return out;
}

DensityMatrix apply_convex(const FormalChannelSum &sum, const DensityMatrix &rho) {
    require(is_convex(sum), ErrorCode::InvalidInput, "coefficients are not a convex combination");
    Matrix out = apply_sum(sum, rho.matrix());
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

FormalChannelSum compose_sum(const FormalChannelSum &outer, std::span<const FormalChannelSum> parts) {
    FormalChannelSum out;
    for (const auto &o : outer.terms) {
        require(parts.size() == o.channel.arity(), ErrorCode::ArityMismatch, "part count differs from arity");
        std::vector<std::size_t> pick(parts.size(), 0);
        for (const auto &p : parts) require(!p.terms.empty(), ErrorCode::InvalidInput, "empty formal sum");
        while (true) {
            double c = o.coeff;
            std::vector<TreeKrausChannel> chosen;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                c *= parts[i].terms[pick[i]].coeff;
                chosen.push_back(parts[i].terms[pick[i]].channel);
            }
            out.terms.push_back({c, compose_qc(o.channel, chosen)});
            std::size_t i = 0;
            while (i < parts.size() && ++pick[i] == parts[i].terms.size()) pick[i++] = 0;
            if (i == parts.size()) break;
        }
    }
    return out;
}

}  // namespace qoperad
