#pragma once

#include <random>
#include <span>
#include <vector>

#include "qoperad/density.hpp"
#include "qoperad/trees.hpp"

namespace qoperad {

inline constexpr double kChannelTol = 1e-9;

/// C^tau_A: an N×N operator on every edge of a planar tree such that the
/// operators entering each inner vertex satisfy sum A_e* A_e = I.
class TreeKrausChannel {
   public:
    /// `ops[v]` is the operator on the edge v -> parent(v); ops[0] is ignored.
    TreeKrausChannel(PlanarRootedTree tree, std::size_t dim, std::vector<Matrix> ops);

    /// The unit tree: the identity channel.
    static TreeKrausChannel unit(std::size_t dim);
    /// Haar-random vertex-normalized operators: a random isometry C^N -> C^{kN}
    /// cut into k blocks at each inner vertex of arity k.
    static TreeKrausChannel random(const PlanarRootedTree &tree, std::size_t dim, std::mt19937_64 &rng);
    /// Corolla whose i-th edge carries projectors[i].
    static TreeKrausChannel projective(std::span<const Matrix> projectors);

    const PlanarRootedTree &tree() const { return tree_; }
    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return tree_.leaf_count(); }
    const Matrix &op(PlanarRootedTree::Vertex edge) const { return ops_.at(edge); }
    const std::vector<Matrix> &ops() const { return ops_; }

    /// A_gamma for leaf i: the leaf edge's operator times the ones above it,
    /// ending with the root edge (applied first to the state).
    Matrix leaf_operator(std::size_t leaf) const;
    std::vector<Matrix> kraus_operators() const;

    /// Largest |sum_{t(e)=v} A_e* A_e - I| over inner vertices.
    double vertex_defect() const;
    /// Largest |sum_i A_gamma_i* A_gamma_i - I|.
    double kraus_defect() const;

   private:
    PlanarRootedTree tree_;
    std::size_t dim_;
    std::vector<Matrix> ops_;
};

/// rho -> sum_i A_gamma_i rho A_gamma_i*.
DensityMatrix apply_channel(const TreeKrausChannel &channel, const DensityMatrix &rho);
/// Same sum on an arbitrary square matrix (used for formal sums).
Matrix apply_channel_raw(const TreeKrausChannel &channel, const Matrix &m);

/// Grafts the parts onto the leaves; every edge keeps its operator.
TreeKrausChannel compose_qc(const TreeKrausChannel &outer, std::span<const TreeKrausChannel> parts);

struct ChannelTerm {
    double coeff = 1.0;
    TreeKrausChannel channel;
};

/// A formal linear combination of tree channels of one arity and dimension.
struct FormalChannelSum {
    std::vector<ChannelTerm> terms;
};

/// Coefficients nonnegative and summing to 1 within 1e-12.
bool is_convex(const FormalChannelSum &sum);

/// dC: one term per expansion (tau', e) of the tree with sign (-1)^(edges
/// before e in tau'). The split vertex's incoming edges E_s move below a new
/// vertex s; the new edge gets sqrt(B_s), B_s = sum_{E_s} A* A, and each moved
/// edge gets sqrt(A* A + B_t / |E_s|) where B_t = I - B_s.
FormalChannelSum differential(const TreeKrausChannel &channel);

/// sum_i p_i A_gamma_i rho_i A_gamma_i* / w_i with w_i = Tr(A_gamma_i* A_gamma_i rho_i)
/// and p_i = w_i / sum_j w_j; terms with w_i <= 1e-12 are dropped.
DensityMatrix algebra_action(const TreeKrausChannel &channel, std::span<const DensityMatrix> states);

FormalChannelSum convex_combine(const ProbVector &weights, std::vector<TreeKrausChannel> channels);
/// sum_k c_k C_k(rho) for a convex sum.
DensityMatrix apply_convex(const FormalChannelSum &sum, const DensityMatrix &rho);
/// sum_k c_k C_k(m), no positivity assumed.
Matrix apply_sum(const FormalChannelSum &sum, const Matrix &m);
/// Termwise composition: every choice of one term from the outer sum and from
/// each part, with the coefficients multiplied.
FormalChannelSum compose_sum(const FormalChannelSum &outer, std::span<const FormalChannelSum> parts);

}  // namespace qoperad
