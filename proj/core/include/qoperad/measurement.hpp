#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qoperad/density.hpp"
#include "qoperad/trees.hpp"

namespace qoperad {

/// Projector identities are checked to this tolerance.
inline constexpr double kProjTol = 1e-10;
/// Branches whose probability is at or below this are treated as absent.
inline constexpr double kBranchTol = 1e-12;

/// Complete family of mutually orthogonal projectors summing to I.
class ProjectiveMeasurement {
   public:
    explicit ProjectiveMeasurement(std::vector<Matrix> projectors);
    /// Coordinate projectors onto consecutive blocks of the standard basis.
    static ProjectiveMeasurement from_blocks(std::span<const std::size_t> blocks);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return projectors_.size(); }
    const Matrix &operator[](std::size_t i) const { return projectors_[i]; }
    const std::vector<Matrix> &projectors() const { return projectors_; }

   private:
    std::size_t dim_;
    std::vector<Matrix> projectors_;
};

/// Projector onto span(e_begin, ..., e_{begin+len-1}) in dimension n.
Matrix coordinate_projector(std::size_t n, std::size_t begin, std::size_t len);

/// Whether p* = p = p² within kProjTol.
bool is_orthogonal_projector(const Matrix &p);

struct ProjectionResult {
    std::vector<double> probs;
    /// Empty where the outcome probability is <= kBranchTol.
    std::vector<std::optional<DensityMatrix>> outcomes;
    DensityMatrix output;
};

ProjectionResult project_channel(const ProjectiveMeasurement &measurement, const DensityMatrix &rho);

/// Block-diagonal truncation of rho along consecutive blocks summing to N.
DensityMatrix block_channel(std::span<const std::size_t> blocks, const DensityMatrix &rho);

/// A tree with an orthogonal projector on every vertex: I at the root, and
/// at each inner vertex the children's projectors sum to the vertex's own.
class MeasurementTree {
   public:
    /// Leaves, left to right, take consecutive coordinate blocks of sizes
    /// `blocks`. Leaf labels, when present, must equal the block sizes.
    static MeasurementTree from_blocks(const PlanarRootedTree &tree, std::span<const std::size_t> blocks);
    /// Explicit projector per vertex, indexed by vertex id.
    static MeasurementTree from_projectors(const PlanarRootedTree &tree, std::vector<Matrix> projectors);

    const PlanarRootedTree &tree() const { return tree_; }
    std::size_t dim() const { return dim_; }
    const Matrix &projector(PlanarRootedTree::Vertex v) const { return projectors_.at(v); }
    /// The flat measurement by the leaf projectors.
    ProjectiveMeasurement leaf_measurement() const;

   private:
    MeasurementTree(PlanarRootedTree tree, std::vector<Matrix> projectors);

    PlanarRootedTree tree_;
    std::size_t dim_;
    std::vector<Matrix> projectors_;
};

struct TreeProjectionResult {
    /// Leaf probabilities, 0 on pruned branches.
    std::vector<double> probs;
    std::vector<std::optional<DensityMatrix>> outcomes;
    /// Per leaf, the conditional probabilities along the path from the root
    /// edge down to the leaf edge; their product is probs[i]. Truncated at
    /// the first pruned edge.
    std::vector<std::vector<double>> path_factors;
};

TreeProjectionResult tree_proj_channel(const MeasurementTree &tree, const DensityMatrix &rho);

/// S_tau(rho) = S(P) + sum_j p_j S_{tau_j}(rho_j) with P the root-edge
/// probabilities; a leaf contributes the quantum entropy of its state. The
/// same family is used for S(P) and for the leaf terms.
double tree_entropy_quantum(const EntropyFamily &family, const MeasurementTree &tree, const DensityMatrix &rho);

}  // namespace qoperad
