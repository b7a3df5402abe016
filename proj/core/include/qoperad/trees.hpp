#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qoperad {

/// An ordered rooted tree whose leaves are the inputs of an operation.
///
/// Vertices are numbered in depth-first preorder with the root at 0, so a
/// vertex's children appear in their planar order and the leaves, read in
/// increasing vertex id, are already in left-to-right order. Every non-root
/// vertex v owns exactly one edge (v -> parent(v)); edges are identified by
/// their source vertex. The single-vertex tree is the unit: its root is also
/// its only leaf.
class PlanarRootedTree {
   public:
    using Vertex = std::size_t;

    /// Single vertex, one leaf.
    static PlanarRootedTree unit(std::optional<int> label = std::nullopt);
    /// Root with n leaf children (n >= 1).
    static PlanarRootedTree corolla(std::size_t n);
    /// New root whose children are the roots of `subtrees`, in order.
    static PlanarRootedTree join(std::span<const PlanarRootedTree> subtrees);
    /// Inverse of canonical().
    static PlanarRootedTree parse(std::string_view canonical);

    std::size_t vertex_count() const { return children_.size(); }
    std::size_t leaf_count() const { return leaves_.size(); }
    std::size_t edge_count() const { return children_.size() - 1; }
    Vertex root() const { return 0; }

    const std::vector<Vertex> &children(Vertex v) const { return children_.at(v); }
    std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
    bool is_leaf(Vertex v) const { return children_.at(v).empty(); }
    std::optional<int> label(Vertex v) const { return labels_.at(v); }

    /// Leaf vertices in planar order.
    const std::vector<Vertex> &leaves() const { return leaves_; }
    /// Position of `v` among leaves(); throws if `v` is not a leaf.
    std::size_t leaf_position(Vertex v) const;
    /// Leaf vertices below `v`, in planar order (just {v} for a leaf).
    std::vector<Vertex> leaves_below(Vertex v) const;

    /// Edges in depth-first order; each entry is the edge's source vertex.
    std::vector<Vertex> edges() const;
    /// An edge whose source is neither a leaf nor the root.
    bool is_internal_edge(Vertex source) const;
    std::vector<Vertex> internal_edges() const;
    /// Number of edges strictly before `source` in depth-first order.
    std::size_t edges_before(Vertex source) const;

    /// The subtree hanging from `v`, re-rooted at `v`.
    PlanarRootedTree subtree(Vertex v) const;

    /// Nested-parenthesis serialization: a leaf is `*` (followed by its label
    /// if any), an inner vertex is `(` + children + `)`.
    std::string canonical() const;

    bool operator==(const PlanarRootedTree &other) const { return canonical() == other.canonical(); }

   private:
    friend class TreeBuilder;
    PlanarRootedTree() = default;

    std::vector<std::vector<Vertex>> children_;
    std::vector<std::optional<Vertex>> parent_;
    std::vector<std::optional<int>> labels_;
    std::vector<Vertex> leaves_;
};

/// Where a vertex of a derived tree came from.
struct VertexOrigin {
    static constexpr int kOuter = -1;
    static constexpr int kFresh = -2;
    /// kOuter for the outer tree, i >= 0 for the i-th grafted subtree,
    /// kFresh for a vertex that did not exist before.
    int source = kFresh;
    PlanarRootedTree::Vertex vertex = 0;
};

struct GraftResult {
    PlanarRootedTree tree;
    /// origin[w] for every vertex w of `tree`. A grafted root reports its
    /// subtree as source even though it also replaces a leaf of the outer tree.
    std::vector<VertexOrigin> origin;
};

/// Full operadic composition: leaf i of `outer` is identified with the root of
/// `subs[i]`.
GraftResult graft_with_origin(const PlanarRootedTree &outer, std::span<const PlanarRootedTree> subs);
PlanarRootedTree graft(const PlanarRootedTree &outer, std::span<const PlanarRootedTree> subs);

/// Partial composition `outer ∘_slot inner` (slot is 0-based).
PlanarRootedTree insert(const PlanarRootedTree &outer, std::size_t slot, const PlanarRootedTree &inner);

/// Edges from leaf `leaf_index` up to the root; empty for the unit tree.
std::vector<PlanarRootedTree::Vertex> leaf_path(const PlanarRootedTree &tree, std::size_t leaf_index);

/// Merges the source of an internal edge into its target, splicing the source's
/// children into the target's child order at the edge's position.
PlanarRootedTree contract_edge(const PlanarRootedTree &tree, PlanarRootedTree::Vertex edge);

struct SignedTree {
    PlanarRootedTree tree;
    int sign = 1;
    /// The contracted edge of the input (for contractions) or the new edge of
    /// `tree` (for expansions).
    PlanarRootedTree::Vertex edge = 0;
};

/// All single-edge contractions, signed by (-1)^(edges before e in the input).
std::vector<SignedTree> enumerate_contractions(const PlanarRootedTree &tree);

struct Expansion {
    SignedTree result;
    /// Vertex of the input tree that was split.
    PlanarRootedTree::Vertex split_vertex = 0;
    /// Half-open range of that vertex's children moved under the new vertex.
    std::size_t block_begin = 0;
    std::size_t block_end = 0;
    /// origin[w] for every vertex of the new tree; the new vertex is kFresh.
    std::vector<VertexOrigin> origin;
};

/// All trees T' with an internal edge e such that T'/e equals `tree`, where
/// both endpoints of e keep at least two incoming edges. Signs are
/// (-1)^(edges before e in T').
std::vector<Expansion> enumerate_expansions(const PlanarRootedTree &tree);

/// Every planar tree with `leaves` leaves whose inner vertices have arity >= 2.
std::vector<PlanarRootedTree> all_reduced_trees(std::size_t leaves);

/// Random reduced tree with exactly `leaves` leaves and inner arity in [2, max_arity].
PlanarRootedTree random_tree(std::size_t leaves, std::mt19937_64 &rng, std::size_t max_arity = 4);

}  // namespace qoperad
