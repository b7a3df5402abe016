#include "qoperad/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "qoperad/error.hpp"

namespace qoperad {

using Vertex = PlanarRootedTree::Vertex;

namespace {

// Mutable nested form used while editing; flattened back into preorder ids.
struct Node {
    std::optional<int> label;
    VertexOrigin origin;
    std::vector<Node> kids;
};

Node to_node(const PlanarRootedTree &t, Vertex v, int source) {
    Node n{t.label(v), VertexOrigin{source, v}, {}};
    for (Vertex c : t.children(v)) n.kids.push_back(to_node(t, c, source));
    return n;
}

}  // namespace

class TreeBuilder {
   public:
    static PlanarRootedTree flatten(const Node &root, std::vector<VertexOrigin> *origin = nullptr) {
        PlanarRootedTree t;
        std::function<void(const Node &, std::optional<Vertex>)> visit = [&](const Node &n,
                                                                           std::optional<Vertex> parent) {
            Vertex id = t.children_.size();
            t.children_.emplace_back();
            t.parent_.push_back(parent);
            t.labels_.push_back(n.label);
            if (origin) origin->push_back(n.origin);
            if (parent) t.children_[*parent].push_back(id);
            for (const Node &k : n.kids) visit(k, id);
        };
        visit(root, std::nullopt);
        for (Vertex v = 0; v < t.children_.size(); ++v)
            if (t.children_[v].empty()) t.leaves_.push_back(v);
        return t;
    }
};

PlanarRootedTree PlanarRootedTree::unit(std::optional<int> label) {
    return TreeBuilder::flatten(Node{label, {}, {}});
}

PlanarRootedTree PlanarRootedTree::corolla(std::size_t n) {
    require(n >= 1, ErrorCode::InvalidInput, "corolla needs at least one leaf");
    Node root;
    root.kids.resize(n);
    return TreeBuilder::flatten(root);
}

PlanarRootedTree PlanarRootedTree::join(std::span<const PlanarRootedTree> subtrees) {
    require(!subtrees.empty(), ErrorCode::InvalidInput, "join needs at least one subtree");
    Node root;
    for (const auto &s : subtrees) root.kids.push_back(to_node(s, s.root(), VertexOrigin::kFresh));
    return TreeBuilder::flatten(root);
}

PlanarRootedTree PlanarRootedTree::parse(std::string_view text) {
    std::size_t pos = 0;
    std::function<Node()> node = [&]() -> Node {
        require(pos < text.size(), ErrorCode::InvalidInput, "unexpected end of tree string");
        Node n;
        if (text[pos] == '*') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-')) ++pos;
            if (pos > start) n.label = std::stoi(std::string(text.substr(start, pos - start)));
            return n;
        }
        require(text[pos] == '(', ErrorCode::InvalidInput, "expected '(' or '*' in tree string");
        ++pos;
        while (pos < text.size() && text[pos] != ')') n.kids.push_back(node());
        require(pos < text.size(), ErrorCode::InvalidInput, "unbalanced tree string");
        require(!n.kids.empty(), ErrorCode::InvalidInput, "inner vertex without children");
        ++pos;
        return n;
    };
    Node root = node();
    require(pos == text.size(), ErrorCode::InvalidInput, "trailing characters in tree string");
    return TreeBuilder::flatten(root);
}

std::size_t PlanarRootedTree::leaf_position(Vertex v) const {
    auto it = std::lower_bound(leaves_.begin(), leaves_.end(), v);
    require(it != leaves_.end() && *it == v, ErrorCode::InvalidInput, "vertex is not a leaf");
    return static_cast<std::size_t>(it - leaves_.begin());
}

std::vector<Vertex> PlanarRootedTree::leaves_below(Vertex v) const {
    std::vector<Vertex> out;
    std::function<void(Vertex)> walk = [&](Vertex w) {
        if (is_leaf(w)) out.push_back(w);
        for (Vertex c : children_.at(w)) walk(c);
    };
    walk(v);
    return out;
}

std::vector<Vertex> PlanarRootedTree::edges() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v < vertex_count(); ++v) out.push_back(v);
    return out;
}

bool PlanarRootedTree::is_internal_edge(Vertex source) const {
    return source > 0 && source < vertex_count() && !is_leaf(source);
}

std::vector<Vertex> PlanarRootedTree::internal_edges() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v < vertex_count(); ++v)
        if (!is_leaf(v)) out.push_back(v);
    return out;
}

std::size_t PlanarRootedTree::edges_before(Vertex source) const {
    require(source > 0 && source < vertex_count(), ErrorCode::IndexOutOfRange, "not an edge");
    // Preorder ids: the edges preceding e are exactly the vertices 1..e-1.
    return source - 1;
}

PlanarRootedTree PlanarRootedTree::subtree(Vertex v) const {
    return TreeBuilder::flatten(to_node(*this, v, VertexOrigin::kOuter));
}

std::string PlanarRootedTree::canonical() const {
    std::string out;
    std::function<void(Vertex)> walk = [&](Vertex v) {
        if (is_leaf(v)) {
            out += '*';
            if (labels_[v]) out += std::to_string(*labels_[v]);
            return;
        }
        out += '(';
        for (Vertex c : children_[v]) walk(c);
        out += ')';
    };
    walk(root());
    return out;
}

GraftResult graft_with_origin(const PlanarRootedTree &outer, std::span<const PlanarRootedTree> subs) {
    require(subs.size() == outer.leaf_count(), ErrorCode::ArityMismatch,
            "graft: expected " + std::to_string(outer.leaf_count()) + " subtrees, got " + std::to_string(subs.size()));
    std::function<Node(Vertex)> build = [&](Vertex v) -> Node {
        if (outer.is_leaf(v)) {
            std::size_t i = outer.leaf_position(v);
            const PlanarRootedTree &s = subs[i];
            Node n = to_node(s, s.root(), static_cast<int>(i));
            // An unlabeled unit keeps the outer leaf's label.
            if (s.vertex_count() == 1 && !n.label) n.label = outer.label(v);
            return n;
        }
        Node n{outer.label(v), VertexOrigin{VertexOrigin::kOuter, v}, {}};
        for (Vertex c : outer.children(v)) n.kids.push_back(build(c));
        return n;
    };
    GraftResult r{PlanarRootedTree::unit(), {}};
    r.tree = TreeBuilder::flatten(build(outer.root()), &r.origin);
    return r;
}

PlanarRootedTree graft(const PlanarRootedTree &outer, std::span<const PlanarRootedTree> subs) {
    return graft_with_origin(outer, subs).tree;
}

PlanarRootedTree insert(const PlanarRootedTree &outer, std::size_t slot, const PlanarRootedTree &inner) {
    require(slot < outer.leaf_count(), ErrorCode::IndexOutOfRange,
            "insert: slot " + std::to_string(slot) + " out of range");
    std::vector<PlanarRootedTree> subs(outer.leaf_count(), PlanarRootedTree::unit());
    subs[slot] = inner;
    return graft(outer, subs);
}

std::vector<Vertex> leaf_path(const PlanarRootedTree &tree, std::size_t leaf_index) {
    require(leaf_index < tree.leaf_count(), ErrorCode::IndexOutOfRange, "leaf index out of range");
    std::vector<Vertex> path;
    Vertex v = tree.leaves()[leaf_index];
    while (auto p = tree.parent(v)) {
        path.push_back(v);
        v = *p;
    }
    return path;
}

namespace {

Node rebuild_contracted(const PlanarRootedTree &t, Vertex v, Vertex edge) {
    Node n{t.label(v), VertexOrigin{VertexOrigin::kOuter, v}, {}};
    for (Vertex c : t.children(v)) {
        if (c == edge) {
            for (Vertex g : t.children(c)) n.kids.push_back(rebuild_contracted(t, g, edge));
        } else {
            n.kids.push_back(rebuild_contracted(t, c, edge));
        }
    }
    return n;
}

}  // namespace

PlanarRootedTree contract_edge(const PlanarRootedTree &tree, Vertex edge) {
    require(tree.is_internal_edge(edge), ErrorCode::InvalidInput,
            "contract_edge: edge " + std::to_string(edge) + " is not internal");
    return TreeBuilder::flatten(rebuild_contracted(tree, tree.root(), edge));
}

std::vector<SignedTree> enumerate_contractions(const PlanarRootedTree &tree) {
    std::vector<SignedTree> out;
    for (Vertex e : tree.internal_edges()) {
        int sign = tree.edges_before(e) % 2 == 0 ? 1 : -1;
        out.push_back(SignedTree{contract_edge(tree, e), sign, e});
    }
    return out;
}

std::vector<Expansion> enumerate_expansions(const PlanarRootedTree &tree) {
    std::vector<Expansion> out;
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        const auto &kids = tree.children(v);
        const std::size_t k = kids.size();
        for (std::size_t len = 2; len + 1 <= k; ++len) {
            for (std::size_t a = 0; a + len <= k; ++a) {
                std::function<Node(Vertex)> build = [&](Vertex w) -> Node {
                    Node n{tree.label(w), VertexOrigin{VertexOrigin::kOuter, w}, {}};
                    const auto &ch = tree.children(w);
                    for (std::size_t j = 0; j < ch.size(); ++j) {
                        if (w == v && j == a) {
                            Node fresh;
                            for (std::size_t m = a; m < a + len; ++m) fresh.kids.push_back(build(ch[m]));
                            n.kids.push_back(std::move(fresh));
                            j = a + len - 1;
                            continue;
                        }
                        n.kids.push_back(build(ch[j]));
                    }
                    return n;
                };
                std::vector<VertexOrigin> origin;
                PlanarRootedTree t = TreeBuilder::flatten(build(tree.root()), &origin);
                Vertex fresh = 0;
                for (Vertex w = 0; w < origin.size(); ++w)
                    if (origin[w].source == VertexOrigin::kFresh) fresh = w;
                int sign = t.edges_before(fresh) % 2 == 0 ? 1 : -1;
                out.push_back(Expansion{SignedTree{std::move(t), sign, fresh}, v, a, a + len, std::move(origin)});
            }
        }
    }
    return out;
}

namespace {

// Ordered compositions of n into k positive parts.
void compositions(std::size_t n, std::size_t k, std::vector<std::size_t> &cur,
                  std::vector<std::vector<std::size_t>> &out) {
    if (k == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (std::size_t first = 1; first + (k - 1) <= n; ++first) {
        cur.push_back(first);
        compositions(n - first, k - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PlanarRootedTree> all_reduced_trees(std::size_t leaves) {
    require(leaves >= 1, ErrorCode::InvalidInput, "need at least one leaf");
    if (leaves == 1) return {PlanarRootedTree::unit()};
    std::vector<PlanarRootedTree> out;
    for (std::size_t k = 2; k <= leaves; ++k) {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> cur;
        compositions(leaves, k, cur, parts);
        for (const auto &part : parts) {
            // Cartesian product of the subtree choices for each block.
            std::vector<std::vector<PlanarRootedTree>> options;
            for (std::size_t m : part) options.push_back(all_reduced_trees(m));
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                std::vector<PlanarRootedTree> subs;
                for (std::size_t j = 0; j < k; ++j) subs.push_back(options[j][idx[j]]);
                out.push_back(PlanarRootedTree::join(subs));
                std::size_t j = 0;
                while (j < k && ++idx[j] == options[j].size()) idx[j++] = 0;
                if (j == k) break;
            }
        }
    }
    return out;
}

PlanarRootedTree random_tree(std::size_t leaves, std::mt19937_64 &rng, std::size_t max_arity) {
    require(leaves >= 1, ErrorCode::InvalidInput, "need at least one leaf");
    require(max_arity >= 2, ErrorCode::InvalidInput, "max_arity must be at least 2");
    if (leaves == 1) return PlanarRootedTree::unit();
    std::uniform_int_distribution<std::size_t> arity_dist(2, std::min(leaves, max_arity));
    std::size_t k = arity_dist(rng);
    // Split `leaves` into k positive parts by choosing k-1 distinct cut points.
    std::vector<std::size_t> cuts(leaves - 1);
    for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<PlanarRootedTree> subs;
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
        subs.push_back(random_tree(c - prev, rng, max_arity));
        prev = c;
    }
    subs.push_back(random_tree(leaves - prev, rng, max_arity));
    return PlanarRootedTree::join(subs);
}

}  // namespace qoperad
