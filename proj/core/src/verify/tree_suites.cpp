#include <map>

#include "qoperad/trees.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

void insertion_identities(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    const std::size_t cases = count(300, scale);
    for (std::size_t c = 0; c < cases; ++c) {
        const auto f = random_tree(uniform_size(rng, 1, 4), rng);
        const auto g = random_tree(uniform_size(rng, 1, 3), rng);
        const auto h = random_tree(uniform_size(rng, 1, 3), rng);
        const std::size_t n = f.leaf_count(), m = g.leaf_count(), k = h.leaf_count();
        const std::size_t i = uniform_size(rng, 0, n - 1);
        const std::size_t j = uniform_size(rng, 0, n + m - 2);
        rec.begin_case(c, f.canonical() + " " + g.canonical() + " " + h.canonical() + " i=" + std::to_string(i) +
                              " j=" + std::to_string(j));
        const auto lhs = insert(insert(f, i, g), j, h);
        PlanarRootedTree rhs = lhs;
        if (j < i)
            rhs = insert(insert(f, j, h), i + k - 1, g);
        else if (j < i + m)
            rhs = insert(f, i, insert(g, j - i, h));
        else
            rhs = insert(insert(f, j - m + 1, h), i, g);
        rec.holds("insertion coherence", lhs == rhs, lhs.canonical(), rhs.canonical());

        std::vector<PlanarRootedTree> subs;
        for (std::size_t s = 0; s < n; ++s) subs.push_back(random_tree(uniform_size(rng, 1, 3), rng));
        PlanarRootedTree iterated = f;
        for (std::size_t s = n; s-- > 0;) iterated = insert(iterated, s, subs[s]);
        const auto full = graft(f, subs);
        rec.holds("graft equals iterated insertion", full == iterated, full.canonical(), iterated.canonical());
    }
}

void differential_squares_to_zero(Recorder &rec, std::uint64_t, Scale scale) {
    const std::size_t max_leaves = scale == Scale::Small ? 5 : 6;
    std::size_t c = 0;
    for (std::size_t leaves = 1; leaves <= max_leaves; ++leaves) {
        for (const auto &tree : all_reduced_trees(leaves)) {
            if (tree.internal_edges().size() > 3) continue;
            rec.begin_case(c++, tree.canonical());
            std::map<std::string, int> down;
            for (const auto &first : enumerate_contractions(tree))
                for (const auto &second : enumerate_contractions(first.tree))
                    down[second.tree.canonical()] += first.sign * second.sign;
            for (const auto &[t, coeff] : down)
                rec.holds("contraction d∘d coefficient of " + t, coeff == 0, std::to_string(coeff), "0");
            std::map<std::string, int> up;
            for (const auto &first : enumerate_expansions(tree))
                for (const auto &second : enumerate_expansions(first.result.tree))
                    up[second.result.tree.canonical()] += first.result.sign * second.result.sign;
            for (const auto &[t, coeff] : up)
                rec.holds("expansion d∘d coefficient of " + t, coeff == 0, std::to_string(coeff), "0");
        }
    }
}

}  // namespace

void register_tree_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"trees-insertion", "trees",
                   "three-case insertion coherence and graft = iterated insertion on random trees",
                   insertion_identities});
    out.push_back({"trees-differential", "trees",
                   "signed double contractions and double expansions cancel on trees with <= 3 internal edges",
                   differential_squares_to_zero});
}

}  // namespace qoperad::verify
