#include <map>

#include "qoperad/channels.hpp"
#include "qoperad/measurement.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

void normalization(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(500, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 4);
        const auto tree = random_tree(uniform_size(rng, 1, 5), rng);
        const auto ch = TreeKrausChannel::random(tree, n, rng);
        const DensityMatrix rho = random_density(n, rng);
        rec.begin_case(c, tree.canonical() + " N=" + std::to_string(n));
        rec.near("Kraus normalization defect", ch.kraus_defect(), 0.0, 1e-9);
        const Matrix out = apply_channel_raw(ch, rho.matrix());
        rec.near("trace preserved", out.trace().real(), 1.0, 1e-9);
        rec.near("output Hermitian", hermiticity_defect(out), 0.0, 1e-9);
        const double lowest = jacobi_eigh(0.5 * (out + out.adjoint())).values.back();
        rec.holds("output positive", lowest >= -1e-9, format_double(lowest), ">= -1e-9");
    }
}

void differential(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(100, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 3);
        const auto tree = random_tree(uniform_size(rng, 2, 5), rng, 5);
        const auto ch = TreeKrausChannel::random(tree, n, rng);
        rec.begin_case(c, tree.canonical() + " N=" + std::to_string(n));
        const auto d = qoperad::differential(ch);
        std::map<std::string, double> twice;
        for (const auto &term : d.terms) {
            rec.near("vertex normalization of a differential term", term.channel.vertex_defect(), 0.0, 1e-8);
            for (const auto &t2 : qoperad::differential(term.channel).terms)
                twice[t2.channel.tree().canonical()] += term.coeff * t2.coeff;
        }
        for (const auto &[t, coeff] : twice) rec.near("d∘d tree coefficient of " + t, coeff, 0.0, 0.0);
    }
}

bool same_channel(const TreeKrausChannel &a, const TreeKrausChannel &b) {
    if (!(a.tree() == b.tree()) || a.dim() != b.dim()) return false;
    for (std::size_t e = 1; e < a.ops().size(); ++e)
        if (a.op(e) != b.op(e)) return false;
    return true;
}

void composition(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(100, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 3);
        const auto outer = TreeKrausChannel::random(random_tree(uniform_size(rng, 1, 3), rng), n, rng);
        std::vector<TreeKrausChannel> parts;
        for (std::size_t i = 0; i < outer.arity(); ++i)
            parts.push_back(TreeKrausChannel::random(random_tree(uniform_size(rng, 1, 3), rng), n, rng));
        rec.begin_case(c, outer.tree().canonical());
        const auto composed = compose_qc(outer, parts);
        // Kraus operators of the composite: part path after outer path.
        const auto outer_kraus = outer.kraus_operators();
        std::size_t leaf = 0;
        const auto got = composed.kraus_operators();
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const Matrix &b : parts[i].kraus_operators()) {
                rec.near("Kraus operator " + std::to_string(leaf), got.at(leaf), b * outer_kraus[i], 1e-12);
                ++leaf;
            }
        const DensityMatrix rho = random_density(n, rng);
        Matrix expected = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < parts.size(); ++i)
            expected += apply_channel_raw(parts[i], outer_kraus[i] * rho.matrix() * outer_kraus[i].adjoint());
        rec.near("composite application", apply_channel_raw(composed, rho.matrix()), expected, 1e-12);

        std::vector<TreeKrausChannel> units(outer.arity(), TreeKrausChannel::unit(n));
        rec.holds("unit parts leave the channel unchanged", same_channel(compose_qc(outer, units), outer));
        std::vector<TreeKrausChannel> outer_unit{outer};
        rec.holds("unit outer channel", same_channel(compose_qc(TreeKrausChannel::unit(n), outer_unit), outer));

        // Associativity: grafting in two orders.
        std::vector<std::vector<TreeKrausChannel>> inner(parts.size());
        std::vector<TreeKrausChannel> flat, grouped;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = 0; j < parts[i].arity(); ++j)
                inner[i].push_back(TreeKrausChannel::random(random_tree(uniform_size(rng, 1, 2), rng), n, rng));
            flat.insert(flat.end(), inner[i].begin(), inner[i].end());
            grouped.push_back(compose_qc(parts[i], inner[i]));
        }
        rec.holds("associativity", same_channel(compose_qc(composed, flat), compose_qc(outer, grouped)));
    }
}

void convex(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(100, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 3);
        const std::size_t leaves = uniform_size(rng, 1, 3);
        const std::size_t terms = uniform_size(rng, 1, 3);
        std::vector<TreeKrausChannel> chans;
        for (std::size_t k = 0; k < terms; ++k) chans.push_back(TreeKrausChannel::random(random_tree(leaves, rng), n, rng));
        const ProbVector w = random_prob(terms, rng);
        const auto sum = convex_combine(w, chans);
        const DensityMatrix rho = random_density(n, rng);
        rec.begin_case(c, "weights=" + format_vector(w.values()));
        Matrix expected = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k < terms; ++k) expected += w[k] * apply_channel_raw(chans[k], rho.matrix());
        rec.near("convex application is the mixture", apply_convex(sum, rho).matrix(), expected, 1e-12);

        std::vector<FormalChannelSum> parts;
        for (std::size_t i = 0; i < leaves; ++i) {
            std::vector<TreeKrausChannel> pc{TreeKrausChannel::random(random_tree(2, rng), n, rng),
                                             TreeKrausChannel::random(random_tree(2, rng), n, rng)};
            parts.push_back(convex_combine(random_prob(2, rng), pc));
        }
        const auto composed = compose_sum(sum, parts);
        rec.holds("composition of mixtures stays convex", is_convex(composed));
        std::size_t expected_terms = terms;
        for (std::size_t i = 0; i < leaves; ++i) expected_terms *= 2;
        rec.holds("termwise expansion size", composed.terms.size() == expected_terms,
                  std::to_string(composed.terms.size()), std::to_string(expected_terms));
    }
}

void algebra(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(100, scale); ++c) {
        const std::size_t dim = uniform_size(rng, 2, 5);
        const std::size_t parts = uniform_size(rng, 2, dim);
        std::vector<std::size_t> blocks(parts, 1);
        blocks.back() = dim - parts + 1;
        const auto pm = ProjectiveMeasurement::from_blocks(blocks);
        const auto ch = TreeKrausChannel::projective(pm.projectors());
        const DensityMatrix rho = random_density(dim, rng);
        rec.begin_case(c, format_matrix(rho.matrix()));
        const std::vector<DensityMatrix> same(parts, rho);
        rec.near("projective action equals the projective channel", algebra_action(ch, same).matrix(),
                 project_channel(pm, rho).output.matrix(), 1e-12);
        const std::vector<DensityMatrix> single{rho};
        rec.near("unit tree returns its input", algebra_action(TreeKrausChannel::unit(dim), single).matrix(),
                 rho.matrix(), 1e-14);
    }
}

}  // namespace

void register_channel_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"kraus-normalization", "tree_channels",
                   "sum of A_gamma* A_gamma is I; channels preserve trace and positivity", normalization});
    out.push_back({"channel-differential", "tree_channels",
                   "every differential term is vertex normalized; signed tree skeleton of d∘d vanishes",
                   differential});
    out.push_back({"channel-composition", "tree_channels",
                   "compose_qc matches edge-by-edge composition, unit laws and associativity", composition});
    out.push_back({"channel-convex", "tree_channels", "convex sums apply and compose termwise", convex});
    out.push_back({"channel-algebra-action", "tree_channels",
                   "projective algebra action reproduces the projective channel", algebra});
}

}  // namespace qoperad::verify
