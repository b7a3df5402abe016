#include <algorithm>
#include <cmath>
#include <numeric>

#include "qoperad/prob.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

std::vector<ProbVector> random_parts(std::size_t n, std::mt19937_64 &rng, std::size_t max_block) {
    std::vector<ProbVector> parts;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(random_prob(uniform_size(rng, 1, max_block), rng, true));
    return parts;
}

void operad_laws(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    constexpr double tol = 1e-12;
    for (std::size_t c = 0; c < count(500, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 4);
        const ProbVector p = random_prob(n, rng, true);
        const auto mid = random_parts(n, rng, 4);
        rec.begin_case(c, "P=" + format_vector(p.values()));

        // Associativity: gamma(gamma(P; Q_i); R_ij) = gamma(P; gamma(Q_i; R_ij)).
        std::vector<std::vector<ProbVector>> inner(n);
        std::vector<ProbVector> flat_inner;
        for (std::size_t i = 0; i < n; ++i) {
            inner[i] = random_parts(mid[i].size(), rng, 4);
            flat_inner.insert(flat_inner.end(), inner[i].begin(), inner[i].end());
        }
        const ProbVector lhs = compose_prob(compose_prob(p, mid), flat_inner);
        std::vector<ProbVector> grouped;
        for (std::size_t i = 0; i < n; ++i) grouped.push_back(compose_prob(mid[i], inner[i]));
        const ProbVector rhs = compose_prob(p, grouped);
        rec.holds("associativity length", lhs.size() == rhs.size());
        for (std::size_t k = 0; k < std::min(lhs.size(), rhs.size()); ++k)
            rec.near("associativity entry " + std::to_string(k), lhs[k], rhs[k], tol);
        const double total = std::accumulate(lhs.begin(), lhs.end(), 0.0);
        rec.near("composition stays in the simplex", total, 1.0, tol);

        // Equivariance: gamma(sigma P; Q_{sigma^-1}) = block permutation of gamma(P; Q).
        std::vector<std::size_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::vector<double> permuted(n);
        std::vector<ProbVector> permuted_parts(n, ProbVector::unit());
        for (std::size_t i = 0; i < n; ++i) {
            permuted[sigma[i]] = p[i];
            permuted_parts[sigma[i]] = mid[i];
        }
        const ProbVector left = compose_prob(ProbVector(permuted), permuted_parts);
        const ProbVector base = compose_prob(p, mid);
        std::vector<std::size_t> offset(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + mid[i].size();
        std::size_t pos = 0;
        for (std::size_t slot = 0; slot < n; ++slot) {
            const std::size_t src = static_cast<std::size_t>(std::find(sigma.begin(), sigma.end(), slot) - sigma.begin());
            for (std::size_t t = 0; t < mid[src].size(); ++t, ++pos)
                rec.near("equivariance entry " + std::to_string(pos), left[pos], base[offset[src] + t], tol);
        }
    }
}

double lse_value(std::span<const double> xs, double beta) {
    const double lo = *std::min_element(xs.begin(), xs.end());
    double z = 0.0;
    for (double x : xs) z += std::exp(-beta * (x - lo));
    return lo - std::log(z) / beta;
}

void thermo_shannon(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(0.0, 10.0);
    std::size_t c = 0;
    for (std::size_t t = 0; t < count(60, scale); ++t) {
        const std::size_t n = uniform_size(rng, 1, 5);
        const auto tree = random_tree(n, rng);
        std::vector<double> xs(n);
        for (auto &x : xs) x = value(rng);
        for (double beta : {0.5, 1.0, 4.0}) {
            rec.begin_case(c++, tree.canonical() + " xs=" + format_vector(xs) + " beta=" + format_double(beta));
            rec.near("log-sum-exp closed form", thermo_algebra(EntropyFamily::shannon(), tree, xs, beta),
                     lse_value(xs, beta), 1e-8);
        }
    }
}

/// Direct objective for the oracle, written against the tree structure only.
struct GridObjective {
    const EntropyFamily &family;
    const PlanarRootedTree &tree;
    std::span<const double> xs;
    double beta;

    static double plain(const EntropyFamily &f, const std::vector<double> &w) {
        double total = 0.0;
        for (double x : w) total += x;
        if (f.kind == EntropyFamily::Kind::Shannon) {
            double s = 0.0;
            for (double x : w)
                if (x > 0.0) s -= (x / total) * std::log(x / total);
            return s;
        }
        double power = 0.0;
        for (double x : w)
            if (x > 0.0) power += std::pow(x / total, f.q);
        return f.kind == EntropyFamily::Kind::Renyi ? std::log(power) / (1.0 - f.q) : (power - 1.0) / (1.0 - f.q);
    }

    double mass(PlanarRootedTree::Vertex v, std::span<const double> p) const {
        double m = 0.0;
        for (auto leaf : tree.leaves_below(v)) m += p[tree.leaf_position(leaf)];
        return m;
    }

    double entropy(PlanarRootedTree::Vertex v, std::span<const double> p) const {
        if (tree.is_leaf(v)) return 0.0;
        const double total = mass(v, p);
        if (total <= 0.0) return 0.0;
        std::vector<double> q;
        for (auto ch : tree.children(v)) q.push_back(mass(ch, p) / total);
        double s = plain(family, q);
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q[j] > 0.0) s += q[j] * entropy(tree.children(v)[j], p);
        return s;
    }

    double operator()(std::span<const double> p) const {
        double avg = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) avg += p[i] * xs[i];
        return avg - entropy(tree.root(), p) / beta;
    }
};

double grid_minimum(const GridObjective &f, std::size_t n) {
    constexpr int steps = 1000;
    double best = 1e300;
    if (n == 1) return f(std::vector<double>{1.0});
    if (n == 2) {
        for (int a = 0; a <= steps; ++a) {
            const double x = a / static_cast<double>(steps);
            best = std::min(best, f(std::vector<double>{x, 1.0 - x}));
        }
        return best;
    }
    for (int a = 0; a <= steps; ++a)
        for (int b = 0; a + b <= steps; ++b) {
            const double x = a / static_cast<double>(steps), y = b / static_cast<double>(steps);
            best = std::min(best, f(std::vector<double>{x, y, std::max(0.0, 1.0 - x - y)}));
        }
    return best;
}

std::vector<EntropyFamily> families() {
    return {EntropyFamily::renyi(0.5), EntropyFamily::renyi(2.0), EntropyFamily::tsallis(0.5),
            EntropyFamily::tsallis(2.0)};
}

std::string family_name(const EntropyFamily &f) {
    switch (f.kind) {
        case EntropyFamily::Kind::Shannon: return "shannon";
        case EntropyFamily::Kind::Renyi: return "renyi(" + format_double(f.q) + ")";
        case EntropyFamily::Kind::Tsallis: return "tsallis(" + format_double(f.q) + ")";
    }
    return "?";
}

void thermo_oracle(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(0.0, 3.0);
    const auto fams = families();
    std::size_t c = 0;
    for (std::size_t t = 0; t < count(3, scale); ++t) {
        for (std::size_t n : {2, 3}) {
            const auto tree = random_tree(n, rng, 3);
            std::vector<double> xs(n);
            for (auto &x : xs) x = value(rng);
            const auto &fam = fams[c % fams.size()];
            const double beta = c % 2 == 0 ? 1.0 : 0.5;
            rec.begin_case(c++, family_name(fam) + " " + tree.canonical() + " xs=" + format_vector(xs) +
                                    " beta=" + format_double(beta));
            const double oracle = grid_minimum(GridObjective{fam, tree, xs, beta}, n);
            rec.near("grid-search oracle", thermo_algebra(fam, tree, xs, beta), oracle, 1e-3);
        }
    }
}

void thermo_limits(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(0.0, 10.0);
    auto fams = families();
    fams.insert(fams.begin(), EntropyFamily::shannon());
    std::size_t c = 0;
    for (std::size_t t = 0; t < count(4, scale); ++t) {
        for (const auto &fam : fams) {
            const std::size_t n = uniform_size(rng, 2, 3);
            const auto tree = random_tree(n, rng, 3);
            std::vector<double> xs(n);
            for (auto &x : xs) x = value(rng);
            rec.begin_case(c++, family_name(fam) + " " + tree.canonical() + " xs=" + format_vector(xs));
            const double lowest = *std::min_element(xs.begin(), xs.end());
            const double f1 = thermo_algebra(fam, tree, xs, 1.0);
            const double f10 = thermo_algebra(fam, tree, xs, 10.0);
            const double f100 = thermo_algebra(fam, tree, xs, 100.0);
            rec.near("tropical limit at beta = 100", f100, lowest, 1e-2);
            // The entropy term is nonnegative, so the value rises towards min x.
            rec.holds("nondecreasing from beta 1 to 10", f1 <= f10 + 1e-9, format_double(f1), "<= " + format_double(f10));
            rec.holds("nondecreasing from beta 10 to 100", f10 <= f100 + 1e-9, format_double(f10),
                      "<= " + format_double(f100));
            rec.holds("bounded by min x", f100 <= lowest + 1e-9, format_double(f100), "<= " + format_double(lowest));
        }
    }
}

void entropy_coherence(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    auto fams = families();
    fams.insert(fams.begin(), EntropyFamily::shannon());
    std::size_t c = 0;
    for (std::size_t t = 0; t < count(200, scale); ++t) {
        const ProbVector p = random_prob(uniform_size(rng, 1, 6), rng, true);
        const auto &fam = fams[t % fams.size()];
        rec.begin_case(c++, family_name(fam) + " P=" + format_vector(p.values()));
        rec.holds("coherence under dropping zeros", coherence_check(fam, p));
        // Shannon tree entropy is extensive: any tree gives S(P).
        const auto tree = random_tree(p.size(), rng);
        rec.near("Shannon tree entropy equals S(P)",
                 tree_entropy_classical(EntropyFamily::shannon(), tree, p.values()),
                 classical_entropy(EntropyFamily::shannon(), p), 1e-12);
    }
}

}  // namespace

void register_prob_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"prob-operad-laws", "prob_operad",
                   "compose_prob associativity, symmetric equivariance and simplex closure", operad_laws});
    out.push_back({"thermo-shannon", "prob_operad",
                   "Shannon thermodynamic algebra equals -(1/beta) log sum exp(-beta x)", thermo_shannon});
    out.push_back({"thermo-oracle", "prob_operad",
                   "Renyi/Tsallis thermodynamic algebra against a 1e-3 simplex grid search (n <= 3)", thermo_oracle});
    out.push_back({"thermo-limits", "prob_operad",
                   "tropical limit at beta = 100 and monotonicity in beta", thermo_limits});
    out.push_back({"entropy-coherence", "prob_operad",
                   "classical entropies ignore zero entries; Shannon tree entropy is tree independent",
                   entropy_coherence});
}

}  // namespace qoperad::verify
