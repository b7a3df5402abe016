#include "qoperad/prob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "qoperad/error.hpp"

namespace qoperad {

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
    require(!p_.empty(), ErrorCode::InvalidInput, "probability vector must be nonempty");
    double total = 0.0;
    for (double x : p_) {
        require(std::isfinite(x) && x >= 0.0, ErrorCode::InvalidInput, "probability entries must be nonnegative");
        total += x;
    }
    require(std::abs(total - 1.0) <= kNormTol, ErrorCode::InvalidInput,
            "probability vector sums to " + std::to_string(total));
}

ProbVector ProbVector::normalized(std::vector<double> weights) {
    double total = 0.0;
    for (double w : weights) {
        require(std::isfinite(w) && w >= 0.0, ErrorCode::InvalidInput, "weights must be nonnegative");
        total += w;
    }
    require(total > 0.0, ErrorCode::InvalidInput, "weights sum to zero");
    for (double &w : weights) w /= total;
    return ProbVector(std::move(weights));
}

ProbVector ProbVector::uniform(std::size_t n) {
    require(n >= 1, ErrorCode::InvalidInput, "uniform distribution needs n >= 1");
    return ProbVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbVector compose_prob(const ProbVector &p, std::span<const ProbVector> parts) {
    require(parts.size() == p.size(), ErrorCode::ArityMismatch,
            "compose_prob: expected " + std::to_string(p.size()) + " parts, got " + std::to_string(parts.size()));
    std::vector<double> out;
    for (std::size_t r = 0; r < p.size(); ++r)
        for (double x : parts[r]) out.push_back(p[r] * x);
    return ProbVector(std::move(out));
}

double average(const ProbVector &p, std::span<const double> xs) {
    require(xs.size() == p.size(), ErrorCode::ArityMismatch, "average: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) s += p[i] * xs[i];
    return s;
}

EntropyFamily EntropyFamily::renyi(double q) {
    require(q > 0.0 && q != 1.0, ErrorCode::InvalidInput, "Renyi parameter must satisfy q > 0, q != 1");
    return {Kind::Renyi, q};
}

EntropyFamily EntropyFamily::tsallis(double q) {
    require(q > 0.0 && q != 1.0, ErrorCode::InvalidInput, "Tsallis parameter must satisfy q > 0, q != 1");
    return {Kind::Tsallis, q};
}

double entropy_of_weights(const EntropyFamily &family, std::span<const double> weights) {
    switch (family.kind) {
        case EntropyFamily::Kind::Shannon: {
            double s = 0.0;
            for (double w : weights)
                if (w > 0.0) s -= w * std::log(w);
            return s;
        }
        case EntropyFamily::Kind::Renyi:
        case EntropyFamily::Kind::Tsallis: {
            require(family.q > 0.0 && family.q != 1.0, ErrorCode::InvalidInput, "entropy parameter q must be > 0, != 1");
            double power_sum = 0.0;
            for (double w : weights)
                if (w > 0.0) power_sum += std::pow(w, family.q);
            if (family.kind == EntropyFamily::Kind::Renyi) return std::log(power_sum) / (1.0 - family.q);
            return (power_sum - 1.0) / (1.0 - family.q);
        }
    }
    return 0.0;
}

double classical_entropy(const EntropyFamily &family, const ProbVector &p) {
    return entropy_of_weights(family, p.values());
}

namespace {

using Vertex = PlanarRootedTree::Vertex;

// Entropy of the conditional distribution on the leaves below v. `mass` holds
// the (unnormalized) weight below every vertex.
double tree_entropy_at(const EntropyFamily &family, const PlanarRootedTree &tree, Vertex v,
                       const std::vector<double> &mass) {
    if (tree.is_leaf(v) || mass[v] <= 0.0) return 0.0;
    std::vector<double> q;
    for (Vertex c : tree.children(v)) q.push_back(mass[c] / mass[v]);
    double s = entropy_of_weights(family, q);
    const auto &kids = tree.children(v);
    for (std::size_t j = 0; j < kids.size(); ++j)
        if (q[j] > 0.0) s += q[j] * tree_entropy_at(family, tree, kids[j], mass);
    return s;
}

std::vector<double> subtree_masses(const PlanarRootedTree &tree, std::span<const double> p) {
    std::vector<double> mass(tree.vertex_count(), 0.0);
    // Children have larger preorder ids than their parent.
    for (std::size_t i = 0; i < tree.leaf_count(); ++i) mass[tree.leaves()[i]] = std::max(p[i], 0.0);
    for (Vertex v = tree.vertex_count(); v-- > 1;) mass[*tree.parent(v)] += mass[v];
    return mass;
}

}  // namespace

double tree_entropy_classical(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> p) {
    require(p.size() == tree.leaf_count(), ErrorCode::ArityMismatch,
            "tree entropy: tree has " + std::to_string(tree.leaf_count()) + " leaves but P has length " +
                std::to_string(p.size()));
    return tree_entropy_at(family, tree, tree.root(), subtree_masses(tree, p));
}

double thermo_objective(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> xs,
                        double beta, std::span<const double> p) {
    double energy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) energy += std::max(p[i], 0.0) * xs[i];
    return energy - tree_entropy_classical(family, tree, p) / beta;
}

std::vector<double> project_to_simplex(std::span<const double> y) {
    std::vector<double> u(y.begin(), y.end());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumulative += u[j];
        double t = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) theta = t;
    }
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = std::max(y[i] - theta, 0.0);
    return out;
}

namespace {

struct Descent {
    const EntropyFamily &family;
    const PlanarRootedTree &tree;
    std::span<const double> xs;
    double beta;
    int max_iterations;

    double f(const std::vector<double> &p) const { return thermo_objective(family, tree, xs, beta, p); }

    std::vector<double> gradient(std::vector<double> p) const {
        constexpr double h = 1e-7;
        std::vector<double> g(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double saved = p[i];
            if (saved >= h) {
                p[i] = saved + h;
                double up = f(p);
                p[i] = saved - h;
                double down = f(p);
                g[i] = (up - down) / (2 * h);
            } else {
                p[i] = saved + h;
                double up = f(p);
                p[i] = saved;
                g[i] = (up - f(p)) / h;
            }
            p[i] = saved;
        }
        return g;
    }

    std::pair<double, std::vector<double>> run(std::vector<double> p) const {
        double value = f(p);
        double step = 1.0;
        for (int it = 0; it < max_iterations; ++it) {
            auto g = gradient(p);
            bool moved = false;
            for (int halving = 0; halving < 60; ++halving) {
                std::vector<double> trial(p.size());
                for (std::size_t i = 0; i < p.size(); ++i) trial[i] = p[i] - step * g[i];
                trial = project_to_simplex(trial);
                double decrease = 0.0;
                for (std::size_t i = 0; i < p.size(); ++i) decrease += g[i] * (p[i] - trial[i]);
                double candidate = f(trial);
                if (candidate <= value - 1e-4 * decrease && candidate < value) {
                    double shift = 0.0;
                    for (std::size_t i = 0; i < p.size(); ++i) shift = std::max(shift, std::abs(trial[i] - p[i]));
                    p = std::move(trial);
                    value = candidate;
                    moved = shift > 1e-14;
                    step *= 2.0;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        return {value, p};
    }
};

}  // namespace

ThermoResult thermo_minimize(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> xs,
                             double beta, const ThermoOptions &options) {
    require(beta > 0.0 && std::isfinite(beta), ErrorCode::InvalidInput, "thermo_algebra: beta must be positive");
    require(xs.size() == tree.leaf_count(), ErrorCode::ArityMismatch, "thermo_algebra: arity mismatch");
    const std::size_t n = xs.size();
    if (n == 1) return {xs[0], {1.0}};

    if (family.kind == EntropyFamily::Kind::Shannon) {
        const double lowest = *std::min_element(xs.begin(), xs.end());
        std::vector<double> w(n);
        double z = 0.0;
        for (std::size_t i = 0; i < n; ++i) z += (w[i] = std::exp(-beta * (xs[i] - lowest)));
        for (double &x : w) x /= z;
        return {thermo_objective(family, tree, xs, beta, w), w};
    }

    Descent descent{family, tree, xs, beta, options.max_iterations};
    auto best = descent.run(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    // For q < 1 the entropy gradient blows up on the boundary, and descent can
    // stall short of a vertex; vertices and near-vertex starts cover that.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> vertex(n, 0.0);
        vertex[i] = 1.0;
        const double at_vertex = descent.f(vertex);
        if (at_vertex < best.first) best = {at_vertex, vertex};
        std::vector<double> near(n, 1e-3 / static_cast<double>(n - 1));
        near[i] = 1.0 - 1e-3;
        auto candidate = descent.run(std::move(near));
        if (candidate.first < best.first) best = std::move(candidate);
    }
    std::mt19937_64 rng(options.seed);
    std::exponential_distribution<double> expo(1.0);
    for (int r = 0; r < options.restarts; ++r) {
        std::vector<double> start(n);
        double total = 0.0;
        for (double &x : start) total += (x = expo(rng));
        for (double &x : start) x /= total;
        auto candidate = descent.run(std::move(start));
        if (candidate.first < best.first) best = std::move(candidate);
    }
    return {best.first, best.second};
}

double thermo_algebra(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> xs,
                      double beta) {
    return thermo_minimize(family, tree, xs, beta).value;
}

bool coherence_check(const EntropyFamily &family, const ProbVector &p) {
    std::vector<double> stripped;
    for (double x : p)
        if (x != 0.0) stripped.push_back(x);
    return std::abs(classical_entropy(family, p) - entropy_of_weights(family, stripped)) <= 1e-12;
}

}  // namespace qoperad
