#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qoperad/trees.hpp"

namespace qoperad {

/// Simplex membership tolerance on the total mass.
inline constexpr double kNormTol = 1e-9;

/// A point of the probability simplex Δ_n. Entries are exactly nonnegative
/// and sum to one within kNormTol; nothing is renormalized implicitly.
class ProbVector {
   public:
    explicit ProbVector(std::vector<double> p);

    /// Divides nonnegative weights by their (positive) total.
    static ProbVector normalized(std::vector<double> weights);
    static ProbVector unit() { return ProbVector({1.0}); }
    static ProbVector uniform(std::size_t n);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double> &values() const { return p_; }
    auto begin() const { return p_.begin(); }
    auto end() const { return p_.end(); }

   private:
    std::vector<double> p_;
};

/// gamma(P; P_1..P_n): entry (r, j) of the result is p_r * p_{r,j}.
ProbVector compose_prob(const ProbVector &p, std::span<const ProbVector> parts);

/// The average algebra: sum_i p_i x_i.
double average(const ProbVector &p, std::span<const double> xs);

struct EntropyFamily {
    enum class Kind { Shannon, Renyi, Tsallis };
    Kind kind = Kind::Shannon;
    double q = 1.0;

    static EntropyFamily shannon() { return {}; }
    static EntropyFamily renyi(double q);
    static EntropyFamily tsallis(double q);
};

/// Natural-log entropies with 0 log 0 = 0 and 0^q = 0. Accepts raw
/// nonnegative weights (e.g. a spectrum); tiny negatives are clamped to 0.
double entropy_of_weights(const EntropyFamily &family, std::span<const double> weights);
double classical_entropy(const EntropyFamily &family, const ProbVector &p);

/// S_tau(P): S(Q) + sum_j q_j S_{tau_j}(P restricted to block j, renormalized),
/// where Q holds the masses of the root's subtrees. Zero-mass blocks add 0.
double tree_entropy_classical(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> p);

struct ThermoOptions {
    int restarts = 50;
    int max_iterations = 4000;
    std::uint64_t seed = 0x5eedULL;
};

struct ThermoResult {
    double value = 0.0;
    std::vector<double> minimizer;
};

/// min over P in Δ_n of  sum p_i x_i - S_tau(P)/beta.
///
/// Shannon: the minimizer is the Gibbs distribution p_i ∝ exp(-beta x_i); the
/// value is evaluated through the tree entropy at that point. Other families
/// use projected gradient descent from the barycenter plus random restarts.
ThermoResult thermo_minimize(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> xs,
                             double beta, const ThermoOptions &options = {});
double thermo_algebra(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> xs,
                      double beta);

/// Objective minimized by thermo_minimize, exposed for oracles.
double thermo_objective(const EntropyFamily &family, const PlanarRootedTree &tree, std::span<const double> xs,
                        double beta, std::span<const double> p);

/// Whether S(P) equals S(P with zeros removed) within 1e-12.
bool coherence_check(const EntropyFamily &family, const ProbVector &p);

/// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::span<const double> y);

}  // namespace qoperad
