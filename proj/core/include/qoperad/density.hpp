#pragma once

#include <random>
#include <span>
#include <vector>

#include "qoperad/linalg.hpp"
#include "qoperad/prob.hpp"

namespace qoperad {

/// Input tolerances: Hermiticity, positivity and unit trace.
inline constexpr double kHermTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;

/// Hermitian, positive semidefinite, unit-trace complex matrix.
class DensityMatrix {
   public:
    explicit DensityMatrix(Matrix entries);

    static DensityMatrix diagonal(std::span<const double> p);
    static DensityMatrix maximally_mixed(std::size_t n);
    /// The 1×1 state (1), unit candidate of the quantum-state operads.
    static DensityMatrix one() { return maximally_mixed(1); }

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix &matrix() const { return m_; }
    Complex operator()(std::size_t i, std::size_t j) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

   private:
    Matrix m_;
};

/// Eigenvalues sorted non-increasing; entries >= -kPsdTol, total 1 within kTraceTol.
class SortedSpectrum {
   public:
    explicit SortedSpectrum(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double> &values() const { return values_; }
    /// Same values with tiny negatives clamped to zero.
    ProbVector as_prob() const;

   private:
    std::vector<double> values_;
};

/// P(rho): the diagonal, with negatives within kPsdTol clamped to 0.
ProbVector diag_prob(const DensityMatrix &rho);

/// Lambda(rho): the spectrum with multiplicity, non-increasing.
SortedSpectrum eig_prob(const DensityMatrix &rho);

/// A ≻ C for non-increasing sequences with equal totals (tolerance 1e-9).
bool majorizes(std::span<const double> a, std::span<const double> c);

/// Quantum entropies computed on the spectrum: -Tr(rho log rho),
/// log Tr(rho^q)/(1-q) and (Tr(rho^q)-1)/(1-q).
double quantum_entropy(const EntropyFamily &family, const DensityMatrix &rho);

/// rho = G G* / Tr(G G*) with G complex Ginibre of size n×n.
DensityMatrix random_density(std::size_t n, std::mt19937_64 &rng);
/// Same construction restricted to rank <= r.
DensityMatrix random_density_rank(std::size_t n, std::size_t r, std::mt19937_64 &rng);

}  // namespace qoperad
