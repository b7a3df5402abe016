#pragma once

#include <span>
#include <vector>

#include "qoperad/density.hpp"

namespace qoperad {

/// A permutation of {0..n-1}, stored as images: sigma(j) = images[j].
/// Acts on states by rho -> S rho S* with S e_j = e_{sigma(j)}.
class Permutation {
   public:
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);
    static Permutation random(std::size_t n, std::mt19937_64 &rng);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t j) const { return images_[j]; }
    const std::vector<std::size_t> &images() const { return images_; }
    Permutation inverse() const;
    Matrix matrix() const { return permutation_matrix(images_); }

   private:
    std::vector<std::size_t> images_;
};

DensityMatrix perm_act(const Permutation &sigma, const DensityMatrix &rho);

/// Block-diagonal assembly with block i equal to weights[i] * parts[i].
Matrix block_assemble(std::span<const double> weights, std::span<const DensityMatrix> parts);

/// gamma_P: weights are the diagonal of rho.
DensityMatrix gamma_p(const DensityMatrix &rho, std::span<const DensityMatrix> parts);
/// gamma_Lambda: weights are the spectrum of rho, non-increasing.
DensityMatrix gamma_lambda(const DensityMatrix &rho, std::span<const DensityMatrix> parts);

/// rho ∘_i rho': row/column i is replaced by an m-block holding rho_ii * rho';
/// the remaining entries keep their values. `slot` is 0-based.
DensityMatrix insert_p(const DensityMatrix &rho, std::size_t slot, const DensityMatrix &inner);

/// gamma_Lambda(rho; 1,..,rho',..,1): the slot-th eigenvalue scales rho', the
/// other eigenvalues stay on the diagonal.
DensityMatrix insert_lambda(const DensityMatrix &rho, std::size_t slot, const DensityMatrix &inner);

/// Moves block i (of size block_sizes[i]) to position sigma(i), keeping its
/// internal order.
Permutation block_permutation(const Permutation &sigma, std::span<const std::size_t> block_sizes);

/// sigma_1 ⊕ ... ⊕ sigma_m.
Permutation block_direct_sum(std::span<const Permutation> blocks);

/// Max entrywise modulus of a - b.
double max_abs_diff(const Matrix &a, const Matrix &b);

}  // namespace qoperad
