#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qoperad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ColumnVector = Eigen::VectorXcd;

struct HermitianEigen {
    /// Sorted non-increasing.
    std::vector<double> values;
    /// Column k is the eigenvector for values[k].
    Matrix vectors;
    int sweeps = 0;
};

/// Cyclic complex Jacobi rotations. Converges when the off-diagonal Frobenius
/// norm drops below `off_tol`; throws NotConverged after `max_sweeps`.
HermitianEigen jacobi_eigh(const Matrix &hermitian, double off_tol = 1e-14, int max_sweeps = 100);

/// Frobenius norm of the strictly off-diagonal part.
double off_diagonal_norm(const Matrix &m);

/// max |m - m*| entrywise.
double hermiticity_defect(const Matrix &m);

/// Hermitian square root of a PSD matrix. Eigenvalues in [-clamp, 0) are
/// treated as 0; anything more negative is an invariant violation.
Matrix psd_sqrt(const Matrix &psd, double clamp = 1e-12);

/// Orthonormal basis (as columns) of {x : m x = 0}, rank decided at `tol`
/// relative to the largest singular value (absolute if m is tiny).
Matrix null_space(const Matrix &m, double tol = 1e-10);

Matrix random_gaussian_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
Matrix random_unitary(std::size_t n, std::mt19937_64 &rng);
Matrix permutation_matrix(const std::vector<std::size_t> &images);

}  // namespace qoperad
