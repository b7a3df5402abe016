#include "qoperad/density.hpp"

#include <algorithm>
#include <cmath>

#include "qoperad/error.hpp"

namespace qoperad {

DensityMatrix::DensityMatrix(Matrix entries) : m_(std::move(entries)) {
    require(m_.rows() >= 1 && m_.rows() == m_.cols(), ErrorCode::InvalidInput, "density matrix must be square, n >= 1");
    require(m_.allFinite(), ErrorCode::InvalidInput, "density matrix has non-finite entries");
    require(hermiticity_defect(m_) <= kHermTol, ErrorCode::InvalidInput, "density matrix is not Hermitian");
    const Complex tr = m_.trace();
    require(std::abs(tr.real() - 1.0) <= kTraceTol && std::abs(tr.imag()) <= kTraceTol, ErrorCode::InvalidInput,
            "density matrix has trace " + std::to_string(tr.real()));
    const double lowest = jacobi_eigh(m_).values.back();
    require(lowest >= -kPsdTol, ErrorCode::InvalidInput,
            "density matrix has negative eigenvalue " + std::to_string(lowest));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> p) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = p[i];
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
    require(n >= 1, ErrorCode::InvalidInput, "dimension must be >= 1");
    const auto d = static_cast<Eigen::Index>(n);
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(n));
}

SortedSpectrum::SortedSpectrum(std::vector<double> values) : values_(std::move(values)) {
    require(!values_.empty(), ErrorCode::InvalidInput, "spectrum must be nonempty");
    double total = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        require(values_[i] >= -kPsdTol, ErrorCode::InvalidInput, "spectrum has a negative entry");
        require(i == 0 || values_[i] <= values_[i - 1], ErrorCode::InvalidInput, "spectrum is not non-increasing");
        total += values_[i];
    }
    require(std::abs(total - 1.0) <= kTraceTol, ErrorCode::InvalidInput, "spectrum does not sum to 1");
}

ProbVector SortedSpectrum::as_prob() const {
    std::vector<double> p(values_);
    for (double &x : p) x = std::max(x, 0.0);
    return ProbVector(std::move(p));
}

ProbVector diag_prob(const DensityMatrix &rho) {
    std::vector<double> p(rho.dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        double x = rho(i, i).real();
        p[i] = x < 0.0 && x >= -kPsdTol ? 0.0 : x;
    }
    return ProbVector(std::move(p));
}

SortedSpectrum eig_prob(const DensityMatrix &rho) { return SortedSpectrum(jacobi_eigh(rho.matrix()).values); }

bool majorizes(std::span<const double> a, std::span<const double> c) {
    constexpr double tol = 1e-9;
    require(a.size() == c.size(), ErrorCode::DimensionMismatch, "majorizes: length mismatch");
    for (std::size_t i = 1; i < a.size(); ++i) {
        require(a[i] <= a[i - 1] + tol && c[i] <= c[i - 1] + tol, ErrorCode::InvalidInput,
                "majorizes: inputs must be non-increasing");
    }
    double sa = 0.0, sc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sc += c[i];
    }
    require(std::abs(sa - sc) <= tol, ErrorCode::InvalidInput, "majorizes: totals differ");
    sa = sc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sc += c[k];
        if (sa < sc - tol) return false;
    }
    return true;
}

double quantum_entropy(const EntropyFamily &family, const DensityMatrix &rho) {
    return entropy_of_weights(family, jacobi_eigh(rho.matrix()).values);
}

DensityMatrix random_density(std::size_t n, std::mt19937_64 &rng) { return random_density_rank(n, n, rng); }

DensityMatrix random_density_rank(std::size_t n, std::size_t r, std::mt19937_64 &rng) {
    require(n >= 1 && r >= 1, ErrorCode::InvalidInput, "random_density: n and rank must be positive");
    Matrix g = random_gaussian_matrix(n, std::min(n, r), rng);
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    // Exact Hermitian symmetry; the product only guarantees it up to rounding.
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(m));
}

}  // namespace qoperad
