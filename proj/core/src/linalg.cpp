#include "qoperad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qoperad/error.hpp"

namespace qoperad {

double off_diagonal_norm(const Matrix &m) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

double hermiticity_defect(const Matrix &m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen jacobi_eigh(const Matrix &hermitian, double off_tol, int max_sweeps) {
    require(hermitian.rows() == hermitian.cols(), ErrorCode::DimensionMismatch, "jacobi_eigh: matrix is not square");
    const Eigen::Index n = hermitian.rows();
    // Symmetrize so that rounding in the input cannot stall convergence.
    Matrix a = 0.5 * (hermitian + hermitian.adjoint());
    Matrix v = Matrix::Identity(n, n);
    int sweep = 0;
    while (off_diagonal_norm(a) >= off_tol) {
        require(sweep < max_sweeps, ErrorCode::NotConverged,
                "jacobi_eigh: no convergence after " + std::to_string(max_sweeps) + " sweeps");
        ++sweep;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // Phase D = diag(1, conj(phase)) makes the pivot real, then a
                // real rotation annihilates it.
                const Complex phase = a(p, q) / r;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex upp = c, upq = s, uqp = -s * std::conj(phase), uqq = c * std::conj(phase);
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() > a(y, y).real(); });
    HermitianEigen out;
    out.sweeps = sweep;
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]).real());
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

Matrix psd_sqrt(const Matrix &psd, double clamp) {
    HermitianEigen e = jacobi_eigh(psd);
    Eigen::VectorXd roots(static_cast<Eigen::Index>(e.values.size()));
    for (std::size_t k = 0; k < e.values.size(); ++k) {
        double lambda = e.values[k];
        require(lambda >= -clamp, ErrorCode::InvariantViolation,
                "psd_sqrt: eigenvalue " + std::to_string(lambda) + " is negative");
        roots[static_cast<Eigen::Index>(k)] = std::sqrt(std::max(lambda, 0.0));
    }
    return e.vectors * roots.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

Matrix null_space(const Matrix &m, double tol) {
    if (m.cols() == 0) return Matrix(0, 0);
    if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    const double scale = sv.size() > 0 ? std::max(sv[0], 1.0) : 1.0;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > tol * scale) ++rank;
    return svd.matrixV().rightCols(m.cols() - rank);
}

Matrix random_gaussian_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

Matrix random_unitary(std::size_t n, std::mt19937_64 &rng) {
    Matrix g = random_gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

Matrix permutation_matrix(const std::vector<std::size_t> &images) {
    const auto n = static_cast<Eigen::Index>(images.size());
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < images.size(); ++j) {
        require(images[j] < images.size(), ErrorCode::InvalidInput, "permutation image out of range");
        m(static_cast<Eigen::Index>(images[j]), static_cast<Eigen::Index>(j)) = 1.0;
    }
    return m;
}

}  // namespace qoperad
