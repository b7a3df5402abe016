#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qoperad/density.hpp"
#include "qoperad/error.hpp"
#include "qoperad/linalg.hpp"

using namespace qoperad;

namespace {

DensityMatrix plus_state() {
    Matrix m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    return DensityMatrix(m);
}

}  // namespace

TEST_CASE("DensityMatrix validation") {
    Matrix half = Matrix::Identity(2, 2) * 0.25;
    CHECK_THROWS_AS(DensityMatrix{half}, Error);
    Matrix neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(DensityMatrix{neg}, Error);
    Matrix nonherm(2, 2);
    nonherm << 0.5, 0.1, 0.0, 0.5;
    CHECK_THROWS_AS(DensityMatrix{nonherm}, Error);
}

TEST_CASE("diagonal and spectral probabilities") {
    const std::vector<double> d{0.3, 0.7};
    CHECK(diag_prob(DensityMatrix::diagonal(d)).values() == d);
    CHECK(diag_prob(plus_state()).values() == std::vector<double>{0.5, 0.5});
    const auto s = eig_prob(plus_state()).as_prob();
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(s[1] == doctest::Approx(0.0));
    const auto sd = eig_prob(DensityMatrix::diagonal(d)).as_prob();
    CHECK(sd[0] == doctest::Approx(0.7));
    CHECK(sd[1] == doctest::Approx(0.3));
}

TEST_CASE("2x2 spectrum against the characteristic polynomial") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto rho = random_density(2, rng);
        const double a = rho(0, 0).real(), d = rho(1, 1).real(), b = std::abs(rho(0, 1));
        const double disc = std::sqrt((a - d) * (a - d) / 4 + b * b);
        const auto s = eig_prob(rho);
        CHECK(std::abs(s.as_prob()[0] - ((a + d) / 2 + disc)) <= 1e-10);
        CHECK(std::abs(s.as_prob()[1] - ((a + d) / 2 - disc)) <= 1e-10);
    }
}

TEST_CASE("Jacobi agrees with a library eigensolver") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 8; ++n) {
        const Matrix g = random_gaussian_matrix(n, n, rng);
        const Matrix h = g + g.adjoint();
        const auto ours = jacobi_eigh(h);
        Eigen::SelfAdjointEigenSolver<Matrix> lib(h);
        for (std::size_t k = 0; k < n; ++k)
            CHECK(std::abs(ours.values[k] - lib.eigenvalues()(static_cast<Eigen::Index>(n - 1 - k))) <= 1e-10);
        const Matrix recon = ours.vectors * Eigen::VectorXd::Map(ours.values.data(), static_cast<Eigen::Index>(n))
                                                .cast<Complex>()
                                                .asDiagonal() *
                             ours.vectors.adjoint();
        CHECK((recon - h).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("majorization") {
    const std::vector<double> e{1, 0}, u{0.5, 0.5};
    CHECK(majorizes(e, u));
    CHECK_FALSE(majorizes(u, e));
    const std::vector<double> a{0.5, 0.3, 0.2}, c{0.4, 0.4, 0.2};
    CHECK(majorizes(a, c));
}

TEST_CASE("von Neumann and Rényi") {
    const auto sh = EntropyFamily::shannon();
    CHECK(quantum_entropy(sh, plus_state()) == doctest::Approx(0.0));
    CHECK(quantum_entropy(sh, DensityMatrix::maximally_mixed(5)) == doctest::Approx(std::log(5.0)));
    const std::vector<double> half{0.5, 0.5};
    CHECK(quantum_entropy(EntropyFamily::renyi(2), DensityMatrix::diagonal(half)) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("random states are valid with the requested rank") {
    std::mt19937_64 rng(3);
    const auto rho = random_density_rank(5, 2, rng);
    const auto s = eig_prob(rho).as_prob();
    CHECK(s[1] > 1e-6);
    CHECK(s[2] <= 1e-10);
}
