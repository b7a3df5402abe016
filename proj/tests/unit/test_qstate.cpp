#include <doctest.h>

#include "qoperad/error.hpp"
#include "qoperad/qstate_operad.hpp"

using namespace qoperad;

namespace {

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Matrix diag(std::vector<double> d) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    return m;
}

const DensityMatrix kPlus(mat2(0.5, 0.5, 0.5, 0.5));

}  // namespace

TEST_CASE("gammaP unit failure and the simplex unit law") {
    const std::vector<DensityMatrix> ones{DensityMatrix::one(), DensityMatrix::one()};
    const auto out = gamma_p(kPlus, ones);
    CHECK(max_abs_diff(out.matrix(), diag({0.5, 0.5})) == 0.0);
    CHECK(max_abs_diff(out.matrix(), kPlus.matrix()) > 0.4);
    const DensityMatrix half(diag({0.5, 0.5}));
    CHECK(max_abs_diff(gamma_p(half, ones).matrix(), half.matrix()) == 0.0);
}

TEST_CASE("gammaP hand block assembly") {
    const std::vector<DensityMatrix> parts{DensityMatrix(diag({1, 0})), DensityMatrix::maximally_mixed(2)};
    CHECK(max_abs_diff(gamma_p(kPlus, parts).matrix(), diag({0.5, 0, 0.25, 0.25})) == 0.0);
}

TEST_CASE("gammaLambda examples") {
    const std::vector<DensityMatrix> ones{DensityMatrix::one(), DensityMatrix::one()};
    const DensityMatrix d(diag({0.3, 0.7}));
    CHECK(max_abs_diff(gamma_lambda(d, ones).matrix(), diag({0.7, 0.3})) <= 1e-12);
    const std::vector<DensityMatrix> parts{DensityMatrix::maximally_mixed(2), DensityMatrix(diag({1, 0}))};
    CHECK(max_abs_diff(gamma_lambda(kPlus, parts).matrix(), diag({0.5, 0.5, 0, 0})) <= 1e-12);
}

TEST_CASE("arity and dimension errors") {
    const std::vector<DensityMatrix> one{DensityMatrix::one()};
    CHECK_THROWS_AS(gamma_p(kPlus, one), Error);
    CHECK_THROWS_AS(insert_p(kPlus, 2, kPlus), Error);
}

TEST_CASE("insertP layout") {
    CHECK(max_abs_diff(insert_p(DensityMatrix::one(), 0, kPlus).matrix(), kPlus.matrix()) == 0.0);
    const DensityMatrix rho(mat2(0.4, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.6));
    const auto out = insert_p(rho, 0, DensityMatrix::maximally_mixed(2)).matrix();
    REQUIRE(out.rows() == 3);
    Matrix expected = Matrix::Zero(3, 3);
    expected(0, 0) = expected(1, 1) = 0.2;
    expected(2, 2) = 0.6;
    CHECK(max_abs_diff(out, expected) == 0.0);
}

TEST_CASE("insertLambda uses unit parts") {
    const DensityMatrix d(diag({0.3, 0.7}));
    const auto out = insert_lambda(d, 0, DensityMatrix::maximally_mixed(2)).matrix();
    CHECK(max_abs_diff(out, diag({0.35, 0.35, 0.3})) <= 1e-12);
}

TEST_CASE("permutation action") {
    const DensityMatrix d(diag({0.3, 0.7}));
    CHECK(max_abs_diff(perm_act(Permutation::identity(2), d).matrix(), d.matrix()) == 0.0);
    CHECK(max_abs_diff(perm_act(Permutation({1, 0}), d).matrix(), diag({0.7, 0.3})) == 0.0);
    CHECK_THROWS_AS(Permutation({0, 0}), Error);
}

TEST_CASE("block permutation moves blocks") {
    const std::vector<std::size_t> sizes{2, 1};
    const auto s = block_permutation(Permutation({1, 0}), sizes);
    // Block 0 = {0, 1} moves after block 1 = {2}.
    CHECK(s.images() == std::vector<std::size_t>{1, 2, 0});
    const std::vector<Permutation> blocks{Permutation({1, 0}), Permutation::identity(1)};
    CHECK(block_direct_sum(blocks).images() == std::vector<std::size_t>{1, 0, 2});
}
