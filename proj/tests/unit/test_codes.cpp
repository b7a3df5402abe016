#include <doctest.h>

#include "qoperad/codes.hpp"
#include "qoperad/error.hpp"

using namespace qoperad;

TEST_CASE("character subspaces") {
    const AlmostSymplectic omega(3, 1, {0, 1, 2, 1, 0, 1, 2, 2, 1});
    const LoopAlgebra h(omega);
    CHECK(h.dim() == 9);
    std::size_t total = 0;
    for (unsigned k = 0; k < 3; ++k) {
        const Matrix b = chi_subspace(h, k);
        CHECK(b.cols() == 3);
        CHECK((b.adjoint() * b - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-14);
        // Eigenvectors of the fiber translation with eigenvalue chi_k(1).
        CHECK((h.fiber_translation(1) * b - character(3, k, 1) * b).cwiseAbs().maxCoeff() <= 1e-14);
        total += static_cast<std::size_t>(b.cols());
    }
    CHECK(total == h.dim());
}

TEST_CASE("S sets") {
    const AlmostSymplectic none(3, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(build_s_set(none, 2).empty());
    const AlmostSymplectic single(3, 1, {0, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(build_s_set(single, 1).size() == 3);
    CHECK(build_s_set(single, 2) == std::vector<std::vector<std::size_t>>{{0, 0}});
    CHECK(build_s_set(single, 3) == std::vector<std::vector<std::size_t>>{{0, 0, 0}});
    CHECK(in_s1(single, 0, 0));
    CHECK_FALSE(in_s1(single, 0, 1));
}

TEST_CASE("E_0 is diagonal on H_chi and commutes only with shift-invariant directions") {
    const AlmostSymplectic omega(3, 1, {0, 1, 2, 1, 0, 1, 2, 2, 1});
    const LoopAlgebra h(omega);
    for (unsigned k = 0; k < 3; ++k) {
        const Matrix e0 = e_operator(h, k, 0);
        Matrix off = e0;
        off.diagonal().setZero();
        CHECK(off.cwiseAbs().maxCoeff() <= 1e-14);
        // E_0 is diagonal but not scalar; it commutes with E_u exactly when
        // omega(0, .) is invariant under the shift by u.
        const auto &space = omega.space();
        for (std::size_t u = 0; u < 3; ++u) {
            const Matrix e = e_operator(h, k, u);
            bool invariant = true;
            for (std::size_t w = 0; w < 3; ++w) invariant = invariant && omega(0, w) == omega(0, space.sub(w, u));
            const bool commute = (e0 * e - e * e0).norm() <= 1e-12;
            CHECK(commute == (invariant || k == 0));
        }
    }
}

TEST_CASE("code space requires an S-set tuple") {
    const AlmostSymplectic single(3, 1, {0, 1, 1, 1, 1, 1, 1, 1, 1});
    const LoopAlgebra h(single);
    const std::vector<std::size_t> bad{0, 1};
    const std::vector<Complex> lambda{1.0, 1.0};
    CHECK_THROWS_AS(code_space(h, 1, bad, lambda), Error);
    const std::vector<std::size_t> good{0, 0};
    const auto code = code_space(h, 1, good, lambda);
    CHECK(code.residual <= 1e-10);
    CHECK(code.dimension() <= 3);
}

TEST_CASE("partial action on an identity-like square reduces to the S-set test") {
    const auto sq = ColoredPArySquare::from_tuple(3, LittleSquareTuple({RationalRect{0, Rational(1, 3), 0, Rational(1, 3)}}));
    const AlmostSymplectic single(3, 1, {0, 1, 1, 1, 1, 1, 1, 1, 1});
    const std::vector<PartialActionInput> ok{{single, {0, 0}}};
    CHECK(partial_action(sq, ok).accepted);
    const std::vector<PartialActionInput> bad{{single, {0, 1}}};
    const auto r = partial_action(sq, bad);
    CHECK_FALSE(r.accepted);
    REQUIRE(r.violation.has_value());
    CHECK((*r.violation)[0] == 0);
    CHECK((*r.violation)[1] == 1);
}
