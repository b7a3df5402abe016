#include "qoperad/codes.hpp"

#include <cmath>
#include <numbers>

#include "qoperad/error.hpp"

namespace qoperad {

LoopAlgebra::LoopAlgebra(const AlmostSymplectic &omega) : omega_(omega), loop_(loop_from_omega(omega)) {}

Matrix LoopAlgebra::left_translation(std::size_t g) const {
    require(g < dim(), ErrorCode::IndexOutOfRange, "loop element out of range");
    const auto n = static_cast<Eigen::Index>(dim());
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t h = 0; h < dim(); ++h)
        m(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(loop_.table(g, h))) = 1.0;
    return m;
}

Matrix LoopAlgebra::fiber_translation(unsigned shift) const {
    const auto n = static_cast<Eigen::Index>(dim());
    const std::size_t dv = omega_.dim();
    Matrix m = Matrix::Zero(n, n);
    for (unsigned x = 0; x < prime(); ++x)
        for (std::size_t u = 0; u < dv; ++u)
            m(static_cast<Eigen::Index>(x * dv + u), static_cast<Eigen::Index>(((x + shift) % prime()) * dv + u)) = 1.0;
    return m;
}

Complex character(unsigned p, unsigned k, unsigned x) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((k * x) % p) / static_cast<double>(p));
}

Matrix chi_subspace(const LoopAlgebra &h, unsigned k) {
    const unsigned p = h.prime();
    require(k < p, ErrorCode::InvalidInput, "character index must lie in 0..p-1");
    const std::size_t dv = h.omega().dim();
    Matrix b = Matrix::Zero(static_cast<Eigen::Index>(h.dim()), static_cast<Eigen::Index>(dv));
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::size_t w = 0; w < dv; ++w)
        for (unsigned x = 0; x < p; ++x)
            b(static_cast<Eigen::Index>(x * dv + w), static_cast<Eigen::Index>(w)) = norm * character(p, k, x);
    return b;
}

bool in_s1(const AlmostSymplectic &omega, std::size_t u, std::size_t v) {
    return omega(u, v) == 0 && omega(v, u) == 0;
}

bool in_s_set(const AlmostSymplectic &omega, std::span<const std::size_t> tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        require(tuple[i] < omega.dim(), ErrorCode::IndexOutOfRange, "vector index out of range");
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (!in_s1(omega, tuple[i], tuple[j])) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> build_s_set(const AlmostSymplectic &omega, std::size_t level) {
    require(level >= 1, ErrorCode::InvalidInput, "S-set level must be >= 1");
    const std::size_t d = omega.dim();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    // Depth-first extension keeps only prefixes already in S.
    auto extend = [&](auto &&self) -> void {
        if (cur.size() == level) {
            out.push_back(cur);
            return;
        }
        for (std::size_t u = 0; u < d; ++u) {
            bool ok = true;
            for (std::size_t prev : cur) ok = ok && in_s1(omega, prev, u);
            if (!ok) continue;
            cur.push_back(u);
            self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

Matrix e_operator(const LoopAlgebra &h, unsigned k, std::size_t u) {
    require(u < h.omega().dim(), ErrorCode::IndexOutOfRange, "vector index out of range");
    const Matrix b = chi_subspace(h, k);
    return b.adjoint() * h.left_translation(h.loop().element(0, u)) * b;
}

CodeSpace code_space(const LoopAlgebra &h, unsigned k, std::span<const std::size_t> tuple,
                     std::span<const Complex> lambda) {
    require(!tuple.empty(), ErrorCode::InvalidInput, "code needs at least one operator");
    require(tuple.size() == lambda.size(), ErrorCode::ArityMismatch, "one eigenvalue per operator required");
    require(in_s_set(h.omega(), tuple), ErrorCode::InvalidInput, "tuple is not in the S-set; operators need not commute");
    const auto dv = static_cast<Eigen::Index>(h.omega().dim());
    std::vector<Matrix> ops;
    Matrix stacked(dv * static_cast<Eigen::Index>(tuple.size()), dv);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        ops.push_back(e_operator(h, k, tuple[i]));
        stacked.middleRows(static_cast<Eigen::Index>(i) * dv, dv) = ops.back() - lambda[i] * Matrix::Identity(dv, dv);
    }
    CodeSpace code{k, {tuple.begin(), tuple.end()}, {lambda.begin(), lambda.end()}, null_space(stacked), 0.0};
    for (std::size_t i = 0; i < ops.size() && code.dimension() > 0; ++i)
        code.residual =
            std::max(code.residual, (ops[i] * code.basis - lambda[i] * code.basis).cwiseAbs().maxCoeff());
    return code;
}

std::size_t embed_vector(const RationalRect &rect, unsigned p, unsigned part_n, unsigned n, std::size_t u) {
    Rational scale = 1;
    for (unsigned i = 0; i < n; ++i) scale *= p;
    Rational part_scale = 1;
    for (unsigned i = 0; i < part_n; ++i) part_scale *= p;
    const Rational row = rect.y0 * scale + Rational(static_cast<long long>(u)) * (rect.y1 - rect.y0) * scale / part_scale;
    require(denominator(row) == 1, ErrorCode::InvariantViolation, "embedded vector is off the composed grid");
    return static_cast<std::size_t>(numerator(row));
}

PartialActionResult partial_action(const ColoredPArySquare &square, std::span<const PartialActionInput> data) {
    std::vector<AlmostSymplectic> forms;
    for (const auto &d : data) forms.push_back(d.omega);
    AlmostSymplectic composed = algebra_action(square, forms);
    std::vector<std::size_t> tuple;
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t u : data[i].tuple) {
            require(u < data[i].omega.dim(), ErrorCode::IndexOutOfRange, "vector index out of range");
            tuple.push_back(
                embed_vector(square.c0()[i], square.prime(), data[i].omega.exponent(), composed.exponent(), u));
        }
    PartialActionResult out{true, std::move(composed), std::move(tuple), std::nullopt};
    for (std::size_t i = 0; i < out.tuple.size() && out.accepted; ++i)
        for (std::size_t j = i + 1; j < out.tuple.size(); ++j)
            if (!in_s1(out.omega, out.tuple[i], out.tuple[j])) {
                out.accepted = false;
                out.violation = std::array{i, j};
                break;
            }
    return out;
}

}  // namespace qoperad
