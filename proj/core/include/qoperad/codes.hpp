#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qoperad/linalg.hpp"
#include "qoperad/symplectic.hpp"

namespace qoperad {

/// C[L] for L = L(V, omega), p odd: basis e_(x,u) at the loop index x|V| + u.
class LoopAlgebra {
   public:
    explicit LoopAlgebra(const AlmostSymplectic &omega);

    const AlmostSymplectic &omega() const { return omega_; }
    const CentralExtLoop &loop() const { return loop_; }
    std::size_t dim() const { return loop_.table.size(); }
    unsigned prime() const { return omega_.prime(); }

    /// (g f)(h) = f(g * h) as a 0/1 matrix.
    Matrix left_translation(std::size_t g) const;
    /// (T_x' f)(x, u) = f(x + x', u): translation along the central fiber.
    Matrix fiber_translation(unsigned shift) const;

   private:
    AlmostSymplectic omega_;
    CentralExtLoop loop_;
};

/// chi_k(x) = exp(2 pi i k x / p).
Complex character(unsigned p, unsigned k, unsigned x);

/// Orthonormal basis (columns) of H_chi = {f : T_x' f = chi(x') f}; column w
/// is chi(x) / sqrt(p) on the fiber over w and 0 elsewhere.
Matrix chi_subspace(const LoopAlgebra &h, unsigned k);

/// S_1 = {(u, v) : omega(u, v) = omega(v, u) = 0}.
bool in_s1(const AlmostSymplectic &omega, std::size_t u, std::size_t v);
/// Every pair of entries lies in S_1 (vacuous for L = 1).
bool in_s_set(const AlmostSymplectic &omega, std::span<const std::size_t> tuple);
/// All of S_L, in lexicographic order.
std::vector<std::vector<std::size_t>> build_s_set(const AlmostSymplectic &omega, std::size_t level);

/// E_u: left translation by (0, u) compressed to H_chi, in the chi_subspace basis.
Matrix e_operator(const LoopAlgebra &h, unsigned k, std::size_t u);

struct CodeSpace {
    unsigned k = 0;
    std::vector<std::size_t> tuple;
    std::vector<Complex> eigenvalues;
    /// Orthonormal columns in the chi_subspace basis; may have zero columns.
    Matrix basis;
    /// max over operators of |E_u b - lambda b| on the basis.
    double residual = 0.0;

    std::size_t dimension() const { return static_cast<std::size_t>(basis.cols()); }
};

/// Common eigenspace of E_{u_1}..E_{u_L} with eigenvalues lambda; the tuple
/// must lie in S_L.
CodeSpace code_space(const LoopAlgebra &h, unsigned k, std::span<const std::size_t> tuple,
                     std::span<const Complex> lambda);

struct PartialActionInput {
    AlmostSymplectic omega;
    std::vector<std::size_t> tuple;
};

struct PartialActionResult {
    bool accepted = false;
    AlmostSymplectic omega;
    std::vector<std::size_t> tuple;
    /// First pair of positions in the concatenated tuple outside S_1.
    std::optional<std::array<std::size_t, 2>> violation;
};

/// Image of u in V_i under the grid embedding of little square `rect` into
/// the composed p^N grid: the row offset of the rectangle plus u scaled.
std::size_t embed_vector(const RationalRect &rect, unsigned p, unsigned part_n, unsigned n, std::size_t u);

/// Composes the forms, embeds every tuple and accepts iff the concatenation
/// lies in S_{sum L_i} of the composed form.
PartialActionResult partial_action(const ColoredPArySquare &square, std::span<const PartialActionInput> data);

}  // namespace qoperad
