#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "qoperad/loops.hpp"
#include "qoperad/squares.hpp"

namespace qoperad {

/// V = F_p^N with vectors indexed by their big-endian base-p digits.
struct VectorSpace {
    unsigned p = 2;
    unsigned n = 0;

    std::size_t size() const;
    std::size_t add(std::size_t u, std::size_t v) const;
    std::size_t neg(std::size_t u) const;
    bool operator==(const VectorSpace &) const = default;
    std::size_t sub(std::size_t u, std::size_t v) const { return add(u, neg(v)); }
};

/// omega on V × V, stored row-major as table[u * |V| + v]. Values are in F_p
/// for p > 2 and in {0, 2} ⊂ Z/4 for p = 2. Every row and every column must
/// contain a nonzero entry.
class AlmostSymplectic {
   public:
    AlmostSymplectic(unsigned p, unsigned n, std::vector<unsigned> table);
    /// Skips the non-degeneracy check (for degenerate test forms such as 0).
    static AlmostSymplectic unchecked(unsigned p, unsigned n, std::vector<unsigned> table);
    /// Uniform nonzero-rich random form, resampled until non-degenerate.
    static AlmostSymplectic random(unsigned p, unsigned n, std::mt19937_64 &rng, double zero_fraction = 0.3);

    unsigned prime() const { return space_.p; }
    unsigned exponent() const { return space_.n; }
    const VectorSpace &space() const { return space_; }
    std::size_t dim() const { return space_.size(); }
    /// Coefficient ring modulus: 4 for p = 2, else p.
    unsigned modulus() const { return space_.p == 2 ? 4 : space_.p; }
    unsigned operator()(std::size_t u, std::size_t v) const { return table_[u * dim() + v]; }
    const std::vector<unsigned> &table() const { return table_; }
    bool operator==(const AlmostSymplectic &) const = default;

   private:
    AlmostSymplectic(VectorSpace space, std::vector<unsigned> table, bool check);

    VectorSpace space_;
    std::vector<unsigned> table_;
};

/// Every row and every column has a nonzero entry.
bool is_nondegenerate(unsigned p, unsigned n, std::span<const unsigned> table);

/// Cell (u, v) of the p^N grid goes to region omega(u, v) (p = 2: region 1
/// for the value 2). Row u runs along y, column v along x, from the lower-left.
/// Region 0 is kept as separate unit cells.
ColoredPArySquare omega_to_grid(const AlmostSymplectic &omega);
/// Reads a form off the p^N grid; N defaults to the square's grid exponent.
AlmostSymplectic grid_to_omega(const ColoredPArySquare &square, std::optional<unsigned> n = std::nullopt);

/// Inserts the grid of parts[i] into little square i, keeps the colored
/// regions of `square` and reads the result off the finest grid carrying every
/// corner. The square must be strict.
AlmostSymplectic algebra_action(const ColoredPArySquare &square, std::span<const AlmostSymplectic> parts);
/// p = 2 form: everything outside the tuple is colored black.
AlmostSymplectic algebra_action(const LittleSquareTuple &c, std::span<const AlmostSymplectic> parts);

/// df(u, v, w) = f(v, w) - f(u + v, w) + f(u, v + w) - f(u, v) mod `modulus`,
/// stored at index (u * |V| + v) * |V| + w.
std::vector<unsigned> hochschild_d(const VectorSpace &space, std::span<const unsigned> f, unsigned modulus);
/// A triple where df does not vanish.
std::optional<std::array<std::size_t, 3>> coboundary_witness(const VectorSpace &space, std::span<const unsigned> f,
                                                             unsigned modulus);

/// The table f(u, v) = omega(u, v) / 2 in F_p (p odd).
std::vector<unsigned> half_omega(const AlmostSymplectic &omega);
/// beta(u, v) = omega(u, v) if u < v, else 0; requires omega(u, u) = 0 and
/// omega(v, u) = -omega(u, v) in Z/4, so that beta(u, v) - beta(v, u) = omega(u, v).
std::vector<unsigned> polarize(const AlmostSymplectic &omega);

/// Multiplication table of a central extension, element (x, u) at index x * |V| + u.
struct CentralExtLoop {
    FiniteMagma table;
    /// Size of the central ring (p or 4).
    unsigned center = 0;
    std::size_t dim_v = 0;
    /// Whether (0, 0) is a two-sided identity.
    bool identity_ok = false;
    /// A triple with (ab)c != a(bc), if any.
    std::optional<std::array<std::size_t, 3>> nonassociative;

    std::size_t element(unsigned x, std::size_t u) const { return x * dim_v + u; }
};

/// (x, u) * (y, v) = (x + y + omega(u, v)/2, u + v) over F_p, p odd.
CentralExtLoop loop_from_omega(const AlmostSymplectic &omega);
/// (x, u) * (y, v) = (x + y + beta(u, v), u + v) over Z/4, for V = F_2^N.
CentralExtLoop loop_from_beta(const VectorSpace &space, std::span<const unsigned> beta);

}  // namespace qoperad
