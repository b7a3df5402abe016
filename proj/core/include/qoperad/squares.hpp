#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qoperad {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// [x0, x1] × [y0, y1] inside the unit square, exact.
struct RationalRect {
    Rational x0{0}, x1{1}, y0{0}, y1{1};

    static RationalRect unit() { return {}; }
    bool degenerate() const { return x0 >= x1 || y0 >= y1; }
    Rational area() const { return (x1 - x0) * (y1 - y0); }
    /// The image of `r` under the affine map sending the unit square onto *this.
    RationalRect map(const RationalRect &r) const;
    bool operator==(const RationalRect &) const = default;
};

/// Whether the open interiors intersect.
bool interiors_overlap(const RationalRect &a, const RationalRect &b);

/// Ordered rectangles with pairwise disjoint interiors; none degenerate.
class LittleSquareTuple {
   public:
    LittleSquareTuple() = default;
    explicit LittleSquareTuple(std::vector<RationalRect> rects);
    static LittleSquareTuple identity() { return LittleSquareTuple({RationalRect::unit()}); }

    std::size_t size() const { return rects_.size(); }
    const RationalRect &operator[](std::size_t i) const { return rects_[i]; }
    const std::vector<RationalRect> &rects() const { return rects_; }
    bool operator==(const LittleSquareTuple &) const = default;

   private:
    std::vector<RationalRect> rects_;
};

/// c ∘_slot c': rect `slot` (0-based) is replaced by its images of c'.
LittleSquareTuple compose_squares(const LittleSquareTuple &c, std::size_t slot, const LittleSquareTuple &inner);

/// <c_{sigma(0)}, ..., c_{sigma(n-1)}>.
LittleSquareTuple permute_squares(const LittleSquareTuple &c, std::span<const std::size_t> sigma);

/// Exponent e with denominator == p^e, or nothing.
std::optional<unsigned> power_exponent(const BigInt &denominator, unsigned p);

/// Smallest N with every endpoint on the p-ary N-grid; nothing if some
/// denominator is not a power of p. The empty list gives 0.
std::optional<unsigned> grid_exponent(std::span<const RationalRect> rects, unsigned p);
std::optional<unsigned> binary_grid_exponent(const LittleSquareTuple &c);

/// Cells of the p^N × p^N grid covered by the union; cell (row, col) is at
/// index row * p^N + col, with row counted along y and col along x from the
/// lower-left corner. All endpoints must lie on the N-grid.
std::vector<bool> rasterize(std::span<const RationalRect> rects, unsigned p, unsigned n);

/// Every grid row and column keeps an uncovered cell. Throws InvalidInput
/// when the tuple is not p-ary.
bool is_strict(const LittleSquareTuple &c, unsigned p = 2);

/// Unit square decomposed into p regions. Region 0 is exactly the union of the
/// little squares c0; regions 1..p-1 are rectangle lists. All endpoints are
/// p-adic, interiors are disjoint and the closures cover the unit square.
class ColoredPArySquare {
   public:
    ColoredPArySquare(unsigned p, LittleSquareTuple c0, std::vector<std::vector<RationalRect>> colored);

    /// Strict tuple with everything outside it in region 1 (the p = 2 form).
    static ColoredPArySquare from_tuple(unsigned p, const LittleSquareTuple &c);

    unsigned prime() const { return p_; }
    const LittleSquareTuple &c0() const { return c0_; }
    std::size_t arity() const { return c0_.size(); }
    /// Region l; region 0 is c0's rectangles.
    const std::vector<RationalRect> &region(std::size_t l) const { return l == 0 ? c0_.rects() : colored_[l - 1]; }
    /// Every rectangle of every region.
    std::vector<RationalRect> all_rects() const;
    unsigned grid_exponent() const;
    bool is_strict() const { return qoperad::is_strict(c0_, p_); }
    /// Region of each cell of the p^N grid (N >= grid_exponent()).
    std::vector<unsigned> cell_colors(unsigned n) const;

   private:
    unsigned p_;
    LittleSquareTuple c0_;
    std::vector<std::vector<RationalRect>> colored_;
};

/// Region l'' = R_l ∪ c_slot(R'_l) for l >= 1; c''0 = c0 ∘_slot c'0.
ColoredPArySquare compose_colored(const ColoredPArySquare &outer, std::size_t slot, const ColoredPArySquare &inner);
/// All slots at once.
ColoredPArySquare compose_colored_full(const ColoredPArySquare &outer, std::span<const ColoredPArySquare> parts);

std::string to_string(const Rational &r);

}  // namespace qoperad
