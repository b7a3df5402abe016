#include "qoperad/squares.hpp"

#include <algorithm>
#include <optional>

#include "qoperad/error.hpp"

namespace qoperad {

namespace {

void require_in_unit(const RationalRect &r) {
    require(r.x0 >= 0 && r.y0 >= 0 && r.x1 <= 1 && r.y1 <= 1, ErrorCode::InvalidInput,
            "rectangle leaves the unit square");
    require(!r.degenerate(), ErrorCode::InvalidInput, "rectangle is degenerate");
}

BigInt pow_int(unsigned p, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

std::size_t cell_index(const Rational &t, const BigInt &scale) {
    const Rational s = t * Rational(scale);
    require(denominator(s) == 1, ErrorCode::InvalidInput, "endpoint is not on the grid");
    return static_cast<std::size_t>(numerator(s));
}

}  // namespace

RationalRect RationalRect::map(const RationalRect &r) const {
    const Rational w = x1 - x0, h = y1 - y0;
    return {x0 + w * r.x0, x0 + w * r.x1, y0 + h * r.y0, y0 + h * r.y1};
}

bool interiors_overlap(const RationalRect &a, const RationalRect &b) {
    return std::max(a.x0, b.x0) < std::min(a.x1, b.x1) && std::max(a.y0, b.y0) < std::min(a.y1, b.y1);
}

namespace {

/// First overlapping pair (original indices, smaller first), found by a
/// sweep over rectangles sorted by left edge.
std::optional<std::pair<std::size_t, std::size_t>> first_overlap(const std::vector<RationalRect> &rects) {
    std::vector<std::size_t> order(rects.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rects[a].x0 < rects[b].x0; });
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t a = 0; a < order.size(); ++a) {
        const RationalRect &r = rects[order[a]];
        for (std::size_t b = a + 1; b < order.size() && rects[order[b]].x0 < r.x1; ++b) {
            if (!interiors_overlap(r, rects[order[b]])) continue;
            std::pair<std::size_t, std::size_t> hit{std::min(order[a], order[b]), std::max(order[a], order[b])};
            if (!best || std::make_pair(hit.second, hit.first) < std::make_pair(best->second, best->first)) best = hit;
        }
    }
    return best;
}

}  // namespace

LittleSquareTuple::LittleSquareTuple(std::vector<RationalRect> rects) : rects_(std::move(rects)) {
    for (const auto &r : rects_) require_in_unit(r);
    if (auto hit = first_overlap(rects_))
        fail(ErrorCode::InvalidInput,
             "little squares " + std::to_string(hit->first + 1) + " and " + std::to_string(hit->second + 1) + " overlap");
}

LittleSquareTuple compose_squares(const LittleSquareTuple &c, std::size_t slot, const LittleSquareTuple &inner) {
    require(slot < c.size(), ErrorCode::IndexOutOfRange,
            "insertion slot " + std::to_string(slot + 1) + " out of range 1.." + std::to_string(c.size()));
    std::vector<RationalRect> out(c.rects().begin(), c.rects().begin() + static_cast<std::ptrdiff_t>(slot));
    for (const auto &r : inner.rects()) out.push_back(c[slot].map(r));
    out.insert(out.end(), c.rects().begin() + static_cast<std::ptrdiff_t>(slot) + 1, c.rects().end());
    return LittleSquareTuple(std::move(out));
}

LittleSquareTuple permute_squares(const LittleSquareTuple &c, std::span<const std::size_t> sigma) {
    require(sigma.size() == c.size(), ErrorCode::ArityMismatch, "permutation size differs from arity");
    std::vector<bool> seen(c.size(), false);
    std::vector<RationalRect> out;
    for (std::size_t s : sigma) {
        require(s < c.size() && !seen[s], ErrorCode::InvalidInput, "not a permutation");
        seen[s] = true;
        out.push_back(c[s]);
    }
    return LittleSquareTuple(std::move(out));
}

std::optional<unsigned> power_exponent(const BigInt &denominator, unsigned p) {
    BigInt d = denominator;
    unsigned e = 0;
    while (d > 1) {
        if (d % p != 0) return std::nullopt;
        d /= p;
        ++e;
    }
    return e;
}

std::optional<unsigned> grid_exponent(std::span<const RationalRect> rects, unsigned p) {
    unsigned n = 0;
    for (const auto &r : rects) {
        for (const Rational *t : {&r.x0, &r.x1, &r.y0, &r.y1}) {
            auto e = power_exponent(denominator(*t), p);
            if (!e) return std::nullopt;
            n = std::max(n, *e);
        }
    }
    return n;
}

std::optional<unsigned> binary_grid_exponent(const LittleSquareTuple &c) { return grid_exponent(c.rects(), 2); }

std::vector<bool> rasterize(std::span<const RationalRect> rects, unsigned p, unsigned n) {
    const BigInt scale = pow_int(p, n);
    const auto side = static_cast<std::size_t>(scale);
    std::vector<bool> covered(side * side, false);
    for (const auto &r : rects) {
        const std::size_t c0 = cell_index(r.x0, scale), c1 = cell_index(r.x1, scale);
        const std::size_t r0 = cell_index(r.y0, scale), r1 = cell_index(r.y1, scale);
        for (std::size_t row = r0; row < r1; ++row)
            for (std::size_t col = c0; col < c1; ++col) covered[row * side + col] = true;
    }
    return covered;
}

bool is_strict(const LittleSquareTuple &c, unsigned p) {
    auto n = grid_exponent(c.rects(), p);
    require(n.has_value(), ErrorCode::InvalidInput, "little squares are not on a p-ary grid");
    const auto covered = rasterize(c.rects(), p, *n);
    const std::size_t side = static_cast<std::size_t>(pow_int(p, *n));
    for (std::size_t i = 0; i < side; ++i) {
        bool row_free = false, col_free = false;
        for (std::size_t j = 0; j < side; ++j) {
            row_free = row_free || !covered[i * side + j];
            col_free = col_free || !covered[j * side + i];
        }
        if (!row_free || !col_free) return false;
    }
    return true;
}

ColoredPArySquare::ColoredPArySquare(unsigned p, LittleSquareTuple c0, std::vector<std::vector<RationalRect>> colored)
    : p_(p), c0_(std::move(c0)), colored_(std::move(colored)) {
    require(p >= 2, ErrorCode::InvalidInput, "p must be a prime");
    for (unsigned d = 2; d * d <= p; ++d) require(p % d != 0, ErrorCode::InvalidInput, "p must be a prime");
    require(colored_.size() + 1 == p, ErrorCode::InvalidInput,
            "expected " + std::to_string(p - 1) + " colored regions besides region 0");
    const auto all = all_rects();
    require(qoperad::grid_exponent(all, p).has_value(), ErrorCode::InvalidInput, "region endpoints are not p-adic");
    Rational area = 0;
    for (const auto &r : all) {
        require_in_unit(r);
        area += r.area();
    }
    require(!first_overlap(all).has_value(), ErrorCode::InvalidInput, "regions overlap");
    // Disjoint interiors inside the unit square: full area means full cover.
    require(area == 1, ErrorCode::InvalidInput, "regions do not cover the unit square");
}

ColoredPArySquare ColoredPArySquare::from_tuple(unsigned p, const LittleSquareTuple &c) {
    auto n = qoperad::grid_exponent(c.rects(), p);
    require(n.has_value(), ErrorCode::InvalidInput, "little squares are not on a p-ary grid");
    const auto covered = rasterize(c.rects(), p, *n);
    const std::size_t side = static_cast<std::size_t>(pow_int(p, *n));
    std::vector<std::vector<RationalRect>> colored(p - 1);
    const Rational s(1, static_cast<long long>(side));
    // Maximal horizontal runs of uncovered cells, one rectangle each.
    for (std::size_t row = 0; row < side; ++row) {
        for (std::size_t col = 0; col < side;) {
            if (covered[row * side + col]) {
                ++col;
                continue;
            }
            std::size_t end = col;
            while (end < side && !covered[row * side + end]) ++end;
            colored[0].push_back({s * col, s * end, s * row, s * (row + 1)});
            col = end;
        }
    }
    return ColoredPArySquare(p, c, std::move(colored));
}

std::vector<RationalRect> ColoredPArySquare::all_rects() const {
    std::vector<RationalRect> all(c0_.rects());
    for (const auto &region : colored_) all.insert(all.end(), region.begin(), region.end());
    return all;
}

unsigned ColoredPArySquare::grid_exponent() const { return *qoperad::grid_exponent(all_rects(), p_); }

std::vector<unsigned> ColoredPArySquare::cell_colors(unsigned n) const {
    const std::size_t side = static_cast<std::size_t>(pow_int(p_, n));
    std::vector<unsigned> colors(side * side, 0);
    for (unsigned l = 1; l < p_; ++l) {
        const auto covered = rasterize(region(l), p_, n);
        for (std::size_t k = 0; k < covered.size(); ++k)
            if (covered[k]) colors[k] = l;
    }
    return colors;
}

ColoredPArySquare compose_colored(const ColoredPArySquare &outer, std::size_t slot, const ColoredPArySquare &inner) {
    require(outer.prime() == inner.prime(), ErrorCode::PrimeMismatch, "colored squares use different primes");
    const LittleSquareTuple c0 = compose_squares(outer.c0(), slot, inner.c0());
    const RationalRect &target = outer.c0()[slot];
    std::vector<std::vector<RationalRect>> colored;
    for (unsigned l = 1; l < outer.prime(); ++l) {
        std::vector<RationalRect> region = outer.region(l);
        for (const auto &r : inner.region(l)) region.push_back(target.map(r));
        colored.push_back(std::move(region));
    }
    return ColoredPArySquare(outer.prime(), c0, std::move(colored));
}

ColoredPArySquare compose_colored_full(const ColoredPArySquare &outer, std::span<const ColoredPArySquare> parts) {
    require(parts.size() == outer.arity(), ErrorCode::ArityMismatch,
            "colored square has arity " + std::to_string(outer.arity()) + ", got " + std::to_string(parts.size()) +
                " parts");
    const unsigned p = outer.prime();
    std::vector<RationalRect> c0;
    std::vector<std::vector<RationalRect>> colored;
    for (unsigned l = 1; l < p; ++l) colored.push_back(outer.region(l));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i].prime() == p, ErrorCode::PrimeMismatch, "colored squares use different primes");
        const RationalRect &target = outer.c0()[i];
        for (const auto &r : parts[i].c0().rects()) c0.push_back(target.map(r));
        for (unsigned l = 1; l < p; ++l)
            for (const auto &r : parts[i].region(l)) colored[l - 1].push_back(target.map(r));
    }
    return ColoredPArySquare(p, LittleSquareTuple(std::move(c0)), std::move(colored));
}

std::string to_string(const Rational &r) { return r.str(); }

}  // namespace qoperad
