#include <algorithm>

#include "qoperad/squares.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

/// Disjoint grid-aligned rectangles on the denominator-`den` grid.
LittleSquareTuple random_tuple(std::size_t den, std::size_t count_max, std::mt19937_64 &rng) {
    std::vector<RationalRect> rects;
    const std::size_t target = uniform_size(rng, 0, count_max);
    for (int attempt = 0; attempt < 50 && rects.size() < target; ++attempt) {
        const std::size_t x0 = uniform_size(rng, 0, den - 1), y0 = uniform_size(rng, 0, den - 1);
        const std::size_t x1 = uniform_size(rng, x0 + 1, std::min(den, x0 + 1 + den / 2));
        const std::size_t y1 = uniform_size(rng, y0 + 1, std::min(den, y0 + 1 + den / 2));
        const auto d = static_cast<long long>(den);
        RationalRect r{Rational(static_cast<long long>(x0), d), Rational(static_cast<long long>(x1), d),
                       Rational(static_cast<long long>(y0), d), Rational(static_cast<long long>(y1), d)};
        if (std::none_of(rects.begin(), rects.end(), [&](const RationalRect &o) { return interiors_overlap(o, r); }))
            rects.push_back(r);
    }
    return LittleSquareTuple(std::move(rects));
}

}  // namespace

LittleSquareTuple random_strict_tuple(unsigned p, std::mt19937_64 &rng, std::size_t min_size) {
    while (true) {
        std::size_t den = 1;
        for (std::size_t k = uniform_size(rng, 1, p == 2 ? 4 : 2); k > 0; --k) den *= p;
        auto c = random_tuple(den, 4, rng);
        if (c.size() >= min_size && is_strict(c, p)) return c;
    }
}

ColoredPArySquare random_colored_square(unsigned p, std::mt19937_64 &rng, std::size_t min_size) {
    const auto c0 = random_strict_tuple(p, rng, min_size);
    auto base = ColoredPArySquare::from_tuple(p, c0);
    if (p == 2) return base;
    std::vector<std::vector<RationalRect>> colored(p - 1);
    for (const auto &r : base.region(1)) colored[uniform_size(rng, 0, p - 2)].push_back(r);
    return ColoredPArySquare(p, c0, std::move(colored));
}

namespace {

void closure(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(200, scale); ++c) {
        const auto outer = random_strict_tuple(2, rng, 1);
        const auto inner = random_strict_tuple(2, rng, 0);
        const std::size_t slot = uniform_size(rng, 0, outer.size() - 1);
        rec.begin_case(c, "slot " + std::to_string(slot));
        // The constructor re-verifies disjoint interiors exactly.
        const auto composed = compose_squares(outer, slot, inner);
        rec.holds("arity", composed.size() == outer.size() + inner.size() - 1);
        rec.holds("composite stays binary", binary_grid_exponent(composed).has_value());
        rec.holds("composite stays strict", is_strict(composed, 2));
    }
}

void insertion(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    auto nonempty = [&](std::size_t max) {
        while (true) {
            const std::size_t den = uniform_size(rng, 2, 7);
            auto t = random_tuple(den, max, rng);
            if (t.size() >= 1) return t;
        }
    };
    for (std::size_t c = 0; c < count(200, scale); ++c) {
        const auto f = nonempty(3), g = nonempty(3), h = nonempty(3);
        const std::size_t n = f.size(), m = g.size(), k = h.size();
        const std::size_t i = uniform_size(rng, 0, n - 1), j = uniform_size(rng, 0, n + m - 2);
        rec.begin_case(c, "i=" + std::to_string(i) + " j=" + std::to_string(j));
        const auto lhs = compose_squares(compose_squares(f, i, g), j, h);
        LittleSquareTuple rhs;
        if (j < i)
            rhs = compose_squares(compose_squares(f, j, h), i + k - 1, g);
        else if (j < i + m)
            rhs = compose_squares(f, i, compose_squares(g, j - i, h));
        else
            rhs = compose_squares(compose_squares(f, j - m + 1, h), i, g);
        rec.holds("insertion coherence (exact)", lhs == rhs);
        rec.holds("identity square is a unit", compose_squares(f, i, LittleSquareTuple::identity()) == f &&
                                                   compose_squares(LittleSquareTuple::identity(), 0, f) == f);
        // Relabeling commutes with insertion up to the induced block permutation.
        std::vector<std::size_t> sigma(n);
        for (std::size_t t = 0; t < n; ++t) sigma[t] = t;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const auto permuted = permute_squares(f, sigma);
        const std::size_t at = static_cast<std::size_t>(std::find(sigma.begin(), sigma.end(), i) - sigma.begin());
        const auto left = compose_squares(permuted, at, g);
        std::vector<std::size_t> block;
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t src = sigma[t];
            const std::size_t base = src < i ? src : (src == i ? i : src + m - 1);
            if (src == i)
                for (std::size_t r = 0; r < m; ++r) block.push_back(i + r);
            else
                block.push_back(base);
        }
        rec.holds("equivariance of insertion", left == permute_squares(compose_squares(f, i, g), block));
    }
}

void colored(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(200, scale); ++c) {
        const unsigned p = c % 2 == 0 ? 2 : 3;
        const auto outer = random_colored_square(p, rng, 1);
        const auto inner = random_colored_square(p, rng, 1);
        const std::size_t slot = uniform_size(rng, 0, outer.arity() - 1);
        rec.begin_case(c, "p=" + std::to_string(p) + " slot " + std::to_string(slot));
        const auto composed = compose_colored(outer, slot, inner);
        rec.holds("colored composite is strict", composed.is_strict());
        for (unsigned l = 1; l < p; ++l)
            rec.holds("region grows by the scaled inner region",
                      composed.region(l).size() == outer.region(l).size() + inner.region(l).size());
    }
}

}  // namespace

void register_square_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"squares-closure", "little_squares",
                   "binary strict composites stay disjoint, binary and strict (exact)", closure});
    out.push_back({"squares-insertion", "little_squares",
                   "three-case insertion identities, unit and equivariance, exact rationals", insertion});
    out.push_back({"squares-colored", "little_squares", "colored p-ary composition preserves strictness", colored});
}

}  // namespace qoperad::verify
