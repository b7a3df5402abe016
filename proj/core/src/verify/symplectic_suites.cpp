#include "qoperad/symplectic.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

std::string format_table(std::span<const unsigned> t) {
    std::string out;
    for (unsigned x : t) out += std::to_string(x);
    return out;
}

/// omega read on a grid `extra` levels finer.
std::vector<unsigned> refine(const AlmostSymplectic &omega, unsigned extra) {
    std::size_t k = 1;
    for (unsigned i = 0; i < extra; ++i) k *= omega.prime();
    const std::size_t d = omega.dim(), fine = d * k;
    std::vector<unsigned> out(fine * fine);
    for (std::size_t r = 0; r < fine; ++r)
        for (std::size_t c = 0; c < fine; ++c) out[r * fine + c] = omega(r / k, c / k);
    return out;
}

bool same_coloring(const AlmostSymplectic &a, const AlmostSymplectic &b) {
    if (a.prime() != b.prime()) return false;
    const unsigned n = std::max(a.exponent(), b.exponent());
    return refine(a, n - a.exponent()) == refine(b, n - b.exponent());
}

std::vector<AlmostSymplectic> random_parts(unsigned p, std::size_t n, std::mt19937_64 &rng) {
    std::vector<AlmostSymplectic> parts;
    for (std::size_t i = 0; i < n; ++i)
        parts.push_back(AlmostSymplectic::random(p, static_cast<unsigned>(uniform_size(rng, 1, p == 2 ? 2 : 1)), rng));
    return parts;
}

void action(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    std::size_t c = 0;
    for (std::size_t t = 0; t < count(100, scale); ++t) {
        const unsigned p = t % 2 == 0 ? 2 : 3;
        const auto square = random_colored_square(p, rng, 1);
        const auto parts = random_parts(p, square.arity(), rng);
        rec.begin_case(c++, "p=" + std::to_string(p) + " arity " + std::to_string(square.arity()));
        const auto omega = algebra_action(square, parts);
        rec.holds("composed omega is non-degenerate", is_nondegenerate(p, omega.exponent(), omega.table()));
    }

    // Hand-drawn 4×4 fixtures: c = <[0,1/2]^2>, part on the 2×2 grid, outside black.
    const LittleSquareTuple quarter({RationalRect{0, Rational(1, 2), 0, Rational(1, 2)}});
    struct Fixture {
        std::vector<unsigned> part;
        std::vector<unsigned> expected;
    };
    const std::vector<Fixture> fixtures{
        {{2, 2, 2, 2}, std::vector<unsigned>(16, 2)},
        {{0, 2, 2, 0}, {0, 2, 2, 2, 2, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}},
    };
    for (const auto &f : fixtures) {
        rec.begin_case(c++, "4x4 fixture part=" + format_table(f.part));
        const std::vector<AlmostSymplectic> parts{AlmostSymplectic(2, 1, f.part)};
        const auto omega = algebra_action(quarter, parts);
        rec.holds("grid exponent 2", omega.exponent() == 2, std::to_string(omega.exponent()), "2");
        rec.holds("cell-by-cell coloring", omega.table() == f.expected, format_table(omega.table()),
                  format_table(f.expected));
    }

    // Acting by c ∘_i c' equals acting by c on the c'-action.
    for (std::size_t t = 0; t < count(40, scale); ++t) {
        const unsigned p = t % 2 == 0 ? 2 : 3;
        // Keep the composite grid small; forms are tabulated up to N = 6.
        auto outer = random_colored_square(p, rng, 1);
        auto inner = random_colored_square(p, rng, 1);
        std::size_t slot = 0;
        std::vector<AlmostSymplectic> inner_parts, outer_parts;
        while (true) {
            outer = random_colored_square(p, rng, 1);
            inner = random_colored_square(p, rng, 1);
            slot = uniform_size(rng, 0, outer.arity() - 1);
            inner_parts = random_parts(p, inner.arity(), rng);
            outer_parts = random_parts(p, outer.arity(), rng);
            unsigned deepest = 0;
            for (const auto &w : inner_parts) deepest = std::max(deepest, w.exponent());
            for (const auto &w : outer_parts) deepest = std::max(deepest, w.exponent());
            if (outer.grid_exponent() + inner.grid_exponent() + deepest <= (p == 2 ? 5u : 4u)) break;
        }
        rec.begin_case(c++, "compatibility p=" + std::to_string(p));
        std::vector<AlmostSymplectic> flat(outer_parts.begin(), outer_parts.begin() + static_cast<std::ptrdiff_t>(slot));
        flat.insert(flat.end(), inner_parts.begin(), inner_parts.end());
        flat.insert(flat.end(), outer_parts.begin() + static_cast<std::ptrdiff_t>(slot) + 1, outer_parts.end());
        const auto lhs = algebra_action(compose_colored(outer, slot, inner), flat);
        outer_parts[slot] = algebra_action(inner, inner_parts);
        const auto rhs = algebra_action(outer, outer_parts);
        rec.holds("action is compatible with composition", same_coloring(lhs, rhs), format_table(lhs.table()),
                  format_table(rhs.table()));
    }
}

void roundtrip(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(100, scale); ++c) {
        const unsigned p = c % 3 == 0 ? 2 : (c % 3 == 1 ? 3 : 5);
        const unsigned n = static_cast<unsigned>(uniform_size(rng, 0, p == 5 ? 1 : 2));
        const auto omega = AlmostSymplectic::random(p, n, rng, 0.4);
        rec.begin_case(c, "p=" + std::to_string(p) + " N=" + std::to_string(n) + " " + format_table(omega.table()));
        const auto grid = omega_to_grid(omega);
        const auto back = grid_to_omega(grid, n);
        rec.holds("grid_to_omega ∘ omega_to_grid = id", back.table() == omega.table(), format_table(back.table()),
                  format_table(omega.table()));
        const auto colors = grid.cell_colors(n);
        bool match = true;
        for (std::size_t k = 0; k < colors.size(); ++k) match = match && colors[k] == (p == 2 ? omega.table()[k] / 2 : omega.table()[k]);
        rec.holds("region l cells are omega^-1(l)", match);
        rec.holds("non-degenerate omega gives a strict grid", grid.is_strict());
    }
}

AlmostSymplectic random_alternating_z4(unsigned n, std::mt19937_64 &rng) {
    const std::size_t d = std::size_t{1} << n;
    std::bernoulli_distribution coin(0.5);
    while (true) {
        std::vector<unsigned> t(d * d, 0);
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = u + 1; v < d; ++v) t[u * d + v] = t[v * d + u] = coin(rng) ? 2 : 0;
        if (is_nondegenerate(2, n, t)) return AlmostSymplectic(2, n, std::move(t));
    }
}

void central_extensions(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    std::size_t c = 0;
    std::size_t recorded = 0;
    for (std::size_t t = 0; t < count(30, scale); ++t) {
        const unsigned p = t % 3 == 0 ? 5 : 3;
        const unsigned n = p == 5 ? 1 : static_cast<unsigned>(uniform_size(rng, 1, 3));
        const auto omega = AlmostSymplectic::random(p, n, rng);
        rec.begin_case(c++, "p=" + std::to_string(p) + " N=" + std::to_string(n) + " " + format_table(omega.table()));
        const auto loop = loop_from_omega(omega);
        rec.holds("table is a quasigroup", is_quasigroup(loop.table));
        const bool cocycle_nonzero = coboundary_witness(omega.space(), half_omega(omega), p).has_value();
        rec.holds("non-associative iff d(omega/2) is nonzero", cocycle_nonzero == loop.nonassociative.has_value());
        if (loop.nonassociative && recorded++ < 3) {
            const auto &w = *loop.nonassociative;
            rec.note("non-associative triple for p=" + std::to_string(p) + " N=" + std::to_string(n) + ": (" +
                     std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
        }
    }
    for (std::size_t t = 0; t < count(15, scale); ++t) {
        const unsigned n = static_cast<unsigned>(uniform_size(rng, 1, 3));
        const auto omega = random_alternating_z4(n, rng);
        rec.begin_case(c++, "p=2 N=" + std::to_string(n) + " " + format_table(omega.table()));
        const auto beta = polarize(omega);
        const std::size_t d = omega.dim();
        bool polar = true;
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < d; ++v) polar = polar && (beta[u * d + v] + 4 - beta[v * d + u]) % 4 == omega(u, v);
        rec.holds("beta(u,v) - beta(v,u) = omega(u,v)", polar);
        const auto loop = loop_from_beta(omega.space(), beta);
        rec.holds("table is a quasigroup", is_quasigroup(loop.table));
        rec.holds("non-associative iff d(beta) is nonzero",
                  coboundary_witness(omega.space(), beta, 4).has_value() == loop.nonassociative.has_value());
    }
    // Trivial cocycle: the abelian group F_p × V.
    rec.begin_case(c++, "omega = 0");
    const auto zero = AlmostSymplectic::unchecked(3, 1, std::vector<unsigned>(9, 0));
    const auto group = loop_from_omega(zero);
    rec.holds("zero form gives an associative loop", group.identity_ok && !group.nonassociative && is_loop(group.table));
}

}  // namespace

void register_symplectic_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"symplectic-action", "symplectic",
                   "composed forms are non-degenerate; 4×4 fixtures; compatibility with square composition", action});
    out.push_back({"symplectic-roundtrip", "symplectic", "omega_to_grid and grid_to_omega are inverse", roundtrip});
    out.push_back({"central-ext-loops", "symplectic",
                   "L(V, omega) tables are quasigroups, non-associative exactly when the coboundary is nonzero",
                   central_extensions});
}

}  // namespace qoperad::verify
