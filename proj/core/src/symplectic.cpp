#include "qoperad/symplectic.hpp"

#include "qoperad/error.hpp"

namespace qoperad {

namespace {

std::size_t ipow(unsigned p, unsigned e) {
    std::size_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

unsigned inverse_of_two(unsigned p) { return (p + 1) / 2; }

}  // namespace

std::size_t VectorSpace::size() const { return ipow(p, n); }

std::size_t VectorSpace::add(std::size_t u, std::size_t v) const {
    std::size_t out = 0, scale = 1;
    for (unsigned i = 0; i < n; ++i) {
        out += ((u % p + v % p) % p) * scale;
        u /= p;
        v /= p;
        scale *= p;
    }
    return out;
}

std::size_t VectorSpace::neg(std::size_t u) const {
    std::size_t out = 0, scale = 1;
    for (unsigned i = 0; i < n; ++i) {
        out += ((p - u % p) % p) * scale;
        u /= p;
        scale *= p;
    }
    return out;
}

bool is_nondegenerate(unsigned p, unsigned n, std::span<const unsigned> table) {
    const std::size_t d = ipow(p, n);
    for (std::size_t i = 0; i < d; ++i) {
        bool row = false, col = false;
        for (std::size_t j = 0; j < d; ++j) {
            row = row || table[i * d + j] != 0;
            col = col || table[j * d + i] != 0;
        }
        if (!row || !col) return false;
    }
    return true;
}

AlmostSymplectic::AlmostSymplectic(VectorSpace space, std::vector<unsigned> table, bool check)
    : space_(space), table_(std::move(table)) {
    require(space_.p >= 2, ErrorCode::InvalidInput, "p must be a prime");
    for (unsigned d = 2; d * d <= space_.p; ++d) require(space_.p % d != 0, ErrorCode::InvalidInput, "p must be a prime");
    require(space_.n <= 6, ErrorCode::Unsupported, "N is limited to 6");
    require(table_.size() == dim() * dim(), ErrorCode::DimensionMismatch,
            "omega table must have " + std::to_string(dim() * dim()) + " entries");
    for (unsigned x : table_) {
        if (space_.p == 2)
            require(x == 0 || x == 2, ErrorCode::InvalidInput, "omega values for p = 2 must lie in {0, 2}");
        else
            require(x < space_.p, ErrorCode::InvalidInput, "omega values must lie in F_p");
    }
    if (check)
        require(is_nondegenerate(space_.p, space_.n, table_), ErrorCode::InvalidInput,
                "omega is degenerate: some row or column vanishes");
}

AlmostSymplectic::AlmostSymplectic(unsigned p, unsigned n, std::vector<unsigned> table)
    : AlmostSymplectic(VectorSpace{p, n}, std::move(table), true) {}

AlmostSymplectic AlmostSymplectic::unchecked(unsigned p, unsigned n, std::vector<unsigned> table) {
    return AlmostSymplectic(VectorSpace{p, n}, std::move(table), false);
}

AlmostSymplectic AlmostSymplectic::random(unsigned p, unsigned n, std::mt19937_64 &rng, double zero_fraction) {
    const std::size_t d = ipow(p, n);
    std::bernoulli_distribution zero(zero_fraction);
    std::uniform_int_distribution<unsigned> value(1, p - 1);
    while (true) {
        std::vector<unsigned> t(d * d);
        for (auto &x : t) x = zero(rng) ? 0 : (p == 2 ? 2 : value(rng));
        if (is_nondegenerate(p, n, t)) return AlmostSymplectic(p, n, std::move(t));
    }
}

ColoredPArySquare omega_to_grid(const AlmostSymplectic &omega) {
    const unsigned p = omega.prime();
    const std::size_t d = omega.dim();
    const Rational s(1, static_cast<long long>(d));
    std::vector<RationalRect> zeros;
    std::vector<std::vector<RationalRect>> colored(p - 1);
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) {
            RationalRect cell{s * v, s * (v + 1), s * u, s * (u + 1)};
            const unsigned value = omega(u, v);
            const unsigned region = p == 2 ? value / 2 : value;
            if (region == 0)
                zeros.push_back(cell);
            else
                colored[region - 1].push_back(cell);
        }
    }
    return ColoredPArySquare(p, LittleSquareTuple(std::move(zeros)), std::move(colored));
}

namespace {

std::vector<unsigned> read_table(const ColoredPArySquare &square, unsigned n) {
    std::vector<unsigned> t = square.cell_colors(n);
    if (square.prime() == 2)
        for (auto &x : t) x *= 2;
    return t;
}

}  // namespace

AlmostSymplectic grid_to_omega(const ColoredPArySquare &square, std::optional<unsigned> n) {
    const unsigned exp = n.value_or(square.grid_exponent());
    require(exp >= square.grid_exponent(), ErrorCode::InvalidInput, "grid is coarser than the coloring");
    return AlmostSymplectic::unchecked(square.prime(), exp, read_table(square, exp));
}

AlmostSymplectic algebra_action(const ColoredPArySquare &square, std::span<const AlmostSymplectic> parts) {
    require(square.is_strict(), ErrorCode::NotStrict, "algebra action needs a strict square");
    std::vector<ColoredPArySquare> grids;
    for (const auto &part : parts) {
        require(part.prime() == square.prime(), ErrorCode::PrimeMismatch, "parts use a different prime");
        grids.push_back(omega_to_grid(part));
    }
    const ColoredPArySquare composed = compose_colored_full(square, grids);
    const unsigned n = composed.grid_exponent();
    return AlmostSymplectic(square.prime(), n, read_table(composed, n));
}

AlmostSymplectic algebra_action(const LittleSquareTuple &c, std::span<const AlmostSymplectic> parts) {
    require(is_strict(c, 2), ErrorCode::NotStrict, "algebra action needs a strict square");
    return algebra_action(ColoredPArySquare::from_tuple(2, c), parts);
}

std::vector<unsigned> hochschild_d(const VectorSpace &space, std::span<const unsigned> f, unsigned modulus) {
    const std::size_t d = space.size();
    require(f.size() == d * d, ErrorCode::DimensionMismatch, "cochain table has the wrong size");
    std::vector<unsigned> out(d * d * d);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t w = 0; w < d; ++w) {
                const unsigned value = f[v * d + w] + (modulus - f[space.add(u, v) * d + w]) +
                                       f[u * d + space.add(v, w)] + (modulus - f[u * d + v]);
                out[(u * d + v) * d + w] = value % modulus;
            }
    return out;
}

std::optional<std::array<std::size_t, 3>> coboundary_witness(const VectorSpace &space, std::span<const unsigned> f,
                                                             unsigned modulus) {
    const std::size_t d = space.size();
    const auto df = hochschild_d(space, f, modulus);
    for (std::size_t k = 0; k < df.size(); ++k)
        if (df[k] != 0) return std::array{k / (d * d), (k / d) % d, k % d};
    return std::nullopt;
}

std::vector<unsigned> half_omega(const AlmostSymplectic &omega) {
    require(omega.prime() > 2, ErrorCode::InvalidInput, "halving omega needs p > 2");
    const unsigned half = inverse_of_two(omega.prime());
    std::vector<unsigned> out(omega.table());
    for (auto &x : out) x = (x * half) % omega.prime();
    return out;
}

std::vector<unsigned> polarize(const AlmostSymplectic &omega) {
    require(omega.prime() == 2, ErrorCode::InvalidInput, "polarization is defined for p = 2");
    const std::size_t d = omega.dim();
    std::vector<unsigned> beta(d * d, 0);
    for (std::size_t u = 0; u < d; ++u) {
        require(omega(u, u) == 0, ErrorCode::InvalidInput, "polarization needs omega(u, u) = 0");
        for (std::size_t v = 0; v < d; ++v) {
            require((omega(u, v) + omega(v, u)) % 4 == 0, ErrorCode::InvalidInput,
                    "polarization needs omega(v, u) = -omega(u, v)");
            if (u < v) beta[u * d + v] = omega(u, v);
        }
    }
    return beta;
}

namespace {

CentralExtLoop central_extension(const VectorSpace &space, std::span<const unsigned> cocycle, unsigned center) {
    const std::size_t d = space.size();
    require(cocycle.size() == d * d, ErrorCode::DimensionMismatch, "cocycle table has the wrong size");
    const std::size_t total = center * d;
    std::vector<std::vector<std::size_t>> t(total, std::vector<std::size_t>(total));
    for (unsigned x = 0; x < center; ++x)
        for (std::size_t u = 0; u < d; ++u)
            for (unsigned y = 0; y < center; ++y)
                for (std::size_t v = 0; v < d; ++v) {
                    const unsigned z = (x + y + cocycle[u * d + v]) % center;
                    t[x * d + u][y * d + v] = z * d + space.add(u, v);
                }
    CentralExtLoop out{FiniteMagma(std::move(t)), center, d, false, std::nullopt};
    const auto id = out.table.identity();
    out.identity_ok = id.has_value() && *id == 0;
    const auto &m = out.table;
    for (std::size_t a = 0; a < total && !out.nonassociative; ++a)
        for (std::size_t b = 0; b < total && !out.nonassociative; ++b)
            for (std::size_t c = 0; c < total; ++c)
                if (m(m(a, b), c) != m(a, m(b, c))) {
                    out.nonassociative = std::array{a, b, c};
                    break;
                }
    return out;
}

}  // namespace

CentralExtLoop loop_from_omega(const AlmostSymplectic &omega) {
    require(omega.prime() > 2, ErrorCode::InvalidInput, "the omega form of the loop needs p > 2; use beta for p = 2");
    return central_extension(omega.space(), half_omega(omega), omega.prime());
}

CentralExtLoop loop_from_beta(const VectorSpace &space, std::span<const unsigned> beta) {
    require(space.p == 2, ErrorCode::InvalidInput, "beta loops are defined over F_2");
    for (unsigned x : beta) require(x < 4, ErrorCode::InvalidInput, "beta values must lie in Z/4");
    return central_extension(space, beta, 4);
}

}  // namespace qoperad
