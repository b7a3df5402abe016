#pragma once

#include <random>
#include <vector>

#include "qoperad/verify.hpp"

namespace qoperad::verify {

void register_tree_suites(std::vector<SuiteInfo> &out);
void register_prob_suites(std::vector<SuiteInfo> &out);
void register_density_suites(std::vector<SuiteInfo> &out);
void register_qstate_suites(std::vector<SuiteInfo> &out);
void register_measurement_suites(std::vector<SuiteInfo> &out);
void register_channel_suites(std::vector<SuiteInfo> &out);
void register_loop_suites(std::vector<SuiteInfo> &out);
void register_square_suites(std::vector<SuiteInfo> &out);
void register_symplectic_suites(std::vector<SuiteInfo> &out);
void register_code_suites(std::vector<SuiteInfo> &out);

/// Small-profile count, multiplied by 5 at full scale.
inline std::size_t count(std::size_t small, Scale scale) { return scale == Scale::Small ? small : 5 * small; }

inline std::size_t uniform_size(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace qoperad::verify

#include "qoperad/prob.hpp"

namespace qoperad::verify {

/// Flat Dirichlet sample; with `zeros` some entries are forced to 0.
inline ProbVector random_prob(std::size_t n, std::mt19937_64 &rng, bool zeros = false) {
    std::exponential_distribution<double> e(1.0);
    std::bernoulli_distribution drop(0.25);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto &x : w) {
        x = e(rng);
        total += x;
    }
    if (zeros) {
        for (std::size_t i = 1; i < n; ++i)
            if (drop(rng)) {
                total -= w[i];
                w[i] = 0.0;
            }
    }
    for (auto &x : w) x /= total;
    return ProbVector::normalized(std::move(w));
}

inline std::string format_vector(std::span<const double> v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_double(v[i]);
    return out + "]";
}

}  // namespace qoperad::verify

#include "qoperad/squares.hpp"

namespace qoperad::verify {

/// Random strict p-ary tuple with at least `min_size` rectangles (grid exponent <= 4 for p = 2, <= 2 otherwise).
LittleSquareTuple random_strict_tuple(unsigned p, std::mt19937_64 &rng, std::size_t min_size);
/// Strict colored square whose non-c0 cells get random nonzero colors.
ColoredPArySquare random_colored_square(unsigned p, std::mt19937_64 &rng, std::size_t min_size = 1);

}  // namespace qoperad::verify
