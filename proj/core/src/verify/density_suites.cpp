#include <algorithm>

#include "qoperad/density.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

void majorization(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    const auto shannon = EntropyFamily::shannon();
    for (std::size_t c = 0; c < count(1000, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 6);
        const DensityMatrix rho =
            c % 4 == 3 ? random_density_rank(n, uniform_size(rng, 1, n), rng) : random_density(n, rng);
        rec.begin_case(c, format_matrix(rho.matrix()));
        const auto lambda = eig_prob(rho);
        std::vector<double> diag = diag_prob(rho).values();
        std::sort(diag.begin(), diag.end(), std::greater<>());
        rec.holds("spectrum majorizes diagonal", majorizes(lambda.values(), diag));
        const double s_diag = classical_entropy(shannon, diag_prob(rho));
        const double s_spec = classical_entropy(shannon, lambda.as_prob());
        rec.holds("S(P) >= S(Lambda)", s_diag >= s_spec - 1e-9, format_double(s_diag), ">= " + format_double(s_spec));
        rec.near("von Neumann equals Shannon of spectrum", quantum_entropy(shannon, rho), s_spec, 1e-9);
    }
}

void unitary_invariance(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(300, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 6);
        const DensityMatrix rho = random_density(n, rng);
        const Matrix u = random_unitary(n, rng);
        rec.begin_case(c, format_matrix(rho.matrix()));
        Matrix conj = u * rho.matrix() * u.adjoint();
        conj = 0.5 * (conj + conj.adjoint()).eval();
        const auto a = eig_prob(rho).values();
        const auto b = eig_prob(DensityMatrix(conj)).values();
        for (std::size_t i = 0; i < n; ++i) rec.near("eigenvalue " + std::to_string(i), b[i], a[i], 1e-9);
    }
}

}  // namespace

void register_density_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"majorization", "density",
                   "Lambda(rho) majorizes P(rho), S(P) >= S(Lambda), von Neumann = Shannon(Lambda)", majorization});
    out.push_back({"unitary-invariance", "density", "spectrum is invariant under unitary conjugation",
                   unitary_invariance});
}

}  // namespace qoperad::verify
