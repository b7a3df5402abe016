#include <algorithm>

#include "qoperad/prob.hpp"
#include "qoperad/qstate_operad.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

std::vector<DensityMatrix> random_states(std::size_t count, std::size_t max_dim, std::mt19937_64 &rng) {
    std::vector<DensityMatrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_density(uniform_size(rng, 1, max_dim), rng));
    return out;
}

using Compose = DensityMatrix (*)(const DensityMatrix &, std::span<const DensityMatrix>);

/// Returns max |lhs - rhs| of the two association orders.
double association_gap(Compose gamma, const DensityMatrix &rho, const std::vector<DensityMatrix> &mid,
                       const std::vector<std::vector<DensityMatrix>> &inner, Matrix &lhs_out, Matrix &rhs_out) {
    std::vector<DensityMatrix> flat;
    std::vector<DensityMatrix> grouped;
    for (std::size_t i = 0; i < mid.size(); ++i) {
        flat.insert(flat.end(), inner[i].begin(), inner[i].end());
        grouped.push_back(gamma(mid[i], inner[i]));
    }
    lhs_out = gamma(gamma(rho, mid), flat).matrix();
    rhs_out = gamma(rho, grouped).matrix();
    return max_abs_diff(lhs_out, rhs_out);
}

void qp_associativity(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    constexpr double tol = 1e-10;
    for (std::size_t c = 0; c < count(300, scale); ++c) {
        const std::size_t m = uniform_size(rng, 1, 3);
        const DensityMatrix rho = random_density(m, rng);
        const auto mid = random_states(m, 3, rng);
        std::vector<std::vector<DensityMatrix>> inner;
        for (const auto &s : mid) inner.push_back(random_states(s.dim(), 2, rng));
        rec.begin_case(c, format_matrix(rho.matrix()));
        Matrix lhs, rhs;
        association_gap(gamma_p, rho, mid, inner, lhs, rhs);
        rec.near("associativity", lhs, rhs, tol);

        // Equivariance 1: gamma(sigma(rho); rho_{sigma^-1(k)}) = sigma~(gamma(rho; rho_i)).
        const Permutation sigma = Permutation::random(m, rng);
        std::vector<DensityMatrix> moved(mid);
        std::vector<std::size_t> sizes;
        for (std::size_t i = 0; i < m; ++i) {
            moved[sigma(i)] = mid[i];
            sizes.push_back(mid[i].dim());
        }
        const DensityMatrix base = gamma_p(rho, mid);
        rec.near("equivariance of the outer permutation", gamma_p(perm_act(sigma, rho), moved).matrix(),
                 perm_act(block_permutation(sigma, sizes), base).matrix(), tol);

        // Equivariance 2: gamma(rho; sigma_i(rho_i)) = (sigma_1 ⊕ ... ⊕ sigma_m)(gamma(rho; rho_i)).
        std::vector<Permutation> locals;
        std::vector<DensityMatrix> acted;
        for (const auto &s : mid) {
            locals.push_back(Permutation::random(s.dim(), rng));
            acted.push_back(perm_act(locals.back(), s));
        }
        rec.near("equivariance of the inner permutations", gamma_p(rho, acted).matrix(),
                 perm_act(block_direct_sum(locals), base).matrix(), tol);

        // Restriction to diagonal states agrees with the classical operad.
        std::vector<ProbVector> parts;
        std::vector<DensityMatrix> diag_parts;
        for (const auto &s : mid) {
            parts.push_back(diag_prob(s));
            diag_parts.push_back(DensityMatrix::diagonal(parts.back().values()));
        }
        const ProbVector p = diag_prob(rho);
        const ProbVector classical = compose_prob(p, parts);
        rec.near("restriction to the classical operad",
                 gamma_p(DensityMatrix::diagonal(p.values()), diag_parts).matrix(),
                 DensityMatrix::diagonal(classical.values()).matrix(), tol);

        // Unit failure: gamma_P(rho; 1, ..., 1) = diag(P(rho)).
        const std::vector<DensityMatrix> ones(m, DensityMatrix::one());
        const Matrix collapsed = gamma_p(rho, ones).matrix();
        rec.near("unit composite is the dephased state", collapsed, DensityMatrix::diagonal(p.values()).matrix(), tol);
        if (m >= 2) {
            const double off = max_abs_diff(collapsed, rho.matrix());
            rec.holds("unit composite differs from a non-diagonal state", off > 1e-6, format_double(off), "> 1e-6");
        }
    }
}

void qp_insertion(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(200, scale); ++c) {
        const std::size_t n = uniform_size(rng, 1, 4);
        const DensityMatrix rho = random_density(n, rng);
        const auto parts = random_states(n, 3, rng);
        rec.begin_case(c, format_matrix(rho.matrix()));
        DensityMatrix iterated = rho;
        for (std::size_t i = n; i-- > 0;) iterated = insert_p(iterated, i, parts[i]);
        const DensityMatrix direct = gamma_p(rho, parts);
        rec.near("iterated insertion equals gamma_P", iterated.matrix(), direct.matrix(), 1e-12);
        // Placement: off-block entries of the composite are exact zeros.
        std::size_t r0 = 0;
        bool exact = true;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t c0 = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j)
                    exact = exact && iterated.matrix()
                                         .block(static_cast<Eigen::Index>(r0), static_cast<Eigen::Index>(c0),
                                                static_cast<Eigen::Index>(parts[i].dim()),
                                                static_cast<Eigen::Index>(parts[j].dim()))
                                         .isZero(0.0);
                c0 += parts[j].dim();
            }
            r0 += parts[i].dim();
        }
        rec.holds("off-block entries are exactly zero", exact);
    }
}

void qlambda_associativity(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(100, scale); ++c) {
        const std::size_t m = uniform_size(rng, 1, 3);
        const DensityMatrix rho = random_density(m, rng);
        const auto mid = random_states(m, 3, rng);
        std::vector<std::vector<DensityMatrix>> inner;
        for (const auto &s : mid) inner.push_back(random_states(s.dim(), 2, rng));
        rec.begin_case(c, format_matrix(rho.matrix()));
        Matrix lhs, rhs;
        association_gap(gamma_lambda, rho, mid, inner, lhs, rhs);
        rec.near("associativity", lhs, rhs, 1e-9);
    }
}

void qlambda_spectrum(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count(100, scale); ++c) {
        const std::size_t m = uniform_size(rng, 1, 3);
        const DensityMatrix rho = random_density(m, rng);
        const auto mid = random_states(m, 3, rng);
        std::vector<std::vector<DensityMatrix>> inner;
        for (const auto &s : mid) inner.push_back(std::vector<DensityMatrix>(s.dim(), DensityMatrix::one()));
        rec.begin_case(c, format_matrix(rho.matrix()));
        // With 1×1 innermost parts both association orders are diagonal with the
        // same entries, possibly in a different order.
        Matrix lhs, rhs;
        association_gap(gamma_lambda, rho, mid, inner, lhs, rhs);
        std::vector<double> a, b;
        for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
            a.push_back(lhs(i, i).real());
            b.push_back(rhs(i, i).real());
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < a.size(); ++i) rec.near("diagonal multiset entry " + std::to_string(i), a[i], b[i], 1e-9);
    }
}

void qlambda_nonsymmetry(Recorder &rec, std::uint64_t seed, Scale) {
    std::mt19937_64 rng(seed);
    // Search for (rho, parts, sigma) violating the outer equivariance of gamma_Lambda.
    bool found = false;
    for (std::size_t c = 0; c < 50 && !found; ++c) {
        const DensityMatrix rho = random_density(2, rng);
        const std::vector<DensityMatrix> parts{random_density(1 + c % 2, rng), random_density(2, rng)};
        const Permutation sigma({1, 0});
        std::vector<DensityMatrix> moved{parts[1], parts[0]};
        const Matrix lhs = gamma_lambda(perm_act(sigma, rho), moved).matrix();
        const Matrix rhs =
            perm_act(block_permutation(sigma, std::vector<std::size_t>{parts[0].dim(), parts[1].dim()}),
                     gamma_lambda(rho, parts))
                .matrix();
        rec.begin_case(c, format_matrix(rho.matrix()));
        if (max_abs_diff(lhs, rhs) > 1e-6) {
            found = true;
            rec.note("non-symmetry witness: rho=" + format_matrix(rho.matrix()) + " parts=" +
                     format_matrix(parts[0].matrix()) + "," + format_matrix(parts[1].matrix()) + " sigma=(1 0)");
        }
    }
    rec.holds("non-symmetry witness found", found);
}

}  // namespace

void register_qstate_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"qp-associativity", "qstate_operad",
                   "Q_P associativity, both equivariance identities, classical restriction and unit failure",
                   qp_associativity});
    out.push_back({"qp-insertion", "qstate_operad", "iterated insertions reproduce gamma_P with exact placement",
                   qp_insertion});
    out.push_back({"qlambda-associativity", "qstate_operad",
                   "Q_Lambda associativity entrywise (eigensolver in the loop)", qlambda_associativity});
    out.push_back({"qlambda-spectrum", "qstate_operad",
                   "Q_Lambda association orders agree up to permutation for 1×1 innermost parts", qlambda_spectrum});
    out.push_back({"qlambda-nonsymmetry", "qstate_operad",
                   "a concrete witness that Q_Lambda is not symmetric", qlambda_nonsymmetry});
}

}  // namespace qoperad::verify
