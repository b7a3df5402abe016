#include "qoperad/qstate_operad.hpp"

#include <algorithm>
#include <numeric>

#include "qoperad/error.hpp"

namespace qoperad {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x : images_) {
        require(x < images_.size() && !seen[x], ErrorCode::InvalidInput, "not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    return Permutation(std::move(id));
}

Permutation Permutation::random(std::size_t n, std::mt19937_64 &rng) {
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    std::shuffle(id.begin(), id.end(), rng);
    return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = j;
    return Permutation(std::move(inv));
}

DensityMatrix perm_act(const Permutation &sigma, const DensityMatrix &rho) {
    require(sigma.size() == rho.dim(), ErrorCode::DimensionMismatch, "permutation size differs from state dimension");
    const Matrix s = sigma.matrix();
    return DensityMatrix(s * rho.matrix() * s.adjoint());
}

Matrix block_assemble(std::span<const double> weights, std::span<const DensityMatrix> parts) {
    require(weights.size() == parts.size(), ErrorCode::ArityMismatch,
            "expected " + std::to_string(weights.size()) + " parts, got " + std::to_string(parts.size()));
    Eigen::Index total = 0;
    for (const auto &part : parts) total += static_cast<Eigen::Index>(part.dim());
    Matrix out = Matrix::Zero(total, total);
    Eigen::Index offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(parts[i].dim());
        out.block(offset, offset, k, k) = weights[i] * parts[i].matrix();
        offset += k;
    }
    return out;
}

DensityMatrix gamma_p(const DensityMatrix &rho, std::span<const DensityMatrix> parts) {
    return DensityMatrix(block_assemble(diag_prob(rho).values(), parts));
}

DensityMatrix gamma_lambda(const DensityMatrix &rho, std::span<const DensityMatrix> parts) {
    return DensityMatrix(block_assemble(eig_prob(rho).as_prob().values(), parts));
}

DensityMatrix insert_p(const DensityMatrix &rho, std::size_t slot, const DensityMatrix &inner) {
    const std::size_t n = rho.dim();
    require(slot < n, ErrorCode::IndexOutOfRange,
            "insertion slot " + std::to_string(slot + 1) + " out of range 1.." + std::to_string(n));
    const std::size_t m = inner.dim();
    const auto total = static_cast<Eigen::Index>(n + m - 1);
    // Old index -> new index for every row/column other than the slot.
    auto place = [&](std::size_t j) { return static_cast<Eigen::Index>(j < slot ? j : j + m - 1); };
    Matrix out = Matrix::Zero(total, total);
    for (std::size_t r = 0; r < n; ++r) {
        if (r == slot) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (c == slot) continue;
            out(place(r), place(c)) = rho(r, c);
        }
    }
    const auto s = static_cast<Eigen::Index>(slot);
    const auto k = static_cast<Eigen::Index>(m);
    out.block(s, s, k, k) = rho(slot, slot).real() * inner.matrix();
    return DensityMatrix(std::move(out));
}

DensityMatrix insert_lambda(const DensityMatrix &rho, std::size_t slot, const DensityMatrix &inner) {
    const std::size_t n = rho.dim();
    require(slot < n, ErrorCode::IndexOutOfRange,
            "insertion slot " + std::to_string(slot + 1) + " out of range 1.." + std::to_string(n));
    std::vector<DensityMatrix> parts(n, DensityMatrix::one());
    parts[slot] = inner;
    return gamma_lambda(rho, parts);
}

Permutation block_permutation(const Permutation &sigma, std::span<const std::size_t> block_sizes) {
    const std::size_t m = sigma.size();
    require(block_sizes.size() == m, ErrorCode::ArityMismatch, "block count differs from permutation size");
    const Permutation inv = sigma.inverse();
    // Offsets of blocks in the target order: position k holds block inv(k).
    std::vector<std::size_t> target_offset(m), source_offset(m);
    std::size_t acc = 0;
    for (std::size_t k = 0; k < m; ++k) {
        target_offset[inv(k)] = acc;
        acc += block_sizes[inv(k)];
    }
    acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
        source_offset[i] = acc;
        acc += block_sizes[i];
    }
    std::vector<std::size_t> images(acc);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < block_sizes[i]; ++t) images[source_offset[i] + t] = target_offset[i] + t;
    return Permutation(std::move(images));
}

Permutation block_direct_sum(std::span<const Permutation> blocks) {
    std::vector<std::size_t> images;
    std::size_t offset = 0;
    for (const auto &b : blocks) {
        for (std::size_t j = 0; j < b.size(); ++j) images.push_back(offset + b(j));
        offset += b.size();
    }
    return Permutation(std::move(images));
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch, "shape mismatch");
    return a.rows() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qoperad
