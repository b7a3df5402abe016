#include "qoperad/loops.hpp"

#include "qoperad/error.hpp"

namespace qoperad {

FiniteMagma::FiniteMagma(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t s = table_.size();
    for (const auto &row : table_) {
        require(row.size() == s, ErrorCode::InvalidInput, "magma table must be square");
        for (std::size_t x : row) require(x < s, ErrorCode::InvalidInput, "magma table entry out of range");
    }
}

FiniteMagma FiniteMagma::cyclic(std::size_t s) {
    std::vector<std::vector<std::size_t>> t(s, std::vector<std::size_t>(s));
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) t[a][b] = (a + b) % s;
    return FiniteMagma(std::move(t));
}

std::optional<std::size_t> FiniteMagma::identity() const {
    for (std::size_t e = 0; e < size(); ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < size() && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) return e;
    }
    return std::nullopt;
}

bool is_quasigroup(const FiniteMagma &m) {
    const std::size_t s = m.size();
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<bool> row(s, false), col(s, false);
        for (std::size_t j = 0; j < s; ++j) {
            if (row[m(i, j)] || col[m(j, i)]) return false;
            row[m(i, j)] = col[m(j, i)] = true;
        }
    }
    return true;
}

bool is_loop(const FiniteMagma &m) { return is_quasigroup(m) && m.identity().has_value(); }

std::optional<std::array<std::size_t, 4>> moufang_witness(const FiniteMagma &m) {
    const std::size_t s = m.size();
    require(s <= 16, ErrorCode::Unsupported, "exhaustive Moufang scan is limited to order 16");
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            for (std::size_t c = 0; c < s; ++c)
                for (std::size_t d = 0; d < s; ++d)
                    if (m(m(a, b), m(c, d)) != m(a, m(m(b, c), d))) return std::array{a, b, c, d};
    return std::nullopt;
}

bool is_moufang(const FiniteMagma &m) { return is_loop(m) && !moufang_witness(m); }

LatinDesign design_from_loop(const FiniteMagma &m) {
    require(is_loop(m), ErrorCode::InvalidInput, "design construction needs a loop");
    const std::size_t s = m.size();
    const std::size_t e = *m.identity();
    LatinDesign d{s, {}};
    for (std::size_t x1 = 0; x1 < s; ++x1)
        for (std::size_t x2 = 0; x2 < s; ++x2)
            for (std::size_t x3 = 0; x3 < s; ++x3)
                if (m(m(x1, x2), x3) == e) d.lines.push_back({x1, s + x2, 2 * s + x3});
    return d;
}

DesignGraph design_graph(const LatinDesign &design) {
    DesignGraph g;
    g.vertex_count = design.lines.size();
    for (std::size_t l = 0; l < design.lines.size(); ++l) {
        for (std::size_t p : design.lines[l]) {
            g.boundary.push_back(l);
            g.involution.push_back(g.flags.size());
            g.flags.push_back({p, l});
        }
    }
    return g;
}

}  // namespace qoperad
