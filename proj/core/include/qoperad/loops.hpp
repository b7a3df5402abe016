#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace qoperad {

/// A binary operation on {0..s-1}: table[i][j] = i * j.
class FiniteMagma {
   public:
    explicit FiniteMagma(std::vector<std::vector<std::size_t>> table);
    /// Z/s under addition.
    static FiniteMagma cyclic(std::size_t s);

    std::size_t size() const { return table_.size(); }
    std::size_t operator()(std::size_t a, std::size_t b) const { return table_[a][b]; }
    const std::vector<std::vector<std::size_t>> &table() const { return table_; }
    /// The two-sided identity, if one exists.
    std::optional<std::size_t> identity() const;

   private:
    std::vector<std::vector<std::size_t>> table_;
};

/// Every row and every column is a permutation.
bool is_quasigroup(const FiniteMagma &m);
/// Quasigroup with a two-sided identity.
bool is_loop(const FiniteMagma &m);

/// A quadruple violating (x1*x2)*(x3*x4) = x1*((x2*x3)*x4).
std::optional<std::array<std::size_t, 4>> moufang_witness(const FiniteMagma &m);
/// Loop satisfying (x1*x2)*(x3*x4) = x1*((x2*x3)*x4) for all quadruples; s <= 16.
bool is_moufang(const FiniteMagma &m);

/// Points are (class, element) pairs numbered class*s + element, class 0..2.
/// Each line holds one point of each class.
struct LatinDesign {
    std::size_t order = 0;
    std::vector<std::array<std::size_t, 3>> lines;

    std::size_t point_count() const { return 3 * order; }
};

/// Lines (x1, x2, x3) with (x1*x2)*x3 = e.
LatinDesign design_from_loop(const FiniteMagma &m);

/// Flags (point, line) with boundary flag -> line; vertices are the lines.
struct DesignGraph {
    struct Flag {
        std::size_t point;
        std::size_t line;
    };
    std::size_t vertex_count = 0;
    std::vector<Flag> flags;
    std::vector<std::size_t> boundary;
    /// Identity involution.
    std::vector<std::size_t> involution;
};

DesignGraph design_graph(const LatinDesign &design);

}  // namespace qoperad
