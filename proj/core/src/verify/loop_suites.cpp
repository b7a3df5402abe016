#include <algorithm>
#include <numeric>
#include <set>

#include "qoperad/loops.hpp"
#include "suites.hpp"

namespace qoperad::verify {

namespace {

/// "Any two of x1, x2, x3 in x1 * x2 = x3 determine the third."
bool oracle_quasigroup(const FiniteMagma &m) {
    const std::size_t s = m.size();
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            std::size_t right = 0, left = 0;
            for (std::size_t x = 0; x < s; ++x) {
                right += m(a, x) == b;
                left += m(x, a) == b;
            }
            if (right != 1 || left != 1) return false;
        }
    return true;
}

bool oracle_loop(const FiniteMagma &m) {
    if (!oracle_quasigroup(m)) return false;
    for (std::size_t e = 0; e < m.size(); ++e) {
        std::size_t hits = 0;
        for (std::size_t x = 0; x < m.size(); ++x) hits += m(e, x) == x && m(x, e) == x;
        if (hits == m.size()) return true;
    }
    return false;
}

bool oracle_moufang(const FiniteMagma &m) {
    if (!oracle_loop(m)) return false;
    const std::size_t s = m.size();
    for (std::size_t q = 0; q < s * s * s * s; ++q) {
        const std::size_t a = q % s, b = (q / s) % s, c = (q / (s * s)) % s, d = q / (s * s * s);
        if (m(m(a, b), m(c, d)) != m(a, m(m(b, c), d))) return false;
    }
    return true;
}

FiniteMagma table_from_code(std::size_t s, std::size_t code) {
    std::vector<std::vector<std::size_t>> t(s, std::vector<std::size_t>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            t[i][j] = code % s;
            code /= s;
        }
    return FiniteMagma(std::move(t));
}

void predicates(Recorder &rec, std::uint64_t seed, Scale scale) {
    std::size_t c = 0;
    auto compare = [&](const FiniteMagma &m, const std::string &label) {
        rec.begin_case(c++, label);
        rec.holds("quasigroup agrees with oracle", is_quasigroup(m) == oracle_quasigroup(m));
        rec.holds("loop agrees with oracle", is_loop(m) == oracle_loop(m));
        rec.holds("Moufang agrees with oracle", is_moufang(m) == oracle_moufang(m));
    };
    // Every table of order <= 3.
    for (std::size_t s = 1; s <= 3; ++s) {
        std::size_t total = 1;
        for (std::size_t k = 0; k < s * s; ++k) total *= s;
        for (std::size_t code = 0; code < total; ++code) compare(table_from_code(s, code), "order " + std::to_string(s));
    }
    // Order 4: every table whose rows are permutations; exactly 576 are Latin.
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p{0, 1, 2, 3};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::size_t latin = 0;
    for (std::size_t code = 0; code < 24 * 24 * 24 * 24; ++code) {
        std::vector<std::vector<std::size_t>> t;
        for (std::size_t r = 0, k = code; r < 4; ++r, k /= 24) t.push_back(perms[k % 24]);
        const FiniteMagma m(std::move(t));
        const bool q = is_quasigroup(m);
        latin += q;
        if (q || code % 97 == 0) compare(m, "order 4 table " + std::to_string(code));
    }
    rec.begin_case(c++, "order 4 Latin count");
    rec.holds("576 Latin squares of order 4", latin == 576, std::to_string(latin), "576");

    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < count(200, scale); ++t) {
        const std::size_t s = 4;
        std::size_t total = 1;
        for (std::size_t k = 0; k < s * s; ++k) total *= s;
        compare(table_from_code(s, std::uniform_int_distribution<std::size_t>(0, total - 1)(rng)), "random order 4");
    }

    // Groups are Moufang; the order-5 nonassociative loop is not.
    for (std::size_t s = 1; s <= 6; ++s) {
        rec.begin_case(c++, "Z/" + std::to_string(s));
        rec.holds("cyclic group is Moufang", is_moufang(FiniteMagma::cyclic(s)));
    }
    const FiniteMagma five({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
    rec.begin_case(c++, "order-5 nonassociative loop");
    rec.holds("is a loop", is_loop(five));
    const auto w = moufang_witness(five);
    rec.holds("fails the Moufang identity", w.has_value() && !is_moufang(five));
    if (w)
        rec.note("Moufang witness in the order-5 loop: (" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) +
                 "," + std::to_string((*w)[2]) + "," + std::to_string((*w)[3]) + ")");
}

void designs(Recorder &rec, std::uint64_t, Scale) {
    std::size_t c = 0;
    for (std::size_t s = 1; s <= 5; ++s) {
        rec.begin_case(c++, "Z/" + std::to_string(s));
        const auto d = design_from_loop(FiniteMagma::cyclic(s));
        rec.holds("line count s^2", d.lines.size() == s * s, std::to_string(d.lines.size()), std::to_string(s * s));
        rec.holds("point count 3s", d.point_count() == 3 * s);
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto &l : d.lines) {
            pairs.insert({l[0], l[1]});
            rec.holds("line satisfies (x1*x2)*x3 = e", ((l[0] + (l[1] - s)) % s + (l[2] - 2 * s)) % s == 0);
        }
        rec.holds("every first/second pair on exactly one line", pairs.size() == s * s && d.lines.size() == s * s);
        const auto g = design_graph(d);
        rec.holds("flag count 3|L|", g.flags.size() == 3 * d.lines.size());
        rec.holds("vertex count |L|", g.vertex_count == d.lines.size());
        bool involution = true;
        std::vector<std::size_t> fiber(g.vertex_count, 0);
        for (std::size_t f = 0; f < g.flags.size(); ++f) {
            involution = involution && g.involution[g.involution[f]] == f;
            ++fiber[g.boundary[f]];
        }
        rec.holds("j∘j = id", involution);
        rec.holds("boundary fibers of size 3", std::all_of(fiber.begin(), fiber.end(), [](std::size_t k) { return k == 3; }));
    }
    rec.begin_case(c++, "empty design");
    const auto empty = design_graph(LatinDesign{});
    rec.holds("empty design gives the empty graph", empty.vertex_count == 0 && empty.flags.empty());
}

}  // namespace

void register_loop_suites(std::vector<SuiteInfo> &out) {
    out.push_back({"loops-predicates", "loops",
                   "quasigroup/loop/Moufang predicates against brute-force oracles, orders <= 4", predicates});
    out.push_back({"loops-designs", "loops", "Latin designs from cyclic loops and their design graphs", designs});
}

}  // namespace qoperad::verify
