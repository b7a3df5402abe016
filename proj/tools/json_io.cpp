#include "json_io.hpp"

#include <cstdio>
#include <functional>

#include "qoperad/error.hpp"

namespace qoperad::io {

namespace {

const Json kNoChildren = Json::array();

const Json &children_of(const Json &node) {
    return node.is_object() && node.contains("children") ? node.at("children") : kNoChildren;
}

const Json &field(const Json &j, const char *key) {
    require(j.is_object() && j.contains(key), ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Matrix matrix_from_json(const Json &j) {
    const auto n = field(j, "dim").get<Eigen::Index>();
    require(n >= 1, ErrorCode::InvalidInput, "matrix dim must be >= 1");
    const Json &re = field(j, "re");
    const bool has_im = j.contains("im");
    Matrix m(n, n);
    require(re.is_array() && static_cast<Eigen::Index>(re.size()) == n, ErrorCode::InvalidInput, "matrix 're' has wrong shape");
    for (Eigen::Index r = 0; r < n; ++r) {
        require(re[static_cast<std::size_t>(r)].size() == static_cast<std::size_t>(n), ErrorCode::InvalidInput,
                "matrix 're' has wrong shape");
        for (Eigen::Index c = 0; c < n; ++c) {
            const double x = re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>();
            const double y = has_im ? j["im"].at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)).get<double>() : 0.0;
            m(r, c) = Complex(x, y);
        }
    }
    return m;
}

Json matrix_to_json(const Matrix &m) {
    Json re = Json::array(), im = Json::array();
    bool complex = false;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json rr = Json::array(), ir = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ir.push_back(m(r, c).imag());
            complex = complex || m(r, c).imag() != 0.0;
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    Json out{{"dim", m.rows()}, {"re", std::move(re)}};
    if (complex) out["im"] = std::move(im);
    return out;
}

PlanarRootedTree tree_from_json(const Json &j) {
    require(j.is_object(), ErrorCode::InvalidInput, "tree node must be an object");
    const Json &children = children_of(j);
    if (children.empty()) {
        std::optional<int> label;
        if (j.contains("label")) label = j["label"].get<int>();
        return PlanarRootedTree::unit(label);
    }
    std::vector<PlanarRootedTree> subs;
    for (const auto &c : children) subs.push_back(tree_from_json(c));
    return PlanarRootedTree::join(subs);
}

Json tree_to_json(const PlanarRootedTree &t) {
    std::function<Json(PlanarRootedTree::Vertex)> node = [&](PlanarRootedTree::Vertex v) {
        Json out{{"children", Json::array()}};
        for (auto c : t.children(v)) out["children"].push_back(node(c));
        if (auto l = t.label(v)) out["label"] = *l;
        return out;
    };
    return node(t.root());
}

TreeKrausChannel channel_from_json(const Json &j) {
    const PlanarRootedTree tree = tree_from_json(j);
    std::vector<Matrix> ops(tree.vertex_count());
    // Preorder walk matches vertex numbering.
    std::size_t next = 0;
    std::function<void(const Json &)> walk = [&](const Json &node) {
        const std::size_t v = next++;
        if (v != 0) ops[v] = matrix_from_json(field(node, "op"));
        for (const auto &c : children_of(node)) walk(c);
    };
    walk(j);
    std::size_t dim = j.value("dim", std::size_t{0});
    if (tree.vertex_count() > 1) dim = static_cast<std::size_t>(ops[1].rows());
    require(dim >= 1, ErrorCode::InvalidInput, "channel on the unit tree needs a 'dim' field");
    return TreeKrausChannel(tree, dim, std::move(ops));
}

Json channel_to_json(const TreeKrausChannel &c) {
    const auto &t = c.tree();
    std::function<Json(PlanarRootedTree::Vertex)> node = [&](PlanarRootedTree::Vertex v) {
        Json out{{"children", Json::array()}};
        for (auto ch : t.children(v)) out["children"].push_back(node(ch));
        if (v != 0) out["op"] = matrix_to_json(c.op(v));
        return out;
    };
    Json out = node(t.root());
    out["dim"] = c.dim();
    return out;
}

Json channel_sum_to_json(const FormalChannelSum &sum) {
    Json terms = Json::array();
    for (const auto &t : sum.terms) terms.push_back(Json{{"w", t.coeff}, {"channel", channel_to_json(t.channel)}});
    return Json{{"terms", std::move(terms)}};
}

MeasurementTree measurement_tree_from_json(const Json &j) {
    const PlanarRootedTree tree = tree_from_json(j);
    std::vector<const Json *> nodes;
    std::function<void(const Json &)> walk = [&](const Json &node) {
        nodes.push_back(&node);
        for (const auto &c : children_of(node)) walk(c);
    };
    walk(j);
    if (nodes.front()->contains("projector")) {
        std::vector<Matrix> projectors;
        for (const Json *n : nodes) projectors.push_back(matrix_from_json(field(*n, "projector")));
        return MeasurementTree::from_projectors(tree, std::move(projectors));
    }
    std::vector<std::size_t> blocks;
    std::size_t next = 0;
    for (auto leaf : tree.leaves()) {
        const Json &b = field(*nodes[leaf], "block");
        require(b.size() == 2, ErrorCode::InvalidInput, "block needs [start, len]");
        require(b[0].get<std::size_t>() == next, ErrorCode::InvalidInput, "leaf blocks must be consecutive");
        blocks.push_back(b[1].get<std::size_t>());
        next += blocks.back();
    }
    return MeasurementTree::from_blocks(tree, blocks);
}

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    const auto d = field(j, "d").get<long long>();
    require(d != 0, ErrorCode::InvalidInput, "rational with zero denominator");
    return Rational(field(j, "n").get<long long>(), d);
}

Json rational_to_json(const Rational &r) {
    return Json{{"n", Json::parse(numerator(r).str())}, {"d", Json::parse(denominator(r).str())}};
}

RationalRect rect_from_json(const Json &j) {
    const Json &x = field(j, "x"), &y = field(j, "y");
    require(x.size() == 2 && y.size() == 2, ErrorCode::InvalidInput, "rect intervals need two endpoints");
    return {rational_from_json(x[0]), rational_from_json(x[1]), rational_from_json(y[0]), rational_from_json(y[1])};
}

Json rect_to_json(const RationalRect &r) {
    return Json{{"x", {rational_to_json(r.x0), rational_to_json(r.x1)}},
                {"y", {rational_to_json(r.y0), rational_to_json(r.y1)}}};
}

LittleSquareTuple tuple_from_json(const Json &j) {
    require(j.is_array(), ErrorCode::InvalidInput, "little-square tuple must be an array of rects");
    std::vector<RationalRect> rects;
    for (const auto &r : j) rects.push_back(rect_from_json(r));
    return LittleSquareTuple(std::move(rects));
}

Json tuple_to_json(const LittleSquareTuple &c) {
    Json out = Json::array();
    for (const auto &r : c.rects()) out.push_back(rect_to_json(r));
    return out;
}

ColoredPArySquare colored_from_json(const Json &j) {
    const unsigned p = field(j, "p").get<unsigned>();
    const Json &regions = field(j, "regions");
    require(regions.is_array() && regions.size() == p, ErrorCode::InvalidInput, "colored square needs p regions");
    std::vector<std::vector<RationalRect>> colored;
    for (std::size_t l = 1; l < p; ++l) colored.push_back(tuple_from_json(regions[l]).rects());
    return ColoredPArySquare(p, tuple_from_json(regions[0]), std::move(colored));
}

Json colored_to_json(const ColoredPArySquare &q) {
    Json regions = Json::array();
    for (unsigned l = 0; l < q.prime(); ++l) {
        Json region = Json::array();
        for (const auto &r : q.region(l)) region.push_back(rect_to_json(r));
        regions.push_back(std::move(region));
    }
    return Json{{"p", q.prime()}, {"regions", std::move(regions)}};
}

AlmostSymplectic omega_from_json(const Json &j) {
    const unsigned p = field(j, "p").get<unsigned>();
    const unsigned n = field(j, "N").get<unsigned>();
    std::vector<unsigned> flat;
    for (const auto &row : field(j, "table"))
        for (const auto &x : row) flat.push_back(x.get<unsigned>());
    return AlmostSymplectic(p, n, std::move(flat));
}

Json omega_to_json(const AlmostSymplectic &omega) {
    Json table = Json::array();
    for (std::size_t u = 0; u < omega.dim(); ++u) {
        Json row = Json::array();
        for (std::size_t v = 0; v < omega.dim(); ++v) row.push_back(omega(u, v));
        table.push_back(std::move(row));
    }
    return Json{{"p", omega.prime()}, {"N", omega.exponent()}, {"table", std::move(table)}};
}

EntropyFamily family_from_json(const Json &j) {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "shannon") return EntropyFamily::shannon();
    if (kind == "renyi") return EntropyFamily::renyi(field(j, "q").get<double>());
    if (kind == "tsallis") return EntropyFamily::tsallis(field(j, "q").get<double>());
    fail(ErrorCode::InvalidInput, "unknown entropy family '" + kind + "'");
}

Json report_to_json(const verify::SuiteReport &r, bool timing) {
    Json failures = Json::array();
    for (const auto &f : r.failures)
        failures.push_back(Json{{"case", f.case_index},
                                {"check", f.check},
                                {"inputs", f.inputs},
                                {"observed", f.observed},
                                {"expected", f.expected},
                                {"tolerance", f.tolerance}});
    Json out{{"schema", 1},
             {"suite", r.suite},
             {"seed", r.seed},
             {"scale", verify::scale_name(r.scale)},
             {"cases", r.cases},
             {"failure_count", r.failures.size()},
             {"passed", r.passed()},
             {"failures", std::move(failures)},
             {"notes", r.notes}};
    if (timing) out["wall_seconds"] = r.wall_seconds;
    return out;
}

std::string content_hash(const Json &j) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qoperad::io
