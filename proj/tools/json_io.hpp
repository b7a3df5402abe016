#pragma once

#include <json.hpp>

#include "qoperad/channels.hpp"
#include "qoperad/measurement.hpp"
#include "qoperad/loops.hpp"
#include "qoperad/squares.hpp"
#include "qoperad/symplectic.hpp"
#include "qoperad/verify.hpp"

namespace qoperad::io {

using Json = nlohmann::ordered_json;

/// {"dim": n, "re": [[...]], "im": [[...]]}; "im" may be omitted on input.
Matrix matrix_from_json(const Json &j);
Json matrix_to_json(const Matrix &m);

/// {"children": [...], "label": int?}
PlanarRootedTree tree_from_json(const Json &j);
Json tree_to_json(const PlanarRootedTree &t);

/// Tree JSON with "op" on every non-root node.
TreeKrausChannel channel_from_json(const Json &j);
Json channel_to_json(const TreeKrausChannel &c);

/// {"terms": [{"w": number, "channel": channel}]}
Json channel_sum_to_json(const FormalChannelSum &sum);

/// Tree JSON where every leaf carries "block": [start, len] with consecutive
/// blocks, or every vertex carries "projector": matrix.
MeasurementTree measurement_tree_from_json(const Json &j);

Rational rational_from_json(const Json &j);
Json rational_to_json(const Rational &r);
RationalRect rect_from_json(const Json &j);
Json rect_to_json(const RationalRect &r);
LittleSquareTuple tuple_from_json(const Json &j);
Json tuple_to_json(const LittleSquareTuple &c);
/// {"p": int, "regions": [[rect...]]}; regions[0] is the ordered tuple c0.
ColoredPArySquare colored_from_json(const Json &j);
Json colored_to_json(const ColoredPArySquare &q);

/// {"p": int, "N": int, "table": [[int]]}
AlmostSymplectic omega_from_json(const Json &j);
Json omega_to_json(const AlmostSymplectic &omega);

/// {"kind": "shannon"|"renyi"|"tsallis", "q": number}
EntropyFamily family_from_json(const Json &j);

Json report_to_json(const verify::SuiteReport &r, bool timing);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string content_hash(const Json &j);

}  // namespace qoperad::io
