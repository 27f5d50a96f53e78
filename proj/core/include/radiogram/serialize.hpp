#pragma once

// JSON and OBJ forms of the engine's values. Exact quantities are always
// written as canonical rational strings; floats appear only in render
// payloads and OBJ output, rounded to 9 significant digits.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "radiogram/catalog.hpp"
#include "radiogram/frame.hpp"
#include "radiogram/grammar.hpp"
#include "radiogram/polyhedra.hpp"

namespace radiogram {

using json = nlohmann::json;

json scalar_to_json(const Scalar& s);
/// Accepts a canonical string or a JSON integer.
Scalar scalar_from_json(const json& j);

void to_json(json& j, const Vec3& v);
void from_json(const json& j, Vec3& v);

void to_json(json& j, const Isometry& m);
void from_json(const json& j, Isometry& m);

void to_json(json& j, const Move& m);
/// Requires every field; throws Error{ErrorCode::ParseError} on a missing or
/// mistyped one.
void from_json(const json& j, Move& m);

json mesh_to_json(const Mesh& mesh);

/// Exact design plus its replay recipe. With `with_render`, also a float
/// mesh per solid with stable face ids for picking.
json design_to_json(const Design& d, bool with_render = false);

/// Rebuilds a design by replaying its trace (and mirroring when flagged).
/// When the payload carries "shapes", they must match the replay exactly.
/// Throws Error{ErrorCode::ParseError} or any grammar error from the replay.
Design design_from_json(const json& j);

struct DerivationScript {
    GrammarId grammar = GrammarId::TetTet;
    ShapeKind initial_kind = ShapeKind::Tet;
    bool alternate = false;
    std::vector<Move> moves;
};

/// Either a bare array of moves (using `defaults` for the grammar) or an
/// object {grammar, initial_kind, alternate?, moves}.
DerivationScript script_from_json(const json& j, const DerivationScript& defaults = {});
json script_to_json(const DerivationScript& s);

json frame_to_json(const FrameGraph& g);
json frame_stats_to_json(const FrameStats& s);

/// Wavefront OBJ: nodes as `v` lines in meters (lattice x scale / sqrt 2,
/// 9 decimals), struts as `l` lines.
std::string frame_to_obj(const FrameGraph& g);

json catalog_to_json(const Catalog& catalog, Level dedupe);
json ladder_to_json(const LadderReport& report);
json summary_to_json(const EnumerationSummary& s);

/// Rounds to 9 significant digits.
double approx(const Scalar& s);

/// "line L, column C" for a byte offset into `text`.
std::string describe_position(std::string_view text, std::size_t byte_offset);

/// Parses JSON text; on failure throws Error{ErrorCode::ParseError} with the
/// line and column of the problem.
json parse_json_text(std::string_view text);

}  // namespace radiogram
