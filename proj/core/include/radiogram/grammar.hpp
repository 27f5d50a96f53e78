#pragma once

// Labeled face-to-face gluing rules over tetrahedra and octahedra.
//
// A move attaches a new solid to a FREE face of an existing one. The new
// solid always mates with face 0 of its canonical mesh; the label picks one
// of six vertex correspondences between that face and the host face:
//
//   orientation +1:  a0 -> h[k], a1 -> h[k+2], a2 -> h[k+1]   (proper)
//   orientation -1:  a0 -> h[k], a1 -> h[k+1], a2 -> h[k+2]   (improper)
//
// where k is the alignment and h is the host face in counterclockwise order
// seen from outside the host. The solid is always placed on the far side of
// the host face.

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "radiogram/exact.hpp"
#include "radiogram/polyhedra.hpp"

namespace radiogram {

enum class GrammarId : std::uint8_t { TetTet, OctOct, TetOct };

inline constexpr std::array<GrammarId, 3> kAllGrammars{GrammarId::TetTet, GrammarId::OctOct, GrammarId::TetOct};

/// "TET_TET", "OCT_OCT", "TET_OCT".
std::string_view to_string(GrammarId id);
/// Accepts the identifiers above as well as the short forms "tet", "oct",
/// "tet-oct" (case-insensitive).
GrammarId parse_grammar_id(std::string_view text);

bool kind_in_grammar(GrammarId id, ShapeKind kind);
/// Initial shapes a full enumeration starts from, in enumeration order.
std::vector<ShapeKind> initial_kinds(GrammarId id);

enum class FaceState : std::uint8_t { Free, Used };

enum class ApplyMode : std::uint8_t {
    Strict,     ///< refuses results whose solids overlap
    CountOnly,  ///< places the solid regardless of overlap
};

inline constexpr int kLabelsPerFace = 6;

struct Move {
    int host_shape = 0;
    int host_face = 0;
    ShapeKind kind = ShapeKind::Tet;
    int alignment = 0;    ///< 0, 1 or 2
    int orientation = 1;  ///< +1 or -1

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

struct PolyShape {
    ShapeKind kind = ShapeKind::Tet;
    Isometry placement;
    std::vector<Vec3> vertices;
    std::vector<FaceState> faces;

    /// Places the canonical solid; all faces FREE.
    static PolyShape place(ShapeKind kind, const Isometry& placement);

    Vec3 centroid() const;
    /// Placed face, counterclockwise seen from outside.
    FaceFrame face(int face_index) const;
    int free_face_count() const;
};

struct Design {
    GrammarId grammar = GrammarId::TetTet;
    /// In TET_OCT, forbid attaching a solid of the host's own kind.
    bool alternate = false;
    /// Set on mirror twins: the shapes are the reflection of the trace's result.
    bool mirrored = false;
    std::vector<PolyShape> shapes;
    std::vector<Move> trace;

    ShapeKind initial_kind() const { return shapes.front().kind; }
};

/// Throws Error{ErrorCode::KindNotInGrammar}.
Design initial_design(GrammarId grammar, ShapeKind initial_kind, bool alternate = false);

/// Kinds that may be attached to `host_shape` under the design's grammar.
std::vector<ShapeKind> attachable_kinds(const Design& d, int host_shape);

struct MoveOption {
    Move move;
    bool feasible = true;
};

/// Every labeled move on every FREE face, ordered by (shape, face, kind,
/// alignment, orientation +1 before -1). Moves whose result would overlap an
/// existing solid are kept and flagged infeasible; pass
/// `assess_feasibility = false` to skip the overlap test (all flagged feasible).
std::vector<MoveOption> applicable_moves(const Design& d, bool assess_feasibility = true);

/// The isometry placing `added` so that its face 0 lands on `host` under the
/// labeled correspondence, with the solid on the far side of the host face.
/// Throws Error{ErrorCode::DegenerateFace} unless `host` is equilateral with
/// squared side 2.
Isometry mating_isometry(const FaceFrame& host, ShapeKind added, int alignment, int orientation);

/// Validates `m` against `d` and returns the solid it would add. Does not
/// check overlap. Throws MoveNotApplicable / FaceOccupied.
PolyShape placed_shape(const Design& d, const Move& m);

/// True when `shape` would overlap (share interior points with) any solid of `d`.
bool overlaps_design(const Design& d, const PolyShape& shape);

/// Throws FaceOccupied, MoveNotApplicable, or (strict mode) OverlapCreated.
Design apply_move(const Design& d, const Move& m, ApplyMode mode = ApplyMode::Strict);

/// Replays a recorded trace from the initial design.
Design replay(GrammarId grammar, ShapeKind initial_kind, std::span<const Move> trace, bool alternate = false,
              ApplyMode mode = ApplyMode::Strict);

/// Applies `g` to every solid. The trace is left untouched.
Design transformed(const Design& d, const Isometry& g);

/// The move on `transformed(d, g)` that corresponds to `m` on `d`.
Move transported_move(const Move& m, const Isometry& g);

}  // namespace radiogram
