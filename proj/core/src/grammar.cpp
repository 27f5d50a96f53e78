#include "radiogram/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "radiogram/frame.hpp"

namespace radiogram {

std::string_view to_string(GrammarId id) {
    switch (id) {
        case GrammarId::TetTet: return "TET_TET";
        case GrammarId::OctOct: return "OCT_OCT";
        case GrammarId::TetOct: return "TET_OCT";
    }
    return "?";
}

GrammarId parse_grammar_id(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    std::replace(upper.begin(), upper.end(), '-', '_');
    if (upper == "TET_TET" || upper == "TET") return GrammarId::TetTet;
    if (upper == "OCT_OCT" || upper == "OCT") return GrammarId::OctOct;
    if (upper == "TET_OCT") return GrammarId::TetOct;
    throw Error(ErrorCode::ParseError, "unknown grammar '" + std::string(text) + "'");
}

bool kind_in_grammar(GrammarId id, ShapeKind kind) {
    switch (id) {
        case GrammarId::TetTet: return kind == ShapeKind::Tet;
        case GrammarId::OctOct: return kind == ShapeKind::Oct;
        case GrammarId::TetOct: return true;
    }
    return false;
}

std::vector<ShapeKind> initial_kinds(GrammarId id) {
    switch (id) {
        case GrammarId::TetTet: return {ShapeKind::Tet};
        case GrammarId::OctOct: return {ShapeKind::Oct};
        case GrammarId::TetOct: return {ShapeKind::Tet, ShapeKind::Oct};
    }
    return {};
}

PolyShape PolyShape::place(ShapeKind kind, const Isometry& placement) {
    const Mesh& mesh = canonical_shape(kind);
    PolyShape shape;
    shape.kind = kind;
    shape.placement = placement;
    shape.vertices.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices) shape.vertices.push_back(placement.apply(v));
    shape.faces.assign(mesh.faces.size(), FaceState::Free);
    return shape;
}

Vec3 PolyShape::centroid() const { return placement.apply(canonical_shape(kind).centroid()); }

FaceFrame PolyShape::face(int face_index) const {
    const Mesh& mesh = canonical_shape(kind);
    if (face_index < 0 || face_index >= static_cast<int>(mesh.faces.size())) {
        throw Error(ErrorCode::IndexOutOfRange, "face index " + std::to_string(face_index) + " out of range");
    }
    const Face& f = mesh.faces[static_cast<std::size_t>(face_index)];
    // Improper placements reverse the winding; swapping the last two vertices restores it.
    if (placement.is_proper()) {
        FaceFrame frame;
        frame.vertices = {vertices[f[0]], vertices[f[1]], vertices[f[2]]};
        frame.origin = frame.vertices[0];
        frame.normal = cross(frame.vertices[1] - frame.vertices[0], frame.vertices[2] - frame.vertices[0]);
        return frame;
    }
    FaceFrame frame;
    frame.vertices = {vertices[f[0]], vertices[f[2]], vertices[f[1]]};
    frame.origin = frame.vertices[0];
    frame.normal = cross(frame.vertices[1] - frame.vertices[0], frame.vertices[2] - frame.vertices[0]);
    return frame;
}

int PolyShape::free_face_count() const {
    return static_cast<int>(std::count(faces.begin(), faces.end(), FaceState::Free));
}

Design initial_design(GrammarId grammar, ShapeKind initial_kind, bool alternate) {
    if (!kind_in_grammar(grammar, initial_kind)) {
        throw Error(ErrorCode::KindNotInGrammar, std::string(to_string(initial_kind)) + " is not part of grammar " +
                                                     std::string(to_string(grammar)));
    }
    Design d;
    d.grammar = grammar;
    d.alternate = alternate;
    d.shapes.push_back(PolyShape::place(initial_kind, Isometry{}));
    return d;
}

std::vector<ShapeKind> attachable_kinds(const Design& d, int host_shape) {
    std::vector<ShapeKind> out;
    const ShapeKind host_kind = d.shapes.at(static_cast<std::size_t>(host_shape)).kind;
    for (ShapeKind k : kAllShapeKinds) {
        if (!kind_in_grammar(d.grammar, k)) continue;
        if (d.alternate && d.grammar == GrammarId::TetOct && k == host_kind) continue;
        out.push_back(k);
    }
    return out;
}

std::vector<MoveOption> applicable_moves(const Design& d, bool assess_feasibility) {
    std::vector<MoveOption> out;
    for (int s = 0; s < static_cast<int>(d.shapes.size()); ++s) {
        const PolyShape& shape = d.shapes[static_cast<std::size_t>(s)];
        const auto kinds = attachable_kinds(d, s);
        for (int f = 0; f < static_cast<int>(shape.faces.size()); ++f) {
            if (shape.faces[static_cast<std::size_t>(f)] != FaceState::Free) continue;
            for (ShapeKind k : kinds) {
                // All six labels place the same point set; assess overlap once.
                bool feasible = true;
                if (assess_feasibility) {
                    Move probe{s, f, k, 0, 1};
                    feasible = !overlaps_design(d, placed_shape(d, probe));
                }
                for (int a = 0; a < 3; ++a) {
                    for (int o : {1, -1}) out.push_back({Move{s, f, k, a, o}, feasible});
                }
            }
        }
    }
    return out;
}

Isometry mating_isometry(const FaceFrame& host, ShapeKind added, int alignment, int orientation) {
    const auto& h = host.vertices;
    if (distance2(h[0], h[1]) != 2 || distance2(h[1], h[2]) != 2 || distance2(h[0], h[2]) != 2) {
        throw Error(ErrorCode::DegenerateFace, "host face is not an equilateral triangle of squared side 2");
    }
    if (alignment < 0 || alignment > 2 || (orientation != 1 && orientation != -1)) {
        throw Error(ErrorCode::MoveNotApplicable, "label out of range");
    }
    const Vec3 host_normal = cross(h[1] - h[0], h[2] - h[0]);

    const FaceFrame mate = face_frame(canonical_shape(added), 0);
    const auto& a = mate.vertices;
    const auto k = static_cast<std::size_t>(alignment);
    std::array<Vec3, 3> target;
    if (orientation > 0) {
        target = {h[k], h[(k + 2) % 3], h[(k + 1) % 3]};
    } else {
        target = {h[k], h[(k + 1) % 3], h[(k + 2) % 3]};
    }

    // Q a_n = det(Q) * t_n; pick the sign that turns the mate's outward normal
    // toward the host, which puts the added solid on the far side.
    Vec3 target_normal = cross(target[1] - target[0], target[2] - target[0]);
    if (sgn(dot(target_normal, host_normal)) > 0) target_normal = -target_normal;

    const Mat3 source = Mat3::from_columns(a[1] - a[0], a[2] - a[0], mate.normal);
    const Mat3 image = Mat3::from_columns(target[1] - target[0], target[2] - target[0], target_normal);
    Mat3 q = image * inverse(source);
    Vec3 t = target[0] - q * a[0];
    return Isometry(std::move(q), std::move(t));
}

PolyShape placed_shape(const Design& d, const Move& m) {
    if (m.host_shape < 0 || m.host_shape >= static_cast<int>(d.shapes.size())) {
        throw Error(ErrorCode::MoveNotApplicable, "host shape " + std::to_string(m.host_shape) + " does not exist");
    }
    const PolyShape& host = d.shapes[static_cast<std::size_t>(m.host_shape)];
    if (m.host_face < 0 || m.host_face >= static_cast<int>(host.faces.size())) {
        throw Error(ErrorCode::MoveNotApplicable, "host face " + std::to_string(m.host_face) + " does not exist");
    }
    const auto kinds = attachable_kinds(d, m.host_shape);
    if (std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end()) {
        throw Error(ErrorCode::MoveNotApplicable,
                    std::string(to_string(m.kind)) + " cannot be attached to this host in this grammar");
    }
    if (m.alignment < 0 || m.alignment > 2 || (m.orientation != 1 && m.orientation != -1)) {
        throw Error(ErrorCode::MoveNotApplicable, "alignment must be 0..2 and orientation +1/-1");
    }
    if (host.faces[static_cast<std::size_t>(m.host_face)] != FaceState::Free) {
        throw Error(ErrorCode::FaceOccupied, "face " + std::to_string(m.host_face) + " of shape " +
                                                 std::to_string(m.host_shape) + " is already used");
    }
    return PolyShape::place(m.kind, mating_isometry(host.face(m.host_face), m.kind, m.alignment, m.orientation));
}

bool overlaps_design(const Design& d, const PolyShape& shape) {
    return std::any_of(d.shapes.begin(), d.shapes.end(),
                       [&](const PolyShape& other) { return interiors_intersect(other, shape); });
}

Design apply_move(const Design& d, const Move& m, ApplyMode mode) {
    PolyShape added = placed_shape(d, m);
    if (mode == ApplyMode::Strict && overlaps_design(d, added)) {
        throw Error(ErrorCode::OverlapCreated, "the new solid would overlap an existing one");
    }
    Design out = d;
    out.shapes[static_cast<std::size_t>(m.host_shape)].faces[static_cast<std::size_t>(m.host_face)] =
        FaceState::Used;
    added.faces[0] = FaceState::Used;
    out.shapes.push_back(std::move(added));
    out.trace.push_back(m);
    return out;
}

Design replay(GrammarId grammar, ShapeKind initial_kind, std::span<const Move> trace, bool alternate,
              ApplyMode mode) {
    Design d = initial_design(grammar, initial_kind, alternate);
    for (const Move& m : trace) d = apply_move(d, m, mode);
    return d;
}

Design transformed(const Design& d, const Isometry& g) {
    Design out = d;
    for (auto& shape : out.shapes) {
        shape.placement = compose(g, shape.placement);
        for (auto& v : shape.vertices) v = g.apply(v);
    }
    return out;
}

Move transported_move(const Move& m, const Isometry& g) {
    if (g.is_proper()) return m;
    // An improper g reverses every face's winding, which mirrors the label.
    Move out = m;
    out.alignment = (3 - m.alignment) % 3;
    out.orientation = -m.orientation;
    return out;
}

}  // namespace radiogram
