#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "radiogram/exact.hpp"

namespace radiogram {

enum class ShapeKind : std::uint8_t { Tet, Oct };

inline constexpr std::array<ShapeKind, 2> kAllShapeKinds{ShapeKind::Tet, ShapeKind::Oct};

/// "tet" / "oct".
std::string_view to_string(ShapeKind kind);
/// Accepts "tet", "oct" in any case. Throws Error{ErrorCode::ParseError}.
ShapeKind parse_shape_kind(std::string_view text);

/// Vertex indices, counterclockwise seen from outside the solid.
using Face = std::array<int, 3>;
/// Vertex index pair with first < second.
using Edge = std::pair<int, int>;

struct Mesh {
    ShapeKind kind = ShapeKind::Tet;
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    std::vector<Edge> edges;

    Vec3 centroid() const;
};

/// Unit-lattice embedding with edge length sqrt(2):
///   TET (0,0,0) (1,1,0) (1,0,1) (0,1,1)
///   OCT (±1,0,0) (0,±1,0) (0,0,±1)
/// Faces are listed by ascending vertex triple; each face starts at its
/// lowest vertex index and runs counterclockwise seen from outside.
const Mesh& canonical_shape(ShapeKind kind);

struct SymmetryGroup {
    std::vector<Isometry> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const Isometry& g) const;
    SymmetryGroup proper_subgroup() const;
};

/// All isometries fixing `center` that permute `points` setwise and, when
/// `edges` is non-empty, map the edge set onto itself. Brute force over the
/// images of one non-degenerate ordered vertex triple.
std::vector<Isometry> point_symmetries(std::span<const Vec3> points, const Vec3& center,
                                       std::span<const Edge> edges = {});

SymmetryGroup symmetry_group(const Mesh& mesh, bool include_reflections);

/// Cached symmetry group of the canonical solid.
const SymmetryGroup& canonical_symmetry_group(ShapeKind kind, bool include_reflections);

struct FaceFrame {
    Vec3 origin;
    std::array<Vec3, 3> vertices;
    /// (v1 - v0) x (v2 - v0), unnormalized, pointing out of the solid.
    Vec3 normal;
};

/// Throws Error{ErrorCode::IndexOutOfRange}.
FaceFrame face_frame(const Mesh& mesh, int face_index);

/// Frame of a face given by positions; vertex order is kept when it already
/// runs counterclockwise seen from outside (away from `interior`), otherwise
/// the last two vertices are swapped.
FaceFrame oriented_face_frame(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& interior);

}  // namespace radiogram
