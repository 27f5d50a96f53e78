#include "radiogram/polyhedra.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace radiogram {

std::string_view to_string(ShapeKind kind) { return kind == ShapeKind::Tet ? "tet" : "oct"; }

ShapeKind parse_shape_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "tet") return ShapeKind::Tet;
    if (lower == "oct") return ShapeKind::Oct;
    throw Error(ErrorCode::ParseError, "unknown shape kind '" + std::string(text) + "'");
}

Vec3 Mesh::centroid() const {
    Vec3 sum;
    for (const auto& v : vertices) sum += v;
    return sum / Scalar(static_cast<long>(vertices.size()));
}

namespace {

Mesh build_mesh(ShapeKind kind, std::vector<Vec3> vertices) {
    Mesh mesh;
    mesh.kind = kind;
    mesh.vertices = std::move(vertices);
    const Vec3 centroid = mesh.centroid();
    const int n = static_cast<int>(mesh.vertices.size());
    auto adjacent = [&](int a, int b) { return distance2(mesh.vertices[a], mesh.vertices[b]) == 2; };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adjacent(i, j)) mesh.edges.emplace_back(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (!adjacent(i, j) || !adjacent(j, k) || !adjacent(i, k)) continue;
                const auto& a = mesh.vertices[i];
                Vec3 normal = cross(mesh.vertices[j] - a, mesh.vertices[k] - a);
                if (sgn(dot(normal, a - centroid)) > 0) {
                    mesh.faces.push_back({i, j, k});
                } else {
                    mesh.faces.push_back({i, k, j});
                }
            }
        }
    }
    return mesh;
}

struct IndexedPoints {
    std::vector<std::pair<Vec3, int>> sorted;

    explicit IndexedPoints(std::span<const Vec3> points) {
        sorted.reserve(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) sorted.emplace_back(points[i], static_cast<int>(i));
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    int find(const Vec3& p) const {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), p,
                                   [](const auto& entry, const Vec3& key) { return entry.first < key; });
        if (it == sorted.end() || !(it->first == p)) return -1;
        return it->second;
    }
};

}  // namespace

const Mesh& canonical_shape(ShapeKind kind) {
    static const Mesh tet = build_mesh(ShapeKind::Tet, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    static const Mesh oct =
        build_mesh(ShapeKind::Oct, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    return kind == ShapeKind::Tet ? tet : oct;
}

bool SymmetryGroup::contains(const Isometry& g) const {
    return std::find(elements.begin(), elements.end(), g) != elements.end();
}

SymmetryGroup SymmetryGroup::proper_subgroup() const {
    SymmetryGroup out;
    std::copy_if(elements.begin(), elements.end(), std::back_inserter(out.elements),
                 [](const Isometry& g) { return g.is_proper(); });
    return out;
}

std::vector<Isometry> point_symmetries(std::span<const Vec3> points, const Vec3& center,
                                       std::span<const Edge> edges) {
    const int n = static_cast<int>(points.size());
    std::vector<Vec3> offsets;
    offsets.reserve(points.size());
    for (const auto& p : points) offsets.push_back(p - center);

    // First ordered triple (lexicographic) whose offsets span 3-space.
    std::array<int, 3> base{-1, -1, -1};
    for (int i = 0; i < n && base[0] < 0; ++i) {
        for (int j = i + 1; j < n && base[0] < 0; ++j) {
            for (int k = j + 1; k < n && base[0] < 0; ++k) {
                if (sgn(dot(offsets[i], cross(offsets[j], offsets[k]))) != 0) base = {i, j, k};
            }
        }
    }
    if (base[0] < 0) return {};

    const Mat3 source = Mat3::from_columns(offsets[base[0]], offsets[base[1]], offsets[base[2]]);
    const Mat3 source_inv = inverse(source);
    const IndexedPoints lookup(points);

    std::vector<Edge> edge_set(edges.begin(), edges.end());
    for (auto& e : edge_set) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edge_set.begin(), edge_set.end());

    auto gram_matches = [&](int a, int src) {
        return norm2(offsets[a]) == norm2(offsets[src]);
    };

    std::vector<Isometry> out;
    for (int a = 0; a < n; ++a) {
        if (!gram_matches(a, base[0])) continue;
        for (int b = 0; b < n; ++b) {
            if (b == a || !gram_matches(b, base[1])) continue;
            if (dot(offsets[a], offsets[b]) != dot(offsets[base[0]], offsets[base[1]])) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b || !gram_matches(c, base[2])) continue;
                if (dot(offsets[a], offsets[c]) != dot(offsets[base[0]], offsets[base[2]])) continue;
                if (dot(offsets[b], offsets[c]) != dot(offsets[base[1]], offsets[base[2]])) continue;

                Mat3 q = Mat3::from_columns(offsets[a], offsets[b], offsets[c]) * source_inv;
                if (transpose(q) * q != Mat3::identity()) continue;
                Vec3 t = center - q * center;
                Isometry g(std::move(q), std::move(t));

                std::vector<int> image(points.size());
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    image[i] = lookup.find(g.apply(points[i]));
                    ok = image[i] >= 0;
                }
                for (std::size_t e = 0; e < edge_set.size() && ok; ++e) {
                    Edge mapped{image[edge_set[e].first], image[edge_set[e].second]};
                    if (mapped.first > mapped.second) std::swap(mapped.first, mapped.second);
                    ok = std::binary_search(edge_set.begin(), edge_set.end(), mapped);
                }
                if (ok) out.push_back(std::move(g));
            }
        }
    }
    return out;
}

SymmetryGroup symmetry_group(const Mesh& mesh, bool include_reflections) {
    SymmetryGroup group{point_symmetries(mesh.vertices, mesh.centroid())};
    return include_reflections ? group : group.proper_subgroup();
}

const SymmetryGroup& canonical_symmetry_group(ShapeKind kind, bool include_reflections) {
    static const SymmetryGroup tet_full = symmetry_group(canonical_shape(ShapeKind::Tet), true);
    static const SymmetryGroup tet_proper = tet_full.proper_subgroup();
    static const SymmetryGroup oct_full = symmetry_group(canonical_shape(ShapeKind::Oct), true);
    static const SymmetryGroup oct_proper = oct_full.proper_subgroup();
    if (kind == ShapeKind::Tet) return include_reflections ? tet_full : tet_proper;
    return include_reflections ? oct_full : oct_proper;
}

FaceFrame face_frame(const Mesh& mesh, int face_index) {
    if (face_index < 0 || face_index >= static_cast<int>(mesh.faces.size())) {
        throw Error(ErrorCode::IndexOutOfRange, "face index " + std::to_string(face_index) + " out of range");
    }
    const Face& f = mesh.faces[static_cast<std::size_t>(face_index)];
    FaceFrame frame;
    frame.vertices = {mesh.vertices[f[0]], mesh.vertices[f[1]], mesh.vertices[f[2]]};
    frame.origin = frame.vertices[0];
    frame.normal = cross(frame.vertices[1] - frame.vertices[0], frame.vertices[2] - frame.vertices[0]);
    return frame;
}

FaceFrame oriented_face_frame(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& interior) {
    FaceFrame frame;
    Vec3 normal = cross(b - a, c - a);
    if (sgn(dot(normal, a - interior)) >= 0) {
        frame.vertices = {a, b, c};
        frame.normal = std::move(normal);
    } else {
        frame.vertices = {a, c, b};
        frame.normal = -normal;
    }
    frame.origin = frame.vertices[0];
    return frame;
}

}  // namespace radiogram
