#include "radiogram/frame.hpp"

#include <algorithm>
#include <queue>

namespace radiogram {

FrameGraph merge_frame(std::span<const Vec3> points, std::span<const Edge> segments, double scale) {
    FrameGraph g;
    g.scale = scale;
    g.nodes.assign(points.begin(), points.end());
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());

    auto index_of = [&](const Vec3& p) {
        return static_cast<int>(std::lower_bound(g.nodes.begin(), g.nodes.end(), p) - g.nodes.begin());
    };
    for (const auto& [a, b] : segments) {
        int i = index_of(points[static_cast<std::size_t>(a)]);
        int j = index_of(points[static_cast<std::size_t>(b)]);
        if (i > j) std::swap(i, j);
        g.struts.emplace_back(i, j);
    }
    std::sort(g.struts.begin(), g.struts.end());
    g.struts.erase(std::unique(g.struts.begin(), g.struts.end()), g.struts.end());
    return g;
}

FrameGraph extract_frame(const Design& d, double scale) {
    if (d.shapes.empty()) throw Error(ErrorCode::InvalidDesign, "design has no solids");
    for (std::size_t i = 0; i < d.shapes.size(); ++i) {
        for (std::size_t j = i + 1; j < d.shapes.size(); ++j) {
            if (interiors_intersect(d.shapes[i], d.shapes[j])) {
                throw Error(ErrorCode::InvalidDesign,
                            "solids " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
            }
        }
    }
    std::vector<Vec3> points;
    std::vector<Edge> segments;
    for (const auto& shape : d.shapes) {
        const int base = static_cast<int>(points.size());
        points.insert(points.end(), shape.vertices.begin(), shape.vertices.end());
        for (const auto& [a, b] : canonical_shape(shape.kind).edges) segments.emplace_back(base + a, base + b);
    }
    return merge_frame(points, segments, scale);
}

namespace {

struct Interval {
    Scalar lo;
    Scalar hi;
};

Interval project(std::span<const Vec3> vertices, const Vec3& axis) {
    Interval out{dot(vertices[0], axis), 0};
    out.hi = out.lo;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        Scalar p = dot(vertices[i], axis);
        if (p < out.lo) out.lo = p;
        if (p > out.hi) out.hi = p;
    }
    return out;
}

bool separates(std::span<const Vec3> a, std::span<const Vec3> b, const Vec3& axis) {
    if (is_zero(axis)) return false;
    Interval pa = project(a, axis);
    Interval pb = project(b, axis);
    return pa.hi <= pb.lo || pb.hi <= pa.lo;
}

struct SolidFeatures {
    std::vector<Vec3> normals;
    std::vector<Vec3> edges;
};

SolidFeatures features(const PolyShape& s) {
    const Mesh& mesh = canonical_shape(s.kind);
    SolidFeatures out;
    // Opposite faces give parallel normals; either sign is a valid axis.
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) out.normals.push_back(s.face(static_cast<int>(f)).normal);
    for (const auto& [a, b] : mesh.edges) out.edges.push_back(s.vertices[b] - s.vertices[a]);
    return out;
}

}  // namespace

bool convex_interiors_intersect(std::span<const Vec3> a_vertices, std::span<const Vec3> a_normals,
                                std::span<const Vec3> a_edges, std::span<const Vec3> b_vertices,
                                std::span<const Vec3> b_normals, std::span<const Vec3> b_edges) {
    // Coordinate axes first: cheap and they usually separate distant solids.
    for (const Vec3& axis : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
        if (separates(a_vertices, b_vertices, axis)) return false;
    }
    for (const auto& n : a_normals) {
        if (separates(a_vertices, b_vertices, n)) return false;
    }
    for (const auto& n : b_normals) {
        if (separates(a_vertices, b_vertices, n)) return false;
    }
    for (const auto& ea : a_edges) {
        for (const auto& eb : b_edges) {
            if (separates(a_vertices, b_vertices, cross(ea, eb))) return false;
        }
    }
    return true;
}

bool interiors_intersect(const PolyShape& a, const PolyShape& b) {
    const SolidFeatures fa = features(a);
    const SolidFeatures fb = features(b);
    return convex_interiors_intersect(a.vertices, fa.normals, fa.edges, b.vertices, fb.normals, fb.edges);
}

bool fcc_residency(const Design& d) {
    if (d.shapes.empty()) return false;
    const Vec3 shift = d.initial_kind() == ShapeKind::Oct ? Vec3{1, 0, 0} : Vec3{};
    for (const auto& shape : d.shapes) {
        for (const auto& v : shape.vertices) {
            Vec3 p = v + shift;
            if (p.x.get_den() != 1 || p.y.get_den() != 1 || p.z.get_den() != 1) return false;
            mpz_class sum = p.x.get_num() + p.y.get_num() + p.z.get_num();
            if (mpz_odd_p(sum.get_mpz_t()) != 0) return false;
        }
    }
    return true;
}

std::vector<Isometry> frame_symmetries(const FrameGraph& g) {
    if (g.nodes.empty()) return {};
    Vec3 center;
    for (const auto& n : g.nodes) center += n;
    center = center / Scalar(static_cast<long>(g.nodes.size()));
    return point_symmetries(g.nodes, center, g.struts);
}

FrameStats frame_stats(const FrameGraph& g) {
    if (g.nodes.empty()) throw Error(ErrorCode::InvalidDesign, "frame has no nodes");
    FrameStats stats;
    stats.node_count = g.nodes.size();
    stats.strut_count = g.struts.size();

    std::vector<std::vector<int>> adjacency(g.nodes.size());
    for (const auto& [a, b] : g.struts) {
        adjacency[static_cast<std::size_t>(a)].push_back(b);
        adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    for (const auto& nbrs : adjacency) ++stats.degree_histogram[static_cast<int>(nbrs.size())];

    std::vector<bool> seen(g.nodes.size(), false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++reached;
                frontier.push(v);
            }
        }
    }
    stats.connected = reached == g.nodes.size();

    stats.bbox_min = g.nodes.front();
    stats.bbox_max = g.nodes.front();
    for (const auto& n : g.nodes) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (n[i] < stats.bbox_min[i]) stats.bbox_min[i] = n[i];
            if (n[i] > stats.bbox_max[i]) stats.bbox_max[i] = n[i];
        }
    }

    const auto symmetries = frame_symmetries(g);
    stats.point_group_order = symmetries.size();
    stats.chiral = std::none_of(symmetries.begin(), symmetries.end(),
                                [](const Isometry& s) { return !s.is_proper(); });
    return stats;
}

}  // namespace radiogram
