#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "radiogram/exact.hpp"
#include "radiogram/grammar.hpp"

namespace radiogram {

/// Space frame: merged joints (nodes) and deduplicated members (struts).
struct FrameGraph {
    /// Distinct, sorted ascending.
    std::vector<Vec3> nodes;
    /// Index pairs with first < second, sorted ascending.
    std::vector<Edge> struts;
    /// Physical length of one strut in meters. Metadata only.
    double scale = 1.0;
};

/// Throws Error{ErrorCode::InvalidDesign} for an empty design or one whose
/// solids overlap.
FrameGraph extract_frame(const Design& d, double scale = 1.0);

/// Builds the frame of an arbitrary node/strut soup with exact merging.
FrameGraph merge_frame(std::span<const Vec3> points, std::span<const Edge> segments, double scale = 1.0);

/// True iff the interiors of the two solids share a point. Touching along a
/// face, edge or vertex is not an intersection.
bool interiors_intersect(const PolyShape& a, const PolyShape& b);

/// Exact separating-axis test for convex solids described by their vertices,
/// face normals and edge directions.
bool convex_interiors_intersect(std::span<const Vec3> a_vertices, std::span<const Vec3> a_normals,
                                std::span<const Vec3> a_edges, std::span<const Vec3> b_vertices,
                                std::span<const Vec3> b_normals, std::span<const Vec3> b_edges);

/// Every vertex lies on the even-coordinate-sum integer lattice (FCC).
/// Designs grown from an octahedron are shifted by (1,0,0) first, which
/// moves the canonical octahedron onto that lattice.
bool fcc_residency(const Design& d);

struct FrameStats {
    std::size_t node_count = 0;
    std::size_t strut_count = 0;
    std::map<int, std::size_t> degree_histogram;
    bool connected = false;
    Vec3 bbox_min;
    Vec3 bbox_max;
    bool chiral = false;
    std::size_t point_group_order = 0;
};

/// Throws Error{ErrorCode::InvalidDesign} for an empty graph.
FrameStats frame_stats(const FrameGraph& g);

/// Isometries mapping the node set and strut set onto themselves.
std::vector<Isometry> frame_symmetries(const FrameGraph& g);

}  // namespace radiogram
