#include <boost/polygon/polygon.hpp>

#include <algorithm>
#include <cmath>

#include "orthoforge/projection.hpp"

namespace orthoforge {

namespace {

namespace bp = boost::polygon;

// Coordinates are snapped to a power-of-two grid so the Boolean union is
// exact and the scale-back division introduces no rounding. llround is
// symmetric, which keeps mirrored inputs bit-exactly mirrored.
constexpr double kSnapScale = 268435456.0; // 2^28

int snap(double v) { return static_cast<int>(std::llround(v * kSnapScale)); }
double unsnap(int v) { return static_cast<double>(v) / kSnapScale; }

std::vector<Vec2> ring_to_points(const bp::polygon_data<int>& ring) {
    std::vector<Vec2> pts;
    pts.reserve(ring.size());
    for (auto it = ring.begin(); it != ring.end(); ++it)
        pts.push_back({unsnap(it->x()), unsnap(it->y())});
    // Boost repeats the first vertex at the end of a ring.
    if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
    return pts;
}

std::vector<Vec2> holes_ring_to_points(const bp::polygon_with_holes_data<int>::hole_type& ring) {
    std::vector<Vec2> pts;
    for (auto it = ring.begin(); it != ring.end(); ++it)
        pts.push_back({unsnap(it->x()), unsnap(it->y())});
    if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
    return pts;
}

void orient_ring(std::vector<Vec2>& ring, bool ccw) {
    if ((signed_area(ring) > 0) != ccw) std::reverse(ring.begin(), ring.end());
}

// Rotate so the ring starts at its lexicographically smallest vertex. Makes
// the output independent of the sweep's internal traversal order.
void canonicalize_start(std::vector<Vec2>& ring) {
    if (ring.empty()) return;
    auto it = std::min_element(ring.begin(), ring.end(), [](const Vec2& a, const Vec2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::rotate(ring.begin(), it, ring.end());
}

} // namespace

std::vector<Polygon2D> silhouette(const TriMesh& mesh, const ViewPose& pose) {
    if (mesh.empty()) throw EmptyMesh("silhouette of empty mesh");

    bp::polygon_set_data<int> pset;
    for (const auto& f : mesh.faces) {
        bp::point_data<int> pts[3];
        for (int k = 0; k < 3; ++k) {
            Vec2 q = project_point(mesh.vertices[f[k]], pose);
            pts[k] = {snap(q.x), snap(q.y)};
        }
        // Degenerate (edge-on) triangles contribute nothing to the union.
        long long area2 =
            static_cast<long long>(pts[1].x() - pts[0].x()) * (pts[2].y() - pts[0].y()) -
            static_cast<long long>(pts[2].x() - pts[0].x()) * (pts[1].y() - pts[0].y());
        if (area2 == 0) continue;
        bp::polygon_data<int> tri;
        bp::set_points(tri, pts, pts + 3);
        pset.insert(tri);
    }

    std::vector<bp::polygon_with_holes_data<int>> merged;
    pset.get(merged);

    std::vector<Polygon2D> out;
    for (const auto& pw : merged) {
        Polygon2D poly;
        poly.outer = ring_to_points(pw.self_);
        if (poly.outer.size() < 3) continue;
        orient_ring(poly.outer, true);
        canonicalize_start(poly.outer);
        for (auto h = pw.begin_holes(); h != pw.end_holes(); ++h) {
            auto ring = holes_ring_to_points(*h);
            if (ring.size() < 3) continue;
            orient_ring(ring, false);
            canonicalize_start(ring);
            poly.holes.push_back(std::move(ring));
        }
        std::sort(poly.holes.begin(), poly.holes.end(),
                  [](const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
                      return a[0].x != b[0].x ? a[0].x < b[0].x : a[0].y < b[0].y;
                  });
        out.push_back(std::move(poly));
    }
    if (out.empty()) throw DegenerateProjection("all triangles project to zero area");

    std::sort(out.begin(), out.end(), [](const Polygon2D& a, const Polygon2D& b) {
        return a.outer[0].x != b.outer[0].x ? a.outer[0].x < b.outer[0].x
                                            : a.outer[0].y < b.outer[0].y;
    });
    return out;
}

} // namespace orthoforge
