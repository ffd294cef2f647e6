#pragma once
#include <string>
#include <vector>

#include "orthoforge/geometry.hpp"

namespace orthoforge {

// World is Z-up. Front looks along -Y, Side along -X, Top along -Z;
// the isometric camera sits at azimuth 45deg, elevation 45deg.
// Image axes per view: Front (x, z), Top (x, -y), Side (-y, z).
// See CONVENTIONS.md; these mappings are part of the stable contract.
enum class StandardView { Top, Front, Side, Isometric };

const char* view_name(StandardView v);
StandardView view_from_name(const std::string& name);

struct ViewPose {
    Mat3 rotation;          // rows: image right, image up, view direction
    Vec3 translation{0, 0, 0};

    Vec3 view_direction() const { return rotation.row(2); }
};

ViewPose view_pose(StandardView view);

inline Vec2 project_point(const Vec3& p, const ViewPose& pose) {
    Vec3 q = p - pose.translation;
    return {pose.rotation.row(0).dot(q), pose.rotation.row(1).dot(q)};
}

// Simple polygon with optional holes. Outer ring is CCW (positive signed
// area), holes are CW and lie inside the outer ring.
struct Polygon2D {
    std::vector<Vec2> outer;
    std::vector<std::vector<Vec2>> holes;
};

double signed_area(const std::vector<Vec2>& ring);
double polygon_area(const Polygon2D& poly);                  // outer minus holes
double polygons_area(const std::vector<Polygon2D>& polys);

// Even-odd test over every ring of every polygon.
bool point_in_polygons(const Vec2& p, const std::vector<Polygon2D>& polys);

struct Box2 {
    Vec2 min, max;
    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
};
Box2 polygons_bounds(const std::vector<Polygon2D>& polys);

// Boundary of the union of all projected triangles, with holes. Exact
// Boolean union on coordinates snapped to a 2^-28 grid.
std::vector<Polygon2D> silhouette(const TriMesh& mesh, const ViewPose& pose);

struct ProjectedEdge {
    Vec2 a, b;
    enum class Visibility { Visible, Hidden } visibility;
    enum class Kind { Silhouette, Feature } kind;
};

struct EdgeClassifyOptions {
    double feature_angle_deg = 20.0; // dihedral threshold for feature edges
    int visibility_samples = 16;
    double bisect_tolerance = 1e-4;  // edge-parameter tolerance for splits
};

// Silhouette, feature, and boundary edges projected to the image plane,
// split wherever midpoint-ray visibility flips.
std::vector<ProjectedEdge> classify_edges(const TriMesh& mesh, const ViewPose& pose,
                                          const EdgeClassifyOptions& opts = {});

// True if some triangle other than the two listed occludes `p` toward the
// camera. Exposed for the test-side brute-force oracle.
bool point_occluded(const Vec3& p, const Vec3& toward_camera, const TriMesh& mesh,
                    int skip_face_a, int skip_face_b);

} // namespace orthoforge
