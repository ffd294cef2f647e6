#include "orthoforge/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace orthoforge {

const char* view_name(StandardView v) {
    switch (v) {
        case StandardView::Top: return "top";
        case StandardView::Front: return "front";
        case StandardView::Side: return "side";
        case StandardView::Isometric: return "iso";
    }
    return "?";
}

StandardView view_from_name(const std::string& name) {
    if (name == "top") return StandardView::Top;
    if (name == "front") return StandardView::Front;
    if (name == "side") return StandardView::Side;
    if (name == "iso" || name == "isometric") return StandardView::Isometric;
    throw ForgeError("unknown view name: " + name);
}

ViewPose view_pose(StandardView view) {
    constexpr double s = 0.70710678118654752440; // sqrt(2)/2
    ViewPose pose;
    switch (view) {
        case StandardView::Front:
            pose.rotation = Mat3::from_rows({1, 0, 0}, {0, 0, 1}, {0, -1, 0});
            break;
        case StandardView::Top:
            pose.rotation = Mat3::from_rows({1, 0, 0}, {0, -1, 0}, {0, 0, -1});
            break;
        case StandardView::Side:
            pose.rotation = Mat3::from_rows({0, -1, 0}, {0, 0, 1}, {-1, 0, 0});
            break;
        case StandardView::Isometric:
            // Camera at azimuth 45deg, elevation 45deg; view direction
            // (-cos45*cos45, -sin45*cos45, -sin45).
            pose.rotation = Mat3::from_rows({s, -s, 0}, {-0.5, -0.5, s}, {-0.5, -0.5, -s});
            break;
    }
    return pose;
}

double signed_area(const std::vector<Vec2>& ring) {
    double sum = 0;
    for (size_t i = 0; i < ring.size(); ++i) {
        const Vec2& a = ring[i];
        const Vec2& b = ring[(i + 1) % ring.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum / 2;
}

double polygon_area(const Polygon2D& poly) {
    double area = std::abs(signed_area(poly.outer));
    for (const auto& h : poly.holes) area -= std::abs(signed_area(h));
    return area;
}

double polygons_area(const std::vector<Polygon2D>& polys) {
    double area = 0;
    for (const auto& p : polys) area += polygon_area(p);
    return area;
}

namespace {

bool ray_crosses(const Vec2& p, const Vec2& a, const Vec2& b) {
    // Horizontal ray toward +x, half-open rule on y.
    if ((a.y > p.y) == (b.y > p.y)) return false;
    double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
    return x_cross > p.x;
}

} // namespace

bool point_in_polygons(const Vec2& p, const std::vector<Polygon2D>& polys) {
    int crossings = 0;
    auto scan = [&](const std::vector<Vec2>& ring) {
        for (size_t i = 0; i < ring.size(); ++i)
            if (ray_crosses(p, ring[i], ring[(i + 1) % ring.size()])) ++crossings;
    };
    for (const auto& poly : polys) {
        scan(poly.outer);
        for (const auto& h : poly.holes) scan(h);
    }
    return crossings % 2 == 1;
}

Box2 polygons_bounds(const std::vector<Polygon2D>& polys) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    Box2 box{{inf, inf}, {-inf, -inf}};
    for (const auto& poly : polys)
        for (const auto& v : poly.outer) {
            box.min.x = std::min(box.min.x, v.x);
            box.min.y = std::min(box.min.y, v.y);
            box.max.x = std::max(box.max.x, v.x);
            box.max.y = std::max(box.max.y, v.y);
        }
    return box;
}

// ---------------------------------------------------------------------------
// Edge classification

namespace {

struct MeshEdge {
    uint32_t v0, v1;     // v0 < v1
    int face_a = -1, face_b = -1;
};

std::vector<MeshEdge> build_edges(const TriMesh& mesh) {
    std::map<std::pair<uint32_t, uint32_t>, MeshEdge> edges;
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
        const auto& face = mesh.faces[f];
        for (int k = 0; k < 3; ++k) {
            uint32_t a = face[k], b = face[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            auto& e = edges[{a, b}];
            e.v0 = a;
            e.v1 = b;
            (e.face_a < 0 ? e.face_a : e.face_b) = static_cast<int>(f);
        }
    }
    std::vector<MeshEdge> out;
    out.reserve(edges.size());
    for (auto& [k, e] : edges) out.push_back(e);
    return out;
}

Vec3 face_normal(const TriMesh& mesh, int f) {
    const auto& face = mesh.faces[f];
    const Vec3 &a = mesh.vertices[face[0]], &b = mesh.vertices[face[1]],
               &c = mesh.vertices[face[2]];
    return (b - a).cross(c - a);
}

// Moller-Trumbore, front and back faces alike.
bool ray_hits_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                       const Vec3& c, double* t_out) {
    constexpr double eps = 1e-12;
    Vec3 e1 = b - a, e2 = c - a;
    Vec3 pvec = dir.cross(e2);
    double det = e1.dot(pvec);
    if (std::abs(det) < eps) return false;
    double inv = 1.0 / det;
    Vec3 tvec = origin - a;
    double u = tvec.dot(pvec) * inv;
    if (u < 0 || u > 1) return false;
    Vec3 qvec = tvec.cross(e1);
    double v = dir.dot(qvec) * inv;
    if (v < 0 || u + v > 1) return false;
    double t = e2.dot(qvec) * inv;
    if (t <= 1e-9) return false;
    *t_out = t;
    return true;
}

} // namespace

bool point_occluded(const Vec3& p, const Vec3& toward_camera, const TriMesh& mesh,
                    int skip_face_a, int skip_face_b) {
    double t;
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
        if (static_cast<int>(f) == skip_face_a || static_cast<int>(f) == skip_face_b) continue;
        const auto& face = mesh.faces[f];
        if (ray_hits_triangle(p, toward_camera, mesh.vertices[face[0]], mesh.vertices[face[1]],
                              mesh.vertices[face[2]], &t))
            return true;
    }
    return false;
}

std::vector<ProjectedEdge> classify_edges(const TriMesh& mesh, const ViewPose& pose,
                                          const EdgeClassifyOptions& opts) {
    if (mesh.empty()) throw EmptyMesh("classify_edges on empty mesh");
    const Vec3 dir = pose.view_direction();
    const Vec3 toward_camera = -dir;
    const double cos_feature = std::cos(opts.feature_angle_deg * 3.14159265358979323846 / 180.0);

    std::vector<Vec3> normals(mesh.faces.size());
    for (size_t f = 0; f < mesh.faces.size(); ++f) normals[f] = face_normal(mesh, static_cast<int>(f));

    std::vector<MeshEdge> edges = build_edges(mesh);

    struct DrawnEdge {
        MeshEdge e;
        ProjectedEdge::Kind kind;
    };
    std::vector<DrawnEdge> drawn;
    for (const auto& e : edges) {
        if (e.face_b < 0) {
            drawn.push_back({e, ProjectedEdge::Kind::Silhouette}); // boundary edge
            continue;
        }
        double da = normals[e.face_a].dot(dir);
        double db = normals[e.face_b].dot(dir);
        bool front_a = da < 0, front_b = db < 0;
        if (front_a != front_b) {
            drawn.push_back({e, ProjectedEdge::Kind::Silhouette});
            continue;
        }
        double cos_dihedral = normals[e.face_a].normalized().dot(normals[e.face_b].normalized());
        if (cos_dihedral < cos_feature) drawn.push_back({e, ProjectedEdge::Kind::Feature});
    }

    std::vector<std::vector<ProjectedEdge>> per_edge(drawn.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long long di = 0; di < static_cast<long long>(drawn.size()); ++di) {
        const auto& d = drawn[di];
        const Vec3 p0 = mesh.vertices[d.e.v0];
        const Vec3 p1 = mesh.vertices[d.e.v1];
        const Vec2 q0 = project_point(p0, pose);
        const Vec2 q1 = project_point(p1, pose);
        if (distance(q0, q1) < 1e-9) continue; // projects to a point

        auto at = [&](double t) { return p0 + (p1 - p0) * t; };
        auto hidden_at = [&](double t) {
            return point_occluded(at(t), toward_camera, mesh, d.e.face_a, d.e.face_b);
        };

        const int n = opts.visibility_samples;
        std::vector<bool> hidden(n);
        for (int i = 0; i < n; ++i) hidden[i] = hidden_at((i + 0.5) / n);

        // Runs of equal visibility; refine each change point by bisection.
        std::vector<double> cuts{0.0};
        std::vector<bool> run_hidden{hidden[0]};
        for (int i = 1; i < n; ++i) {
            if (hidden[i] == hidden[i - 1]) continue;
            double lo = (i - 0.5) / n, hi = (i + 0.5) / n;
            while (hi - lo > opts.bisect_tolerance) {
                double mid = (lo + hi) / 2;
                (hidden_at(mid) == hidden[i - 1] ? lo : hi) = mid;
            }
            cuts.push_back((lo + hi) / 2);
            run_hidden.push_back(hidden[i]);
        }
        cuts.push_back(1.0);

        for (size_t r = 0; r < run_hidden.size(); ++r) {
            Vec2 a = project_point(at(cuts[r]), pose);
            Vec2 b = project_point(at(cuts[r + 1]), pose);
            if (distance(a, b) < 1e-9) continue;
            per_edge[di].push_back({a, b,
                                    run_hidden[r] ? ProjectedEdge::Visibility::Hidden
                                                  : ProjectedEdge::Visibility::Visible,
                                    d.kind});
        }
    }

    std::vector<ProjectedEdge> out;
    for (auto& v : per_edge) out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace orthoforge
