#pragma once
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "orthoforge/errors.hpp"

namespace orthoforge {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3() = default;
    Vec3(double x, double y, double z) : x(x), y(y), z(z) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{};
    }
};

struct Vec2 {
    double x = 0, y = 0;

    Vec2() = default;
    Vec2(double x, double y) : x(x), y(y) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Row-major 3x3 matrix. Rows are accessible as Vec3 for projection math.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }
    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        Mat3 r;
        r.m = {r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z};
        return r;
    }
    static Mat3 rotation_z(double radians) {
        double c = std::cos(radians), s = std::sin(radians);
        return from_rows({c, -s, 0}, {s, c, 0}, {0, 0, 1});
    }

    Vec3 row(int i) const { return {m[3 * i], m[3 * i + 1], m[3 * i + 2]}; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    // Max deviation of R^T R from the identity.
    double orthonormality_error() const;
};

struct Aabb {
    Vec3 min{0, 0, 0};
    Vec3 max{0, 0, 0};

    Vec3 extent() const { return max - min; }
    Vec3 center() const { return (min + max) * 0.5; }
    double max_extent() const {
        Vec3 e = extent();
        return std::max(e.x, std::max(e.y, e.z));
    }
};

struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<uint32_t, 3>> faces;

    bool empty() const { return faces.empty(); }
    size_t vertex_count() const { return vertices.size(); }
    size_t face_count() const { return faces.size(); }
};

// Maps v -> scale * (rotation * v) + translation.
struct RigidScaleTransform {
    Mat3 rotation;
    Vec3 translation{0, 0, 0};
    double scale = 1.0;

    Vec3 apply(const Vec3& v) const { return (rotation * v) * scale + translation; }
};

Aabb aabb(const TriMesh& mesh);

// Uniformly scales and recenters so the longest axis-aligned extent equals
// `target` and the bounding box is centered at the origin.
std::pair<TriMesh, RigidScaleTransform> normalize_longest_edge(const TriMesh& mesh,
                                                               double target = 2.0);

TriMesh transform_mesh(const TriMesh& mesh, const RigidScaleTransform& t);

// Mirrors across the YZ plane (x -> -x) and flips face winding so outward
// orientation is preserved.
TriMesh reflect_mesh_x(const TriMesh& mesh);

// Throws if face indices are out of range or a face repeats an index.
void validate_mesh(const TriMesh& mesh);

} // namespace orthoforge
