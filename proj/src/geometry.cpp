#include "orthoforge/geometry.hpp"

#include <algorithm>
#include <limits>

namespace orthoforge {

double Mat3::orthonormality_error() const {
    // (R^T R)_ij = column_i . column_j
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0;
            for (int k = 0; k < 3; ++k) dot += m[3 * k + i] * m[3 * k + j];
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

void validate_mesh(const TriMesh& mesh) {
    for (const auto& f : mesh.faces) {
        for (uint32_t idx : f) {
            if (idx >= mesh.vertices.size())
                throw ParseError("face index " + std::to_string(idx) + " out of range");
        }
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            throw ParseError("face repeats a vertex index");
    }
    for (const auto& v : mesh.vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
            throw ParseError("non-finite vertex coordinate");
    }
}

Aabb aabb(const TriMesh& mesh) {
    if (mesh.empty()) throw EmptyMesh("aabb of empty mesh");
    constexpr double inf = std::numeric_limits<double>::infinity();
    Aabb box{{inf, inf, inf}, {-inf, -inf, -inf}};
    for (const auto& v : mesh.vertices) {
        box.min.x = std::min(box.min.x, v.x);
        box.min.y = std::min(box.min.y, v.y);
        box.min.z = std::min(box.min.z, v.z);
        box.max.x = std::max(box.max.x, v.x);
        box.max.y = std::max(box.max.y, v.y);
        box.max.z = std::max(box.max.z, v.z);
    }
    return box;
}

std::pair<TriMesh, RigidScaleTransform> normalize_longest_edge(const TriMesh& mesh,
                                                               double target) {
    Aabb box = aabb(mesh);
    double extent = box.max_extent();
    if (extent <= 0) throw DegenerateMesh("all vertices coincident, cannot normalize");

    RigidScaleTransform t;
    t.scale = target / extent;
    t.translation = box.center() * -t.scale;
    return {transform_mesh(mesh, t), t};
}

TriMesh transform_mesh(const TriMesh& mesh, const RigidScaleTransform& t) {
    TriMesh out;
    out.vertices.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices) out.vertices.push_back(t.apply(v));
    out.faces = mesh.faces;
    return out;
}

TriMesh reflect_mesh_x(const TriMesh& mesh) {
    TriMesh out;
    out.vertices.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices) out.vertices.push_back({-v.x, v.y, v.z});
    out.faces.reserve(mesh.faces.size());
    for (const auto& f : mesh.faces) out.faces.push_back({f[0], f[2], f[1]});
    return out;
}

} // namespace orthoforge
