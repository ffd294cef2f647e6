#pragma once
#include <string>
#include <vector>

#include "orthoforge/geometry.hpp"

namespace orthoforge {

// All constructors emit outward-wound triangles, centered at the origin.

TriMesh make_box(double sx, double sy, double sz);
inline TriMesh make_cube(double edge = 2.0) { return make_box(edge, edge, edge); }

// Axis-Z prism over a regular n-gon with a vertex at angle 0.
TriMesh make_prism(double circumradius, double height, int segments);
inline TriMesh make_cylinder(double radius = 1.0, double height = 2.0, int segments = 64) {
    return make_prism(radius, height, segments);
}
inline TriMesh make_hex_prism(double circumradius = 1.0, double height = 2.0) {
    return make_prism(circumradius, height, 6);
}

// L profile in the XZ plane extruded along Y; bounding box [-1,1]^3.
TriMesh make_l_bracket();

// Box [-1,1]^3 with a cylindrical through-hole along Y.
TriMesh make_box_with_hole(double hole_radius = 0.5, int segments = 64);

TriMesh make_uv_sphere(double radius = 1.0, int stacks = 32, int slices = 64);

// Signed volume via the divergence theorem; positive iff windings are outward.
double mesh_volume(const TriMesh& mesh);

struct NamedMesh {
    std::string name;
    TriMesh mesh;
};

// The five solids used by round-trip acceptance checks.
std::vector<NamedMesh> test_corpus();

// Deterministic procedurally generated solid for batch/scale tests.
TriMesh make_procedural_mesh(uint32_t index);

} // namespace orthoforge
