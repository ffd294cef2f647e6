#include "orthoforge/shapes.hpp"

#include <cmath>
#include <random>

namespace orthoforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

uint32_t add_vertex(TriMesh& m, const Vec3& v) {
    m.vertices.push_back(v);
    return static_cast<uint32_t>(m.vertices.size() - 1);
}

void add_tri(TriMesh& m, uint32_t a, uint32_t b, uint32_t c) { m.faces.push_back({a, b, c}); }

void add_quad(TriMesh& m, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    add_tri(m, a, b, c);
    add_tri(m, a, c, d);
}

} // namespace

TriMesh make_box(double sx, double sy, double sz) {
    double x = sx / 2, y = sy / 2, z = sz / 2;
    TriMesh m;
    uint32_t v[8];
    int corner = 0;
    for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i)
                v[corner++] = add_vertex(m, {i ? x : -x, j ? y : -y, k ? z : -z});
    // index = i + 2j + 4k
    add_quad(m, v[0], v[2], v[3], v[1]); // z = -z, normal -Z
    add_quad(m, v[4], v[5], v[7], v[6]); // z = +z, normal +Z
    add_quad(m, v[0], v[1], v[5], v[4]); // y = -y, normal -Y
    add_quad(m, v[2], v[6], v[7], v[3]); // y = +y, normal +Y
    add_quad(m, v[0], v[4], v[6], v[2]); // x = -x, normal -X
    add_quad(m, v[1], v[3], v[7], v[5]); // x = +x, normal +X
    return m;
}

TriMesh make_prism(double circumradius, double height, int segments) {
    TriMesh m;
    double h = height / 2;
    std::vector<uint32_t> bot(segments), top(segments);
    for (int i = 0; i < segments; ++i) {
        double a = 2 * kPi * i / segments;
        double cx = circumradius * std::cos(a), cy = circumradius * std::sin(a);
        bot[i] = add_vertex(m, {cx, cy, -h});
        top[i] = add_vertex(m, {cx, cy, h});
    }
    uint32_t cb = add_vertex(m, {0, 0, -h});
    uint32_t ct = add_vertex(m, {0, 0, h});
    for (int i = 0; i < segments; ++i) {
        int j = (i + 1) % segments;
        add_quad(m, bot[i], bot[j], top[j], top[i]); // radial outward
        add_tri(m, ct, top[i], top[j]);              // +Z cap
        add_tri(m, cb, bot[j], bot[i]);              // -Z cap
    }
    return m;
}

TriMesh make_l_bracket() {
    // CCW profile in (x,z): full slab below z=0 plus a riser on x<0.
    const std::vector<Vec2> profile = {{-1, -1}, {1, -1}, {1, 0}, {0, 0}, {0, 1}, {-1, 1}};
    const double y0 = -1, y1 = 1;

    TriMesh m;
    int n = static_cast<int>(profile.size());
    std::vector<uint32_t> bot(n), top(n);
    for (int i = 0; i < n; ++i) {
        bot[i] = add_vertex(m, {profile[i].x, y0, profile[i].y});
        top[i] = add_vertex(m, {profile[i].x, y1, profile[i].y});
    }
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        add_quad(m, bot[i], top[i], top[j], bot[j]); // outward for CCW profile
    }
    // Caps as two convex quads each: indices into the profile order above.
    const int rects[2][4] = {{0, 1, 2, 3}, {0, 3, 4, 5}};
    for (const auto& r : rects) {
        add_quad(m, bot[r[0]], bot[r[1]], bot[r[2]], bot[r[3]]); // y=y0: CCW in (x,z) -> -Y
        add_quad(m, top[r[3]], top[r[2]], top[r[1]], top[r[0]]); // y=y1: CW in (x,z) -> +Y
    }
    return m;
}

TriMesh make_box_with_hole(double hole_radius, int segments) {
    TriMesh m;
    const double h = 1.0; // half depth along Y, box half extent in X/Z
    std::vector<uint32_t> cm(segments), cp(segments), sm(segments), sp(segments);
    for (int i = 0; i < segments; ++i) {
        double a = 2 * kPi * i / segments;
        double cx = std::cos(a), cz = std::sin(a);
        // Square boundary point on the same ray, so caps and walls share vertices.
        double scale = 1.0 / std::max(std::abs(cx), std::abs(cz));
        cm[i] = add_vertex(m, {hole_radius * cx, -h, hole_radius * cz});
        cp[i] = add_vertex(m, {hole_radius * cx, h, hole_radius * cz});
        sm[i] = add_vertex(m, {scale * cx, -h, scale * cz});
        sp[i] = add_vertex(m, {scale * cx, h, scale * cz});
    }
    for (int i = 0; i < segments; ++i) {
        int j = (i + 1) % segments;
        add_quad(m, cp[i], cp[j], sp[j], sp[i]); // +Y annulus
        add_quad(m, cm[j], cm[i], sm[i], sm[j]); // -Y annulus
        add_quad(m, sm[i], sp[i], sp[j], sm[j]); // outer wall, outward
        add_quad(m, cm[i], cm[j], cp[j], cp[i]); // hole wall, faces the axis
    }
    return m;
}

TriMesh make_uv_sphere(double radius, int stacks, int slices) {
    TriMesh m;
    std::vector<std::vector<uint32_t>> ring(stacks - 1);
    for (int s = 1; s < stacks; ++s) {
        double phi = kPi * s / stacks; // from +Z pole
        ring[s - 1].resize(slices);
        for (int i = 0; i < slices; ++i) {
            double a = 2 * kPi * i / slices;
            ring[s - 1][i] = add_vertex(m, {radius * std::sin(phi) * std::cos(a),
                                            radius * std::sin(phi) * std::sin(a),
                                            radius * std::cos(phi)});
        }
    }
    uint32_t north = add_vertex(m, {0, 0, radius});
    uint32_t south = add_vertex(m, {0, 0, -radius});
    for (int i = 0; i < slices; ++i) {
        int j = (i + 1) % slices;
        add_tri(m, north, ring[0][i], ring[0][j]);
        add_tri(m, south, ring[stacks - 2][j], ring[stacks - 2][i]);
    }
    for (int s = 0; s + 1 < stacks - 1; ++s)
        for (int i = 0; i < slices; ++i) {
            int j = (i + 1) % slices;
            add_quad(m, ring[s][i], ring[s + 1][i], ring[s + 1][j], ring[s][j]);
        }
    return m;
}

double mesh_volume(const TriMesh& mesh) {
    double v6 = 0;
    for (const auto& f : mesh.faces) {
        const Vec3 &a = mesh.vertices[f[0]], &b = mesh.vertices[f[1]], &c = mesh.vertices[f[2]];
        v6 += a.dot(b.cross(c));
    }
    return v6 / 6.0;
}

std::vector<NamedMesh> test_corpus() {
    return {{"cube", make_cube()},
            {"box_with_hole", make_box_with_hole()},
            {"l_bracket", make_l_bracket()},
            {"cylinder", make_cylinder()},
            {"hex_prism", make_hex_prism()}};
}

TriMesh make_procedural_mesh(uint32_t index) {
    std::mt19937 rng(0x5eedu + index);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (rng() / 4294967296.0);
    };
    switch (index % 5) {
        case 0: return make_box(uniform(0.5, 2), uniform(0.5, 2), uniform(0.5, 2));
        case 1: return make_prism(uniform(0.4, 1), uniform(0.5, 2), 48);
        case 2: return make_prism(uniform(0.4, 1), uniform(0.5, 2), 6);
        case 3: return make_l_bracket();
        default: return make_box_with_hole(uniform(0.2, 0.7), 48);
    }
}

} // namespace orthoforge
