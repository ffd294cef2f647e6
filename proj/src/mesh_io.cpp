#include "orthoforge/mesh_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace orthoforge {

namespace {

uint32_t resolve_obj_index(long idx, size_t vertex_count, size_t line_no) {
    if (idx < 0)
        throw ParseError("negative (relative) OBJ indices are not supported", line_no);
    if (idx == 0)
        throw ParseError("OBJ face index 0 (indices are 1-based)", line_no);
    if (static_cast<size_t>(idx) > vertex_count)
        throw ParseError("OBJ face index " + std::to_string(idx) + " exceeds vertex count",
                         line_no);
    return static_cast<uint32_t>(idx - 1);
}

TriMesh load_obj(std::istream& in) {
    TriMesh mesh;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) throw ParseError("malformed vertex record", line_no);
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<uint32_t> idx;
            std::string tok;
            while (ls >> tok) {
                // "12/3/4" style references: only the vertex index matters.
                size_t slash = tok.find('/');
                std::string head = slash == std::string::npos ? tok : tok.substr(0, slash);
                long raw = 0;
                try {
                    size_t used = 0;
                    raw = std::stol(head, &used);
                    if (used != head.size()) throw std::invalid_argument(head);
                } catch (const std::exception&) {
                    throw ParseError("malformed face index '" + tok + "'", line_no);
                }
                idx.push_back(resolve_obj_index(raw, mesh.vertices.size(), line_no));
            }
            if (idx.size() < 3) throw ParseError("face with fewer than 3 vertices", line_no);
            // Fan-triangulate polygons.
            for (size_t i = 1; i + 1 < idx.size(); ++i)
                mesh.faces.push_back({idx[0], idx[i], idx[i + 1]});
        }
        // vt/vn/usemtl/... records are ignored.
    }
    return mesh;
}

TriMesh load_stl_ascii(std::istream& in) {
    TriMesh mesh;
    std::string tok;
    size_t line_no = 1;
    if (!(in >> tok) || tok != "solid") throw ParseError("ASCII STL must start with 'solid'", 1);
    std::string rest;
    std::getline(in, rest); // solid name

    std::vector<Vec3> facet;
    std::string word;
    while (in >> word) {
        if (word == "vertex") {
            Vec3 v;
            if (!(in >> v.x >> v.y >> v.z)) throw ParseError("malformed STL vertex", line_no);
            facet.push_back(v);
        } else if (word == "endfacet") {
            if (facet.size() != 3) throw ParseError("STL facet without 3 vertices", line_no);
            uint32_t base = static_cast<uint32_t>(mesh.vertices.size());
            for (const auto& v : facet) mesh.vertices.push_back(v);
            mesh.faces.push_back({base, base + 1, base + 2});
            facet.clear();
        } else if (word == "endsolid") {
            return mesh;
        }
        // facet/normal/outer/loop keywords and normal components fall through.
    }
    throw ParseError("ASCII STL missing 'endsolid'", line_no);
}

TriMesh load_stl_binary(std::istream& in) {
    std::array<char, 80> header;
    if (!in.read(header.data(), 80)) throw ParseError("binary STL shorter than 80-byte header");
    uint32_t count = 0;
    if (!in.read(reinterpret_cast<char*>(&count), 4)) throw ParseError("binary STL missing facet count");

    TriMesh mesh;
    mesh.vertices.reserve(static_cast<size_t>(count) * 3);
    mesh.faces.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        std::array<char, 50> facet;
        if (!in.read(facet.data(), 50))
            throw ParseError("binary STL truncated at facet " + std::to_string(i));
        float vals[12];
        std::memcpy(vals, facet.data(), 48); // normal + 3 vertices, attribute skipped
        uint32_t base = static_cast<uint32_t>(mesh.vertices.size());
        for (int v = 0; v < 3; ++v)
            mesh.vertices.push_back({vals[3 + 3 * v], vals[4 + 3 * v], vals[5 + 3 * v]});
        mesh.faces.push_back({base, base + 1, base + 2});
    }
    return mesh;
}

TriMesh dedup_vertices(const TriMesh& mesh, double tol) {
    // Quantize to the tolerance grid; exact duplicates and near-coincident
    // vertices land in the same cell.
    std::map<std::array<long long, 3>, uint32_t> seen;
    TriMesh out;
    std::vector<uint32_t> remap(mesh.vertices.size());
    for (size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Vec3& v = mesh.vertices[i];
        std::array<long long, 3> key{static_cast<long long>(std::llround(v.x / tol)),
                                     static_cast<long long>(std::llround(v.y / tol)),
                                     static_cast<long long>(std::llround(v.z / tol))};
        auto [it, inserted] = seen.emplace(key, static_cast<uint32_t>(out.vertices.size()));
        if (inserted) out.vertices.push_back(v);
        remap[i] = it->second;
    }
    for (const auto& f : mesh.faces) {
        std::array<uint32_t, 3> g{remap[f[0]], remap[f[1]], remap[f[2]]};
        if (g[0] == g[1] || g[1] == g[2] || g[0] == g[2]) continue; // collapsed sliver
        out.faces.push_back(g);
    }
    return out;
}

} // namespace

TriMesh load_mesh(const std::string& path, MeshFormat format, const LoadOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    TriMesh mesh;
    switch (format) {
        case MeshFormat::Obj: mesh = load_obj(in); break;
        case MeshFormat::StlAscii: mesh = load_stl_ascii(in); break;
        case MeshFormat::StlBinary: mesh = load_stl_binary(in); break;
    }
    if (opts.dedup) mesh = dedup_vertices(mesh, opts.dedup_tolerance);
    if (mesh.faces.empty()) throw EmptyMesh(path + ": no faces");
    validate_mesh(mesh);
    return mesh;
}

TriMesh load_mesh_auto(const std::string& path, const LoadOptions& opts) {
    auto ends_with = [&](const char* suffix) {
        size_t n = std::strlen(suffix);
        return path.size() >= n &&
               std::equal(path.end() - n, path.end(), suffix, [](char a, char b) {
                   return std::tolower(static_cast<unsigned char>(a)) == b;
               });
    };
    if (ends_with(".obj")) return load_mesh(path, MeshFormat::Obj, opts);
    if (ends_with(".stl")) {
        // Binary STL has a fixed size formula; ASCII starts with "solid" and
        // won't match it.
        std::ifstream in(path, std::ios::binary | std::ios::ate);
        if (!in) throw IoError("cannot open " + path);
        auto size = static_cast<uint64_t>(in.tellg());
        if (size >= 84) {
            in.seekg(80);
            uint32_t count = 0;
            in.read(reinterpret_cast<char*>(&count), 4);
            if (84 + static_cast<uint64_t>(count) * 50 == size)
                return load_mesh(path, MeshFormat::StlBinary, opts);
        }
        return load_mesh(path, MeshFormat::StlAscii, opts);
    }
    throw ParseError("unrecognized mesh extension: " + path);
}

void save_obj(const TriMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    char buf[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    if (!out) throw IoError("write failed: " + path);
}

} // namespace orthoforge
