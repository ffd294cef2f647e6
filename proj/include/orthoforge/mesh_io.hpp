#pragma once
#include <string>

#include "orthoforge/geometry.hpp"

namespace orthoforge {

enum class MeshFormat { Obj, StlAscii, StlBinary };

struct LoadOptions {
    // Merge vertices closer than 1e-7 (STL formats repeat vertices per facet).
    bool dedup = false;
    double dedup_tolerance = 1e-7;
};

TriMesh load_mesh(const std::string& path, MeshFormat format, const LoadOptions& opts = {});

// Picks the format from the extension; .stl is sniffed ascii vs binary.
TriMesh load_mesh_auto(const std::string& path, const LoadOptions& opts = {});

void save_obj(const TriMesh& mesh, const std::string& path);

} // namespace orthoforge
