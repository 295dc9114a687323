#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ctrx/surface.hpp"
#include "ctrx/vec3.hpp"

namespace ctrx {

// Triangulated sample of a surface patch. Objects are regular sub-patches:
// the grid is split along cuspidal edges so no triangle straddles one, and
// each object owns its vertices.
struct SurfaceMesh {
    struct Object {
        std::string name;
        std::size_t tri_begin{}, tri_end{};
    };
    std::vector<Vec3d> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<Object> objects;
};

SurfaceMesh build_surface_mesh(const SurfacePatch& s, int nt, int na);

void write_obj(std::ostream& out, const SurfaceMesh& mesh);

// Cuspidal edges inside the patch's t-range, each sampled as a closed-ish
// polyline over the alpha range.
std::vector<std::vector<Vec3d>> cuspidal_edge_polylines(const SurfacePatch& s, int na);

// True when every interior edge is shared by exactly two triangles and no
// edge by more than two.
bool is_manifold_per_object(const SurfaceMesh& mesh);

}  // namespace ctrx
