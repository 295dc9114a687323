#include "ctrx/mesh.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "ctrx/num_format.hpp"

namespace ctrx {

namespace {

// t-ranges of regular sub-patches: the patch range split at cuspidal edges.
std::vector<Interval> regular_spans(const SurfacePatch& s) {
    std::vector<double> cuts{s.t_range.lo};
    for (const double ts : surface_singular_parameters(s, s.t_range)) {
        if (ts > cuts.back() + 1e-12 && ts < s.t_range.hi - 1e-12) cuts.push_back(ts);
    }
    cuts.push_back(s.t_range.hi);
    std::vector<Interval> spans;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) spans.push_back({cuts[i], cuts[i + 1]});
    }
    return spans;
}

}  // namespace

SurfaceMesh build_surface_mesh(const SurfacePatch& s, int nt, int na) {
    if (nt < 2 || na < 2) throw std::invalid_argument("mesh needs nt, na >= 2");
    SurfaceMesh mesh;
    int object_index = 0;
    for (const Interval& span : regular_spans(s)) {
        const int base = static_cast<int>(mesh.vertices.size());
        const std::size_t tri_begin = mesh.triangles.size();
        for (int i = 0; i < nt; ++i) {
            const double t = span.lo + span.length() * i / (nt - 1);
            for (int j = 0; j < na; ++j) {
                const double a =
                    s.alpha_range.lo + s.alpha_range.length() * j / (na - 1);
                mesh.vertices.push_back(surface_position(s, t, a));
            }
        }
        for (int i = 0; i + 1 < nt; ++i) {
            for (int j = 0; j + 1 < na; ++j) {
                const int v00 = base + i * na + j;
                const int v01 = v00 + 1;
                const int v10 = v00 + na;
                const int v11 = v10 + 1;
                mesh.triangles.push_back({v00, v10, v11});
                mesh.triangles.push_back({v00, v11, v01});
            }
        }
        std::string name = "patch_" + std::to_string(object_index++);
        if (s.regime == Regime::Subcritical) {
            name += (s.branch > 0) ? "_pos" : "_neg";
        }
        mesh.objects.push_back({name, tri_begin, mesh.triangles.size()});
    }
    return mesh;
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
    for (const Vec3d& v : mesh.vertices) {
        out << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' '
            << format_double(v.z) << '\n';
    }
    for (const SurfaceMesh::Object& obj : mesh.objects) {
        out << "o " << obj.name << '\n';
        for (std::size_t k = obj.tri_begin; k < obj.tri_end; ++k) {
            const auto& t = mesh.triangles[k];
            out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
        }
    }
}

std::vector<std::vector<Vec3d>> cuspidal_edge_polylines(const SurfacePatch& s, int na) {
    if (na < 2) throw std::invalid_argument("edge polyline needs na >= 2");
    std::vector<std::vector<Vec3d>> edges;
    for (const double ts : surface_singular_parameters(s, s.t_range)) {
        std::vector<Vec3d> line;
        line.reserve(static_cast<std::size_t>(na));
        for (int j = 0; j < na; ++j) {
            const double a = s.alpha_range.lo + s.alpha_range.length() * j / (na - 1);
            line.push_back(surface_position(s, ts, a));
        }
        edges.push_back(std::move(line));
    }
    return edges;
}

bool is_manifold_per_object(const SurfaceMesh& mesh) {
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& t : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            const int a = t[e], b = t[(e + 1) % 3];
            ++edge_count[{std::min(a, b), std::max(a, b)}];
        }
    }
    for (const auto& [edge, count] : edge_count) {
        if (count > 2) return false;
    }
    return true;
}

}  // namespace ctrx
