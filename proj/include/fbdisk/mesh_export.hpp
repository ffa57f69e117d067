#ifndef FBDISK_MESH_EXPORT_HPP
#define FBDISK_MESH_EXPORT_HPP

#include "fbdisk/immersion.hpp"
#include "fbdisk/verifier.hpp"

#include <array>
#include <string>
#include <vector>

namespace fbdisk {

/// Triangulated sample of the surface with per-vertex curvature data.
/// Vertices are ordered row-major over the normalized (u, w) grid; the two
/// columns at u = +-u3 collapse to single vertices and the triangulation fans
/// around them.
struct MeshOutput {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based here; OBJ output is 1-based
    std::vector<double> u, v;
    std::vector<double> K, H, k1, k2;
    std::vector<int> piece;
};

MeshOutput build_mesh(const ScaledRibbon& rib, int nu, int nv);

/// Plain text OBJ: `v x y z` lines then `f i j k` lines, 17-significant-digit
/// decimals, deterministic ordering.
void write_obj(const MeshOutput& mesh, const std::string& path);

/// Sidecar scalar table: header then one `u,v,x,y,z,K,H,k1,k2,piece` row per
/// vertex, same order as the OBJ vertices.
void write_csv(const MeshOutput& mesh, const std::string& path);

std::string ribbon_summary_json(const Ribbon& rib);
std::string report_json(const VerificationReport& rep);

/// %.17g - round-trip exact decimal for doubles.
std::string format_double(double x);

} // namespace fbdisk

#endif
