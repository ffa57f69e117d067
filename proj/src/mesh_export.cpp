#include "fbdisk/mesh_export.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fbdisk {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

MeshOutput build_mesh(const ScaledRibbon& rib, int nu, int nv) {
    if (nu < 2 || nv < 2) throw std::invalid_argument("build_mesh: nu, nv must be >= 2");
    MeshOutput mesh;
    const double u3 = rib.u3();
    // first vertex index of each column; collapsed columns hold one vertex
    std::vector<int> col_start(nu);
    std::vector<bool> collapsed(nu);
    for (int i = 0; i < nu; ++i) {
        const double u = grid_point(-u3, u3, i, nu);
        const double ve = domain_extent(rib, u);
        col_start[i] = static_cast<int>(mesh.vertices.size());
        collapsed[i] = ve == 0.0;
        const int count = collapsed[i] ? 1 : nv;
        for (int jj = 0; jj < count; ++jj) {
            const double v = collapsed[i] ? 0.0 : (-1.0 + 2.0 * jj / (nv - 1)) * ve;
            const SurfaceJet jet = eval_jet(rib, u, v);
            mesh.vertices.push_back(jet.pos);
            mesh.u.push_back(u);
            mesh.v.push_back(v);
            mesh.K.push_back(jet.K);
            mesh.H.push_back(jet.H);
            mesh.k1.push_back(jet.k1);
            mesh.k2.push_back(jet.k2);
            mesh.piece.push_back(jet.piece);
        }
    }
    for (int i = 0; i + 1 < nu; ++i) {
        const int a = col_start[i], b = col_start[i + 1];
        if (collapsed[i] && collapsed[i + 1]) continue;
        if (collapsed[i]) {
            for (int jj = 0; jj + 1 < nv; ++jj)
                mesh.faces.push_back({a, b + jj, b + jj + 1});
        } else if (collapsed[i + 1]) {
            for (int jj = 0; jj + 1 < nv; ++jj)
                mesh.faces.push_back({a + jj, b, a + jj + 1});
        } else {
            for (int jj = 0; jj + 1 < nv; ++jj) {
                mesh.faces.push_back({a + jj, b + jj, b + jj + 1});
                mesh.faces.push_back({a + jj, b + jj + 1, a + jj + 1});
            }
        }
    }
    return mesh;
}

void write_obj(const MeshOutput& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_obj: cannot open " + path);
    for (const Vec3& p : mesh.vertices)
        out << "v " << format_double(p.x) << ' ' << format_double(p.y) << ' '
            << format_double(p.z) << '\n';
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    if (!out) throw std::runtime_error("write_obj: write failed for " + path);
}

void write_csv(const MeshOutput& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << "u,v,x,y,z,K,H,k1,k2,piece\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        out << format_double(mesh.u[i]) << ',' << format_double(mesh.v[i]) << ','
            << format_double(mesh.vertices[i].x) << ',' << format_double(mesh.vertices[i].y)
            << ',' << format_double(mesh.vertices[i].z) << ',' << format_double(mesh.K[i])
            << ',' << format_double(mesh.H[i]) << ',' << format_double(mesh.k1[i]) << ','
            << format_double(mesh.k2[i]) << ',' << mesh.piece[i] << '\n';
    }
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

std::string ribbon_summary_json(const Ribbon& rib) {
    std::string s = "{";
    s += "\"u1\": " + format_double(rib.u1());
    s += ", \"u2\": " + format_double(rib.u2());
    s += ", \"u3\": " + format_double(rib.u3());
    s += ", \"a\": " + format_double(rib.a());
    s += ", \"d\": " + format_double(rib.d());
    s += ", \"turning\": " + format_double(rib.turning());
    s += "}";
    return s;
}

namespace {
std::string check_json(const CheckResult& c) {
    std::string s = "{";
    s += "\"name\": \"" + c.name + "\"";
    s += std::string(", \"passed\": ") + (c.passed ? "true" : "false");
    s += ", \"worst_residual\": " + format_double(c.worst_residual);
    s += ", \"worst_point\": [" + format_double(c.worst_u);
    if (c.worst_has_v) s += ", " + format_double(c.worst_v);
    s += "]";
    s += ", \"grid\": [" + std::to_string(c.nu) + ", " + std::to_string(c.nv) + "]";
    s += ", \"tolerance\": " + format_double(c.tolerance);
    s += "}";
    return s;
}
} // namespace

std::string report_json(const VerificationReport& rep) {
    std::string s = "{\n";
    s += "  \"ribbon\": {\"u1\": " + format_double(rep.u1) + ", \"u2\": " + format_double(rep.u2) +
         ", \"u3\": " + format_double(rep.u3) + ", \"a\": " + format_double(rep.a) +
         ", \"d\": " + format_double(rep.d) + ", \"turning\": " + format_double(rep.turning) +
         "},\n";
    s += "  \"t\": " + format_double(rep.t) + ",\n";
    s += "  \"checks\": [\n";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        s += "    " + check_json(rep.checks[i]);
        if (i + 1 < rep.checks.size()) s += ",";
        s += "\n";
    }
    s += "  ],\n";
    s += "  \"saddle_margin\": " + format_double(rep.saddle_margin) + ",\n";
    s += "  \"t0_witness\": " +
         (rep.t0_witness ? format_double(*rep.t0_witness) : std::string("null")) + "\n";
    s += "}\n";
    return s;
}

} // namespace fbdisk
