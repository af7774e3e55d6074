#include "isokit/io.hpp"

#include <cstdio>

namespace isokit {

MeshExport sample_mesh(const SurfaceChart& chart, const GridSpec& grid) {
    if (grid.nu < 2 || grid.nv < 2) {
        throw InvalidRange("sample_mesh requires nu, nv >= 2");
    }
    MeshExport mesh;
    mesh.nu = grid.nu;
    mesh.nv = grid.nv;
    mesh.vertices.reserve(static_cast<std::size_t>(grid.nu) * grid.nv);
    mesh.K.reserve(mesh.vertices.capacity());
    mesh.H.reserve(mesh.vertices.capacity());

    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j) {
            const double u = grid.u_at(i);
            const double v = grid.v_at(j);
            mesh.vertices.push_back(chart.r(u, v));
            const CurvatureSample c = chart_curvatures(chart, u, v);
            mesh.K.push_back(c.K);
            mesh.H.push_back(c.H);
        }
    }
    for (int i = 0; i + 1 < grid.nu; ++i) {
        for (int j = 0; j + 1 < grid.nv; ++j) {
            const int a = i * grid.nv + j;
            const int b = a + 1;
            const int c = a + grid.nv;
            const int d = c + 1;
            mesh.faces.push_back({a, b, d});
            mesh.faces.push_back({a, d, c});
        }
    }
    return mesh;
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string to_obj(const MeshExport& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 80);
    out += "# isokit surface mesh: " + std::to_string(mesh.nu) + " x " + std::to_string(mesh.nv) +
           " grid\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Point3& p = mesh.vertices[i];
        out += "v " + format_double(p.x1) + " " + format_double(p.x2) + " " +
               format_double(p.x3) + "\n";
        out += "# vk " + format_double(mesh.K[i]) + "\n";
    }
    for (const auto& f : mesh.faces) {
        out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
               std::to_string(f[2] + 1) + "\n";
    }
    return out;
}

std::string to_grid_csv(const MeshExport& mesh, const GridSpec& grid) {
    std::string out = "u,v,x1,x2,x3,K,H_def,H_s3\n";
    std::size_t idx = 0;
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j, ++idx) {
            const Point3& p = mesh.vertices[idx];
            out += format_double(grid.u_at(i)) + "," + format_double(grid.v_at(j)) + "," +
                   format_double(p.x1) + "," + format_double(p.x2) + "," + format_double(p.x3) +
                   "," + format_double(mesh.K[idx]) + "," + format_double(mesh.H[idx]) + "," +
                   format_double(2.0 * mesh.H[idx]) + "\n";
        }
    }
    return out;
}

std::string to_curve_csv(const std::vector<CurveSample>& samples) {
    std::string out =
        "s,u,v,kappa_g,kappa_n,tau_g_numerator,is_geodesic,is_asymptotic,is_line_of_curvature\n";
    for (const auto& sample : samples) {
        const CurveClassification& c = sample.classification;
        out += format_double(sample.s) + "," + format_double(sample.state.u) + "," +
               format_double(sample.state.v) + "," + format_double(c.kappa_g) + "," +
               format_double(c.kappa_n) + "," + format_double(c.tau_g_numerator) + "," +
               std::to_string(c.is_geodesic ? 1 : 0) + "," +
               std::to_string(c.is_asymptotic ? 1 : 0) + "," +
               std::to_string(c.is_line_of_curvature ? 1 : 0) + "\n";
    }
    return out;
}

}  // namespace isokit
