#pragma once

#include <array>
#include <string>
#include <vector>

#include "isokit/curves.hpp"
#include "isokit/verify.hpp"

namespace isokit {

// Grid sample of a chart with per-vertex curvature scalars, ready for export.
// Vertices are stored row-major over the grid (v fastest).
struct MeshExport {
    int nu = 0;
    int nv = 0;
    std::vector<Point3> vertices;
    std::vector<std::array<int, 3>> faces;  // zero-based vertex indices
    std::vector<double> K;
    std::vector<double> H;
};

MeshExport sample_mesh(const SurfaceChart& chart, const GridSpec& grid);

// Doubles are printed with 17 significant digits so text round-trips are
// bit-exact.
std::string format_double(double value);

// Wavefront OBJ; K rides along as a '# vk <value>' comment line per vertex
// since OBJ has no scalar attribute channel.
std::string to_obj(const MeshExport& mesh);

// CSV with header u,v,x1,x2,x3,K,H_def,H_s3 (H_s3 = 2 H_def).
std::string to_grid_csv(const MeshExport& mesh, const GridSpec& grid);

// CSV with header s,u,v,kappa_g,kappa_n,tau_g_numerator,is_geodesic,
// is_asymptotic,is_line_of_curvature.
std::string to_curve_csv(const std::vector<CurveSample>& samples);

}  // namespace isokit
