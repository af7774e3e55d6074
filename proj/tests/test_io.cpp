#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "isokit/io.hpp"

using namespace isokit;

namespace {

MeshExport demo_mesh(GridSpec* grid_out = nullptr) {
    const SurfaceChart chart = parabolic_i_sphere(2.0, 0.0, 0.0, 0.0, {-1, 1, -1, 1});
    const GridSpec grid{{-1, 1, -1, 1}, 5, 4};
    if (grid_out) *grid_out = grid;
    return sample_mesh(chart, grid);
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("sample_mesh shape") {
    const MeshExport mesh = demo_mesh();
    CHECK(mesh.vertices.size() == 5 * 4);
    CHECK(mesh.K.size() == mesh.vertices.size());
    CHECK(mesh.H.size() == mesh.vertices.size());
    CHECK(mesh.faces.size() == 2 * (5 - 1) * (4 - 1));
    for (const auto& f : mesh.faces) {
        for (int idx : f) {
            CHECK(idx >= 0);
            CHECK(idx < static_cast<int>(mesh.vertices.size()));
        }
    }
    for (double k : mesh.K) CHECK(k == doctest::Approx(4.0));
    for (double h : mesh.H) CHECK(h == doctest::Approx(2.0));
}

TEST_CASE("format_double round-trips exactly") {
    RandomStream rng(61);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.pick(13) - 6);
        const std::string text = format_double(x);
        CHECK(std::strtod(text.c_str(), nullptr) == x);
    }
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("OBJ output carries vertices, curvature comments and faces") {
    GridSpec grid;
    const MeshExport mesh = demo_mesh(&grid);
    const std::string obj = to_obj(mesh);
    CHECK(count_lines_starting(obj, "v ") == 20);
    CHECK(count_lines_starting(obj, "# vk ") == 20);
    CHECK(count_lines_starting(obj, "f ") == 24);
    CHECK(obj == to_obj(mesh));  // byte-deterministic
}

TEST_CASE("grid CSV header and shape") {
    GridSpec grid;
    const MeshExport mesh = demo_mesh(&grid);
    const std::string csv = to_grid_csv(mesh, grid);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "u,v,x1,x2,x3,K,H_def,H_s3");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 20);
    CHECK(csv == to_grid_csv(mesh, grid));

    // H_s3 column is double the H_def column on every row.
    std::istringstream again(csv);
    std::getline(again, header);
    while (std::getline(again, line)) {
        std::vector<double> fields;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) fields.push_back(std::strtod(cell.c_str(), nullptr));
        REQUIRE(fields.size() == 8);
        CHECK(fields[7] == doctest::Approx(2.0 * fields[6]));
    }
}

TEST_CASE("curve CSV header") {
    const ProfileFunction p = profile_from(quadratic_fn(1.0), Interval{0.0});
    std::vector<double> grid{0.0, 0.5, 1.0};
    const auto samples = sample_curve(p, 1.0, linear_fn(1.0, 1.0), constant_fn(0.0), grid);
    const std::string csv = to_curve_csv(samples);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "s,u,v,kappa_g,kappa_n,tau_g_numerator,is_geodesic,is_asymptotic,is_line_of_curvature");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
}
