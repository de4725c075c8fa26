#include <catch2/catch_amalgamated.hpp>

#include <c1vem/mesh.hpp>
#include <c1vem/mesh_gen.hpp>
#include <c1vem/mesh_io.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace c1vem;

TEST_CASE("square deformation maps documented points") {
    const Vec2 lower = map_square_node(Vec2(0.5, 0.25));
    CHECK(lower.x() == Catch::Approx(0.5).margin(1e-15));
    CHECK(lower.y() == Catch::Approx(0.275).margin(1e-15));

    const Vec2 upper = map_square_node(Vec2(0.5, 0.75));
    CHECK(upper.x() == Catch::Approx(0.5).margin(1e-15));
    CHECK(upper.y() == Catch::Approx(0.725).margin(1e-15));

    // the two branches agree on the midline and fix the side walls
    const Vec2 mid_lo = map_square_node(Vec2(0.3, 0.5));
    const Vec2 mid_hi = map_square_node(Vec2(0.3, 0.5 + 1e-16));
    CHECK(mid_lo.y() == Catch::Approx(mid_hi.y()).margin(1e-14));
    CHECK(map_square_node(Vec2(0.0, 0.2)) == Vec2(0.0, 0.2));
    CHECK(map_square_node(Vec2(1.0, 0.8)) == Vec2(1.0, 0.8));

    // boundary rows land on the walls
    CHECK(map_square_node(Vec2(0.25, 0.0)).y() ==
          Catch::Approx(channel_bottom(0.25)).margin(1e-15));
    CHECK(map_square_node(Vec2(0.25, 1.0)).y() ==
          Catch::Approx(channel_top(0.25)).margin(1e-15));
}

TEST_CASE("single-quad mesh geometry") {
    const CurvedMesh mesh = generate_square_quad_mesh(1);
    REQUIRE(mesh.n_nodes() == 4);
    REQUIRE(mesh.n_elements() == 1);
    REQUIRE(mesh.n_edges() == 4);
    const ElementShape& s = mesh.shapes[0];
    CHECK(s.area == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(s.h == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(s.centroid.x() == Catch::Approx(0.5).margin(1e-14));
    CHECK(s.centroid.y() == Catch::Approx(0.5).margin(1e-14));
    for (double hv : mesh.h_vertex) CHECK(hv == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("two-by-two mesh topology") {
    const CurvedMesh mesh = generate_square_quad_mesh(2);
    REQUIRE(mesh.n_nodes() == 9);
    REQUIRE(mesh.n_elements() == 4);
    REQUIRE(mesh.n_edges() == 12);
    int boundary = 0;
    for (const auto& e : mesh.edges) boundary += e.on_boundary() ? 1 : 0;
    CHECK(boundary == 8);
    // interior edges carry both adjacent elements
    for (const auto& e : mesh.edges)
        if (!e.on_boundary()) CHECK(e.elem[0] != e.elem[1]);
}

TEST_CASE("curved channel mesh area is exact") {
    // sum of exact per-element areas telescopes to the area between the
    // walls, 1 - 1/(15 pi) in closed form
    const double exact = 0.97877934092108062190;
    for (int n : {2, 8}) {
        const CurvedMesh mesh = generate_channel_quad_mesh(n);
        double area = 0.0;
        for (const auto& s : mesh.shapes) area += s.area;
        CHECK(area == Catch::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("straightened boundary drops the arcs and moves no node") {
    const CurvedMesh curved = generate_channel_quad_mesh(4);
    const CurvedMesh straight = straighten_boundary(curved);
    REQUIRE(straight.n_nodes() == curved.n_nodes());
    REQUIRE(straight.n_elements() == curved.n_elements());
    for (int v = 0; v < curved.n_nodes(); ++v)
        CHECK((straight.nodes[v] - curved.nodes[v]).norm() == 0.0);

    int curved_edges = 0;
    for (const auto& e : straight.edges) curved_edges += e.curve >= 0 ? 1 : 0;
    CHECK(curved_edges == 0);
    int arcs = 0;
    for (const auto& e : curved.edges) arcs += e.curve >= 0 ? 1 : 0;
    CHECK(arcs == 2 * 4);

    // chords cut the sine bumps, so the straightened area differs slightly
    double area_c = 0.0, area_s = 0.0;
    for (const auto& s : curved.shapes) area_c += s.area;
    for (const auto& s : straight.shapes) area_s += s.area;
    CHECK(area_c != Catch::Approx(area_s).epsilon(1e-12));
    CHECK(area_c == Catch::Approx(area_s).epsilon(1e-2));
}

TEST_CASE("regularity validator accepts the study meshes") {
    CHECK(validate_mesh(generate_channel_quad_mesh(8), 0.1).pass());
    CHECK(validate_mesh(generate_channel_voronoi_mesh(141, 1000019ull), 0.1).pass());
}

TEST_CASE("regularity validator flags a non-star-shaped element") {
    // L-shaped hexagon whose centroid cannot see the inner corner
    std::vector<Vec2> nodes = {{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}};
    const CurvedMesh mesh = build_mesh(std::move(nodes), {}, {{0, 1, 2, 3, 4, 5}});
    const RegularityReport rep = validate_mesh(mesh, 0.01);
    REQUIRE_FALSE(rep.pass());
    bool star_violation = false;
    for (const auto& v : rep.violations)
        star_violation |= v.what.find("star") != std::string::npos;
    CHECK(star_violation);
}

TEST_CASE("mesh file round-trip is byte-identical") {
    const CurvedMesh mesh = generate_channel_voronoi_mesh(35, 77ull);
    const std::string path1 = "roundtrip_a.json";
    const std::string path2 = "roundtrip_b.json";
    write_mesh(mesh, path1);
    const CurvedMesh back = read_mesh(path1);
    write_mesh(back, path2);

    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(path1), b = slurp(path2);
    REQUIRE_FALSE(a.empty());
    CHECK(a == b);

    REQUIRE(back.n_nodes() == mesh.n_nodes());
    REQUIRE(back.n_elements() == mesh.n_elements());
    for (int v = 0; v < mesh.n_nodes(); ++v)
        CHECK((back.nodes[v] - mesh.nodes[v]).norm() == 0.0);
    for (int e = 0; e < mesh.n_elements(); ++e)
        CHECK(back.elements[e].verts == mesh.elements[e].verts);
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("voronoi generation is deterministic and regular across seeds") {
    const CurvedMesh a = generate_square_voronoi_mesh(141, 5ull);
    const CurvedMesh b = generate_square_voronoi_mesh(141, 5ull);
    REQUIRE(a.n_nodes() == b.n_nodes());
    for (int v = 0; v < a.n_nodes(); ++v) CHECK((a.nodes[v] - b.nodes[v]).norm() == 0.0);

    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const CurvedMesh m = generate_square_voronoi_mesh(563, seed);
        const RegularityReport rep = validate_mesh(m, 0.1);
        CHECK(rep.pass());
        double area = 0.0;
        for (const auto& s : m.shapes) area += s.area;
        CHECK(area == Catch::Approx(1.0).epsilon(1e-12));
    }
}
