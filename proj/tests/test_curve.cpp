#include <catch2/catch_amalgamated.hpp>

#include <c1vem/geometry.hpp>
#include <c1vem/mesh_gen.hpp>
#include <c1vem/quadrature.hpp>

#include <cmath>
#include <random>

using namespace c1vem;

TEST_CASE("sine channel curves evaluate to the documented points") {
    const Curve bt = make_channel_bottom_curve();
    const Curve tp = make_channel_top_curve();
    CHECK(bt.eval(0.0).x() == Catch::Approx(0.0).margin(1e-15));
    CHECK(bt.eval(0.0).y() == Catch::Approx(0.0).margin(1e-15));
    CHECK(bt.eval(0.5).x() == Catch::Approx(0.5));
    CHECK(bt.eval(0.5).y() == Catch::Approx(0.05));
    CHECK(tp.eval(0.5).x() == Catch::Approx(0.5));
    CHECK(tp.eval(0.5).y() == Catch::Approx(0.95));
}

TEST_CASE("parameter outside the interval is rejected") {
    const Curve bt = make_channel_bottom_curve();
    CHECK_THROWS_AS(bt.require_param(1.5), std::domain_error);
    CHECK_THROWS_AS(bt.require_param(-0.5), std::domain_error);
    CHECK_NOTHROW(bt.require_param(0.0));
    CHECK_NOTHROW(bt.require_param(1.0));
}

TEST_CASE("frames are unit, orthogonal, and oriented") {
    SECTION("horizontal segment with the element above") {
        const Curve seg = make_segment({0, 0}, {1, 0});
        const EdgeFrame fr = frame_at(seg, 0.5, true);
        CHECK(fr.tangent.x() == Catch::Approx(1.0));
        CHECK(fr.tangent.y() == Catch::Approx(0.0).margin(1e-15));
        CHECK(fr.normal.x() == Catch::Approx(0.0).margin(1e-15));
        CHECK(fr.normal.y() == Catch::Approx(-1.0));
        CHECK(fr.speed == Catch::Approx(1.0));
    }
    SECTION("bottom sine curve at the crest") {
        const Curve bt = make_channel_bottom_curve();
        const EdgeFrame fr = frame_at(bt, 0.5, true);
        CHECK(fr.tangent.x() == Catch::Approx(1.0));
        CHECK(fr.tangent.y() == Catch::Approx(0.0).margin(1e-15));
        CHECK(fr.normal.y() == Catch::Approx(-1.0));
        CHECK(fr.speed == Catch::Approx(1.0));
    }
    SECTION("orthonormal at sampled parameters") {
        const Curve tp = make_channel_top_curve();
        for (double t : {0.0, 0.13, 0.5, 0.77, 1.0}) {
            for (bool fwd : {true, false}) {
                const EdgeFrame fr = frame_at(tp, t, fwd);
                CHECK(std::abs(fr.tangent.dot(fr.normal)) < 1e-14);
                CHECK(fr.tangent.norm() == Catch::Approx(1.0).epsilon(1e-14));
                CHECK(fr.normal.norm() == Catch::Approx(1.0).epsilon(1e-14));
            }
        }
    }
    SECTION("reversed traversal flips both vectors") {
        const Curve bt = make_channel_bottom_curve();
        const EdgeFrame f = frame_at(bt, 0.3, true);
        const EdgeFrame b = frame_at(bt, 0.3, false);
        CHECK((f.tangent + b.tangent).norm() < 1e-15);
        CHECK((f.normal + b.normal).norm() < 1e-15);
    }
}

TEST_CASE("derivatives agree with centered finite differences") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    std::vector<Curve> curves;
    curves.push_back(make_channel_bottom_curve());
    curves.push_back(make_channel_top_curve());
    curves.push_back(make_segment({-1, 2}, {3, 0.5}));
    curves.push_back(make_polyline_spline({{0, 0}, {0.5, 0.3}, {1.1, 0.2}, {1.5, 0.9}}, 0, 1));
    const double eps = 1e-5;
    for (const Curve& c : curves) {
        for (int i = 0; i < 20; ++i) {
            const double t = unif(rng);
            const Vec2 fd1 = (c.eval(t + eps) - c.eval(t - eps)) / (2 * eps);
            const Vec2 fd2 = (c.deriv1(t + eps) - c.deriv1(t - eps)) / (2 * eps);
            CHECK((fd1 - c.deriv1(t)).norm() < 1e-8 * (1 + c.deriv1(t).norm()));
            CHECK((fd2 - c.deriv2(t)).norm() < 1e-7 * (1 + c.deriv2(t).norm()));
        }
    }
}

TEST_CASE("arc quantities") {
    SECTION("straight segment has arc equal to chord") {
        const Curve seg = make_segment({0, 0}, {3, 4});
        const ArcQuantities aq = arc_quantities(seg, 0.0, 1.0);
        CHECK(aq.chord == Catch::Approx(5.0).epsilon(1e-14));
        CHECK(aq.length == Catch::Approx(5.0).epsilon(1e-12));
    }
    SECTION("bottom sine curve full span") {
        const Curve bt = make_channel_bottom_curve();
        const ArcQuantities aq = arc_quantities(bt, 0.0, 1.0);
        CHECK(aq.chord == Catch::Approx(1.0).epsilon(1e-14));
        // composite high-order quadrature oracle, frozen
        CHECK(aq.length == Catch::Approx(1.0061402544253310822).epsilon(1e-13));
    }
    SECTION("arc dominates chord on sub-intervals") {
        const Curve tp = make_channel_top_curve();
        for (double a : {0.0, 0.2, 0.45}) {
            const ArcQuantities aq = arc_quantities(tp, a, a + 0.3);
            CHECK(aq.length >= aq.chord - 1e-12);
        }
    }
}

TEST_CASE("curve serialization round trips") {
    const Curve bt = make_channel_bottom_curve();
    const Curve back = make_curve(bt.kind, bt.params, bt.t_begin, bt.t_end);
    for (double t : {0.0, 0.31, 0.8}) {
        CHECK((bt.eval(t) - back.eval(t)).norm() < 1e-15);
        CHECK((bt.deriv1(t) - back.deriv1(t)).norm() < 1e-15);
    }

    const Curve sp = make_polyline_spline({{0, 0}, {1, 0.5}, {2, 0.1}}, 0, 2);
    const Curve sp2 = make_curve(sp.kind, sp.params, sp.t_begin, sp.t_end);
    for (double t : {0.0, 0.7, 1.9}) CHECK((sp.eval(t) - sp2.eval(t)).norm() < 1e-14);
}

TEST_CASE("spline interpolates its control points") {
    const std::vector<Vec2> pts = {{0, 0}, {1, 1}, {2, 0.5}, {3, 1.5}};
    const Curve sp = make_polyline_spline(pts, 0, 3);
    for (int i = 0; i < 4; ++i) CHECK((sp.eval(double(i)) - pts[i]).norm() < 1e-13);
}
