#include <catch2/catch_amalgamated.hpp>

#include <c1vem/mesh_gen.hpp>
#include <c1vem/solutions.hpp>

#include <cmath>
#include <random>

using namespace c1vem;

namespace {

/// Random point strictly between the channel walls.
Vec2 interior_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> ux(0.1, 0.9), us(0.2, 0.8);
    const double x = ux(rng);
    const double lo = channel_bottom(x), hi = channel_top(x);
    return {x, lo + us(rng) * (hi - lo)};
}

void check_derivative_consistency(const ManufacturedSolution& s, const Vec2& p) {
    const double e = 1e-5;
    const Vec2 g = s.gradient(p);
    CHECK(g.x() == Catch::Approx((s.value({p.x() + e, p.y()}) - s.value({p.x() - e, p.y()})) /
                                 (2 * e))
                       .margin(2e-6));
    CHECK(g.y() == Catch::Approx((s.value({p.x(), p.y() + e}) - s.value({p.x(), p.y() - e})) /
                                 (2 * e))
                       .margin(2e-6));
    const Eigen::Matrix2d H = s.hessian(p);
    const Vec2 gxp = s.gradient({p.x() + e, p.y()}), gxm = s.gradient({p.x() - e, p.y()});
    const Vec2 gyp = s.gradient({p.x(), p.y() + e}), gym = s.gradient({p.x(), p.y() - e});
    CHECK(H(0, 0) == Catch::Approx((gxp.x() - gxm.x()) / (2 * e)).margin(2e-5));
    CHECK(H(0, 1) == Catch::Approx((gyp.x() - gym.x()) / (2 * e)).margin(2e-5));
    CHECK(H(1, 0) == Catch::Approx((gxp.y() - gxm.y()) / (2 * e)).margin(2e-5));
    CHECK(H(1, 1) == Catch::Approx((gyp.y() - gym.y()) / (2 * e)).margin(2e-5));
}

/// 13-point finite-difference biharmonic.
double fd_biharmonic(const ManufacturedSolution& s, const Vec2& p, double h) {
    auto u = [&](double dx, double dy) { return s.value({p.x() + dx, p.y() + dy}); };
    const double cross = u(h, h) + u(h, -h) + u(-h, h) + u(-h, -h);
    const double near = u(h, 0) + u(-h, 0) + u(0, h) + u(0, -h);
    const double far = u(2 * h, 0) + u(-2 * h, 0) + u(0, 2 * h) + u(0, -2 * h);
    return (20.0 * u(0, 0) - 8.0 * near + 2.0 * cross + far) / (h * h * h * h);
}

}  // namespace

TEST_CASE("channel solution derivatives are mutually consistent") {
    const ManufacturedSolution s = channel_solution();
    std::mt19937 rng(2);
    for (int i = 0; i < 20; ++i) check_derivative_consistency(s, interior_point(rng));
}

TEST_CASE("channel load equals the finite-difference biharmonic") {
    const ManufacturedSolution s = channel_solution();
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Vec2 p = interior_point(rng);
        const double f = s.load(p);
        CHECK(fd_biharmonic(s, p, 1e-3) == Catch::Approx(f).margin(1e-2 * (1.0 + std::abs(f))));
    }
}

TEST_CASE("channel solution is clamped on both walls") {
    const ManufacturedSolution s = channel_solution();
    CHECK(s.homogeneous_clamped);
    for (int i = 0; i <= 40; ++i) {
        const double x = i / 40.0;
        for (double y : {channel_bottom(x), channel_top(x)}) {
            CHECK(std::abs(s.value({x, y})) < 1e-12);
            CHECK(s.gradient({x, y}).norm() < 1e-12);
        }
        // side walls too
        for (double t : {0.3, 0.6}) {
            for (double xs : {0.0, 1.0}) {
                const double ys = channel_bottom(xs) + t * (channel_top(xs) - channel_bottom(xs));
                CHECK(std::abs(s.value({xs, ys})) < 1e-12);
                CHECK(s.gradient({xs, ys}).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("patch solutions are polynomial and biharmonic free") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unif(-1.0, 2.0);
    for (const char* name : {"patch2", "patch3"}) {
        const ManufacturedSolution s = solution_by_name(name);
        CHECK_FALSE(s.homogeneous_clamped);
        for (int i = 0; i < 10; ++i) {
            const Vec2 p(unif(rng), unif(rng));
            check_derivative_consistency(s, p);
            CHECK(s.load(p) == 0.0);
        }
    }
    const ManufacturedSolution q = patch_quadratic();
    // quadratic: Hessian constant everywhere
    CHECK((q.hessian({0.0, 0.0}) - q.hessian({3.0, -2.0})).norm() == 0.0);
}

TEST_CASE("unknown solution names are rejected") {
    CHECK(solution_by_name("channel").name == "channel");
    CHECK_THROWS_AS(solution_by_name("no-such-solution"), std::invalid_argument);
}
