#include <catch2/catch_amalgamated.hpp>

#include <c1vem/basis.hpp>

#include <cmath>
#include <random>

using namespace c1vem;

TEST_CASE("monomial space dimensions") {
    CHECK(ScaledMonomials::dimension(0) == 1);
    CHECK(ScaledMonomials::dimension(1) == 3);
    CHECK(ScaledMonomials::dimension(2) == 6);
    CHECK(ScaledMonomials::dimension(3) == 10);
    CHECK(ScaledMonomials::dimension(5) == 21);
}

TEST_CASE("graded lexicographic exponent order") {
    CHECK(ScaledMonomials::exponents(0) == std::pair{0, 0});
    CHECK(ScaledMonomials::exponents(1) == std::pair{1, 0});
    CHECK(ScaledMonomials::exponents(2) == std::pair{0, 1});
    CHECK(ScaledMonomials::exponents(3) == std::pair{2, 0});
    CHECK(ScaledMonomials::exponents(4) == std::pair{1, 1});
    CHECK(ScaledMonomials::exponents(5) == std::pair{0, 2});
    CHECK(ScaledMonomials::exponents(9) == std::pair{0, 3});
    for (int j = 0; j < 36; ++j) {
        const auto [a, b] = ScaledMonomials::exponents(j);
        CHECK(ScaledMonomials::index(a, b) == j);
    }
}

TEST_CASE("values are powers of the shifted scaled coordinates") {
    const ScaledMonomials basis{Vec2(1.0, 1.0), 2.0};
    CHECK(basis.value(0, Vec2(1.0, 1.0)) == 1.0);
    for (int j = 1; j < 10; ++j) CHECK(basis.value(j, Vec2(1.0, 1.0)) == 0.0);
    // p = (3, 1) scales to (X, Y) = (1, 0)
    CHECK(basis.value(ScaledMonomials::index(2, 0), Vec2(3.0, 1.0)) == 1.0);
    CHECK(basis.value(ScaledMonomials::index(1, 1), Vec2(3.0, 1.0)) == 0.0);
    // p = (2, 0) scales to (1/2, -1/2)
    CHECK(basis.value(ScaledMonomials::index(1, 1), Vec2(2.0, 0.0)) ==
          Catch::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("derivatives agree with finite differences") {
    const ScaledMonomials basis{Vec2(0.3, -0.2), 0.7};
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unif(-0.5, 0.5);
    const double eps = 1e-6;
    for (int j = 0; j < ScaledMonomials::dimension(5); ++j) {
        for (int trial = 0; trial < 3; ++trial) {
            const Vec2 p(0.3 + unif(rng), -0.2 + unif(rng));
            const Vec2 dx(eps, 0.0), dy(0.0, eps);

            const Vec2 g = basis.gradient(j, p);
            CHECK(g.x() == Catch::Approx((basis.value(j, p + dx) - basis.value(j, p - dx)) /
                                         (2 * eps))
                               .margin(1e-7));
            CHECK(g.y() == Catch::Approx((basis.value(j, p + dy) - basis.value(j, p - dy)) /
                                         (2 * eps))
                               .margin(1e-7));

            const Eigen::Matrix2d H = basis.hessian(j, p);
            const Vec2 hx = (basis.gradient(j, p + dx) - basis.gradient(j, p - dx)) / (2 * eps);
            const Vec2 hy = (basis.gradient(j, p + dy) - basis.gradient(j, p - dy)) / (2 * eps);
            CHECK(H(0, 0) == Catch::Approx(hx.x()).margin(2e-6));
            CHECK(H(0, 1) == Catch::Approx(hx.y()).margin(2e-6));
            CHECK(H(1, 1) == Catch::Approx(hy.y()).margin(2e-6));

            const Vec2 gl = basis.gradient_of_laplacian(j, p);
            const double lap_px = basis.hessian(j, p + dx).trace();
            const double lap_mx = basis.hessian(j, p - dx).trace();
            const double lap_py = basis.hessian(j, p + dy).trace();
            const double lap_my = basis.hessian(j, p - dy).trace();
            CHECK(gl.x() == Catch::Approx((lap_px - lap_mx) / (2 * eps)).margin(2e-5));
            CHECK(gl.y() == Catch::Approx((lap_py - lap_my) / (2 * eps)).margin(2e-5));
        }
    }
}

TEST_CASE("biharmonic expansion of X^4 and X^2 Y^2") {
    const ScaledMonomials basis{Vec2::Zero(), 1.0};
    const auto x4 = basis.biharmonic_coefficients(ScaledMonomials::index(4, 0));
    REQUIRE(x4.size() == 1);
    CHECK(x4[0].first == 0);
    CHECK(x4[0].second == 24.0);

    const auto x2y2 = basis.biharmonic_coefficients(ScaledMonomials::index(2, 2));
    REQUIRE(x2y2.size() == 1);
    CHECK(x2y2[0].first == 0);
    CHECK(x2y2[0].second == 8.0);

    const auto x3y3 = basis.biharmonic_coefficients(ScaledMonomials::index(3, 3));
    REQUIRE(x3y3.size() == 1);
    CHECK(x3y3[0].first == ScaledMonomials::index(1, 1));
    CHECK(x3y3[0].second == 72.0);

    for (int j = 0; j < ScaledMonomials::dimension(3); ++j)
        CHECK(basis.biharmonic_coefficients(j).empty());
}

TEST_CASE("biharmonic expansion matches the divergence of grad-Laplacian") {
    const ScaledMonomials basis{Vec2(0.1, 0.4), 1.3};
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(-0.6, 0.6);
    const double eps = 1e-5;
    for (int j = 0; j < ScaledMonomials::dimension(6); ++j) {
        const Vec2 p(0.1 + unif(rng), 0.4 + unif(rng));
        double expansion = 0.0;
        for (const auto& [i, c] : basis.biharmonic_coefficients(j))
            expansion += c * basis.value(i, p);
        expansion /= basis.h * basis.h * basis.h * basis.h;

        const Vec2 dx(eps, 0.0), dy(0.0, eps);
        const double div_gl =
            (basis.gradient_of_laplacian(j, p + dx).x() -
             basis.gradient_of_laplacian(j, p - dx).x()) /
                (2 * eps) +
            (basis.gradient_of_laplacian(j, p + dy).y() -
             basis.gradient_of_laplacian(j, p - dy).y()) /
                (2 * eps);
        CHECK(expansion == Catch::Approx(div_gl).margin(1e-6));
    }
}
