#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "channel_solution_detail.hpp"
#include "postprocess.hpp"

namespace c1vem {

/// Manufactured solution on the sine-walled channel: a product of the
/// squared wall distances, a squared bubble in x and a gentle oscillation,
/// so that both the value and the gradient vanish on all four boundary
/// pieces.  The load is its biharmonic, generated symbolically.
inline ManufacturedSolution channel_solution() {
    ManufacturedSolution s;
    s.name = "channel";
    s.value = [](const Vec2& p) { return detail::channel_value(p.x(), p.y()); };
    s.gradient = [](const Vec2& p) {
        double gx, gy;
        detail::channel_gradient(p.x(), p.y(), gx, gy);
        return Vec2(gx, gy);
    };
    s.hessian = [](const Vec2& p) {
        double hxx, hxy, hyy;
        detail::channel_hessian(p.x(), p.y(), hxx, hxy, hyy);
        Eigen::Matrix2d H;
        H << hxx, hxy, hxy, hyy;
        return H;
    };
    s.load = [](const Vec2& p) { return detail::channel_load(p.x(), p.y()); };
    s.homogeneous_clamped = true;
    return s;
}

/// Generic full quadratic with zero biharmonic, for reproduction tests with
/// prescribed boundary data.
inline ManufacturedSolution patch_quadratic() {
    ManufacturedSolution s;
    s.name = "patch2";
    s.value = [](const Vec2& p) {
        return 0.7 + 1.3 * p.x() - 0.9 * p.y() + 0.61 * p.x() * p.x() -
               1.7 * p.x() * p.y() + 1.12 * p.y() * p.y();
    };
    s.gradient = [](const Vec2& p) {
        return Vec2(1.3 + 1.22 * p.x() - 1.7 * p.y(), -0.9 - 1.7 * p.x() + 2.24 * p.y());
    };
    s.hessian = [](const Vec2&) {
        Eigen::Matrix2d H;
        H << 1.22, -1.7, -1.7, 2.24;
        return H;
    };
    s.load = [](const Vec2&) { return 0.0; };
    s.homogeneous_clamped = false;
    return s;
}

/// Generic cubic, still biharmonic-free.
inline ManufacturedSolution patch_cubic() {
    ManufacturedSolution s;
    s.name = "patch3";
    s.value = [](const Vec2& p) {
        const double x = p.x(), y = p.y();
        return 1.0 * x * x * x - 2.1 * x * x * y + 1.3 * x * y * y + 0.8 * y * y * y +
               0.4 * x * x - 0.25 * x * y + 0.6 * y * y - 0.3 * x + 0.9 * y + 0.11;
    };
    s.gradient = [](const Vec2& p) {
        const double x = p.x(), y = p.y();
        return Vec2(3.0 * x * x - 4.2 * x * y + 1.3 * y * y + 0.8 * x - 0.25 * y - 0.3,
                    -2.1 * x * x + 2.6 * x * y + 2.4 * y * y - 0.25 * x + 1.2 * y + 0.9);
    };
    s.hessian = [](const Vec2& p) {
        const double x = p.x(), y = p.y();
        Eigen::Matrix2d H;
        H << 6.0 * x - 4.2 * y + 0.8, -4.2 * x + 2.6 * y - 0.25, -4.2 * x + 2.6 * y - 0.25,
            2.6 * x + 4.8 * y + 1.2;
        return H;
    };
    s.load = [](const Vec2&) { return 0.0; };
    s.homogeneous_clamped = false;
    return s;
}

inline ManufacturedSolution solution_by_name(const std::string& name) {
    if (name == "channel") return channel_solution();
    if (name == "patch2") return patch_quadratic();
    if (name == "patch3") return patch_cubic();
    throw std::invalid_argument("unknown solution: " + name);
}

}  // namespace c1vem
