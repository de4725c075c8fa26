#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace c1vem {

namespace detail {

inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

/// c * x^e, where a zero coefficient silences the (then meaningless) power.
inline double cpow(double c, double x, int e) {
    return c == 0.0 ? 0.0 : c * ipow(x, e);
}

}  // namespace detail

/// Scaled monomials m_j(x) = X^a Y^b with X = (x - xc)/h, Y = (y - yc)/h, in
/// graded lexicographic order: 1, X, Y, X^2, XY, Y^2, ...
struct ScaledMonomials {
    Vec2 center = Vec2::Zero();
    double h = 1.0;

    static int dimension(int degree) { return (degree + 1) * (degree + 2) / 2; }

    static std::pair<int, int> exponents(int j) {
        int d = 0;
        while (dimension(d) <= j) ++d;
        const int off = j - d * (d + 1) / 2;
        return {d - off, off};
    }

    static int index(int a, int b) {
        const int d = a + b;
        return d * (d + 1) / 2 + b;
    }

    Vec2 scaled(const Vec2& p) const { return (p - center) / h; }

    double value(int j, const Vec2& p) const {
        const auto [a, b] = exponents(j);
        const Vec2 s = scaled(p);
        return detail::ipow(s.x(), a) * detail::ipow(s.y(), b);
    }

    Vec2 gradient(int j, const Vec2& p) const {
        const auto [a, b] = exponents(j);
        const Vec2 s = scaled(p);
        return Vec2(detail::cpow(a, s.x(), a - 1) * detail::ipow(s.y(), b),
                    detail::ipow(s.x(), a) * detail::cpow(b, s.y(), b - 1)) /
               h;
    }

    Eigen::Matrix2d hessian(int j, const Vec2& p) const {
        const auto [a, b] = exponents(j);
        const Vec2 s = scaled(p);
        Eigen::Matrix2d H;
        H(0, 0) = detail::cpow(a * (a - 1), s.x(), a - 2) * detail::ipow(s.y(), b);
        H(0, 1) = detail::cpow(a, s.x(), a - 1) * detail::cpow(b, s.y(), b - 1);
        H(1, 0) = H(0, 1);
        H(1, 1) = detail::ipow(s.x(), a) * detail::cpow(b * (b - 1), s.y(), b - 2);
        return H / (h * h);
    }

    /// Gradient of the Laplacian of m_j.
    Vec2 gradient_of_laplacian(int j, const Vec2& p) const {
        const auto [a, b] = exponents(j);
        const Vec2 s = scaled(p);
        const double gx =
            detail::cpow(static_cast<double>(a) * (a - 1) * (a - 2), s.x(), a - 3) *
                detail::ipow(s.y(), b) +
            detail::cpow(static_cast<double>(a) * b * (b - 1), s.x(), a - 1) *
                (b >= 2 ? detail::ipow(s.y(), b - 2) : 0.0);
        const double gy =
            detail::cpow(static_cast<double>(b) * a * (a - 1), s.y(), b - 1) *
                (a >= 2 ? detail::ipow(s.x(), a - 2) : 0.0) +
            detail::cpow(static_cast<double>(b) * (b - 1) * (b - 2), s.y(), b - 3) *
                detail::ipow(s.x(), a);
        return Vec2(gx, gy) / (h * h * h);
    }

    /// Expansion of the biharmonic of m_j over lower-order monomials:
    /// Delta^2 m_j = sum_i coeff_i m_i / h^4.  Entries with zero coefficient
    /// are omitted.
    std::vector<std::pair<int, double>> biharmonic_coefficients(int j) const {
        const auto [a, b] = exponents(j);
        std::vector<std::pair<int, double>> out;
        const auto da = static_cast<double>(a);
        const auto db = static_cast<double>(b);
        if (a >= 4) out.emplace_back(index(a - 4, b), da * (a - 1) * (a - 2) * (a - 3));
        if (a >= 2 && b >= 2)
            out.emplace_back(index(a - 2, b - 2), 2.0 * da * (a - 1) * db * (b - 1));
        if (b >= 4) out.emplace_back(index(a, b - 4), db * (b - 1) * (b - 2) * (b - 3));
        return out;
    }
};

}  // namespace c1vem
