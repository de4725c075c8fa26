#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"

namespace c1vem {

/// One-dimensional rule on [-1, 1].
struct Rule1D {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

namespace detail {

/// Legendre value and derivative at x via the three-term recurrence.
inline std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int j = 1; j < n; ++j) {
        const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace detail

/// n-point Gauss-Legendre rule, exact for degree 2n-1.  Nodes are the roots
/// of P_n found by Newton iteration from Chebyshev estimates, polished to
/// 1e-15 and mirrored so the rule is exactly symmetric.
inline Rule1D gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = detail::legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const auto [p, dp] = detail::legendre(n, x);
        (void)p;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;  // cos is decreasing, so this orders nodes ascending
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

/// n-point Gauss-Lobatto rule (n >= 2), exact for degree 2n-3.  Interior
/// nodes are the roots of P'_{n-1}, found by Newton from Chebyshev-Lobatto
/// estimates; weights are 2 / (n (n-1) P_{n-1}(x)^2).
inline Rule1D gauss_lobatto(int n) {
    if (n < 2) throw std::invalid_argument("gauss_lobatto needs n >= 2");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double we = 2.0 / (n * (n - 1.0));
    r.nodes[0] = -1.0;
    r.nodes[n - 1] = 1.0;
    r.weights[0] = we;
    r.weights[n - 1] = we;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        double x = std::cos(M_PI * i / (n - 1.0));
        for (int it = 0; it < 100; ++it) {
            // Solve P'_{n-1}(x) = 0; the second derivative comes from the
            // Legendre ODE (1-x^2) P'' = 2x P' - m(m+1) P with m = n-1.
            const auto [p, dp] = detail::legendre(n - 1, x);
            const double d2p = (2.0 * x * dp - (n - 1.0) * n * p) / (1.0 - x * x);
            const double dx = dp / d2p;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const auto [p, dp] = detail::legendre(n - 1, x);
        (void)dp;
        const double w = 2.0 / (n * (n - 1.0) * p * p);
        r.nodes[i] = -std::abs(x);
        r.nodes[n - 1 - i] = std::abs(x);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        r.nodes[n / 2] = 0.0;
        const auto [p, dp] = detail::legendre(n - 1, 0.0);
        (void)dp;
        r.weights[n / 2] = 2.0 / (n * (n - 1.0) * p * p);
    }
    return r;
}

/// Gauss rule mapped onto an edge, with everything element assembly needs at
/// the nodes.  Weights carry the arclength metric, so sum(w) is the edge
/// length and sum(w_q f(x_q)) approximates the line integral of f.
struct EdgeRule {
    Eigen::VectorXd t;      // parameter nodes, increasing
    Eigen::VectorXd w;      // positive ds-weights
    Eigen::VectorXd speed;  // |velocity|
    std::vector<Vec2> x;    // points gamma(t)
    std::vector<Vec2> vel;  // dgamma/dt
    std::vector<Vec2> acc;  // d^2 gamma/dt^2
};

inline EdgeRule edge_rule(const EdgeArc& e, int n) {
    const Rule1D g = gauss_legendre(n);
    EdgeRule r;
    r.t.resize(n);
    r.w.resize(n);
    r.speed.resize(n);
    r.x.resize(n);
    r.vel.resize(n);
    r.acc.resize(n);
    const double mid = 0.5 * (e.t0 + e.t1), half = 0.5 * (e.t1 - e.t0);
    for (int q = 0; q < n; ++q) {
        const double t = mid + half * g.nodes[q];
        r.t[q] = t;
        r.x[q] = e.point(t);
        r.vel[q] = e.velocity(t);
        r.acc[q] = e.accel(t);
        r.speed[q] = r.vel[q].norm();
        r.w[q] = g.weights[q] * half * r.speed[q];
    }
    return r;
}

struct ArcQuantities {
    double length;
    double chord;
    Vec2 chord_vec;
};

/// Arc length of gamma over [ta, tb] by composite Gauss quadrature
/// (8 panels x 16 points), plus the chord between the endpoints.
inline ArcQuantities arc_quantities(const Curve& c, double ta, double tb) {
    c.require_param(ta);
    c.require_param(tb);
    if (tb < ta) std::swap(ta, tb);
    static const Rule1D g = gauss_legendre(16);
    const int panels = 8;
    double len = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = ta + (tb - ta) * p / panels;
        const double b = ta + (tb - ta) * (p + 1) / panels;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < 16; ++q)
            len += g.weights[q] * half * c.deriv1(mid + half * g.nodes[q]).norm();
    }
    const Vec2 cv = c.eval(tb) - c.eval(ta);
    return {len, cv.norm(), cv};
}

}  // namespace c1vem
