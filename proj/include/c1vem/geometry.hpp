#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace c1vem {

using Vec2 = Eigen::Vector2d;

/// Rotate by -90 degrees.  Applied to the unit tangent of a CCW element
/// boundary this yields the outward normal.
inline Vec2 rotate_cw(const Vec2& v) { return Vec2(v.y(), -v.x()); }

inline double cross2(const Vec2& a, const Vec2& b) {
    return a.x() * b.y() - a.y() * b.x();
}

/// A twice-differentiable parametrized curve gamma : [t_begin, t_end] -> R^2.
///
/// The callables are the working representation; `kind` plus `params` carry
/// the construction data so meshes referencing the curve can be serialized.
struct Curve {
    std::function<Vec2(double)> eval;
    std::function<Vec2(double)> deriv1;
    std::function<Vec2(double)> deriv2;
    double t_begin = 0.0;
    double t_end = 1.0;
    std::string kind;
    std::vector<double> params;

    void require_param(double t) const {
        const double slack = 1e-9 * (1.0 + std::abs(t_end - t_begin));
        if (t < t_begin - slack || t > t_end + slack)
            throw std::domain_error("curve parameter " + std::to_string(t) +
                                    " outside [" + std::to_string(t_begin) + ", " +
                                    std::to_string(t_end) + "]");
    }
};

/// Straight segment from a to b, parametrized over [0, 1].
inline Curve make_segment(const Vec2& a, const Vec2& b) {
    Curve c;
    c.eval = [a, b](double t) { return Vec2(a + t * (b - a)); };
    c.deriv1 = [a, b](double) { return Vec2(b - a); };
    c.deriv2 = [](double) { return Vec2(Vec2::Zero()); };
    c.t_begin = 0.0;
    c.t_end = 1.0;
    c.kind = "segment";
    c.params = {a.x(), a.y(), b.x(), b.y()};
    return c;
}

/// Graph curve t -> (t, offset + amplitude * sin(omega * t)).
inline Curve make_sine_graph(double amplitude, double omega, double offset,
                             double t0, double t1) {
    Curve c;
    c.eval = [=](double t) {
        return Vec2(t, offset + amplitude * std::sin(omega * t));
    };
    c.deriv1 = [=](double t) {
        return Vec2(1.0, amplitude * omega * std::cos(omega * t));
    };
    c.deriv2 = [=](double t) {
        return Vec2(0.0, -amplitude * omega * omega * std::sin(omega * t));
    };
    c.t_begin = t0;
    c.t_end = t1;
    c.kind = "sine-graph";
    c.params = {amplitude, omega, offset};
    return c;
}

namespace detail {

/// Natural cubic spline through `pts` at uniform knots 0, 1, ..., n-1.
struct SplineData {
    std::vector<Vec2> pts;
    std::vector<Vec2> m;  // second derivatives at the knots, m0 = m_{n-1} = 0

    // piece index and local coordinate for knot parameter s in [0, n-1]
    std::pair<int, double> locate(double s) const {
        const int n = static_cast<int>(pts.size());
        int i = static_cast<int>(std::floor(s));
        i = std::max(0, std::min(n - 2, i));
        return {i, s - i};
    }
    Vec2 eval(double s) const {
        auto [i, th] = locate(s);
        const double om = 1.0 - th;
        return om * pts[i] + th * pts[i + 1] +
               ((om * om * om - om) * m[i] + (th * th * th - th) * m[i + 1]) / 6.0;
    }
    Vec2 deriv1(double s) const {
        auto [i, th] = locate(s);
        const double om = 1.0 - th;
        return pts[i + 1] - pts[i] +
               ((1.0 - 3.0 * om * om) * m[i] + (3.0 * th * th - 1.0) * m[i + 1]) / 6.0;
    }
    Vec2 deriv2(double s) const {
        auto [i, th] = locate(s);
        return (1.0 - th) * m[i] + th * m[i + 1];
    }
};

inline std::shared_ptr<SplineData> build_spline(const std::vector<Vec2>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 2) throw std::invalid_argument("polyline-spline needs at least 2 points");
    auto sd = std::make_shared<SplineData>();
    sd->pts = pts;
    sd->m.assign(n, Vec2::Zero());
    if (n > 2) {
        const int ni = n - 2;
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(ni, ni);
        Eigen::MatrixXd rhs(ni, 2);
        for (int i = 0; i < ni; ++i) {
            T(i, i) = 4.0;
            if (i > 0) T(i, i - 1) = 1.0;
            if (i + 1 < ni) T(i, i + 1) = 1.0;
            const Vec2 d = 6.0 * (pts[i] - 2.0 * pts[i + 1] + pts[i + 2]);
            rhs(i, 0) = d.x();
            rhs(i, 1) = d.y();
        }
        Eigen::MatrixXd sol = T.partialPivLu().solve(rhs);
        for (int i = 0; i < ni; ++i) sd->m[i + 1] = Vec2(sol(i, 0), sol(i, 1));
    }
    return sd;
}

}  // namespace detail

/// Natural cubic spline through the given points, parametrized over [t0, t1]
/// with uniform knot spacing.
inline Curve make_polyline_spline(const std::vector<Vec2>& pts, double t0, double t1) {
    auto sd = detail::build_spline(pts);
    const double scale = (pts.size() - 1) / (t1 - t0);
    Curve c;
    c.eval = [sd, t0, scale](double t) { return sd->eval((t - t0) * scale); };
    c.deriv1 = [sd, t0, scale](double t) {
        return Vec2(sd->deriv1((t - t0) * scale) * scale);
    };
    c.deriv2 = [sd, t0, scale](double t) {
        return Vec2(sd->deriv2((t - t0) * scale) * scale * scale);
    };
    c.t_begin = t0;
    c.t_end = t1;
    c.kind = "polyline-spline";
    c.params.reserve(2 * pts.size());
    for (const auto& p : pts) {
        c.params.push_back(p.x());
        c.params.push_back(p.y());
    }
    return c;
}

/// Rebuild a curve from its serialized (kind, params, t_range) form.
inline Curve make_curve(const std::string& kind, const std::vector<double>& params,
                        double t0, double t1) {
    if (kind == "segment") {
        if (params.size() != 4) throw std::invalid_argument("segment needs 4 params");
        return make_segment(Vec2(params[0], params[1]), Vec2(params[2], params[3]));
    }
    if (kind == "sine-graph") {
        if (params.size() != 3) throw std::invalid_argument("sine-graph needs 3 params");
        return make_sine_graph(params[0], params[1], params[2], t0, t1);
    }
    if (kind == "polyline-spline") {
        if (params.size() < 4 || params.size() % 2 != 0)
            throw std::invalid_argument("polyline-spline needs an even point list");
        std::vector<Vec2> pts;
        for (std::size_t i = 0; i < params.size(); i += 2)
            pts.emplace_back(params[i], params[i + 1]);
        return make_polyline_spline(pts, t0, t1);
    }
    throw std::invalid_argument("unknown curve kind '" + kind + "'");
}

/// Tangent/normal frame of a traversed curve point.  `forward` tells whether
/// the traversal runs with increasing parameter; the normal is the traversal
/// tangent rotated by -90 degrees, i.e. the outward normal when the traversal
/// follows a CCW element boundary.
struct EdgeFrame {
    Vec2 tangent;  // unit, along the traversal
    Vec2 normal;   // unit, tangent rotated -90 degrees
    double speed;  // |dgamma/dt|
};

inline EdgeFrame frame_at(const Curve& c, double t, bool forward = true) {
    c.require_param(t);
    const Vec2 v = c.deriv1(t);
    const double sp = v.norm();
    if (sp < 1e-14) throw std::runtime_error("degenerate curve velocity");
    const Vec2 tau = (forward ? 1.0 : -1.0) * v / sp;
    return {tau, rotate_cw(tau), sp};
}

/// Concrete geometry of one element edge: either an arc of `curve` over
/// [t0, t1] with endpoints a = gamma(t0), b = gamma(t1), or (curve == nullptr)
/// the straight chord from a to b parametrized over [0, 1].
struct EdgeArc {
    const Curve* curve = nullptr;
    Vec2 a = Vec2::Zero();
    Vec2 b = Vec2::Zero();
    double t0 = 0.0;
    double t1 = 1.0;

    bool straight() const { return curve == nullptr; }
    double chord() const { return (b - a).norm(); }
    Vec2 point(double t) const {
        if (curve) return curve->eval(t);
        return a + (t - t0) / (t1 - t0) * (b - a);
    }
    Vec2 velocity(double t) const {
        if (curve) return curve->deriv1(t);
        return (b - a) / (t1 - t0);
    }
    Vec2 accel(double t) const {
        if (curve) return curve->deriv2(t);
        return Vec2::Zero();
    }
};

}  // namespace c1vem
