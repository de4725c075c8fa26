#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "element.hpp"
#include "mesh.hpp"

namespace c1vem {

struct ManufacturedSolution {
    std::string name;
    std::function<double(const Vec2&)> value;
    std::function<Vec2(const Vec2&)> gradient;
    std::function<Eigen::Matrix2d(const Vec2&)> hessian;
    std::function<double(const Vec2&)> load;
    bool homogeneous_clamped = true;  // u and grad u vanish on the boundary
};

/// Broken errors of the projected discrete solution against the exact one,
/// relative to the corresponding norm of the exact solution: L^2, H^1
/// seminorm, H^2 seminorm (index 0, 1, 2).
struct ErrorTriple {
    std::array<double, 3> rel{};
    std::array<double, 3> abs{};
    std::array<double, 3> exact_norm{};
};

inline ErrorTriple compute_errors(const CurvedMesh& mesh, int k, const Eigen::VectorXd& u,
                                  const ManufacturedSolution& sol, int edge_order = 0) {
    const GlobalDofMap map = build_dof_map(mesh, k);
    std::array<double, 3> err2{}, norm2{};
    const int order = 2 * k + 6;

    for (int elem = 0; elem < map.n_elems; ++elem) {
        const ElementContext ctx = build_element_context(mesh, elem, k, edge_order);
        const Projection proj = ritz_projector(ctx);
        const DofCorrespondence corr = map_element_dofs(map, mesh, elem);
        Eigen::VectorXd d(ctx.n_dofs);
        for (int i = 0; i < ctx.n_dofs; ++i) d[i] = corr.sign[i] * u[corr.global[i]];
        const Eigen::VectorXd c = proj.Pi * d;

        err2[0] += integrate_function(
            mesh, elem,
            [&](const Vec2& p) {
                double ph = 0.0;
                for (int j = 0; j < ctx.n_poly; ++j) ph += c[j] * ctx.basis.value(j, p);
                const double e = sol.value(p) - ph;
                return e * e;
            },
            order);
        norm2[0] += integrate_function(
            mesh, elem,
            [&](const Vec2& p) {
                const double v = sol.value(p);
                return v * v;
            },
            order);
        err2[1] += integrate_function(
            mesh, elem,
            [&](const Vec2& p) {
                Vec2 gh = Vec2::Zero();
                for (int j = 0; j < ctx.n_poly; ++j) gh += c[j] * ctx.basis.gradient(j, p);
                return (sol.gradient(p) - gh).squaredNorm();
            },
            order);
        norm2[1] += integrate_function(
            mesh, elem, [&](const Vec2& p) { return sol.gradient(p).squaredNorm(); }, order);
        err2[2] += integrate_function(
            mesh, elem,
            [&](const Vec2& p) {
                Eigen::Matrix2d Hh = Eigen::Matrix2d::Zero();
                for (int j = 0; j < ctx.n_poly; ++j) Hh += c[j] * ctx.basis.hessian(j, p);
                return (sol.hessian(p) - Hh).squaredNorm();
            },
            order);
        norm2[2] += integrate_function(
            mesh, elem, [&](const Vec2& p) { return sol.hessian(p).squaredNorm(); }, order);
    }

    ErrorTriple out;
    for (int i = 0; i < 3; ++i) {
        out.abs[i] = std::sqrt(err2[i]);
        out.exact_norm[i] = std::sqrt(norm2[i]);
        out.rel[i] = out.exact_norm[i] > 0.0 ? out.abs[i] / out.exact_norm[i] : out.abs[i];
    }
    return out;
}

/// Observed order between two refinement levels.
inline double eoc(double err_coarse, double err_fine, double h_coarse, double h_fine) {
    return std::log(err_coarse / err_fine) / std::log(h_coarse / h_fine);
}

struct StudyRow {
    int level = 0;
    double h = 0.0;
    int ndof = 0;
    std::array<double, 3> err{};
    std::array<double, 3> rate{};  // NaN on the first row
};

struct StudyReport {
    std::vector<StudyRow> rows;

    void finalize_rates() {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int c = 0; c < 3; ++c)
                rows[i].rate[c] =
                    i == 0 ? std::numeric_limits<double>::quiet_NaN()
                           : eoc(rows[i - 1].err[c], rows[i].err[c], rows[i - 1].h, rows[i].h);
    }

    std::string csv() const {
        std::string s = "level,h,ndof,err0,err1,err2,eoc0,eoc1,eoc2\n";
        char buf[320];
        for (const StudyRow& r : rows) {
            std::snprintf(buf, sizeof buf, "%d,%.12e,%d,%.12e,%.12e,%.12e", r.level, r.h,
                          r.ndof, r.err[0], r.err[1], r.err[2]);
            s += buf;
            for (int c = 0; c < 3; ++c) {
                if (std::isnan(r.rate[c])) {
                    s += ",";
                } else {
                    std::snprintf(buf, sizeof buf, ",%.6f", r.rate[c]);
                    s += buf;
                }
            }
            s += "\n";
        }
        return s;
    }

    /// Plot-friendly h vs error pairs for one error index.
    std::string dat(int c) const {
        std::string s;
        char buf[128];
        for (const StudyRow& r : rows) {
            std::snprintf(buf, sizeof buf, "%.12e %.12e\n", r.h, r.err[c]);
            s += buf;
        }
        return s;
    }
};

}  // namespace c1vem
