#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <vector>

#include "basis.hpp"
#include "integrals.hpp"
#include "mesh.hpp"
#include "quadrature.hpp"

namespace c1vem {

/// Hermite-type degrees of freedom of the C^1 space of order k on a polygon
/// with N_e edges:
///   per vertex   : value, h_v * gradient (2 components)
///   per edge     : k_e = max(0, k-3) values at interior Gauss-Lobatto points
///   per edge     : k_n = k-2 scaled normal derivatives at interior
///                  Gauss-Lobatto points of the k-point rule
///   per element  : (k-3)(k-2)/2 scaled moments against monomials of degree
///                  up to k-4
/// which sums to (3 + k_e + k_n) N_e + (k-3)(k-2)/2.
struct DofDescriptor {
    enum class Kind { VertexValue, VertexGradX, VertexGradY, EdgeValue, EdgeNormal, Moment };
    Kind kind;
    int entity;  // local vertex / edge index, or moment index
    int sub;     // point index along the edge (traversal order), else 0
    Vec2 point;  // where the functional evaluates, zero for moments
};

struct EdgeView {
    EdgeArc arc;
    bool forward;    // element traversal follows increasing curve parameter
    int mesh_edge;   // id in the mesh
    double chord;
    Eigen::VectorXd value_ts;   // parameter nodes, ascending t
    Eigen::VectorXd normal_ts;
    Eigen::MatrixXd T_val;      // (r+1) x n_dofs: dofs -> value-trace coefficients
    Eigen::MatrixXd T_nrm;      // k x n_dofs: dofs -> normal-trace coefficients
    EdgeRule rule;

    double t_mid() const { return 0.5 * (arc.t0 + arc.t1); }
    double t_half() const { return 0.5 * (arc.t1 - arc.t0); }
    double tau_of(double t) const { return (t - t_mid()) / t_half(); }
    /// Element-outward unit normal at parameter t (assumes CCW traversal).
    Vec2 outward_normal(const Vec2& velocity) const {
        const Vec2 tau = velocity.normalized();
        return (forward ? 1.0 : -1.0) * rotate_cw(tau);
    }
};

/// Everything the local operators need about one element.
struct ElementContext {
    const CurvedMesh* mesh = nullptr;
    int elem = -1;
    int k = 0, r = 0, ke = 0, kn = 0, nv = 0;
    int n_poly = 0, n_moments = 0, n_dofs = 0;
    double h = 0.0, area = 0.0;
    Vec2 centroid = Vec2::Zero();
    std::vector<Vec2> vert;
    std::vector<double> hv;
    std::vector<EdgeView> edges;
    ScaledMonomials basis;
    MonomialIntegrals mono;
    std::vector<DofDescriptor> dofs;

    int vertex_dof(int v, int c) const { return 3 * v + c; }
    int edge_value_dof(int e, int j) const { return 3 * nv + ke * e + j; }
    int edge_normal_dof(int e, int j) const { return 3 * nv + ke * nv + kn * e + j; }
    int moment_dof(int j) const { return 3 * nv + (ke + kn) * nv + j; }
};

inline int dof_count(int k, int n_edges) {
    const int ke = std::max(0, k - 3), kn = k - 2;
    const int nm = std::max(0, (k - 3) * (k - 2) / 2);
    return (3 + ke + kn) * n_edges + nm;
}

namespace detail {

/// Interior Gauss-Lobatto nodes (on [-1,1]) of the n-point rule; empty for
/// n < 3.
inline Eigen::VectorXd interior_lobatto(int n) {
    if (n < 3) return Eigen::VectorXd();
    const Rule1D r = gauss_lobatto(n);
    return r.nodes.segment(1, n - 2);
}

inline Eigen::VectorXd tau_powers(double tau, int count, int deriv = 0) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(count);
    for (int j = deriv; j < count; ++j) {
        double c = 1.0;
        for (int d = 0; d < deriv; ++d) c *= j - d;
        p[j] = c * ipow(tau, j - deriv);
    }
    return p;
}

}  // namespace detail

/// Solve the two small interpolation systems that express an edge's value and
/// normal-derivative traces through the element DoFs.  The value trace is a
/// parameter-space polynomial of degree r = max(k,3) matched to endpoint
/// values, endpoint tangential derivatives (from the vertex gradients and the
/// curve velocity) and the interior value points; the normal trace has degree
/// k-1 and is matched to the endpoint normal derivatives and the interior
/// normal points.  Coefficients live in the affine coordinate tau in [-1,1].
inline void reconstruct_edge_traces(ElementContext& ctx, int i) {
    EdgeView& ev = ctx.edges[i];
    const int nvloc = ctx.nv;
    const int vstart = i, vend = (i + 1) % nvloc;
    const int v_lo = ev.forward ? vstart : vend;  // vertex at t0 (tau = -1)
    const int v_hi = ev.forward ? vend : vstart;  // vertex at t1 (tau = +1)
    const double half = ev.t_half();

    {  // value trace
        const int n = ctx.r + 1;
        Eigen::MatrixXd V(n, n);
        Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, ctx.n_dofs);
        V.row(0) = detail::tau_powers(-1.0, n);
        V.row(1) = detail::tau_powers(1.0, n);
        V.row(2) = detail::tau_powers(-1.0, n, 1);
        V.row(3) = detail::tau_powers(1.0, n, 1);
        R(0, ctx.vertex_dof(v_lo, 0)) = 1.0;
        R(1, ctx.vertex_dof(v_hi, 0)) = 1.0;
        const Vec2 vel_lo = ev.arc.velocity(ev.arc.t0);
        const Vec2 vel_hi = ev.arc.velocity(ev.arc.t1);
        // d/dtau = (dt/dtau) d/dt and dq/dt at an endpoint is grad . velocity
        R(2, ctx.vertex_dof(v_lo, 1)) = half * vel_lo.x() / ctx.hv[v_lo];
        R(2, ctx.vertex_dof(v_lo, 2)) = half * vel_lo.y() / ctx.hv[v_lo];
        R(3, ctx.vertex_dof(v_hi, 1)) = half * vel_hi.x() / ctx.hv[v_hi];
        R(3, ctx.vertex_dof(v_hi, 2)) = half * vel_hi.y() / ctx.hv[v_hi];
        for (int j = 0; j < ctx.ke; ++j) {
            V.row(4 + j) = detail::tau_powers(ev.tau_of(ev.value_ts[j]), n);
            const int local = ev.forward ? j : ctx.ke - 1 - j;
            R(4 + j, ctx.edge_value_dof(i, local)) = 1.0;
        }
        ev.T_val = V.partialPivLu().solve(R);
    }
    {  // normal-derivative trace
        const int n = ctx.k;
        Eigen::MatrixXd V(n, n);
        Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, ctx.n_dofs);
        V.row(0) = detail::tau_powers(-1.0, n);
        V.row(1) = detail::tau_powers(1.0, n);
        const Vec2 n_lo = ev.outward_normal(ev.arc.velocity(ev.arc.t0));
        const Vec2 n_hi = ev.outward_normal(ev.arc.velocity(ev.arc.t1));
        R(0, ctx.vertex_dof(v_lo, 1)) = n_lo.x() / ctx.hv[v_lo];
        R(0, ctx.vertex_dof(v_lo, 2)) = n_lo.y() / ctx.hv[v_lo];
        R(1, ctx.vertex_dof(v_hi, 1)) = n_hi.x() / ctx.hv[v_hi];
        R(1, ctx.vertex_dof(v_hi, 2)) = n_hi.y() / ctx.hv[v_hi];
        for (int j = 0; j < ctx.kn; ++j) {
            V.row(2 + j) = detail::tau_powers(ev.tau_of(ev.normal_ts[j]), n);
            const int local = ev.forward ? j : ctx.kn - 1 - j;
            R(2 + j, ctx.edge_normal_dof(i, local)) = 1.0 / ev.chord;
        }
        ev.T_nrm = V.partialPivLu().solve(R);
    }
}

inline ElementContext build_element_context(const CurvedMesh& mesh, int elem, int k,
                                            int edge_order = 0) {
    if (k < 2) throw std::invalid_argument("order must be at least 2");
    if (edge_order <= 0) edge_order = 2 * k + 6;
    const MeshElement& el = mesh.elements[elem];
    const ElementShape& sh = mesh.shapes[elem];

    ElementContext ctx;
    ctx.mesh = &mesh;
    ctx.elem = elem;
    ctx.k = k;
    ctx.r = std::max(k, 3);
    ctx.ke = std::max(0, k - 3);
    ctx.kn = k - 2;
    ctx.nv = el.n_edges();
    ctx.n_poly = ScaledMonomials::dimension(k);
    ctx.n_moments = std::max(0, (k - 3) * (k - 2) / 2);
    ctx.n_dofs = dof_count(k, ctx.nv);
    ctx.h = sh.h;
    ctx.area = sh.area;
    ctx.centroid = sh.centroid;
    ctx.basis = {sh.centroid, sh.h};
    // degree 2k covers the energy Gram products (2k-4), the mass pairing of a
    // load projected onto P_k, and the stabilization moment rows
    ctx.mono = integrate_monomials(mesh, elem, 2 * k);

    for (int v : el.verts) {
        ctx.vert.push_back(mesh.nodes[v]);
        ctx.hv.push_back(mesh.h_vertex[v]);
    }

    const Eigen::VectorXd val_nodes = detail::interior_lobatto(std::max(2, k - 1));
    const Eigen::VectorXd nrm_nodes = detail::interior_lobatto(k);
    for (int i = 0; i < ctx.nv; ++i) {
        EdgeView ev;
        ev.mesh_edge = el.edges[i];
        ev.arc = mesh.edge_arc(el.edges[i]);
        ev.forward = el.forward[i];
        ev.chord = ev.arc.chord();
        const double mid = ev.t_mid(), half = ev.t_half();
        ev.value_ts = (val_nodes.array() * half + mid).matrix();
        ev.normal_ts = (nrm_nodes.array() * half + mid).matrix();
        ev.rule = edge_rule(ev.arc, edge_order);
        ctx.edges.push_back(std::move(ev));
    }

    // descriptors: vertices, edge value points, edge normal points, moments
    for (int v = 0; v < ctx.nv; ++v) {
        ctx.dofs.push_back({DofDescriptor::Kind::VertexValue, v, 0, ctx.vert[v]});
        ctx.dofs.push_back({DofDescriptor::Kind::VertexGradX, v, 0, ctx.vert[v]});
        ctx.dofs.push_back({DofDescriptor::Kind::VertexGradY, v, 0, ctx.vert[v]});
    }
    for (int e = 0; e < ctx.nv; ++e)
        for (int j = 0; j < ctx.ke; ++j) {
            const EdgeView& ev = ctx.edges[e];
            const double t = ev.forward ? ev.value_ts[j] : ev.value_ts[ctx.ke - 1 - j];
            ctx.dofs.push_back({DofDescriptor::Kind::EdgeValue, e, j, ev.arc.point(t)});
        }
    for (int e = 0; e < ctx.nv; ++e)
        for (int j = 0; j < ctx.kn; ++j) {
            const EdgeView& ev = ctx.edges[e];
            const double t = ev.forward ? ev.normal_ts[j] : ev.normal_ts[ctx.kn - 1 - j];
            ctx.dofs.push_back({DofDescriptor::Kind::EdgeNormal, e, j, ev.arc.point(t)});
        }
    for (int j = 0; j < ctx.n_moments; ++j)
        ctx.dofs.push_back({DofDescriptor::Kind::Moment, j, 0, Vec2::Zero()});

    for (int i = 0; i < ctx.nv; ++i) reconstruct_edge_traces(ctx, i);
    return ctx;
}

/// Evaluate the DoFs of a smooth function, given its value and gradient (and,
/// for k >= 4, enough of it to take the internal moments, integrated
/// numerically).  This is the canonical interpolation input for tests and
/// boundary data.
inline Eigen::VectorXd interpolate_dofs(const ElementContext& ctx,
                                        const std::function<double(const Vec2&)>& f,
                                        const std::function<Vec2(const Vec2&)>& grad) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(ctx.n_dofs);
    for (int v = 0; v < ctx.nv; ++v) {
        d[ctx.vertex_dof(v, 0)] = f(ctx.vert[v]);
        const Vec2 g = grad(ctx.vert[v]);
        d[ctx.vertex_dof(v, 1)] = ctx.hv[v] * g.x();
        d[ctx.vertex_dof(v, 2)] = ctx.hv[v] * g.y();
    }
    for (int e = 0; e < ctx.nv; ++e) {
        const EdgeView& ev = ctx.edges[e];
        for (int j = 0; j < ctx.ke; ++j) {
            const double t = ev.forward ? ev.value_ts[j] : ev.value_ts[ctx.ke - 1 - j];
            d[ctx.edge_value_dof(e, j)] = f(ev.arc.point(t));
        }
        for (int j = 0; j < ctx.kn; ++j) {
            const double t = ev.forward ? ev.normal_ts[j] : ev.normal_ts[ctx.kn - 1 - j];
            const Vec2 n = ev.outward_normal(ev.arc.velocity(t));
            d[ctx.edge_normal_dof(e, j)] = ev.chord * grad(ev.arc.point(t)).dot(n);
        }
    }
    for (int j = 0; j < ctx.n_moments; ++j)
        d[ctx.moment_dof(j)] =
            integrate_function(
                *ctx.mesh, ctx.elem,
                [&](const Vec2& p) { return f(p) * ctx.basis.value(j, p); }, 2 * ctx.k + 6) /
            (ctx.h * ctx.h);
    return d;
}

/// Rows are the energy pairings a_E(., m_i) expressed through the DoFs, via
/// integration by parts twice: the volume part pairs the biharmonic of m_i
/// with the internal moments, the boundary part pairs the Hessian of m_i and
/// the gradient of its Laplacian with the reconstructed traces (the edge
/// gradient splits into the normal trace times n plus the tangential
/// derivative of the value trace).
inline Eigen::MatrixXd ritz_rhs(const ElementContext& ctx) {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(ctx.n_poly, ctx.n_dofs);
    for (int i = 0; i < ctx.n_poly; ++i)
        for (const auto& [idx, coef] : ctx.basis.biharmonic_coefficients(i))
            B(i, ctx.moment_dof(idx)) += coef / (ctx.h * ctx.h);

    for (const EdgeView& ev : ctx.edges) {
        const int nq = static_cast<int>(ev.rule.t.size());
        const double dt_dtau = ev.t_half();
        for (int q = 0; q < nq; ++q) {
            const double tau = ev.tau_of(ev.rule.t[q]);
            const double w = ev.rule.w[q];
            const double speed = ev.rule.speed[q];
            const Vec2 tang = ev.rule.vel[q] / speed;
            const Vec2 nrm = ev.outward_normal(ev.rule.vel[q]);
            const Eigen::RowVectorXd row_q =
                detail::tau_powers(tau, ctx.r + 1).transpose() * ev.T_val;
            const Eigen::RowVectorXd row_dq =
                detail::tau_powers(tau, ctx.r + 1, 1).transpose() * ev.T_val / dt_dtau;
            const Eigen::RowVectorXd row_p =
                detail::tau_powers(tau, ctx.k).transpose() * ev.T_nrm;
            for (int i = 0; i < ctx.n_poly; ++i) {
                const Eigen::Matrix2d H = ctx.basis.hessian(i, ev.rule.x[q]);
                const Vec2 Hn = H * nrm;
                const Vec2 gl = ctx.basis.gradient_of_laplacian(i, ev.rule.x[q]);
                B.row(i) += w * (Hn.dot(nrm) * row_p + Hn.dot(tang) / speed * row_dq -
                                 gl.dot(nrm) * row_q);
            }
        }
    }
    return B;
}

struct Projection {
    Eigen::MatrixXd G;   // energy Gram matrix of the scaled monomials
    Eigen::MatrixXd B;   // ritz_rhs
    Eigen::MatrixXd Gc;  // G with the P_1-tested rows replaced by constraints
    Eigen::MatrixXd Bc;
    Eigen::MatrixXd Pi;  // n_poly x n_dofs, DoFs -> projected coefficients
};

/// Energy projector onto P_k.  The Hessian pairing annihilates P_1, so the
/// three rows tested against {1, X, Y} are identically zero and get replaced
/// by the boundary-average constraints: the projection must preserve the
/// boundary averages of the function and of its gradient.
inline Projection ritz_projector(const ElementContext& ctx) {
    Projection pr;
    const double h4 = ctx.h * ctx.h * ctx.h * ctx.h;
    pr.G.setZero(ctx.n_poly, ctx.n_poly);
    for (int i = 0; i < ctx.n_poly; ++i) {
        const auto [ai, bi] = ScaledMonomials::exponents(i);
        for (int j = i; j < ctx.n_poly; ++j) {
            const auto [aj, bj] = ScaledMonomials::exponents(j);
            double g = 0.0;
            if (ai >= 2 && aj >= 2)
                g += static_cast<double>(ai) * (ai - 1) * aj * (aj - 1) *
                     ctx.mono(ai + aj - 4, bi + bj);
            if (ai >= 1 && bi >= 1 && aj >= 1 && bj >= 1)
                g += 2.0 * static_cast<double>(ai) * bi * aj * bj *
                     ctx.mono(ai + aj - 2, bi + bj - 2);
            if (bi >= 2 && bj >= 2)
                g += static_cast<double>(bi) * (bi - 1) * bj * (bj - 1) *
                     ctx.mono(ai + aj, bi + bj - 4);
            pr.G(i, j) = pr.G(j, i) = g / h4;
        }
    }
    pr.B = ritz_rhs(ctx);

    pr.Gc = pr.G;
    pr.Bc = pr.B;
    pr.Gc.row(0).setZero();
    pr.Gc.row(1).setZero();
    pr.Gc.row(2).setZero();
    pr.Bc.row(0).setZero();
    pr.Bc.row(1).setZero();
    pr.Bc.row(2).setZero();
    for (const EdgeView& ev : ctx.edges) {
        const int nq = static_cast<int>(ev.rule.t.size());
        const double dt_dtau = ev.t_half();
        for (int q = 0; q < nq; ++q) {
            const double tau = ev.tau_of(ev.rule.t[q]);
            const double w = ev.rule.w[q];
            const double speed = ev.rule.speed[q];
            const Vec2 tang = ev.rule.vel[q] / speed;
            const Vec2 nrm = ev.outward_normal(ev.rule.vel[q]);
            const Eigen::RowVectorXd row_q =
                detail::tau_powers(tau, ctx.r + 1).transpose() * ev.T_val;
            const Eigen::RowVectorXd row_dq =
                detail::tau_powers(tau, ctx.r + 1, 1).transpose() * ev.T_val / dt_dtau;
            const Eigen::RowVectorXd row_p =
                detail::tau_powers(tau, ctx.k).transpose() * ev.T_nrm;
            pr.Bc.row(0) += w * row_q;
            pr.Bc.row(1) += w * (nrm.x() * row_p + tang.x() / speed * row_dq);
            pr.Bc.row(2) += w * (nrm.y() * row_p + tang.y() / speed * row_dq);
            for (int j = 0; j < ctx.n_poly; ++j) {
                pr.Gc(0, j) += w * ctx.basis.value(j, ev.rule.x[q]);
                const Vec2 g = ctx.basis.gradient(j, ev.rule.x[q]);
                pr.Gc(1, j) += w * g.x();
                pr.Gc(2, j) += w * g.y();
            }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(pr.Gc);
    if (!lu.isInvertible())
        throw std::runtime_error("degenerate element: projector system is singular");
    pr.Pi = lu.solve(pr.Bc);
    return pr;
}

/// Maps DoF vectors to the internal integrals against the moment monomials,
/// i.e. picks h^2 times the stored scaled moments.
inline Eigen::MatrixXd internal_moment_matrix(const ElementContext& ctx) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(ctx.n_moments, ctx.n_dofs);
    for (int j = 0; j < ctx.n_moments; ++j) M(j, ctx.moment_dof(j)) = ctx.h * ctx.h;
    return M;
}

/// L^2 projection of a function onto the monomials of degree <= m, using the
/// exact monomial mass matrix and fan quadrature for the right-hand side.
inline Eigen::VectorXd project_function_l2(const ElementContext& ctx,
                                           const std::function<double(const Vec2&)>& f,
                                           int m, int order = 0) {
    if (order <= 0) order = 2 * ctx.k + 6;
    const int n = ScaledMonomials::dimension(m);
    Eigen::MatrixXd mass(n, n);
    for (int i = 0; i < n; ++i) {
        const auto [ai, bi] = ScaledMonomials::exponents(i);
        for (int j = 0; j < n; ++j) {
            const auto [aj, bj] = ScaledMonomials::exponents(j);
            mass(i, j) = ctx.mono(ai + aj, bi + bj);
        }
    }
    Eigen::VectorXd rhs(n);
    for (int j = 0; j < n; ++j)
        rhs[j] = integrate_function(
            *ctx.mesh, ctx.elem,
            [&](const Vec2& p) { return f(p) * ctx.basis.value(j, p); }, order);
    return mass.ldlt().solve(rhs);
}

/// The stabilizing bilinear form as a weighted sum of squares of linear
/// functionals: S(v, w) = sum_r w_r E_r(v) E_r(w) with
///   - the internal moments, weighted h^{-2},
///   - the vertex value and scaled-gradient DoFs, weighted h_v^{-2},
///   - per edge quadrature node, the mixed derivative d_t d_n and the second
///     tangential derivative d_t^2 along the arc, weighted h_E w_q.
/// Ev applies the functionals to a virtual function through its DoFs (surface
/// derivatives come from the traces), Ep to a polynomial through its
/// coefficients (true surface derivatives along the arc).
struct Stabilization {
    Eigen::MatrixXd Ev;  // n_eval x n_dofs
    Eigen::MatrixXd Ep;  // n_eval x n_poly
    Eigen::VectorXd w;   // positive weights
};

inline Stabilization stabilization(const ElementContext& ctx) {
    int n_eval = ctx.n_moments + 3 * ctx.nv;
    for (const EdgeView& ev : ctx.edges) n_eval += 2 * static_cast<int>(ev.rule.t.size());

    Stabilization st;
    st.Ev.setZero(n_eval, ctx.n_dofs);
    st.Ep.setZero(n_eval, ctx.n_poly);
    st.w.setZero(n_eval);
    int row = 0;

    for (int j = 0; j < ctx.n_moments; ++j, ++row) {
        st.Ev(row, ctx.moment_dof(j)) = 1.0;
        const auto [aj, bj] = ScaledMonomials::exponents(j);
        for (int i = 0; i < ctx.n_poly; ++i) {
            const auto [ai, bi] = ScaledMonomials::exponents(i);
            st.Ep(row, i) = ctx.mono(ai + aj, bi + bj) / (ctx.h * ctx.h);
        }
        st.w[row] = 1.0 / (ctx.h * ctx.h);
    }

    for (int v = 0; v < ctx.nv; ++v) {
        const double wv = 1.0 / (ctx.hv[v] * ctx.hv[v]);
        st.Ev(row, ctx.vertex_dof(v, 0)) = 1.0;
        for (int i = 0; i < ctx.n_poly; ++i) st.Ep(row, i) = ctx.basis.value(i, ctx.vert[v]);
        st.w[row++] = wv;
        st.Ev(row, ctx.vertex_dof(v, 1)) = 1.0;
        for (int i = 0; i < ctx.n_poly; ++i)
            st.Ep(row, i) = ctx.hv[v] * ctx.basis.gradient(i, ctx.vert[v]).x();
        st.w[row++] = wv;
        st.Ev(row, ctx.vertex_dof(v, 2)) = 1.0;
        for (int i = 0; i < ctx.n_poly; ++i)
            st.Ep(row, i) = ctx.hv[v] * ctx.basis.gradient(i, ctx.vert[v]).y();
        st.w[row++] = wv;
    }

    for (const EdgeView& ev : ctx.edges) {
        const int nq = static_cast<int>(ev.rule.t.size());
        const double dt_dtau = ev.t_half();
        const double dirfac = ev.forward ? 1.0 : -1.0;
        for (int q = 0; q < nq; ++q) {
            const double tau = ev.tau_of(ev.rule.t[q]);
            const double speed = ev.rule.speed[q];
            const Vec2 vel = ev.rule.vel[q];
            const Vec2 acc = ev.rule.acc[q];
            const double dspeed = vel.dot(acc) / speed;  // d|gamma'|/dt
            const Vec2 nrm = ev.outward_normal(vel);
            // derivative of the unit tangent, then of the outward normal
            const Vec2 dtang = acc / speed - vel * (vel.dot(acc)) / (speed * speed * speed);
            const Vec2 dnrm = dirfac * rotate_cw(dtang);

            const Eigen::RowVectorXd row_dq =
                detail::tau_powers(tau, ctx.r + 1, 1).transpose() * ev.T_val / dt_dtau;
            const Eigen::RowVectorXd row_d2q =
                detail::tau_powers(tau, ctx.r + 1, 2).transpose() * ev.T_val /
                (dt_dtau * dt_dtau);
            const Eigen::RowVectorXd row_dp =
                detail::tau_powers(tau, ctx.k, 1).transpose() * ev.T_nrm / dt_dtau;

            // mixed surface derivative d_t d_n
            st.Ev.row(row) = row_dp / speed;
            for (int i = 0; i < ctx.n_poly; ++i) {
                const Eigen::Matrix2d H = ctx.basis.hessian(i, ev.rule.x[q]);
                const Vec2 g = ctx.basis.gradient(i, ev.rule.x[q]);
                st.Ep(row, i) = ((H * vel).dot(nrm) + g.dot(dnrm)) / speed;
            }
            st.w[row++] = ctx.h * ev.rule.w[q];

            // intrinsic second tangential derivative d_t^2
            st.Ev.row(row) = (row_d2q * speed - row_dq * dspeed) / (speed * speed * speed);
            for (int i = 0; i < ctx.n_poly; ++i) {
                const Eigen::Matrix2d H = ctx.basis.hessian(i, ev.rule.x[q]);
                const Vec2 g = ctx.basis.gradient(i, ev.rule.x[q]);
                const double d1 = g.dot(vel);
                const double d2 = vel.dot(H * vel) + g.dot(acc);
                st.Ep(row, i) = (d2 * speed - d1 * dspeed) / (speed * speed * speed);
            }
            st.w[row++] = ctx.h * ev.rule.w[q];
        }
    }
    return st;
}

struct LocalOperators {
    Projection proj;
    Stabilization stab;
    Eigen::MatrixXd A;  // n_dofs x n_dofs, symmetric positive semidefinite
};

/// A = Pi^T G Pi + S((I - Pi)., (I - Pi).), both pieces PSD by construction.
inline LocalOperators local_stiffness(const ElementContext& ctx) {
    LocalOperators ops;
    ops.proj = ritz_projector(ctx);
    ops.stab = stabilization(ctx);
    const Eigen::MatrixXd D = ops.stab.Ev - ops.stab.Ep * ops.proj.Pi;
    ops.A = ops.proj.Pi.transpose() * ops.proj.G * ops.proj.Pi +
            D.transpose() * ops.stab.w.asDiagonal() * D;
    return ops;
}

/// Degree-dependent polynomial load pairing.  The projected load f_h is
/// tested against a computable stand-in for the virtual test function:
///   k = 2   : the vertex average of v,
///   k = 3   : the energy projection of v (the vertex-average stand-in with
///             its affine correction loses two orders in the weaker norms,
///             while the projection keeps the L^2 / H^1 rates optimal),
///   k = 4   : the element mean of v plus the affine correction built from
///             the averaged vertex gradients, exact on affine functions,
///   k >= 5  : v itself, paid exactly from the internal moments.
inline Eigen::VectorXd local_load(const ElementContext& ctx, const Projection& proj,
                                  const std::function<double(const Vec2&)>& f) {
    Eigen::VectorXd F = Eigen::VectorXd::Zero(ctx.n_dofs);
    int m = ctx.k - 4;  // degree of the projected load
    if (ctx.k == 2) m = 0;
    if (ctx.k == 3) m = ctx.k;  // cheap insurance: the full-degree projection
                                // keeps the load defect far below the h^3 floor
    if (ctx.k == 4) m = 1;
    const Eigen::VectorXd c = project_function_l2(ctx, f, m);

    if (ctx.k >= 5) {
        for (int j = 0; j < c.size(); ++j) F[ctx.moment_dof(j)] = c[j] * ctx.h * ctx.h;
        return F;
    }

    if (ctx.k == 3) {
        Eigen::MatrixXd mass(c.size(), ctx.n_poly);
        for (int i = 0; i < c.size(); ++i) {
            const auto [ai, bi] = ScaledMonomials::exponents(i);
            for (int j = 0; j < ctx.n_poly; ++j) {
                const auto [aj, bj] = ScaledMonomials::exponents(j);
                mass(i, j) = ctx.mono(ai + aj, bi + bj);
            }
        }
        return proj.Pi.transpose() * mass.transpose() * c;
    }

    double integral = 0.0;
    Vec2 first_moment = Vec2::Zero();  // integral of f_h (x - centroid)
    for (int j = 0; j < c.size(); ++j) {
        const auto [a, b] = ScaledMonomials::exponents(j);
        integral += c[j] * ctx.mono(a, b);
        first_moment.x() += c[j] * ctx.h * ctx.mono(a + 1, b);
        first_moment.y() += c[j] * ctx.h * ctx.mono(a, b + 1);
    }

    if (ctx.k == 4) {
        F[ctx.moment_dof(0)] = integral * ctx.h * ctx.h / ctx.area;
        for (int v = 0; v < ctx.nv; ++v) {
            F[ctx.vertex_dof(v, 1)] = first_moment.x() / (ctx.nv * ctx.hv[v]);
            F[ctx.vertex_dof(v, 2)] = first_moment.y() / (ctx.nv * ctx.hv[v]);
        }
        return F;
    }

    for (int v = 0; v < ctx.nv; ++v) F[ctx.vertex_dof(v, 0)] = integral / ctx.nv;
    return F;
}

}  // namespace c1vem
