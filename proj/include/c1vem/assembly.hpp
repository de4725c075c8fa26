#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <functional>
#include <stdexcept>
#include <vector>

#include "element.hpp"
#include "mesh.hpp"

namespace c1vem {

/// Global numbering: three DoFs per node (value, scaled gradient), then per
/// edge the value points followed by the normal points ordered from the lower
/// towards the higher endpoint id, then per element the internal moments.
struct GlobalDofMap {
    int k = 0, ke = 0, kn = 0, nm = 0;
    int n_nodes = 0, n_edges = 0, n_elems = 0, n_dofs = 0;
    int edge_base = 0, moment_base = 0;
    std::vector<char> boundary;  // per DoF: lives on the domain boundary

    int node_dof(int n, int c) const { return 3 * n + c; }
    int edge_value_dof(int e, int j) const { return edge_base + e * (ke + kn) + j; }
    int edge_normal_dof(int e, int j) const { return edge_base + e * (ke + kn) + ke + j; }
    int moment_dof(int elem, int j) const { return moment_base + elem * nm + j; }
};

inline GlobalDofMap build_dof_map(const CurvedMesh& mesh, int k) {
    GlobalDofMap m;
    m.k = k;
    m.ke = std::max(0, k - 3);
    m.kn = k - 2;
    m.nm = std::max(0, (k - 3) * (k - 2) / 2);
    m.n_nodes = static_cast<int>(mesh.nodes.size());
    m.n_edges = static_cast<int>(mesh.edges.size());
    m.n_elems = static_cast<int>(mesh.elements.size());
    m.edge_base = 3 * m.n_nodes;
    m.moment_base = m.edge_base + m.n_edges * (m.ke + m.kn);
    m.n_dofs = m.moment_base + m.n_elems * m.nm;

    m.boundary.assign(m.n_dofs, 0);
    for (int e = 0; e < m.n_edges; ++e) {
        if (!mesh.edges[e].on_boundary()) continue;
        for (int c = 0; c < 3; ++c) {
            m.boundary[m.node_dof(mesh.edges[e].v0, c)] = 1;
            m.boundary[m.node_dof(mesh.edges[e].v1, c)] = 1;
        }
        for (int j = 0; j < m.ke + m.kn; ++j) m.boundary[m.edge_value_dof(e, j)] = 1;
    }
    return m;
}

/// Local-to-global correspondence with orientation signs.  Edge point DoFs
/// are stored globally along the lower-to-higher endpoint direction; an
/// element traversing the edge the other way sees them reversed, and its
/// normal-derivative DoFs flip sign because the outward normals of the two
/// incident elements are opposite.
struct DofCorrespondence {
    std::vector<int> global;
    std::vector<double> sign;
};

inline DofCorrespondence map_element_dofs(const GlobalDofMap& map, const CurvedMesh& mesh,
                                          int elem) {
    const MeshElement& el = mesh.elements[elem];
    const int nv = el.n_edges();
    DofCorrespondence c;
    c.global.resize(dof_count(map.k, nv));
    c.sign.assign(c.global.size(), 1.0);

    int local = 0;
    for (int v = 0; v < nv; ++v)
        for (int comp = 0; comp < 3; ++comp) c.global[local++] = map.node_dof(el.verts[v], comp);
    for (int e = 0; e < nv; ++e) {
        const MeshEdge& me = mesh.edges[el.edges[e]];
        const bool same_dir = (el.forward[e] != 0) == (me.v0 < me.v1);
        for (int j = 0; j < map.ke; ++j) {
            const int g = same_dir ? j : map.ke - 1 - j;
            c.global[local++] = map.edge_value_dof(el.edges[e], g);
        }
    }
    for (int e = 0; e < nv; ++e) {
        const MeshEdge& me = mesh.edges[el.edges[e]];
        const bool same_dir = (el.forward[e] != 0) == (me.v0 < me.v1);
        for (int j = 0; j < map.kn; ++j) {
            const int g = same_dir ? j : map.kn - 1 - j;
            c.global[local] = map.edge_normal_dof(el.edges[e], g);
            c.sign[local++] = same_dir ? 1.0 : -1.0;
        }
    }
    for (int j = 0; j < map.nm; ++j) c.global[local++] = map.moment_dof(elem, j);
    return c;
}

struct LinearSystem {
    GlobalDofMap map;
    Eigen::SparseMatrix<double> A;
    Eigen::VectorXd b;
};

inline LinearSystem assemble_system(const CurvedMesh& mesh, int k,
                                    const std::function<double(const Vec2&)>& load,
                                    int edge_order = 0) {
    LinearSystem sys;
    sys.map = build_dof_map(mesh, k);
    sys.b = Eigen::VectorXd::Zero(sys.map.n_dofs);
    std::vector<Eigen::Triplet<double>> trip;

    for (int elem = 0; elem < sys.map.n_elems; ++elem) {
        const ElementContext ctx = build_element_context(mesh, elem, k, edge_order);
        const LocalOperators ops = local_stiffness(ctx);
        const Eigen::VectorXd F = local_load(ctx, ops.proj, load);
        const DofCorrespondence corr = map_element_dofs(sys.map, mesh, elem);
        for (int i = 0; i < ctx.n_dofs; ++i) {
            sys.b[corr.global[i]] += corr.sign[i] * F[i];
            for (int j = 0; j < ctx.n_dofs; ++j)
                trip.emplace_back(corr.global[i], corr.global[j],
                                  corr.sign[i] * corr.sign[j] * ops.A(i, j));
        }
    }
    sys.A.resize(sys.map.n_dofs, sys.map.n_dofs);
    sys.A.setFromTriplets(trip.begin(), trip.end());
    return sys;
}

/// Solve with the boundary DoFs eliminated.  `prescribed` supplies their
/// values (zero where empty, the clamped-plate case); the returned vector is
/// the full DoF vector with the boundary values filled back in.
inline Eigen::VectorXd solve_clamped(const LinearSystem& sys,
                                     const Eigen::VectorXd& prescribed = Eigen::VectorXd()) {
    const int n = sys.map.n_dofs;
    Eigen::VectorXd ub = Eigen::VectorXd::Zero(n);
    if (prescribed.size() > 0) {
        if (prescribed.size() != n)
            throw std::invalid_argument("prescribed vector has wrong length");
        for (int i = 0; i < n; ++i)
            if (sys.map.boundary[i]) ub[i] = prescribed[i];
    }

    std::vector<int> free_rank(n, -1);
    int n_free = 0;
    for (int i = 0; i < n; ++i)
        if (!sys.map.boundary[i]) free_rank[i] = n_free++;

    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd bf(n_free);
    for (int i = 0; i < n; ++i)
        if (free_rank[i] >= 0) bf[free_rank[i]] = sys.b[i];
    for (int col = 0; col < sys.A.outerSize(); ++col)
        for (Eigen::SparseMatrix<double>::InnerIterator it(sys.A, col); it; ++it) {
            const int i = static_cast<int>(it.row()), j = static_cast<int>(it.col());
            if (free_rank[i] < 0) continue;
            if (free_rank[j] >= 0)
                trip.emplace_back(free_rank[i], free_rank[j], it.value());
            else
                bf[free_rank[i]] -= it.value() * ub[j];
        }
    Eigen::SparseMatrix<double> Aff(n_free, n_free);
    Aff.setFromTriplets(trip.begin(), trip.end());

    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(Aff);
    Eigen::VectorXd x;
    if (llt.info() == Eigen::Success) {
        x = llt.solve(bf);
        const double bn = bf.norm();
        if (bn > 0.0) {
            const Eigen::VectorXd res = bf - Aff * x;
            if (res.norm() > 1e-12 * bn) x += llt.solve(res);
        }
    } else {
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(Aff);
        if (ldlt.info() != Eigen::Success)
            throw std::runtime_error("stiffness factorization failed");
        x = ldlt.solve(bf);
    }

    Eigen::VectorXd u = ub;
    for (int i = 0; i < n; ++i)
        if (free_rank[i] >= 0) u[i] = x[free_rank[i]];
    return u;
}

/// DoF values of a smooth function over the whole mesh, in the global
/// numbering (used to prescribe inhomogeneous boundary data and as the
/// interpolation reference in tests).  Curved edges are only supported where
/// the function's trace data matches what the arc geometry expects.
inline Eigen::VectorXd interpolate_global(const GlobalDofMap& map, const CurvedMesh& mesh,
                                          const std::function<double(const Vec2&)>& f,
                                          const std::function<Vec2(const Vec2&)>& grad) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(map.n_dofs);
    for (int nidx = 0; nidx < map.n_nodes; ++nidx) {
        u[map.node_dof(nidx, 0)] = f(mesh.nodes[nidx]);
        const Vec2 g = grad(mesh.nodes[nidx]);
        u[map.node_dof(nidx, 1)] = mesh.h_vertex[nidx] * g.x();
        u[map.node_dof(nidx, 2)] = mesh.h_vertex[nidx] * g.y();
    }
    const Eigen::VectorXd val_nodes = detail::interior_lobatto(std::max(2, map.k - 1));
    const Eigen::VectorXd nrm_nodes = detail::interior_lobatto(map.k);
    for (int e = 0; e < map.n_edges; ++e) {
        const MeshEdge& me = mesh.edges[e];
        const EdgeArc arc = mesh.edge_arc(e);
        const double mid = 0.5 * (arc.t0 + arc.t1), half = 0.5 * (arc.t1 - arc.t0);
        const double chord = arc.chord();
        const double dir = me.v0 < me.v1 ? 1.0 : -1.0;  // ascending t vs global order
        for (int g = 0; g < map.ke; ++g) {
            const int i = dir > 0 ? g : map.ke - 1 - g;
            const double t = mid + half * val_nodes[i];
            u[map.edge_value_dof(e, g)] = f(arc.point(t));
        }
        for (int g = 0; g < map.kn; ++g) {
            const int i = dir > 0 ? g : map.kn - 1 - g;
            const double t = mid + half * nrm_nodes[i];
            const Vec2 n_canon = dir * rotate_cw(arc.velocity(t).normalized());
            u[map.edge_normal_dof(e, g)] = chord * grad(arc.point(t)).dot(n_canon);
        }
    }
    for (int elem = 0; elem < map.n_elems; ++elem) {
        if (map.nm == 0) break;
        const ElementShape& sh = mesh.shapes[elem];
        const ScaledMonomials basis{sh.centroid, sh.h};
        for (int j = 0; j < map.nm; ++j)
            u[map.moment_dof(elem, j)] =
                integrate_function(
                    mesh, elem, [&](const Vec2& p) { return f(p) * basis.value(j, p); },
                    2 * map.k + 6) /
                (sh.h * sh.h);
    }
    return u;
}

}  // namespace c1vem
