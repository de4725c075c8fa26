#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "quadrature.hpp"

namespace c1vem {

/// Mesh edge between nodes v0 (at parameter t0) and v1 (at t1), t0 < t1.
/// Straight edges have curve == -1 and are chords parametrized over [0, 1]
/// with v0 < v1 so the record is independent of discovery order.
struct MeshEdge {
    int v0 = -1;
    int v1 = -1;
    int curve = -1;
    double t0 = 0.0;
    double t1 = 1.0;
    std::array<int, 2> elem{{-1, -1}};

    bool on_boundary() const { return elem[1] < 0; }
};

/// Polygonal element: CCW vertex loop, edge i runs verts[i] -> verts[i+1].
/// forward[i] tells whether that traversal follows the edge's own increasing
/// parameter.
struct MeshElement {
    std::vector<int> verts;
    std::vector<int> edges;
    std::vector<char> forward;

    int n_edges() const { return static_cast<int>(verts.size()); }
};

struct ElementShape {
    double h = 0.0;         // diameter (curved edges sampled)
    double area = 0.0;
    double perimeter = 0.0;
    Vec2 centroid = Vec2::Zero();
};

/// Curved-edge declaration attached to an element's local edge.  t0 is the
/// parameter of the local edge's start vertex (verts[i]), t1 of its end
/// vertex, so t0 > t1 expresses traversal against the curve parameter.
struct CurvedEdgeSpec {
    int element = -1;
    int local_edge = -1;
    int curve = -1;
    double t0 = 0.0;
    double t1 = 1.0;
};

struct CurvedMesh {
    std::vector<Vec2> nodes;
    std::vector<Curve> curves;
    std::vector<MeshElement> elements;
    std::vector<MeshEdge> edges;
    std::vector<ElementShape> shapes;
    std::vector<double> h_vertex;  // mean diameter of the elements at each node

    int n_nodes() const { return static_cast<int>(nodes.size()); }
    int n_elements() const { return static_cast<int>(elements.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }

    EdgeArc edge_arc(int e) const {
        const MeshEdge& ed = edges[e];
        EdgeArc arc;
        arc.a = nodes[ed.v0];
        arc.b = nodes[ed.v1];
        if (ed.curve >= 0) {
            arc.curve = &curves[ed.curve];
            arc.t0 = ed.t0;
            arc.t1 = ed.t1;
        }
        return arc;
    }

    double mesh_size() const {
        double h = 0.0;
        for (const auto& s : shapes) h = std::max(h, s.h);
        return h;
    }

    /// Mean element diameter.  On randomly generated families the maximum
    /// diameter is dominated by a handful of outlier cells and its ratio
    /// between refinement levels is too noisy to measure convergence rates
    /// against; the mean tracks the actual resolution.
    double mean_mesh_size() const {
        double h = 0.0;
        for (const auto& s : shapes) h += s.h;
        return shapes.empty() ? 0.0 : h / static_cast<double>(shapes.size());
    }
};

namespace detail {

inline double polygon_signed_area(const std::vector<Vec2>& p) {
    double a = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2& u = p[i];
        const Vec2& v = p[(i + 1) % p.size()];
        a += cross2(u, v);
    }
    return 0.5 * a;
}

inline ElementShape element_shape(const CurvedMesh& mesh, const MeshElement& el) {
    ElementShape s;
    std::vector<Vec2> samples;
    double ax = 0.0, cx = 0.0, cy = 0.0;
    for (int i = 0; i < el.n_edges(); ++i) {
        const EdgeArc arc = mesh.edge_arc(el.edges[i]);
        const double dir = el.forward[i] ? 1.0 : -1.0;
        const EdgeRule rule = edge_rule(arc, arc.straight() ? 4 : 24);
        for (int q = 0; q < rule.t.size(); ++q) {
            // w / speed strips the metric: dt-weight for the divergence terms
            const double wt = dir * rule.w[q] / rule.speed[q];
            const Vec2& x = rule.x[q];
            ax += wt * x.x() * rule.vel[q].y();
            cx += wt * 0.5 * x.x() * x.x() * rule.vel[q].y();
            cy -= wt * 0.5 * x.y() * x.y() * rule.vel[q].x();
        }
        s.perimeter += rule.w.sum();
        samples.push_back(mesh.nodes[el.verts[i]]);
        if (!arc.straight())
            for (int m = 1; m < 16; ++m)
                samples.push_back(arc.point(arc.t0 + (arc.t1 - arc.t0) * m / 16.0));
    }
    s.area = ax;
    if (!(s.area > 0.0))
        throw std::runtime_error("element has non-positive area " + std::to_string(s.area));
    s.centroid = Vec2(cx / ax, cy / ax);
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            s.h = std::max(s.h, (samples[i] - samples[j]).norm());
    return s;
}

}  // namespace detail

/// Recompute cached element shapes and per-vertex length scales.  Call after
/// any geometry change (builders do this automatically).
inline void finalize_mesh(CurvedMesh& mesh) {
    mesh.shapes.clear();
    mesh.shapes.reserve(mesh.elements.size());
    for (const auto& el : mesh.elements)
        mesh.shapes.push_back(detail::element_shape(mesh, el));
    mesh.h_vertex.assign(mesh.nodes.size(), 0.0);
    std::vector<int> count(mesh.nodes.size(), 0);
    for (std::size_t e = 0; e < mesh.elements.size(); ++e)
        for (int v : mesh.elements[e].verts) {
            mesh.h_vertex[v] += mesh.shapes[e].h;
            ++count[v];
        }
    for (std::size_t v = 0; v < mesh.nodes.size(); ++v) {
        if (count[v] == 0) throw std::runtime_error("node " + std::to_string(v) + " unused");
        mesh.h_vertex[v] /= count[v];
    }
}

/// Assemble a conforming mesh from node coordinates, element vertex loops
/// (CCW), shared curve definitions and curved-edge declarations.  Edges are
/// deduplicated by vertex pair; an interior edge must be traversed in
/// opposite directions by its two elements, and both sides of a curved edge
/// must declare the same curve and parameter interval.
inline CurvedMesh build_mesh(std::vector<Vec2> nodes, std::vector<Curve> curves,
                             const std::vector<std::vector<int>>& loops,
                             const std::vector<CurvedEdgeSpec>& curved = {}) {
    CurvedMesh mesh;
    mesh.nodes = std::move(nodes);
    mesh.curves = std::move(curves);

    std::map<std::pair<int, int>, int> edge_of;
    for (std::size_t e = 0; e < loops.size(); ++e) {
        const std::vector<int>& loop = loops[e];
        if (loop.size() < 3)
            throw std::invalid_argument("element " + std::to_string(e) + " has < 3 vertices");
        MeshElement el;
        el.verts = loop;
        std::vector<Vec2> poly;
        for (int v : loop) {
            if (v < 0 || v >= mesh.n_nodes())
                throw std::invalid_argument("element references unknown node");
            poly.push_back(mesh.nodes[v]);
        }
        if (detail::polygon_signed_area(poly) <= 0.0)
            throw std::invalid_argument("element " + std::to_string(e) +
                                        " vertex loop is not counterclockwise");
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const int a = loop[i], b = loop[(i + 1) % loop.size()];
            if (a == b) throw std::invalid_argument("degenerate zero-length edge");
            const auto key = std::minmax(a, b);
            auto it = edge_of.find(key);
            int id;
            if (it == edge_of.end()) {
                MeshEdge ed;
                ed.v0 = key.first;
                ed.v1 = key.second;
                ed.elem[0] = static_cast<int>(e);
                id = mesh.n_edges();
                mesh.edges.push_back(ed);
                edge_of.emplace(key, id);
            } else {
                id = it->second;
                MeshEdge& ed = mesh.edges[id];
                if (ed.elem[1] >= 0)
                    throw std::invalid_argument("edge shared by more than two elements");
                if (ed.elem[0] == static_cast<int>(e))
                    throw std::invalid_argument("element repeats an edge");
                ed.elem[1] = static_cast<int>(e);
            }
            el.edges.push_back(id);
            el.forward.push_back(a == mesh.edges[id].v0);
        }
        mesh.elements.push_back(std::move(el));
    }

    // Interior edges must be traversed once in each direction.
    for (const MeshEdge& ed : mesh.edges) {
        if (ed.on_boundary()) continue;
        char dir[2];
        for (int s = 0; s < 2; ++s) {
            const MeshElement& el = mesh.elements[ed.elem[s]];
            const int le = static_cast<int>(
                std::find(el.edges.begin(), el.edges.end(),
                          static_cast<int>(&ed - mesh.edges.data())) -
                el.edges.begin());
            dir[s] = el.forward[le];
        }
        if (dir[0] == dir[1])
            throw std::invalid_argument("interior edge traversed twice in the same direction");
    }

    // Attach curved-edge geometry.  The element's start vertex of the edge
    // sits at parameter t0.
    for (const CurvedEdgeSpec& cs : curved) {
        if (cs.element < 0 || cs.element >= mesh.n_elements())
            throw std::invalid_argument("curved edge spec for unknown element");
        const MeshElement& el = mesh.elements[cs.element];
        if (cs.local_edge < 0 || cs.local_edge >= el.n_edges())
            throw std::invalid_argument("curved edge spec for unknown local edge");
        if (cs.curve < 0 || cs.curve >= static_cast<int>(mesh.curves.size()))
            throw std::invalid_argument("curved edge spec references unknown curve");
        MeshEdge& ed = mesh.edges[el.edges[cs.local_edge]];
        const int va = el.verts[cs.local_edge];
        double t0 = cs.t0, t1 = cs.t1;
        int v0 = va, v1 = el.verts[(cs.local_edge + 1) % el.n_edges()];
        if (t0 > t1) {
            std::swap(t0, t1);
            std::swap(v0, v1);
        }
        if (ed.curve >= 0) {
            const double tol = 1e-12 * (1.0 + std::abs(t1 - t0));
            if (ed.curve != cs.curve || std::abs(ed.t0 - t0) > tol ||
                std::abs(ed.t1 - t1) > tol || ed.v0 != v0)
                throw std::invalid_argument("conflicting curve data on a shared edge");
            continue;
        }
        if (ed.v0 != v0) {  // reorient the edge so v0 sits at t0
            std::swap(ed.v0, ed.v1);
            for (int s = 0; s < 2; ++s) {
                if (ed.elem[s] < 0) continue;
                MeshElement& oe = mesh.elements[ed.elem[s]];
                for (std::size_t i = 0; i < oe.edges.size(); ++i)
                    if (oe.edges[i] == el.edges[cs.local_edge])
                        oe.forward[i] = !oe.forward[i];
            }
        }
        ed.curve = cs.curve;
        ed.t0 = t0;
        ed.t1 = t1;
        const Curve& c = mesh.curves[cs.curve];
        const double scale = 1.0 + (mesh.nodes[ed.v0] - mesh.nodes[ed.v1]).norm();
        if ((c.eval(t0) - mesh.nodes[ed.v0]).norm() > 1e-12 * scale ||
            (c.eval(t1) - mesh.nodes[ed.v1]).norm() > 1e-12 * scale)
            throw std::invalid_argument("curve endpoints do not match edge nodes");
    }

    finalize_mesh(mesh);
    return mesh;
}

/// Replace every curved edge by its straight chord.  Node positions are kept,
/// so only the edge geometry changes.
inline CurvedMesh straighten_boundary(const CurvedMesh& mesh) {
    CurvedMesh out = mesh;
    for (MeshEdge& ed : out.edges) {
        ed.curve = -1;
        ed.t0 = 0.0;
        ed.t1 = 1.0;
        if (ed.v0 > ed.v1) {  // restore the canonical straight-edge orientation
            std::swap(ed.v0, ed.v1);
            const int id = static_cast<int>(&ed - out.edges.data());
            for (int s = 0; s < 2; ++s) {
                if (ed.elem[s] < 0) continue;
                MeshElement& el = out.elements[ed.elem[s]];
                for (std::size_t i = 0; i < el.edges.size(); ++i)
                    if (el.edges[i] == id) el.forward[i] = !el.forward[i];
            }
        }
    }
    out.curves.clear();
    finalize_mesh(out);
    return out;
}

struct RegularityViolation {
    int element;
    std::string what;
    double value;
};

struct RegularityReport {
    std::vector<RegularityViolation> violations;
    double min_edge_ratio = 1.0;  // min over edges of chord / h_E
    bool pass() const { return violations.empty(); }
};

/// Shape-regularity diagnostics: every edge chord should be at least
/// rho * h_E, and the element must be star-shaped with respect to its
/// centroid (checked through the sign of fan-triangle Jacobians on a sample
/// grid).  Violations are reported, not fatal.
inline RegularityReport validate_mesh(const CurvedMesh& mesh, double rho) {
    RegularityReport rep;
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const MeshElement& el = mesh.elements[e];
        const ElementShape& s = mesh.shapes[e];
        for (int i = 0; i < el.n_edges(); ++i) {
            const EdgeArc arc = mesh.edge_arc(el.edges[i]);
            const double ratio = arc.chord() / s.h;
            rep.min_edge_ratio = std::min(rep.min_edge_ratio, ratio);
            if (ratio < rho)
                rep.violations.push_back({e, "short edge", ratio});
        }
        double min_cross = std::numeric_limits<double>::max();
        for (int i = 0; i < el.n_edges(); ++i) {
            const EdgeArc arc = mesh.edge_arc(el.edges[i]);
            const double ts = el.forward[i] ? arc.t0 : arc.t1;
            const double te = el.forward[i] ? arc.t1 : arc.t0;
            for (int m = 0; m <= 8; ++m) {
                const double t = ts + (te - ts) * m / 8.0;
                const Vec2 c = arc.point(t);
                const Vec2 cp = arc.velocity(t) * (te - ts);
                min_cross = std::min(min_cross, cross2(c - s.centroid, cp));
            }
        }
        if (min_cross <= 0.0)
            rep.violations.push_back({e, "not star-shaped about centroid", min_cross});
    }
    return rep;
}

}  // namespace c1vem
