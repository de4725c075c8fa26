#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "basis.hpp"
#include "mesh.hpp"

namespace c1vem {

/// Integrals of all scaled monomials up to a degree over one element,
/// obtained from the divergence theorem: with Phi = h X^{a+1} Y^b / (a+1)
/// one has dPhi/dx = m_(a,b), so the area integral collapses to boundary
/// quadrature of Phi n_x, exact on straight edges and spectrally accurate on
/// analytic arcs (the arc rule uses max_degree + 21 points).
struct MonomialIntegrals {
    ScaledMonomials basis;
    int degree = 0;
    Eigen::VectorXd vals;

    double operator()(int a, int b) const { return vals[ScaledMonomials::index(a, b)]; }
    double at(int j) const { return vals[j]; }
};

inline MonomialIntegrals integrate_monomials(const CurvedMesh& mesh, int elem,
                                             int max_degree) {
    const MeshElement& el = mesh.elements[elem];
    const ElementShape& sh = mesh.shapes[elem];
    MonomialIntegrals mi;
    mi.basis = {sh.centroid, sh.h};
    mi.degree = max_degree;
    mi.vals = Eigen::VectorXd::Zero(ScaledMonomials::dimension(max_degree));

    std::vector<double> px(max_degree + 2), py(max_degree + 1);
    for (int i = 0; i < el.n_edges(); ++i) {
        const EdgeArc arc = mesh.edge_arc(el.edges[i]);
        const double dir = el.forward[i] ? 1.0 : -1.0;
        const int n = arc.straight() ? max_degree / 2 + 2 : max_degree + 21;
        const EdgeRule rule = edge_rule(arc, n);
        for (int q = 0; q < rule.t.size(); ++q) {
            const double wdt = dir * rule.w[q] / rule.speed[q];  // plain dt weight
            const Vec2 s = mi.basis.scaled(rule.x[q]);
            px[0] = py[0] = 1.0;
            for (int a = 1; a <= max_degree + 1; ++a) px[a] = px[a - 1] * s.x();
            for (int b = 1; b <= max_degree; ++b) py[b] = py[b - 1] * s.y();
            const double common = wdt * sh.h * rule.vel[q].y();
            for (int j = 0; j < mi.vals.size(); ++j) {
                const auto [a, b] = ScaledMonomials::exponents(j);
                mi.vals[j] += common * px[a + 1] * py[b] / (a + 1);
            }
        }
    }
    return mi;
}

inline double integrate_monomial(const CurvedMesh& mesh, int elem, int a, int b) {
    return integrate_monomials(mesh, elem, a + b)(a, b);
}

/// Integrate a general function over an element by fanning curved cone
/// triangles out of the centroid: each edge spans the map
/// F(u,s) = (1-u) * apex + u * c(s) with c the traversal-ordered edge point,
/// whose Jacobian u * cross(c - apex, c') is analytic.  A non-positive
/// Jacobian at a quadrature point means the element is not star-shaped about
/// its centroid and is reported as an error.
inline double integrate_function(const CurvedMesh& mesh, int elem,
                                 const std::function<double(const Vec2&)>& f, int order) {
    const MeshElement& el = mesh.elements[elem];
    const ElementShape& sh = mesh.shapes[elem];
    const Vec2 apex = sh.centroid;
    double total = 0.0;
    for (int i = 0; i < el.n_edges(); ++i) {
        const EdgeArc arc = mesh.edge_arc(el.edges[i]);
        const int n = std::max(2, (order + 4) / 2 + (arc.straight() ? 0 : 6));
        const Rule1D g = gauss_legendre(n);
        const double ts = el.forward[i] ? arc.t0 : arc.t1;
        const double te = el.forward[i] ? arc.t1 : arc.t0;
        for (int qs = 0; qs < n; ++qs) {
            const double s = 0.5 * (1.0 + g.nodes[qs]);  // [0, 1]
            const double t = ts + s * (te - ts);
            const Vec2 c = arc.point(t);
            const Vec2 cp = arc.velocity(t) * (te - ts);
            const double ws = 0.5 * g.weights[qs];
            for (int qu = 0; qu < n; ++qu) {
                const double u = 0.5 * (1.0 + g.nodes[qu]);
                const double wu = 0.5 * g.weights[qu];
                const double jac = u * cross2(c - apex, cp);
                if (!(jac > 0.0))
                    throw std::runtime_error(
                        "non-positive fan Jacobian: element " + std::to_string(elem) +
                        " is not star-shaped about its centroid");
                total += ws * wu * jac * f(apex + u * (c - apex));
            }
        }
    }
    return total;
}

}  // namespace c1vem
