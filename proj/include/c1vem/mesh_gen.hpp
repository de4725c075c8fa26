#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mesh.hpp"

namespace c1vem {

/// Channel walls: a sine bump below, a faster sine ripple on top.
inline double channel_bottom(double x) { return std::sin(M_PI * x) / 20.0; }
inline double channel_top(double x) { return 1.0 + std::sin(3.0 * M_PI * x) / 20.0; }

inline Curve make_channel_bottom_curve() {
    return make_sine_graph(1.0 / 20.0, M_PI, 0.0, 0.0, 1.0);
}
inline Curve make_channel_top_curve() {
    return make_sine_graph(1.0 / 20.0, 3.0 * M_PI, 1.0, 0.0, 1.0);
}

/// Deform a unit-square point into the channel: the lower half leans on the
/// bottom wall, the upper half on the top wall, and the two branches agree at
/// y = 1/2.
inline Vec2 map_square_node(const Vec2& s) {
    const double x = s.x(), y = s.y();
    if (y <= 0.5) return Vec2(x, y + channel_bottom(x) * (1.0 - 2.0 * y));
    return Vec2(x, 1.0 - y + channel_top(x) * (2.0 * y - 1.0));
}

/// n x n grid of quadrilaterals on the unit square.
inline CurvedMesh generate_square_quad_mesh(int n) {
    if (n < 1) throw std::invalid_argument("quad mesh needs n >= 1");
    std::vector<Vec2> nodes;
    nodes.reserve((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            nodes.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
    auto id = [n](int i, int j) { return j * (n + 1) + i; };
    std::vector<std::vector<int>> loops;
    loops.reserve(n * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            loops.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    return build_mesh(std::move(nodes), {}, loops);
}

namespace detail {

/// Clip a convex polygon against the half-plane closer to p than to q.
inline void clip_halfplane(std::vector<Vec2>& poly, const Vec2& p, const Vec2& q) {
    const Vec2 mid = 0.5 * (p + q);
    const Vec2 d = q - p;
    std::vector<Vec2> out;
    out.reserve(poly.size() + 1);
    const auto side = [&](const Vec2& x) { return (x - mid).dot(d); };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % poly.size()];
        const double sa = side(a), sb = side(b);
        if (sa <= 0.0) out.push_back(a);
        if ((sa < 0.0 && sb > 0.0) || (sa > 0.0 && sb < 0.0))
            out.push_back(a + sa / (sa - sb) * (b - a));
    }
    poly.swap(out);
}

/// Grid bucketing of seeds so each cell only clips against nearby seeds.
struct SeedGrid {
    int nb;
    double cell;
    std::vector<std::vector<int>> buckets;

    explicit SeedGrid(const std::vector<Vec2>& seeds) {
        nb = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(seeds.size()))));
        cell = 1.0 / nb;
        buckets.resize(nb * nb);
        for (std::size_t i = 0; i < seeds.size(); ++i)
            buckets[index_of(seeds[i])].push_back(static_cast<int>(i));
    }
    int clampi(double v) const {
        return std::max(0, std::min(nb - 1, static_cast<int>(v * nb)));
    }
    int index_of(const Vec2& p) const { return clampi(p.y()) * nb + clampi(p.x()); }
};

/// Voronoi cell of seed i, clipped to the unit square.  Candidates are
/// visited ring by ring outward; once every unvisited seed is provably
/// farther than twice the current cell radius the cell is final.
inline std::vector<Vec2> voronoi_cell(const std::vector<Vec2>& seeds, const SeedGrid& grid,
                                      int i) {
    std::vector<Vec2> poly = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    const Vec2 p = seeds[i];
    const int ci = grid.clampi(p.x()), cj = grid.clampi(p.y());
    auto radius = [&]() {
        double r = 0.0;
        for (const Vec2& v : poly) r = std::max(r, (v - p).norm());
        return r;
    };
    std::vector<std::pair<double, int>> cand;
    for (int ring = 0; ring < grid.nb; ++ring) {
        cand.clear();
        const int lo_i = ci - ring, hi_i = ci + ring, lo_j = cj - ring, hi_j = cj + ring;
        for (int j = std::max(0, lo_j); j <= std::min(grid.nb - 1, hi_j); ++j)
            for (int ii = std::max(0, lo_i); ii <= std::min(grid.nb - 1, hi_i); ++ii) {
                if (ring > 0 && ii != lo_i && ii != hi_i && j != lo_j && j != hi_j)
                    continue;  // interior of the ring was already visited
                for (int s : grid.buckets[j * grid.nb + ii])
                    if (s != i) cand.emplace_back((seeds[s] - p).squaredNorm(), s);
            }
        std::sort(cand.begin(), cand.end());
        for (auto& [d2, s] : cand) {
            if (std::sqrt(d2) > 2.0 * radius()) break;
            clip_halfplane(poly, p, seeds[s]);
            if (poly.empty()) throw std::runtime_error("Voronoi cell vanished");
        }
        // Seeds beyond this ring are at least ring * cell away.
        if (ring * grid.cell > 2.0 * radius()) break;
    }
    return poly;
}

inline Vec2 polygon_centroid(const std::vector<Vec2>& poly) {
    double a = 0.0;
    Vec2 c = Vec2::Zero();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& u = poly[i];
        const Vec2& v = poly[(i + 1) % poly.size()];
        const double w = cross2(u, v);
        a += w;
        c += w * (u + v);
    }
    return c / (3.0 * a);
}

/// Collapse short edges of a clipped Voronoi diagram by clustering its
/// corners: corners closer than the given radius merge into one shared node,
/// so a tiny edge disappears from both cells at once and the mesh stays
/// conforming.  Clipping against the unit square routinely produces edges
/// orders of magnitude shorter than the cell diameter, which violates the
/// minimum edge length the error analysis assumes and visibly pollutes the
/// finest-level errors.
inline void cluster_cell_corners(std::vector<std::vector<Vec2>>& cells, double radius) {
    struct Corner {
        Vec2 p;
        int cell, idx;
    };
    std::vector<Corner> corners;
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t i = 0; i < cells[c].size(); ++i)
            corners.push_back({cells[c][i], static_cast<int>(c), static_cast<int>(i)});

    // Union-find over corner pairs within the cluster radius, bucketed on a
    // grid of that spacing so only neighboring buckets are compared.
    std::vector<int> parent(corners.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::unordered_map<std::int64_t, std::vector<int>> buckets;
    auto key_of = [radius](double x, double y) {
        const auto qx = static_cast<std::int64_t>(std::floor(x / radius));
        const auto qy = static_cast<std::int64_t>(std::floor(y / radius));
        return qx * 2000003 + qy;
    };
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const Vec2& p = corners[i].p;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find(key_of(p.x() + dx * radius, p.y() + dy * radius));
                if (it == buckets.end()) continue;
                for (int j : it->second)
                    if ((corners[j].p - p).norm() < radius)
                        parent[find(static_cast<int>(i))] = find(j);
            }
        buckets[key_of(p.x(), p.y())].push_back(static_cast<int>(i));
    }

    // One representative per cluster.  Boundary members pin their coordinate
    // so merged nodes never drift off the square, and corners of the square
    // stay put exactly.
    const double tol = 1e-9;
    std::unordered_map<int, std::vector<int>> clusters;
    for (std::size_t i = 0; i < corners.size(); ++i)
        clusters[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    for (auto& [root, members] : clusters) {
        if (members.size() < 2) continue;
        Vec2 rep = Vec2::Zero();
        for (int m : members) rep += corners[m].p;
        rep /= static_cast<double>(members.size());
        bool pin_x0 = false, pin_x1 = false, pin_y0 = false, pin_y1 = false;
        for (int m : members) {
            const Vec2& p = corners[m].p;
            pin_x0 |= std::abs(p.x()) < tol;
            pin_x1 |= std::abs(p.x() - 1.0) < tol;
            pin_y0 |= std::abs(p.y()) < tol;
            pin_y1 |= std::abs(p.y() - 1.0) < tol;
        }
        if (pin_x0) rep.x() = 0.0;
        if (pin_x1) rep.x() = 1.0;
        if (pin_y0) rep.y() = 0.0;
        if (pin_y1) rep.y() = 1.0;
        for (int m : members) cells[corners[m].cell][corners[m].idx] = rep;
    }
}

}  // namespace detail

/// Lloyd-relaxed Voronoi tessellation of the unit square.  Deterministic for
/// a fixed (n_seeds, seed) pair.
inline CurvedMesh generate_square_voronoi_mesh(int n_seeds, std::uint64_t seed,
                                               int lloyd_iterations = 100) {
    if (n_seeds < 1) throw std::invalid_argument("voronoi mesh needs at least one seed");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    std::vector<Vec2> seeds(n_seeds);
    for (auto& s : seeds) s = Vec2(unif(rng), unif(rng));

    std::vector<std::vector<Vec2>> cells(n_seeds);
    for (int it = 0; it <= lloyd_iterations; ++it) {
        detail::SeedGrid grid(seeds);
        for (int i = 0; i < n_seeds; ++i) cells[i] = detail::voronoi_cell(seeds, grid, i);
        if (it == lloyd_iterations) break;
        for (int i = 0; i < n_seeds; ++i) seeds[i] = detail::polygon_centroid(cells[i]);
    }
    detail::cluster_cell_corners(cells, 0.2 / std::sqrt(static_cast<double>(n_seeds)));

    // Merge per-cell corner coordinates into shared nodes.  Corners of
    // adjacent cells coincide up to clipping roundoff, far below the merge
    // tolerance for any usable seed count.
    const double tol = 1e-9;
    const double bucket = 1e-6;
    std::vector<Vec2> nodes;
    std::unordered_map<std::int64_t, std::vector<int>> lookup;
    auto key_of = [bucket](double x, double y) {
        const auto qx = static_cast<std::int64_t>(std::floor(x / bucket));
        const auto qy = static_cast<std::int64_t>(std::floor(y / bucket));
        return qx * 2000003 + qy;
    };
    auto node_id = [&](Vec2 p) {
        if (std::abs(p.x()) < tol) p.x() = 0.0;
        if (std::abs(p.x() - 1.0) < tol) p.x() = 1.0;
        if (std::abs(p.y()) < tol) p.y() = 0.0;
        if (std::abs(p.y() - 1.0) < tol) p.y() = 1.0;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = lookup.find(key_of(p.x() + dx * bucket, p.y() + dy * bucket));
                if (it == lookup.end()) continue;
                for (int id : it->second)
                    if ((nodes[id] - p).norm() < tol) return id;
            }
        const int id = static_cast<int>(nodes.size());
        nodes.push_back(p);
        lookup[key_of(p.x(), p.y())].push_back(id);
        return id;
    };

    std::vector<std::vector<int>> loops;
    loops.reserve(n_seeds);
    for (const auto& cell : cells) {
        std::vector<int> loop;
        for (const Vec2& v : cell) {
            const int id = node_id(v);
            if (loop.empty() || loop.back() != id) loop.push_back(id);
        }
        while (loop.size() > 1 && loop.front() == loop.back()) loop.pop_back();
        if (loop.size() < 3) throw std::runtime_error("degenerate Voronoi cell");
        loops.push_back(std::move(loop));
    }
    return build_mesh(std::move(nodes), {}, loops);
}

/// Deform a straight unit-square mesh into the curved channel: every node is
/// mapped, interior edges stay straight, and boundary edges lying on the
/// square's bottom/top sides become exact arcs of the wall curves.
inline CurvedMesh to_channel_mesh(const CurvedMesh& square) {
    std::vector<Vec2> nodes(square.nodes.size());
    std::vector<CurvedEdgeSpec> specs;
    for (std::size_t i = 0; i < square.nodes.size(); ++i)
        nodes[i] = map_square_node(square.nodes[i]);

    std::vector<Curve> curves = {make_channel_bottom_curve(), make_channel_top_curve()};
    std::vector<std::vector<int>> loops;
    loops.reserve(square.elements.size());
    for (const auto& el : square.elements) loops.push_back(el.verts);

    for (int e = 0; e < square.n_elements(); ++e) {
        const MeshElement& el = square.elements[e];
        for (int i = 0; i < el.n_edges(); ++i) {
            const MeshEdge& ed = square.edges[el.edges[i]];
            if (!ed.on_boundary()) continue;
            const Vec2& a = square.nodes[el.verts[i]];
            const Vec2& b = square.nodes[el.verts[(i + 1) % el.n_edges()]];
            int curve = -1;
            if (a.y() == 0.0 && b.y() == 0.0) curve = 0;
            if (a.y() == 1.0 && b.y() == 1.0) curve = 1;
            if (curve < 0) continue;
            specs.push_back({e, i, curve, a.x(), b.x()});
        }
    }
    return build_mesh(std::move(nodes), std::move(curves), loops, specs);
}

inline CurvedMesh generate_channel_quad_mesh(int n) {
    return to_channel_mesh(generate_square_quad_mesh(n));
}

inline CurvedMesh generate_channel_voronoi_mesh(int n_seeds, std::uint64_t seed,
                                                int lloyd_iterations = 100) {
    return to_channel_mesh(generate_square_voronoi_mesh(n_seeds, seed, lloyd_iterations));
}

}  // namespace c1vem
