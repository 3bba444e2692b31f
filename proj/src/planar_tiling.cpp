#include "orbitile/planar_tiling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

#include "orbitile/errors.hpp"
#include "orbitile/tolerance.hpp"

namespace orbitile {

namespace {

constexpr double kKeyGrid = 1e-6;
constexpr double kMergeTol = 1e-7;

using Key2 = std::array<long long, 2>;

Key2 quantize(const Eigen::Vector2d& p) {
    return {llround(p.x() / kKeyGrid), llround(p.y() / kKeyGrid)};
}

// 2D point pool with neighbor-cell probing, as in the spherical module.
class PointPool {
public:
    int insert(const Eigen::Vector2d& p) {
        const Key2 k = quantize(p);
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = map_.find({k[0] + dx, k[1] + dy});
                if (it != map_.end() && (points_[it->second] - p).norm() < kMergeTol)
                    return it->second;
            }
        const int id = static_cast<int>(points_.size());
        points_.push_back(p);
        map_.emplace(k, id);
        return id;
    }

    int find(const Eigen::Vector2d& p) const {
        const Key2 k = quantize(p);
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = map_.find({k[0] + dx, k[1] + dy});
                if (it != map_.end() && (points_[it->second] - p).norm() < kMergeTol)
                    return it->second;
            }
        return -1;
    }

    const std::vector<Eigen::Vector2d>& points() const { return points_; }

private:
    std::map<Key2, int> map_;
    std::vector<Eigen::Vector2d> points_;
};

struct CaseGeometry {
    std::vector<Eigen::Vector2d> polygon;  // fundamental domain, ccw
    Eigen::Vector2d u, v;                  // rhombus edge vectors
    int copies_per_tile;
};

CaseGeometry case_geometry(int case_id) {
    const double h = std::sqrt(3.0) / 2.0;
    switch (case_id) {
        case 14:  // (pi/2, pi/3, pi/6): half of the equilateral triangle
            return {{{0, 0}, {0.5, 0}, {0.5, h}}, {1, 0}, {0.5, h}, 4};
        case 15:  // (pi/2, pi/4, pi/4): reflects across the hypotenuse to a square
            return {{{0, 0}, {1, 0}, {0, 1}}, {1, 0}, {0, 1}, 2};
        case 16:  // equilateral triangle, doubled to the 60/120 rhombus
            return {{{0, 0}, {1, 0}, {0.5, h}}, {1, 0}, {0.5, h}, 2};
        case 17:  // the square is its own tile
            return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {1, 0}, {0, 1}, 1};
        default:
            throw std::domain_error("case " + std::to_string(case_id) + " is not a flat case");
    }
}

RhombusTile make_tile(const CaseGeometry& g, int i, int j, int case_id) {
    RhombusTile t;
    const Eigen::Vector2d base = i * g.u + j * g.v;
    t.vertices = {base, base + g.u, base + g.u + g.v, base + g.v};
    t.lattice_coords = {i, j};
    t.ring_index = std::max(std::abs(i), std::abs(j));
    t.case_id = case_id;
    t.fundamental_copies = g.copies_per_tile;
    return t;
}

bool inside_polygon(const std::vector<Eigen::Vector2d>& poly, const Eigen::Vector2d& x,
                    double margin) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Eigen::Vector2d a = poly[i];
        const Eigen::Vector2d b = poly[(i + 1) % poly.size()];
        const Eigen::Vector2d e = b - a;
        const double cross = e.x() * (x - a).y() - e.y() * (x - a).x();
        if (cross <= margin * e.norm()) return false;  // ccw polygon: interior is left of edges
    }
    return true;
}

}  // namespace

PlanarIsometry PlanarIsometry::then(const PlanarIsometry& g) const {
    return {g.m * m, g.m * t + g.t};
}

PlanarIsometry PlanarIsometry::inverse() const {
    return {m.transpose(), -(m.transpose() * t)};
}

PlanarIsometry reflection_across(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1) {
    const Eigen::Vector2d d = (p1 - p0).normalized();
    const Eigen::Vector2d n(-d.y(), d.x());
    PlanarIsometry r;
    r.m = Eigen::Matrix2d::Identity() - 2.0 * (n * n.transpose());
    r.t = 2.0 * p0.dot(n) * n;
    return r;
}

double RhombusTile::area() const {
    double a = 0;
    for (int i = 0; i < 4; ++i) {
        const Eigen::Vector2d& p = vertices[i];
        const Eigen::Vector2d& q = vertices[(i + 1) % 4];
        a += p.x() * q.y() - q.x() * p.y();
    }
    return 0.5 * std::abs(a);
}

RhombusTile fundamental_rhombus(const OrbitSpaceCase& flat_case) {
    if (flat_case.curvature != CurvatureClass::Flat)
        throw std::domain_error("fundamental_rhombus: case " + std::to_string(flat_case.case_id) +
                                " is not flat");
    const CaseGeometry g = case_geometry(flat_case.case_id);
    return make_tile(g, 0, 0, flat_case.case_id);
}

Eigen::Vector2d PlanarRingTiling::lattice_coords_of(const Eigen::Vector2d& x) const {
    Eigen::Matrix2d basis;
    basis.col(0) = u;
    basis.col(1) = v;
    return basis.inverse() * x;
}

Eigen::Vector2i PlanarRingTiling::tile_of(const Eigen::Vector2d& x) const {
    const Eigen::Vector2d st = lattice_coords_of(x);
    return {static_cast<int>(std::floor(st.x())), static_cast<int>(std::floor(st.y()))};
}

std::size_t PlanarRingTiling::tiles_in_ring(int n) const {
    return static_cast<std::size_t>(std::count_if(
        tiles.begin(), tiles.end(), [n](const RhombusTile& t) { return t.ring_index == n; }));
}

std::vector<PlanarIsometry> PlanarRingTiling::edge_reflections() const {
    std::vector<PlanarIsometry> out;
    const std::size_t k = fundamental_polygon.size();
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(reflection_across(fundamental_polygon[i], fundamental_polygon[(i + 1) % k]));
    return out;
}

PlanarRingTiling build_rings(const RhombusTile& fundamental, int n_max) {
    if (n_max < 0) throw std::domain_error("build_rings: n_max must be nonnegative");
    const CaseGeometry g = case_geometry(fundamental.case_id);

    PlanarRingTiling tiling;
    tiling.case_id = fundamental.case_id;
    tiling.fundamental_polygon = g.polygon;
    tiling.fundamental = fundamental;
    tiling.u = g.u;
    tiling.v = g.v;
    tiling.copies_per_tile = g.copies_per_tile;
    tiling.n_max = n_max;
    for (int r = 0; r <= n_max; ++r)
        for (int i = -r; i <= r; ++i)
            for (int j = -r; j <= r; ++j)
                if (std::max(std::abs(i), std::abs(j)) == r)
                    tiling.tiles.push_back(make_tile(g, i, j, fundamental.case_id));
    return tiling;
}

PlanarRingTiling build_rings(const OrbitSpaceCase& flat_case, int n_max) {
    return build_rings(fundamental_rhombus(flat_case), n_max);
}

std::vector<PlanarIsometry> wallpaper_elements(const PlanarRingTiling& tiling, int n_max) {
    // Bounding box of rings 0..n_max in the plane, inflated so that every
    // element whose fundamental-domain image meets the rings is kept and the
    // breadth-first closure stays connected across the box.
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    const double s_vals[2] = {static_cast<double>(-n_max), static_cast<double>(n_max + 1)};
    for (double s : s_vals)
        for (double t : s_vals) {
            const Eigen::Vector2d corner = s * tiling.u + t * tiling.v;
            lo_x = std::min(lo_x, corner.x());
            hi_x = std::max(hi_x, corner.x());
            lo_y = std::min(lo_y, corner.y());
            hi_y = std::max(hi_y, corner.y());
        }
    const double diam = (tiling.u + tiling.v).norm() + tiling.u.norm() + tiling.v.norm();
    lo_x -= 2 * diam; hi_x += 2 * diam;
    lo_y -= 2 * diam; hi_y += 2 * diam;

    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
    for (const Eigen::Vector2d& p : tiling.fundamental_polygon) centroid += p;
    centroid /= static_cast<double>(tiling.fundamental_polygon.size());

    const std::vector<PlanarIsometry> seeds = tiling.edge_reflections();

    // The centroid is interior, so its stabilizer is trivial and its image
    // identifies the element.
    PointPool pool;
    std::vector<PlanarIsometry> elements;
    std::deque<int> frontier;

    auto try_add = [&](const PlanarIsometry& g) {
        const Eigen::Vector2d img = g(centroid);
        if (img.x() < lo_x || img.x() > hi_x || img.y() < lo_y || img.y() > hi_y) return;
        const int before = static_cast<int>(pool.points().size());
        const int id = pool.insert(img);
        if (id == before) {
            elements.push_back(g);
            frontier.push_back(id);
        }
    };

    try_add(PlanarIsometry{});
    while (!frontier.empty()) {
        const PlanarIsometry g = elements[static_cast<std::size_t>(frontier.front())];
        frontier.pop_front();
        for (const PlanarIsometry& r : seeds) try_add(r.then(g));
    }
    return elements;
}

Eigen::Vector2d fold_to_fundamental(const PlanarRingTiling& tiling, const Eigen::Vector2d& q) {
    const double tol = predicate_tolerance();
    if (inside_polygon(tiling.fundamental_polygon, q, tol)) return q;
    const Eigen::Vector2i tile = tiling.tile_of(q);
    const int reach = std::max(std::abs(tile.x()), std::abs(tile.y())) + 1;
    for (const PlanarIsometry& g : wallpaper_elements(tiling, reach)) {
        const Eigen::Vector2d rep = g.inverse()(q);
        if (inside_polygon(tiling.fundamental_polygon, rep, tol)) return rep;
    }
    throw NonGenericError("marked point cannot be folded into the open fundamental domain");
}

PointOrbit point_orbit_in_rings(const Eigen::Vector2d& q, const PlanarRingTiling& tiling,
                                int n_max) {
    const double tol = predicate_tolerance();
    if (!inside_polygon(tiling.fundamental_polygon, q, tol))
        throw NonGenericError("marked point is not interior to the fundamental domain");

    const std::vector<PlanarIsometry> elements = wallpaper_elements(tiling, n_max);
    for (const PlanarIsometry& g : elements)
        if ((g.m - Eigen::Matrix2d::Identity()).norm() + g.t.norm() > kMergeTol &&
            (g(q) - q).norm() < tol)
            throw NonGenericError("marked point lies on a mirror line of the wallpaper group");

    PointPool pool;
    PointOrbit orbit;
    std::map<std::pair<int, int>, int> per_tile;
    for (const PlanarIsometry& g : elements) {
        const Eigen::Vector2d img = g(q);
        const Eigen::Vector2i tile = tiling.tile_of(img);
        if (std::max(std::abs(tile.x()), std::abs(tile.y())) > n_max) continue;
        const int before = static_cast<int>(pool.points().size());
        if (pool.insert(img) != before) continue;  // already seen
        orbit.copies.push_back(img);
        orbit.ops.push_back(g);
        orbit.tile_of_copy.push_back(tile);
        if (++per_tile[{tile.x(), tile.y()}] > 4)
            throw std::logic_error("more than four orbit copies in one tile");
    }

    // Canonical order: lexicographic by quantized coordinates.
    std::vector<std::size_t> order(orbit.copies.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return quantize(orbit.copies[a]) < quantize(orbit.copies[b]);
    });
    PointOrbit sorted;
    for (std::size_t i : order) {
        sorted.copies.push_back(orbit.copies[i]);
        sorted.ops.push_back(orbit.ops[i]);
        sorted.tile_of_copy.push_back(orbit.tile_of_copy[i]);
    }
    return sorted;
}

std::size_t PointOrbit::max_copies_per_tile() const {
    std::map<std::pair<int, int>, std::size_t> per_tile;
    std::size_t best = 0;
    for (const Eigen::Vector2i& t : tile_of_copy)
        best = std::max(best, ++per_tile[{t.x(), t.y()}]);
    return best;
}

}  // namespace orbitile
